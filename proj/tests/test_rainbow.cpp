#include <doctest.h>

#include <random>

#include "armatch/formulas.hpp"
#include "armatch/rainbow.hpp"
#include "armatch/solvers.hpp"

using namespace armatch;

namespace {

EdgeColoring random_coloring(std::mt19937_64& rng, int n, int k, int colors) {
  std::uniform_int_distribution<int> pick(0, colors - 1);
  std::vector<int> c(binomial_u64(n, k));
  for (int& x : c) x = pick(rng);
  return EdgeColoring(n, k, std::move(c));
}

// The trace families {T, W \ T} of two different classes always meet.
void check_classes_cross_intersect(const PerfectMatchingLayout& layout, VertexSet extra) {
  const auto& t = layout.traces;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const VertexSet a[] = {t[i] | extra, layout.W & ~(t[i] | extra)};
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (i == j) continue;
      const VertexSet b[] = {t[j] | extra, layout.W & ~(t[j] | extra)};
      for (VertexSet x : a) {
        for (VertexSet y : b) CHECK((x & y) != 0);
      }
    }
  }
}

}  // namespace

TEST_SUITE("rainbow") {

TEST_CASE("EdgeColoring basics") {
  const auto c = EdgeColoring::all_distinct(6, 3);
  CHECK(c.palette_size() == 20);
  CHECK(c.is_contiguous());
  CHECK(c.color_of(make_set({1, 2, 3})) == 0);
  CHECK(c.color_of(make_set({4, 5, 6})) == 19);
  CHECK_THROWS_AS(EdgeColoring(6, 3, std::vector<int>(19, 0)), std::invalid_argument);
  CHECK_THROWS_AS(EdgeColoring(4, 2, {0, 1, 2, 3, 4, -1}), std::invalid_argument);

  const EdgeColoring sparse(4, 2, {7, 3, 3, 9, 7, 3});
  CHECK(sparse.palette_size() == 3);
  CHECK_FALSE(sparse.is_contiguous());
  const auto dense = sparse.renumbered();
  CHECK(dense.is_contiguous());
  CHECK(std::vector<int>(dense.colors().begin(), dense.colors().end()) == std::vector<int>{1, 0, 0, 2, 1, 0});
}

TEST_CASE("H1 colouring at (9,3)") {
  const auto h1 = build_H1_coloring(9, 3);
  CHECK(h1.coloring.palette_size() == 14);
  CHECK(h1.coloring.is_contiguous());
  CHECK(h1.layout.traces.size() == 3);
  CHECK(h1.coloring.edge_count() == 84);
  CHECK(BigInt(h1.coloring.palette_size() + 1) == lower_bound_perfect(9, 3).value);
  CHECK_FALSE(find_rainbow_matching(h1.coloring, 3));
  const auto two = find_rainbow_matching(h1.coloring, 2);
  REQUIRE(two);
  CHECK(two->valid());
  CHECK(h1.coloring.color_of(two->edges[0]) != h1.coloring.color_of(two->edges[1]));
}

TEST_CASE("H1 classes partition the half-split edges") {
  for (auto [n, k] : {std::pair{9, 3}, std::pair{12, 3}, std::pair{15, 5}}) {
    const auto h1 = build_H1_coloring(n, k);
    const auto& layout = h1.layout;
    CHECK(BigInt(layout.traces.size()) == binomial(k + 1, (k + 1) / 2) / 2);
    const int base = layout.bijective_colors;
    std::vector<int> class_size(layout.traces.size(), 0);
    for_each_subset(prefix_set(n), k, [&](Edge e) {
      const int color = h1.coloring.color_of(e);
      const bool in_u = (e & layout.W) == 0;
      const bool half = set_size(e & layout.W) == (k + 1) / 2;
      if (in_u) {
        CHECK(color >= 1);
        CHECK(color <= base);
      } else if (half) {
        REQUIRE(color > base);
        ++class_size[color - base - 1];
      } else {
        CHECK(color == 0);
      }
    });
    for (int size : class_size) CHECK(size > 0);
    for (std::size_t i = 0; i < layout.traces.size(); ++i) {
      for (std::size_t j = 0; j < layout.traces.size(); ++j) CHECK((layout.traces[i] & layout.traces[j]) != 0);
    }
    check_classes_cross_intersect(layout, 0);
    CHECK(BigInt(h1.coloring.palette_size() + 1) == lower_bound_perfect(n, k).value);
  }
  CHECK_THROWS_AS(build_H1_coloring(8, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_H1_coloring(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_H1_coloring(10, 3), std::invalid_argument);
}

TEST_CASE("H2 colouring") {
  const auto h2 = build_H2_coloring(16, 4);
  CHECK(h2.coloring.palette_size() == 335);
  CHECK(h2.layout.traces.size() == 4);
  CHECK(h2.layout.apex == 16);
  CHECK(BigInt(h2.coloring.palette_size() + 1) == lower_bound_perfect(16, 4).value);
  check_classes_cross_intersect(h2.layout, vertex_bit(16));

  const auto small = build_H2_coloring(12, 4);
  CHECK(small.coloring.palette_size() == 35 + 4 + 1);
  const auto cert = certify_no_rainbow_perfect_matching(small.coloring);
  CHECK(cert.verdict);
  CHECK(cert.search_size == 5775);
  CHECK_FALSE(find_rainbow_matching(small.coloring, 3));
  CHECK_THROWS_AS(build_H2_coloring(9, 3), std::invalid_argument);
}

TEST_CASE("turan-plus-one colouring") {
  const auto t = build_turan_plus_one_coloring(9, 3, 3);
  CHECK(t.coloring.palette_size() == 29);
  CHECK(t.family.edge_count() == 28);
  CHECK(t.extremal == Validity::kProved);
  CHECK_FALSE(find_rainbow_matching(t.coloring, 3));
  CHECK(find_rainbow_matching(t.coloring, 2));

  for (int n = 6; n <= 12; ++n) {
    for (int s = 2; s <= n / 3; ++s) {
      const auto c = build_turan_plus_one_coloring(n, 3, s);
      CHECK(BigInt(c.coloring.palette_size()) == turan_3(n, s - 1).value + 1);
      CHECK(matching_number(c.family) <= s - 2);
      CHECK_FALSE(find_rainbow_matching(c.coloring, s));
    }
  }
}

TEST_CASE("rainbow search on all-distinct colourings") {
  CHECK(find_rainbow_matching(EdgeColoring::all_distinct(9, 3), 3));
  CHECK_FALSE(find_rainbow_matching(EdgeColoring::all_distinct(8, 3), 3));
  const auto cert = certify_no_rainbow_perfect_matching(EdgeColoring::all_distinct(6, 3));
  CHECK_FALSE(cert.verdict);
  CHECK(cert.search_size == 10);
  CHECK(cert.parameters["rainbow_perfect_matchings"] == 10);
}

TEST_CASE("rainbow search and the census agree on random colourings") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> pick_colors(2, 12);
  for (int c = 0; c < 300; ++c) {
    const int n = c % 2 == 0 ? 6 : 9;
    const auto coloring = random_coloring(rng, n, 3, pick_colors(rng));
    const auto census = perfect_matching_census_serial(coloring);
    const auto found = find_rainbow_matching(coloring, n / 3);
    CHECK(found.has_value() == (census.rainbow > 0));
    if (found) {
      CHECK(found->is_perfect(n));
      CHECK(found->valid());
    }
  }
}

TEST_CASE("parallel census equals the serial reference") {
  std::mt19937_64 rng(31);
  const auto h1 = build_H1_coloring(12, 3).coloring;
  const auto serial = perfect_matching_census_serial(h1);
  CHECK(serial.matchings == 15400);
  CHECK(serial.rainbow == 0);
  for (int threads : {1, 2, 3, 8}) {
    const auto par = perfect_matching_census(h1, threads);
    CHECK(par.matchings == serial.matchings);
    CHECK(par.rainbow == serial.rainbow);
  }
  for (int c = 0; c < 20; ++c) {
    const auto coloring = random_coloring(rng, 12, 3, 40);
    const auto a = perfect_matching_census_serial(coloring);
    const auto b = perfect_matching_census(coloring, 4);
    CHECK(a.matchings == b.matchings);
    CHECK(a.rainbow == b.rainbow);
  }
  CHECK_THROWS_AS(perfect_matching_census_serial(EdgeColoring::all_distinct(7, 3)), std::invalid_argument);
}

TEST_CASE("certificate JSON") {
  const auto cert = certify_no_rainbow_perfect_matching(build_H1_coloring(9, 3).coloring, 2);
  CHECK(cert.verdict);
  CHECK(cert.search_size == 280);
  const nlohmann::json j = cert;
  for (const char* key : {"claim", "parameters", "search_size", "verdict", "elapsed_ms"}) CHECK(j.contains(key));
  const auto back = j.get<Certificate>();
  CHECK(back.claim == cert.claim);
  CHECK(back.search_size == 280);
  CHECK(back.verdict);
  CHECK(back.parameters == cert.parameters);
}

}
