#include <doctest.h>

#include <random>

#include "armatch/constructions.hpp"
#include "armatch/oracle.hpp"
#include "armatch/shifting.hpp"
#include "armatch/solvers.hpp"
#include "support.hpp"

using namespace armatch;

namespace {

bool is_star(const std::vector<VertexSet>& family, int m) {
  VertexSet common = prefix_set(m);
  for (VertexSet f : family) common &= f;
  return common != 0 && static_cast<int>(family.size()) == m - 1;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("stable Turan search examples") {
  CHECK(brute_turan_stable(6, 3, 1).max_edges == 10);
  CHECK(brute_turan_stable(7, 3, 1).max_edges == 15);
  const auto r = brute_turan_stable(9, 3, 2);
  CHECK(r.max_edges == 56);
  CHECK(r.nodes > 0);
  CHECK_THROWS_AS(brute_turan_stable(11, 3, 2), InstanceTooLarge);
  CHECK_THROWS_AS(brute_turan_stable(6, 3, -1), std::invalid_argument);
}

TEST_CASE("stable Turan search agrees with the formula wherever C(n,3) <= 120") {
  for (int n = 3; n <= 10; ++n) {
    for (int s = 1; s <= n / 3; ++s) {
      const auto r = brute_turan_stable_serial(n, 3, s);
      const auto f = turan_3(n, s + 1);
      if (f.valid == Validity::kProved) {
        CHECK(BigInt(r.max_edges) == f.value);
      } else {
        // Below the theorem's range the cap C(n,3) can bind.
        CHECK(BigInt(r.max_edges) == std::min(f.value, binomial(n, 3)));
      }
      const UniformHypergraph w(n, 3, r.witness);
      CHECK(static_cast<int>(w.edge_count()) == r.max_edges);
      CHECK(is_stable(w));
      CHECK(matching_number(w) <= s);
    }
  }
}

TEST_CASE("stable Turan search for k = 2 and k = 4") {
  for (int n = 4; n <= 12; ++n) {
    for (int s = 1; s <= n / 2 - 1; ++s) {
      const auto f = turan_conjectured(n, 2, s);
      if (f.valid == Validity::kProved) CHECK(BigInt(brute_turan_stable(n, 2, s).max_edges) == f.value);
    }
  }
  CHECK(brute_turan_stable(8, 4, 1).max_edges == 35);
  CHECK(BigInt(brute_turan_stable(7, 4, 1).max_edges) == turan_conjectured(7, 4, 1).value);
}

TEST_CASE("parallel Turan search equals the serial reference") {
  for (auto [n, s] : {std::pair{8, 2}, std::pair{9, 2}, std::pair{10, 2}, std::pair{9, 1}}) {
    const auto serial = brute_turan_stable_serial(n, 3, s);
    for (int threads : {1, 2, 4}) {
      const auto par = brute_turan_stable(n, 3, s, threads);
      CHECK(par.max_edges == serial.max_edges);
      CHECK(par.witness.size() == serial.witness.size());
    }
  }
}

TEST_CASE("restricting to stable families loses nothing, 500 random graphs") {
  std::mt19937_64 rng(500);
  for (int c = 0; c < 500; ++c) {
    const auto h = testing::random_hypergraph(rng, 3, 7, 3);
    const auto st = stabilize(h);
    const int nu = matching_number(h);
    CHECK(st.edge_count() == h.edge_count());
    CHECK(matching_number(st) <= nu);
    if (nu >= 1) CHECK(static_cast<int>(h.edge_count()) <= brute_turan_stable(h.n(), 3, nu).max_edges);
  }
}

TEST_CASE("cross-intersecting maximum") {
  for (auto [m, l] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{7, 2}}) {
    const auto r = brute_cross_intersecting_max(m, l);
    CHECK(BigInt(r.max_sum) == binomial(m, l) - binomial(m - l, l) + 1);
    CHECK(r.families_examined == (std::uint64_t{1} << binomial_u64(m, l)) - 1);
  }
  CHECK(brute_cross_intersecting_max(5, 2).max_sum == 8);
  CHECK(brute_cross_intersecting_max(6, 2).max_sum == 10);
  CHECK_THROWS_AS(brute_cross_intersecting_max(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(brute_cross_intersecting_max(10, 2), InstanceTooLarge);
}

TEST_CASE("extremal cross-intersecting pairs are the two equality cases") {
  for (auto [m, l] : {std::pair{5, 2}, std::pair{6, 2}}) {
    const auto r = brute_cross_intersecting_max(m, l);
    REQUIRE_FALSE(r.extremal.empty());
    for (const auto& [a, b] : r.extremal) {
      CHECK(static_cast<int>(a.size() + b.size()) == r.max_sum);
      CHECK(are_cross_intersecting(make_family(m, l, a), make_family(m, l, b)));
      const bool single = a.size() == 1 || b.size() == 1;
      const bool stars = a == b && is_star(a, m);
      CHECK((single || stars));
    }
  }
}

TEST_CASE("parallel cross-intersecting search equals the serial one") {
  const auto serial = brute_cross_intersecting_max(6, 2, 1);
  const auto par = brute_cross_intersecting_max(6, 2, 4);
  CHECK(par.max_sum == serial.max_sum);
  CHECK(par.families_examined == serial.families_examined);
  CHECK(par.extremal.size() == serial.extremal.size());
}

TEST_CASE("epsilon containment") {
  const auto d = build_D(9, 3, 2);
  const Edge one[] = {d.edges()[0]};
  const auto d_minus = remove_edges(d, one);
  CHECK(epsilon_contains(d, d_minus, Rational(1, 100)));
  CHECK_FALSE(epsilon_contains(d, d_minus, Rational(0)));
  CHECK(epsilon_contains(d, d, Rational(0)));
  CHECK_FALSE(epsilon_contains(UniformHypergraph::complete(6, 3), UniformHypergraph(6, 3), Rational(1, 100)));
  CHECK_THROWS_AS(epsilon_contains(d, UniformHypergraph(8, 3), Rational(1)), std::invalid_argument);

  std::mt19937_64 rng(6);
  for (int c = 0; c < 100; ++c) {
    const auto a = testing::random_hypergraph(rng, 6, 6, 3);
    const auto b = testing::random_hypergraph(rng, 6, 6, 3);
    bool previous = false;
    for (int step = 0; step <= 20; ++step) {
      const bool now = epsilon_contains(a, b, Rational(step, 200));
      CHECK((!previous || now));
      previous = now;
    }
    CHECK(previous);
  }
}

TEST_CASE("theta-good vertices") {
  const auto k5 = UniformHypergraph::complete(5, 3);
  const auto without1 = remove_vertices(k5, make_set({1}));
  CHECK(theta_good_vertices(without1, k5, Rational(6, 25)) == prefix_set(5));
  CHECK(theta_good_vertices(without1, k5, Rational(5, 25)) == make_set({2, 3, 4, 5}));
  CHECK(theta_good_vertices(k5, k5, Rational(0)) == prefix_set(5));

  std::mt19937_64 rng(7);
  for (int c = 0; c < 100; ++c) {
    const auto h = testing::random_hypergraph(rng, 7, 7, 3);
    VertexSet previous = 0;
    for (int step = 0; step <= 10; ++step) {
      const VertexSet now = theta_good_vertices(h, UniformHypergraph::complete(7, 3), Rational(step, 30));
      CHECK((previous & ~now) == 0);
      previous = now;
    }
  }
}

TEST_CASE("minimum degree certificate") {
  const auto full = certify_min_degree_matching(UniformHypergraph::complete(9, 3), 3);
  CHECK(full.verdict);
  CHECK(full.parameters["hypothesis_met"] == true);
  CHECK(full.parameters["outcome"] == "confirmed");
  CHECK(full.parameters["min_degree"] == 28);
  CHECK(full.parameters["threshold"] == 13);

  const auto cover = certify_min_degree_matching(build_Hcover(9, 3, 2), 3);
  CHECK(cover.verdict);
  CHECK(cover.parameters["hypothesis_met"] == false);
  CHECK(cover.parameters["outcome"] == "hypothesis-not-met");
  CHECK(cover.parameters["min_degree"] == 13);

  const auto empty = certify_min_degree_matching(UniformHypergraph(9, 3), 1);
  CHECK(empty.parameters["hypothesis_met"] == false);
  CHECK_THROWS_AS(certify_min_degree_matching(UniformHypergraph(9, 4), 1), std::invalid_argument);
}

}
