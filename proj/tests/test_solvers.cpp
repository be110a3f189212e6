#include <doctest.h>

#include <random>

#include "armatch/constructions.hpp"
#include "armatch/solvers.hpp"
#include "support.hpp"

using namespace armatch;

TEST_SUITE("solvers") {

TEST_CASE("matching number examples") {
  CHECK(matching_number(UniformHypergraph(6, 3)) == 0);
  CHECK(matching_number(UniformHypergraph::complete(9, 3)) == 3);
  CHECK(matching_number(build_Hcover(7, 3, 2)) == 2);
  CHECK(matching_number(build_D(12, 3, 3)) == 3);
  CHECK(matching_number(UniformHypergraph::complete(16, 4)) == 4);
}

TEST_CASE("has_matching_of_size examples") {
  CHECK(has_matching_of_size(UniformHypergraph::complete(9, 3), 3));
  CHECK_FALSE(has_matching_of_size(build_D(9, 3, 2), 3));
  CHECK_FALSE(has_matching_of_size(build_DScript(9, 2), 3));
  CHECK(has_matching_of_size(UniformHypergraph(5, 3), 0));
}

TEST_CASE("returned matchings are genuine") {
  const auto h = build_DScript(9, 2);
  const Matching m = maximum_matching(h);
  CHECK(m.size() == 2);
  CHECK(m.valid());
  for (Edge e : m.edges) CHECK(h.contains(e));
  CHECK_FALSE(find_matching_of_size(h, 3));
  const auto two = find_matching_of_size(h, 2);
  REQUIRE(two);
  CHECK(two->valid());
}

TEST_CASE("matching number agrees with exhaustive search, 1000 random graphs") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> pick_k(2, 3);
  for (int c = 0; c < 1000; ++c) {
    const int k = pick_k(rng);
    const auto h = testing::random_hypergraph(rng, k, 7, k);
    const int nu = matching_number(h);
    CHECK(nu == testing::brute_matching_number(h));
    CHECK(nu <= h.n() / h.k());
    CHECK(has_matching_of_size(h, nu));
    CHECK_FALSE(has_matching_of_size(h, nu + 1));
    CHECK(maximum_matching(h).size() == static_cast<std::size_t>(nu));
  }
}

TEST_CASE("removing an edge lowers nu by at most one") {
  std::mt19937_64 rng(77);
  for (int c = 0; c < 200; ++c) {
    const auto h = testing::random_hypergraph(rng, 5, 8, 3);
    if (h.empty()) continue;
    const int nu = matching_number(h);
    const Edge e[] = {h.edges()[c % h.edge_count()]};
    const int after = matching_number(remove_edges(h, e));
    CHECK(after <= nu);
    CHECK(after >= nu - 1);
  }
}

TEST_CASE("clique number") {
  CHECK(clique_number(UniformHypergraph::complete(5, 3)) == 5);
  CHECK(clique_number(build_D(9, 3, 2)) == 8);
  CHECK(clique_number(build_Hcover(7, 3, 2)) == 4);
  CHECK(clique_number(UniformHypergraph(6, 3)) == 0);

  std::mt19937_64 rng(5);
  for (int c = 0; c < 300; ++c) {
    const auto h = testing::random_hypergraph(rng, 3, 7, 3);
    CHECK(clique_number(h) == testing::brute_clique_number(h));
  }
}

}
