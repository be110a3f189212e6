#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "armatch/hypergraph.hpp"

namespace armatch::testing {

// Each k-subset of [n] independently with probability p.
inline UniformHypergraph random_hypergraph(std::mt19937_64& rng, int n, int k, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for_each_subset(prefix_set(n), k, [&](Edge e) {
    if (coin(rng)) edges.push_back(e);
  });
  return UniformHypergraph(n, k, std::move(edges));
}

// Random n in [lo, hi] and a random density, so sparse and dense cases both
// show up.
inline UniformHypergraph random_hypergraph(std::mt19937_64& rng, int lo, int hi, int k) {
  std::uniform_int_distribution<int> pick_n(lo, hi);
  std::uniform_real_distribution<double> pick_p(0.0, 1.0);
  const int n = pick_n(rng);
  return random_hypergraph(rng, n, k, pick_p(rng));
}

// Plain exhaustive matching number: include or skip each edge in turn.
inline int brute_matching_number(const UniformHypergraph& h) {
  const auto edges = h.edges();
  int best = 0;
  auto go = [&](auto&& self, std::size_t i, VertexSet used, int size) -> void {
    best = std::max(best, size);
    for (std::size_t j = i; j < edges.size(); ++j) {
      if ((edges[j] & used) == 0) self(self, j + 1, used | edges[j], size + 1);
    }
  };
  go(go, 0, 0, 0);
  return best;
}

// f <= e componentwise after sorting both vertex lists.
inline bool dominated_by(Edge f, Edge e) {
  const auto a = vertices_of(f);
  const auto b = vertices_of(e);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Downward closure checked against every k-set, no shortcuts.
inline bool brute_dominance_closed(const UniformHypergraph& h) {
  bool closed = true;
  for (Edge e : h.edges()) {
    for_each_subset(prefix_set(h.n()), h.k(), [&](Edge f) {
      if (dominated_by(f, e) && !h.contains(f)) closed = false;
      return closed;
    });
    if (!closed) break;
  }
  return closed;
}

// Clique number by trying every vertex subset, largest first.
inline int brute_clique_number(const UniformHypergraph& h) {
  if (h.empty()) return 0;
  for (int size = h.n(); size >= h.k(); --size) {
    bool found = false;
    for_each_subset(prefix_set(h.n()), size, [&](VertexSet u) {
      bool all = true;
      for_each_subset(u, h.k(), [&](Edge e) {
        all = h.contains(e);
        return all;
      });
      found = all;
      return !found;
    });
    if (found) return size;
  }
  return 0;
}

}  // namespace armatch::testing
