#include "armatch/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace armatch {

namespace {

void check_shape(int n, int k) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in [1, 64], got " + std::to_string(n));
  }
  if (k < 2 || k > kMaxVertices) throw std::invalid_argument("uniformity must be in [2, 64], got " + std::to_string(k));
}

void check_vertex(const UniformHypergraph& h, int v) {
  if (v < 1 || v > h.n()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " outside [1, " + std::to_string(h.n()) + "]");
  }
}

}  // namespace

UniformHypergraph::UniformHypergraph(int n, int k) : n_(n), k_(k) { check_shape(n, k); }

UniformHypergraph::UniformHypergraph(int n, int k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  check_shape(n, k);
  const VertexSet ground = prefix_set(n);
  for (Edge e : edges_) {
    if (set_size(e) != k) throw std::invalid_argument("edge of size " + std::to_string(set_size(e)) + " in a " + std::to_string(k) + "-graph");
    if ((e & ~ground) != 0) throw std::invalid_argument("edge leaves the vertex set [" + std::to_string(n) + "]");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
}

UniformHypergraph::UniformHypergraph(Trusted, int n, int k, std::vector<Edge> sorted_edges)
    : n_(n), k_(k), edges_(std::move(sorted_edges)) {}

UniformHypergraph UniformHypergraph::from_lists(int n, int k, const std::vector<std::vector<int>>& edges) {
  std::vector<Edge> masks;
  masks.reserve(edges.size());
  for (const auto& list : edges) {
    if (static_cast<int>(list.size()) != k) throw std::invalid_argument("edge list of wrong length");
    masks.push_back(make_set(list));
  }
  return UniformHypergraph(n, k, std::move(masks));
}

UniformHypergraph UniformHypergraph::complete(int n, int k) { return complete_on(n, k, prefix_set(n)); }

UniformHypergraph UniformHypergraph::complete_on(int n, int k, VertexSet ground) {
  check_shape(n, k);
  if ((ground & ~prefix_set(n)) != 0) throw std::invalid_argument("ground set leaves [n]");
  std::vector<Edge> edges;
  for_each_subset(ground, k, [&](VertexSet e) { edges.push_back(e); });
  return UniformHypergraph(Trusted{}, n, k, std::move(edges));
}

VertexSet UniformHypergraph::support() const {
  VertexSet s = 0;
  for (Edge e : edges_) s |= e;
  return s;
}

bool UniformHypergraph::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

UniformHypergraph UniformHypergraph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all(edges_);
  all.insert(all.end(), extra.begin(), extra.end());
  return UniformHypergraph(n_, k_, std::move(all));
}

VertexSet Matching::covered() const {
  VertexSet s = 0;
  for (Edge e : edges) s |= e;
  return s;
}

bool Matching::valid() const {
  VertexSet seen = 0;
  for (Edge e : edges) {
    if (!disjoint(seen, e)) return false;
    if (!edges.empty() && set_size(e) != set_size(edges.front())) return false;
    seen |= e;
  }
  return true;
}

SetFamily make_family(int m, int l, std::vector<VertexSet> members) {
  if (m < 0 || m > kMaxVertices || l < 0) throw std::invalid_argument("bad set family shape");
  for (VertexSet s : members) {
    if (set_size(s) != l || (s & ~prefix_set(m)) != 0) throw std::invalid_argument("family member of wrong size or outside [m]");
  }
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("duplicate family member");
  }
  return SetFamily{m, l, std::move(members)};
}

int degree(const UniformHypergraph& h, int v) {
  check_vertex(h, v);
  const VertexSet bit = vertex_bit(v);
  return static_cast<int>(std::count_if(h.edges().begin(), h.edges().end(), [bit](Edge e) { return (e & bit) != 0; }));
}

SetFamily neighborhood(const UniformHypergraph& h, int v) {
  check_vertex(h, v);
  const VertexSet bit = vertex_bit(v);
  SetFamily f{h.n(), h.k() - 1, {}};
  for (Edge e : h.edges()) {
    if (e & bit) f.members.push_back(e ^ bit);
  }
  std::sort(f.members.begin(), f.members.end());
  return f;
}

int min_degree(const UniformHypergraph& h) {
  std::vector<int> d(h.n() + 1, 0);
  for (Edge e : h.edges()) {
    for (VertexSet s = e; s != 0; s &= s - 1) ++d[lowest_vertex(s)];
  }
  return *std::min_element(d.begin() + 1, d.end());
}

UniformHypergraph induced(const UniformHypergraph& h, VertexSet s) {
  if ((s & ~h.vertices()) != 0) throw std::invalid_argument("vertex subset leaves [n]");
  std::vector<Edge> kept;
  for (Edge e : h.edges()) {
    if ((e & ~s) == 0) kept.push_back(e);
  }
  return HypergraphAccess::adopt_sorted(h.n(), h.k(), std::move(kept));
}

UniformHypergraph remove_vertices(const UniformHypergraph& h, VertexSet s) {
  if ((s & ~h.vertices()) != 0) throw std::invalid_argument("vertex subset leaves [n]");
  return induced(h, h.vertices() & ~s);
}

UniformHypergraph remove_edges(const UniformHypergraph& h, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  for (Edge e : drop) {
    if (!h.contains(e)) throw std::invalid_argument("remove_edges: edge not present in the hypergraph");
  }
  std::vector<Edge> kept;
  kept.reserve(h.edge_count() - drop.size());
  std::set_difference(h.edges().begin(), h.edges().end(), drop.begin(), drop.end(), std::back_inserter(kept));
  return HypergraphAccess::adopt_sorted(h.n(), h.k(), std::move(kept));
}

bool are_cross_intersecting(const SetFamily& a, const SetFamily& b) {
  if (a.m != b.m) throw std::invalid_argument("cross-intersection check over different ground sets");
  for (VertexSet x : a.members) {
    for (VertexSet y : b.members) {
      if (disjoint(x, y)) return false;
    }
  }
  return true;
}

bool is_intersecting(const SetFamily& a) {
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    for (std::size_t j = i + 1; j < a.members.size(); ++j) {
      if (disjoint(a.members[i], a.members[j])) return false;
    }
  }
  return true;
}

}  // namespace armatch
