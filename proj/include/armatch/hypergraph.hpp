#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "armatch/bits.hpp"

namespace armatch {

/// A k-uniform hypergraph on the vertex set [n] = {1, ..., n}, n <= 64.
///
/// Edges are stored as bitmasks, sorted ascending (colex order) and
/// duplicate-free. Values are immutable once built.
class UniformHypergraph {
 public:
  /// Empty hypergraph on [n].
  UniformHypergraph(int n, int k);

  /// Validates and canonicalizes `edges`. Throws std::invalid_argument if an
  /// edge has the wrong size, leaves [n], or appears twice.
  UniformHypergraph(int n, int k, std::vector<Edge> edges);

  /// Same, from explicit 1-based vertex lists.
  static UniformHypergraph from_lists(int n, int k, const std::vector<std::vector<int>>& edges);

  static UniformHypergraph complete(int n, int k);
  /// All k-subsets of `ground`.
  static UniformHypergraph complete_on(int n, int k, VertexSet ground);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::span<const Edge> edges() const { return edges_; }
  VertexSet vertices() const { return prefix_set(n_); }
  /// Vertices covered by at least one edge.
  VertexSet support() const;

  bool contains(Edge e) const;

  /// Adds edges; the result is re-canonicalized. Duplicates are an error.
  UniformHypergraph with_edges(std::span<const Edge> extra) const;

  friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

 private:
  struct Trusted {};
  UniformHypergraph(Trusted, int n, int k, std::vector<Edge> sorted_edges);
  friend class HypergraphAccess;

  int n_;
  int k_;
  std::vector<Edge> edges_;
};

/// Escape hatch for kernels that already produce sorted, validated edges.
class HypergraphAccess {
 public:
  static UniformHypergraph adopt_sorted(int n, int k, std::vector<Edge> sorted_edges) {
    return UniformHypergraph(UniformHypergraph::Trusted{}, n, k, std::move(sorted_edges));
  }
};

/// A set of pairwise disjoint edges.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  VertexSet covered() const;
  bool is_perfect(int n) const { return covered() == prefix_set(n); }
  /// Pairwise disjointness and equal edge sizes.
  bool valid() const;
};

/// A family of l-subsets of [m].
struct SetFamily {
  int m = 0;
  int l = 0;
  std::vector<VertexSet> members;

  std::size_t size() const { return members.size(); }
  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

/// Sorts, checks sizes and ground set, rejects duplicates.
SetFamily make_family(int m, int l, std::vector<VertexSet> members);

// Degrees and neighbourhoods. The neighbourhood of v is the family of
// (k-1)-sets f with f + v an edge, over ground set [n].
int degree(const UniformHypergraph& h, int v);
SetFamily neighborhood(const UniformHypergraph& h, int v);
int min_degree(const UniformHypergraph& h);

/// H[S]: edges contained in S. Vertex ids and n are preserved.
UniformHypergraph induced(const UniformHypergraph& h, VertexSet s);
/// H - S: drops every edge meeting S. Vertex ids and n are preserved.
UniformHypergraph remove_vertices(const UniformHypergraph& h, VertexSet s);
/// H - E'. Throws std::invalid_argument unless every edge of E' is in H.
UniformHypergraph remove_edges(const UniformHypergraph& h, std::span<const Edge> removed);

bool are_cross_intersecting(const SetFamily& a, const SetFamily& b);
bool is_intersecting(const SetFamily& a);

}  // namespace armatch
