#include "armatch/shifting.hpp"

#include <stdexcept>
#include <string>

namespace armatch {

namespace {

void check_pair(const UniformHypergraph& h, int i, int j) {
  if (!(1 <= i && i < j && j <= h.n())) {
    throw std::invalid_argument("shift needs 1 <= i < j <= n, got (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
}

Edge shifted(const UniformHypergraph& h, VertexSet bi, VertexSet bj, Edge e) {
  if ((e & bj) == 0 || (e & bi) != 0) return e;
  const Edge moved = (e & ~bj) | bi;
  return h.contains(moved) ? e : moved;
}

// Returns the number of edges that moved.
int shift_into(const UniformHypergraph& h, int i, int j, std::vector<Edge>& out) {
  const VertexSet bi = vertex_bit(i);
  const VertexSet bj = vertex_bit(j);
  out.clear();
  int moved = 0;
  for (Edge e : h.edges()) {
    const Edge f = shifted(h, bi, bj, e);
    moved += f != e;
    out.push_back(f);
  }
  return moved;
}

}  // namespace

Edge shift_edge(const UniformHypergraph& h, int i, int j, Edge e) {
  check_pair(h, i, j);
  if (!h.contains(e)) throw std::invalid_argument("shift_edge: edge is not in the hypergraph");
  return shifted(h, vertex_bit(i), vertex_bit(j), e);
}

UniformHypergraph shift(const UniformHypergraph& h, int i, int j) {
  check_pair(h, i, j);
  std::vector<Edge> out;
  out.reserve(h.edge_count());
  if (shift_into(h, i, j, out) == 0) return h;
  // Shifted edges are pairwise distinct, so this only re-sorts.
  return UniformHypergraph(h.n(), h.k(), std::move(out));
}

UniformHypergraph stabilize(const UniformHypergraph& h, std::vector<ShiftStep>* trace) {
  UniformHypergraph current = h;
  std::vector<Edge> out;
  for (int sweep = 0;; ++sweep) {
    bool changed = false;
    for (int i = 1; i <= h.n(); ++i) {
      for (int j = i + 1; j <= h.n(); ++j) {
        const int moved = shift_into(current, i, j, out);
        if (moved == 0) continue;
        changed = true;
        if (trace) trace->push_back({sweep, i, j, moved});
        current = UniformHypergraph(h.n(), h.k(), out);
      }
    }
    if (!changed) return current;
  }
}

bool is_stable(const UniformHypergraph& h) {
  for (int i = 1; i <= h.n(); ++i) {
    for (int j = i + 1; j <= h.n(); ++j) {
      const VertexSet bi = vertex_bit(i);
      const VertexSet bj = vertex_bit(j);
      for (Edge e : h.edges()) {
        if (shifted(h, bi, bj, e) != e) return false;
      }
    }
  }
  return true;
}

bool is_dominance_closed(const UniformHypergraph& h) {
  // Dominance is generated by moving one element x down to x - 1 when x - 1
  // is free.
  for (Edge e : h.edges()) {
    for (VertexSet s = e & ~VertexSet{1}; s != 0; s &= s - 1) {
      const VertexSet x = s & (~s + 1);
      const VertexSet below = x >> 1;
      if ((e & below) != 0) continue;
      if (!h.contains((e & ~x) | below)) return false;
    }
  }
  return true;
}

}  // namespace armatch
