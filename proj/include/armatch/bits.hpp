#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace armatch {

// Vertex v (1-based) occupies bit v-1. For sets of equal size, numeric order
// of the masks is colex order.
using VertexSet = std::uint64_t;
using Edge = VertexSet;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

/// The set {1, ..., n}.
constexpr VertexSet prefix_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }
constexpr int lowest_vertex(VertexSet s) { return std::countr_zero(s) + 1; }
constexpr int highest_vertex(VertexSet s) { return 64 - std::countl_zero(s); }
constexpr bool contains_vertex(VertexSet s, int v) { return (s >> (v - 1)) & 1; }
constexpr bool disjoint(VertexSet a, VertexSet b) { return (a & b) == 0; }

std::vector<int> vertices_of(VertexSet s);

/// Builds a set from 1-based vertex ids; throws std::invalid_argument on ids
/// outside [1, 64] or repeated ids.
VertexSet make_set(std::span<const int> vertices);
inline VertexSet make_set(std::initializer_list<int> vertices) {
  return make_set(std::span<const int>(vertices.begin(), vertices.size()));
}

/// Exact C(n, k) for 0 <= n <= 64; overflow-free in that range.
std::uint64_t binomial_u64(int n, int k);

/// Rank of a k-subset of [n] in colex order, 0-based.
std::uint64_t colex_rank(VertexSet s);

/// Deposits the low bits of `pattern` onto the members of `ground`, lowest
/// first (a software pdep).
constexpr VertexSet deposit(VertexSet pattern, VertexSet ground) {
  VertexSet out = 0;
  while (pattern != 0 && ground != 0) {
    VertexSet low = ground & (~ground + 1);
    if (pattern & 1) out |= low;
    ground ^= low;
    pattern >>= 1;
  }
  return out;
}

/// Calls f(subset) for every `size`-subset of `ground`, in colex order.
/// f may return void, or bool where false stops the enumeration.
template <class F>
void for_each_subset(VertexSet ground, int size, F&& f) {
  const int m = set_size(ground);
  if (size < 0 || size > m) return;
  auto call = [&](VertexSet s) {
    if constexpr (std::is_same_v<decltype(f(s)), bool>) {
      return f(s);
    } else {
      f(s);
      return true;
    }
  };
  if (size == 0) {
    call(0);
    return;
  }
  const bool identity = ground == prefix_set(m);
  VertexSet pattern = prefix_set(size);
  for (;;) {
    if (!call(identity ? pattern : deposit(pattern, ground))) return;
    // Gosper's hack.
    const VertexSet c = pattern & (~pattern + 1);
    const VertexSet r = pattern + c;
    if (r == 0) return;
    pattern = (((r ^ pattern) >> 2) / c) | r;
    if (m < 64 && (pattern >> m) != 0) return;
  }
}

}  // namespace armatch
