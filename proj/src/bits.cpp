#include "armatch/bits.hpp"

#include <array>
#include <string>

namespace armatch {

namespace {

struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  BinomialTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

}  // namespace

std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s != 0) {
    out.push_back(lowest_vertex(s));
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    if (contains_vertex(s, v)) throw std::invalid_argument("repeated vertex id: " + std::to_string(v));
    s |= vertex_bit(v);
  }
  return s;
}

std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > 64) throw std::out_of_range("binomial_u64: n > 64");
  return table().c[n][k];
}

std::uint64_t colex_rank(VertexSet s) {
  std::uint64_t rank = 0;
  int i = 1;
  while (s != 0) {
    rank += binomial_u64(std::countr_zero(s), i++);
    s &= s - 1;
  }
  return rank;
}

}  // namespace armatch
