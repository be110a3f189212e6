#include "armatch/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace armatch {

EdgeColoring::EdgeColoring(int n, int k, std::vector<int> colors) : n_(n), k_(k), colors_(std::move(colors)) {
  if (n < 1 || n > kMaxVertices || k < 1 || k > n) throw std::invalid_argument("colouring needs 1 <= k <= n <= 64");
  const std::uint64_t edges = binomial_u64(n, k);
  if (edges > kMaxColoredEdges) throw std::invalid_argument("colouring too large: C(n,k) = " + std::to_string(edges));
  if (colors_.size() != edges) {
    throw std::invalid_argument("colouring is not total: " + std::to_string(colors_.size()) + " colours for " +
                                std::to_string(edges) + " edges");
  }
  if (colors_.empty()) return;
  const auto [lo, hi] = std::minmax_element(colors_.begin(), colors_.end());
  if (*lo < 0) throw std::invalid_argument("negative colour id");
  max_color_ = *hi;
  std::vector<char> seen(static_cast<std::size_t>(max_color_) + 1, 0);
  for (int c : colors_) {
    palette_size_ += !seen[c];
    seen[c] = 1;
  }
}

EdgeColoring EdgeColoring::all_distinct(int n, int k) {
  const std::uint64_t edges = binomial_u64(n, k);
  if (edges > kMaxColoredEdges) throw std::invalid_argument("colouring too large");
  std::vector<int> colors(edges);
  for (std::uint64_t i = 0; i < edges; ++i) colors[i] = static_cast<int>(i);
  return EdgeColoring(n, k, std::move(colors));
}

EdgeColoring EdgeColoring::renumbered() const {
  if (is_contiguous()) return *this;
  std::vector<int> map(static_cast<std::size_t>(max_color_) + 1, -1);
  for (int c : colors_) map[c] = 0;
  int next = 0;
  for (int& m : map) {
    if (m == 0) m = next++;
  }
  std::vector<int> out(colors_.size());
  std::transform(colors_.begin(), colors_.end(), out.begin(), [&](int c) { return map[c]; });
  return EdgeColoring(n_, k_, std::move(out));
}

}  // namespace armatch
