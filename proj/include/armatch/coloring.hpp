#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "armatch/bits.hpp"

namespace armatch {

/// Largest C(n, k) an EdgeColoring will hold.
inline constexpr std::uint64_t kMaxColoredEdges = std::uint64_t{1} << 26;

/// A total colouring of the edges of the complete k-graph on [n].
///
/// Colours are indexed by the colex rank of the edge. Colour ids are
/// nonnegative; the constructions in this library use 0 for the "otherwise"
/// class and keep ids contiguous.
class EdgeColoring {
 public:
  /// Throws std::invalid_argument unless colors.size() == C(n, k) and every
  /// colour is nonnegative.
  EdgeColoring(int n, int k, std::vector<int> colors);

  /// Every edge gets its own colour, 0 .. C(n,k)-1 in colex order.
  static EdgeColoring all_distinct(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t edge_count() const { return colors_.size(); }
  std::span<const int> colors() const { return colors_; }
  int color_at(std::uint64_t rank) const { return colors_[rank]; }
  int color_of(Edge e) const { return colors_[colex_rank(e)]; }

  /// Number of distinct colours used.
  int palette_size() const { return palette_size_; }
  /// Largest colour id used.
  int max_color() const { return max_color_; }
  /// Colours used are exactly {0, ..., palette_size - 1}.
  bool is_contiguous() const { return max_color_ + 1 == palette_size_; }
  /// Order-preserving renumbering onto {0, ..., palette_size - 1}.
  EdgeColoring renumbered() const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.colors_ == b.colors_;
  }

 private:
  int n_;
  int k_;
  std::vector<int> colors_;
  int palette_size_ = 0;
  int max_color_ = -1;
};

}  // namespace armatch
