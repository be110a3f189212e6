#pragma once

#include <vector>

#include "armatch/hypergraph.hpp"

namespace armatch {

/// The (i, j)-shift of a single edge e of H: replace j by i when j is in e,
/// i is not, and the replaced edge is not already in H. Requires
/// 1 <= i < j <= n and e in E(H); otherwise std::invalid_argument.
Edge shift_edge(const UniformHypergraph& h, int i, int j, Edge e);

/// S_ij(H), the shift applied to every edge simultaneously.
UniformHypergraph shift(const UniformHypergraph& h, int i, int j);

struct ShiftStep {
  int sweep;
  int i;
  int j;
  int moved;  // edges changed by this shift
};

/// Repeats full sweeps over (i, j), i < j, in lexicographic order until a
/// sweep changes nothing. If `trace` is given, every shift that moved at
/// least one edge is appended to it.
UniformHypergraph stabilize(const UniformHypergraph& h, std::vector<ShiftStep>* trace = nullptr);

/// H equals S_ij(H) for all i < j.
bool is_stable(const UniformHypergraph& h);

/// Downward closure under componentwise dominance of sorted vertex tuples,
/// checked through single-coordinate decrements.
bool is_dominance_closed(const UniformHypergraph& h);

}  // namespace armatch
