#pragma once

#include <optional>
#include <vector>

#include "armatch/certificate.hpp"
#include "armatch/coloring.hpp"
#include "armatch/formulas.hpp"
#include "armatch/hypergraph.hpp"
#include "armatch/solvers.hpp"

namespace armatch {

/// Vertex layout shared by the two perfect-matching colourings: U holds the
/// first n-k-1 vertices, W the last k+1. For even k the apex is the largest
/// vertex; `traces` are the sets A_i (odd k) or B_i (even k) in colex order.
struct PerfectMatchingLayout {
  int n = 0;
  int k = 0;
  VertexSet U = 0;
  VertexSet W = 0;
  int apex = 0;  // even k only
  std::vector<VertexSet> traces;
  int bijective_colors = 0;  // C(|U|, k)
};

struct LowerBoundColoring {
  EdgeColoring coloring;
  PerfectMatchingLayout layout;
};

/// Odd k >= 3, n = ks with s >= 3. Edges inside U get colours 1..C(|U|,k)
/// bijectively (colex). Class i holds the edges e with e & W equal to A_i or
/// to W \ A_i and gets colour C(|U|,k) + i, where A_i runs over the
/// (k+1)/2-subsets of W containing min W. Everything else gets colour 0.
LowerBoundColoring build_H1_coloring(int n, int k);

/// Even k >= 4, n = ks with s >= 3. B_i runs over the (k/2-1)-subsets of
/// W \ {x}, x = n. Class i holds the edges through x with e & W = B_i + x, and
/// the edges with e & W = W \ (B_i + x).
LowerBoundColoring build_H2_coloring(int n, int k);

/// The colouring behind 2 + ex(n,k,M_{s-1}) <= ar(n,k,M_s): a largest known
/// family F with nu(F) <= s-2 (cover or clique construction, whichever is
/// bigger) is coloured rainbow, every other edge shares one extra colour.
struct TuranColoring {
  EdgeColoring coloring;
  UniformHypergraph family;
  /// Whether |F| = ex(n,k,M_{s-1}) is a theorem here (k = 3 range) rather
  /// than the matching conjecture.
  Validity extremal;
};
TuranColoring build_turan_plus_one_coloring(int n, int k, int s);

/// A rainbow s-matching, or nothing.
///
/// Depth-first: the lowest uncovered vertex is either covered by one of its
/// edges (colex order, colour unused so far) or skipped while the slack
/// n - ks allows. Cuts when fewer than k * need vertices or fewer than need
/// unused colours remain.
std::optional<Matching> find_rainbow_matching(const EdgeColoring& c, int s, SearchStats* stats = nullptr);

struct PerfectMatchingCensus {
  std::uint64_t matchings = 0;
  std::uint64_t rainbow = 0;
};

/// Enumerates every perfect matching of the complete k-graph on [n] by
/// matching the lowest uncovered vertex, and counts the rainbow ones. Serial
/// reference kernel.
PerfectMatchingCensus perfect_matching_census_serial(const EdgeColoring& c);

/// Same census, sharded over the edge through vertex 1 with OpenMP.
PerfectMatchingCensus perfect_matching_census(const EdgeColoring& c, int threads);

/// Verdict true iff no perfect matching is rainbow. search_size is the
/// number of perfect matchings examined. Throws std::invalid_argument unless
/// k divides n.
Certificate certify_no_rainbow_perfect_matching(const EdgeColoring& c, int threads = 1);

}  // namespace armatch
