#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "armatch/certificate.hpp"
#include "armatch/formulas.hpp"
#include "armatch/hypergraph.hpp"

namespace armatch {

/// Raised when an exhaustive engine is asked for an instance beyond its
/// size guard.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kTuranOracleMaxEdges = 120;
inline constexpr std::uint64_t kCrossIntersectingMaxSets = 24;

struct TuranOracleResult {
  int max_edges = 0;
  std::vector<Edge> witness;  // an extremal stable family, colex order
  std::uint64_t nodes = 0;
};

/// max e(H) over k-graphs H on [n] with nu(H) <= s.
///
/// Shifting preserves e(H) and never raises nu(H), so the maximum is attained
/// by a stable family. The search walks the k-sets in colex order and decides
/// each one in or out; a set may go in only when every set obtained by
/// moving one element down by one is already in, and only when nu stays at
/// most s. Branches that cannot beat the incumbent are cut. Guard:
/// C(n,k) <= 120, else InstanceTooLarge.
TuranOracleResult brute_turan_stable_serial(int n, int k, int s);

/// Same search with the top of the decision tree sharded across OpenMP
/// threads. The returned maximum does not depend on the schedule.
TuranOracleResult brute_turan_stable(int n, int k, int s, int threads = 1);

struct CrossIntersectingResult {
  int max_sum = 0;
  /// Every pair (A, B(A)) attaining the maximum, where B(A) is the family of
  /// all l-sets meeting every member of A.
  std::vector<std::pair<std::vector<VertexSet>, std::vector<VertexSet>>> extremal;
  std::uint64_t families_examined = 0;
};

/// max |A| + |B| over nonempty cross-intersecting A, B of l-subsets of [m].
/// Enumerates every nonempty A; B(A) is then forced. Needs m > 2l > 0 and
/// C(m,l) <= 24, else InstanceTooLarge / std::invalid_argument.
CrossIntersectingResult brute_cross_intersecting_max(int m, int l, int threads = 1);

/// |E(H1) \ E(H2)| <= eps * n^k, compared exactly.
bool epsilon_contains(const UniformHypergraph& h1, const UniformHypergraph& h2, const Rational& eps);

/// Vertices v with |N_ref(v) \ N_H(v)| <= theta * n^(k-1).
VertexSet theta_good_vertices(const UniformHypergraph& h, const UniformHypergraph& ref, const Rational& theta);

/// Checks the minimum-degree condition delta_1(H) > C(n-1,2) - C(n-s,2) for
/// a 3-graph and, when it holds, confirms nu(H) >= s with the exact solver.
/// Verdict is false only for a counterexample; an unmet hypothesis makes no
/// claim and is reported in the parameters.
Certificate certify_min_degree_matching(const UniformHypergraph& h, int s);

}  // namespace armatch
