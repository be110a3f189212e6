#include "armatch/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <string>

#include "armatch/solvers.hpp"

namespace armatch {

namespace {

// Stable-family search state. Candidates are the k-sets of [n] in colex
// order, which is a linear extension of the dominance order, so every
// predecessor of a candidate is decided before it.
class TuranSearch {
 public:
  TuranSearch(int n, int k, int s) : n_(n), k_(k), s_(s) {
    for_each_subset(prefix_set(n), k, [&](Edge e) { cands_.push_back(e); });
    const int count = static_cast<int>(cands_.size());
    succs_.resize(count);
    for (int i = 0; i < count; ++i) {
      const Edge e = cands_[i];
      for (VertexSet r = e & ~VertexSet{1}; r != 0; r &= r - 1) {
        const VertexSet x = r & (~r + 1);
        if (e & (x >> 1)) continue;
        const Edge down = (e & ~x) | (x >> 1);
        succs_[index_of(down)].push_back(i);
      }
    }
    dead_.assign(count, 0);
    alive_ = count;
  }

  int candidate_count() const { return static_cast<int>(cands_.size()); }

  // Decisions for indices [0, prefix.size()) replayed from a frontier record.
  void replay(const std::vector<char>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (dead_[i]) continue;
      --alive_;
      if (prefix[i]) {
        chosen_.push_back(cands_[i]);
      } else {
        for (int j : succs_[i]) kill(j);
      }
    }
  }

  // Collects every reachable decision prefix of length `depth` (in DFS
  // order) instead of searching below it.
  void collect_frontier(int depth, std::vector<std::vector<char>>& out) {
    split_ = depth;
    frontier_ = &out;
    dfs(0);
    frontier_ = nullptr;
    split_ = -1;
  }

  // Exhaustive search from index `start` with the current state. `shared`
  // holds the best value found by other workers: a branch is cut when it
  // cannot reach that value, or cannot beat this worker's own incumbent.
  void search(int start, const std::atomic<int>* shared = nullptr) {
    shared_ = shared;
    dfs(start);
  }

  int best() const { return best_; }
  const std::vector<Edge>& best_family() const { return best_family_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int index_of(Edge e) const {
    return static_cast<int>(std::lower_bound(cands_.begin(), cands_.end(), e) - cands_.begin());
  }

  void kill(int j) {
    if (dead_[j]++ == 0) {
      --alive_;
      for (int t : succs_[j]) kill(t);
    }
  }

  void revive(int j) {
    if (--dead_[j] == 0) {
      ++alive_;
      for (int t : succs_[j]) revive(t);
    }
  }

  bool fits(Edge e) const {
    std::vector<Edge> rest;
    for (Edge f : chosen_) {
      if (disjoint(e, f)) rest.push_back(f);
    }
    return !has_matching_of_size(HypergraphAccess::adopt_sorted(n_, k_, std::move(rest)), s_);
  }

  bool cut(int reachable) const {
    if (reachable <= best_) return true;
    return shared_ != nullptr && reachable < shared_->load(std::memory_order_relaxed);
  }

  void dfs(int i) {
    ++nodes_;
    const int count = candidate_count();
    while (i < count && dead_[i]) ++i;
    if (frontier_ && i >= split_) {
      std::vector<char> prefix(split_, 0);
      for (Edge e : chosen_) {
        const int j = index_of(e);
        if (j < split_) prefix[j] = 1;
      }
      // Candidates past split_ chosen here cannot exist: dfs only advances.
      frontier_->push_back(std::move(prefix));
      return;
    }
    const int current = static_cast<int>(chosen_.size());
    if (i == count) {
      if (current > best_) {
        best_ = current;
        best_family_ = chosen_;
      }
      return;
    }
    if (cut(current + alive_)) return;

    --alive_;
    if (fits(cands_[i])) {
      chosen_.push_back(cands_[i]);
      dfs(i + 1);
      chosen_.pop_back();
    }
    for (int j : succs_[i]) kill(j);
    dfs(i + 1);
    for (int j : succs_[i]) revive(j);
    ++alive_;
  }

  int n_;
  int k_;
  int s_;
  std::vector<Edge> cands_;
  std::vector<std::vector<int>> succs_;
  std::vector<int> dead_;  // excluded-or-dead predecessors
  int alive_ = 0;          // undecided candidates not yet dead
  std::vector<Edge> chosen_;
  int best_ = -1;
  std::vector<Edge> best_family_;
  std::uint64_t nodes_ = 0;
  const std::atomic<int>* shared_ = nullptr;
  int split_ = -1;
  std::vector<std::vector<char>>* frontier_ = nullptr;
};

void check_turan_instance(int n, int k, int s) {
  if (n < 1 || k < 2 || k > n || s < 0) throw std::invalid_argument("turan oracle needs 2 <= k <= n and s >= 0");
  if (binomial_u64(n, k) > kTuranOracleMaxEdges) {
    throw InstanceTooLarge("turan oracle limited to C(n,k) <= " + std::to_string(kTuranOracleMaxEdges) +
                           ", got C(" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
}

}  // namespace

TuranOracleResult brute_turan_stable_serial(int n, int k, int s) {
  check_turan_instance(n, k, s);
  TuranSearch search(n, k, s);
  search.search(0);
  return {search.best(), search.best_family(), search.nodes()};
}

TuranOracleResult brute_turan_stable(int n, int k, int s, int threads) {
  check_turan_instance(n, k, s);
  if (threads <= 1) return brute_turan_stable_serial(n, k, s);

  TuranSearch root(n, k, s);
  const int split = std::min(root.candidate_count(), 16);
  std::vector<std::vector<char>> frontier;
  root.collect_frontier(split, frontier);

  const int shards = static_cast<int>(frontier.size());
  std::vector<TuranOracleResult> local(shards);
  std::atomic<int> shared{-1};
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < shards; ++i) {
    TuranSearch worker(n, k, s);
    worker.replay(frontier[i]);
    worker.search(split, &shared);
    local[i] = {worker.best(), worker.best_family(), worker.nodes()};
    int seen = shared.load();
    while (worker.best() > seen && !shared.compare_exchange_weak(seen, worker.best())) {
    }
  }
  // Lowest shard index wins ties, so the witness is schedule-independent too.
  TuranOracleResult out;
  out.max_edges = -1;
  out.nodes = root.nodes();
  for (const auto& r : local) {
    out.nodes += r.nodes;
    if (r.max_edges > out.max_edges) {
      out.max_edges = r.max_edges;
      out.witness = r.witness;
    }
  }
  return out;
}

namespace {

struct CrossState {
  std::vector<VertexSet> sets;
  std::vector<std::uint32_t> disjoint_from;  // bit j: sets[j] misses sets[i]
  std::uint32_t all = 0;
};

struct CrossAccumulator {
  int best = 0;
  std::uint64_t examined = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> extremal;  // (A, B) index masks
};

constexpr std::size_t kMaxExtremalRecorded = 4096;

void consider(const CrossState& st, std::uint32_t a, std::uint32_t forbid, CrossAccumulator& acc) {
  ++acc.examined;
  const std::uint32_t b = st.all & ~forbid;
  if (b == 0) return;
  const int sum = std::popcount(a) + std::popcount(b);
  if (sum > acc.best) {
    acc.best = sum;
    acc.extremal.clear();
  }
  if (sum == acc.best && acc.extremal.size() < kMaxExtremalRecorded) acc.extremal.emplace_back(a, b);
}

// Enumerates every A whose lowest member index is >= i, extending `a`.
void enumerate(const CrossState& st, int i, std::uint32_t a, std::uint32_t forbid, CrossAccumulator& acc) {
  const int count = static_cast<int>(st.sets.size());
  for (int j = i; j < count; ++j) {
    const std::uint32_t a2 = a | (std::uint32_t{1} << j);
    const std::uint32_t f2 = forbid | st.disjoint_from[j];
    consider(st, a2, f2, acc);
    enumerate(st, j + 1, a2, f2, acc);
  }
}

std::vector<VertexSet> expand(const CrossState& st, std::uint32_t mask) {
  std::vector<VertexSet> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(st.sets[std::countr_zero(mask)]);
  return out;
}

}  // namespace

CrossIntersectingResult brute_cross_intersecting_max(int m, int l, int threads) {
  if (!(m > 2 * l && l > 0) || m > kMaxVertices) throw std::invalid_argument("cross-intersecting oracle needs m > 2l > 0");
  if (binomial_u64(m, l) > kCrossIntersectingMaxSets) {
    throw InstanceTooLarge("cross-intersecting oracle limited to C(m,l) <= " +
                           std::to_string(kCrossIntersectingMaxSets));
  }
  CrossState st;
  for_each_subset(prefix_set(m), l, [&](VertexSet s) { st.sets.push_back(s); });
  const int count = static_cast<int>(st.sets.size());
  st.all = count == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << count) - 1;
  st.disjoint_from.assign(count, 0);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (disjoint(st.sets[i], st.sets[j])) st.disjoint_from[i] |= std::uint32_t{1} << j;
    }
  }

  // Shard i covers every A whose lowest member is sets[i].
  std::vector<CrossAccumulator> partial(count);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1))
  for (int i = 0; i < count; ++i) {
    const std::uint32_t a = std::uint32_t{1} << i;
    consider(st, a, st.disjoint_from[i], partial[i]);
    enumerate(st, i + 1, a, st.disjoint_from[i], partial[i]);
  }

  CrossIntersectingResult out;
  for (const auto& acc : partial) {
    out.families_examined += acc.examined;
    out.max_sum = std::max(out.max_sum, acc.best);
  }
  for (const auto& acc : partial) {
    if (acc.best != out.max_sum) continue;
    for (const auto& [a, b] : acc.extremal) {
      if (out.extremal.size() >= kMaxExtremalRecorded) break;
      out.extremal.emplace_back(expand(st, a), expand(st, b));
    }
  }
  return out;
}

namespace {

void check_same_shape(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.n() != b.n() || a.k() != b.k()) throw std::invalid_argument("hypergraphs on different vertex sets or uniformities");
}

Rational power(int base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return Rational(out);
}

}  // namespace

bool epsilon_contains(const UniformHypergraph& h1, const UniformHypergraph& h2, const Rational& eps) {
  check_same_shape(h1, h2);
  if (eps < 0) throw std::invalid_argument("epsilon must be nonnegative");
  std::size_t missing = 0;
  for (Edge e : h1.edges()) missing += !h2.contains(e);
  return Rational(missing) <= eps * power(h1.n(), h1.k());
}

VertexSet theta_good_vertices(const UniformHypergraph& h, const UniformHypergraph& ref, const Rational& theta) {
  check_same_shape(h, ref);
  if (theta < 0) throw std::invalid_argument("theta must be nonnegative");
  const Rational limit = theta * power(h.n(), h.k() - 1);
  std::vector<int> lost(h.n() + 1, 0);
  for (Edge e : ref.edges()) {
    if (h.contains(e)) continue;
    for (VertexSet r = e; r != 0; r &= r - 1) ++lost[lowest_vertex(r)];
  }
  VertexSet good = 0;
  for (int v = 1; v <= h.n(); ++v) {
    if (Rational(lost[v]) <= limit) good |= vertex_bit(v);
  }
  return good;
}

Certificate certify_min_degree_matching(const UniformHypergraph& h, int s) {
  if (h.k() != 3) throw std::invalid_argument("min-degree matching certificate is for 3-graphs");
  if (s < 1 || 3 * s > h.n()) throw std::invalid_argument("needs 1 <= s <= n/3");
  Stopwatch clock;
  const int n = h.n();
  const long long delta = min_degree(h);
  const long long threshold = (binomial(n - 1, 2) - binomial(n - s, 2)).convert_to<long long>();
  const bool hypothesis = delta > threshold;

  Certificate cert;
  cert.claim = "min degree > C(n-1,2) - C(n-s,2) implies an s-matching";
  cert.parameters = {{"n", n},
                     {"s", s},
                     {"min_degree", delta},
                     {"threshold", threshold},
                     {"margin", delta - threshold},
                     {"hypothesis_met", hypothesis}};
  if (hypothesis) {
    SearchStats stats;
    const bool found = has_matching_of_size(h, s, &stats);
    cert.parameters["matching_found"] = found;
    cert.search_size = stats.nodes;
    cert.verdict = found;
    cert.parameters["outcome"] = found ? "confirmed" : "counterexample";
  } else {
    cert.verdict = true;
    cert.parameters["outcome"] = "hypothesis-not-met";
  }
  cert.elapsed_ms = clock.elapsed_ms();
  return cert;
}

}  // namespace armatch
