#include "armatch/rainbow.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "armatch/constructions.hpp"

namespace armatch {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

void check_perfect_shape(int n, int k) {
  if (n % k != 0 || n / k < 3) fail("needs n = ks with s >= 3");
  if (n > kMaxVertices || binomial_u64(n, k) > kMaxColoredEdges) fail("instance too large to colour");
}

PerfectMatchingLayout make_layout(int n, int k) {
  PerfectMatchingLayout layout;
  layout.n = n;
  layout.k = k;
  layout.U = prefix_set(n - k - 1);
  layout.W = prefix_set(n) & ~layout.U;
  layout.bijective_colors = static_cast<int>(binomial_u64(n - k - 1, k));
  return layout;
}

// Colours U-edges 1..C(|U|,k) in colex order, class i (0-based) with
// base + i + 1, and everything else 0.
template <class ClassOf>
EdgeColoring paint(const PerfectMatchingLayout& layout, ClassOf class_of) {
  std::vector<int> colors;
  colors.reserve(binomial_u64(layout.n, layout.k));
  int next = 0;
  for_each_subset(prefix_set(layout.n), layout.k, [&](Edge e) {
    if ((e & ~layout.U) == 0) {
      colors.push_back(++next);
    } else {
      const int cls = class_of(e & layout.W);
      colors.push_back(cls < 0 ? 0 : layout.bijective_colors + cls + 1);
    }
  });
  return EdgeColoring(layout.n, layout.k, std::move(colors));
}

}  // namespace

LowerBoundColoring build_H1_coloring(int n, int k) {
  if (k < 3 || k % 2 == 0) fail("H1 colouring needs odd k >= 3");
  check_perfect_shape(n, k);
  PerfectMatchingLayout layout = make_layout(n, k);
  const VertexSet lowest = layout.W & (~layout.W + 1);
  for_each_subset(layout.W & ~lowest, (k + 1) / 2 - 1, [&](VertexSet t) { layout.traces.push_back(t | lowest); });
  const auto& traces = layout.traces;
  const VertexSet w = layout.W;
  EdgeColoring coloring = paint(layout, [&](VertexSet trace) {
    for (std::size_t i = 0; i < traces.size(); ++i) {
      if (trace == traces[i] || trace == (w & ~traces[i])) return static_cast<int>(i);
    }
    return -1;
  });
  return {std::move(coloring), std::move(layout)};
}

LowerBoundColoring build_H2_coloring(int n, int k) {
  if (k < 4 || k % 2 == 1) fail("H2 colouring needs even k >= 4");
  check_perfect_shape(n, k);
  PerfectMatchingLayout layout = make_layout(n, k);
  layout.apex = n;
  const VertexSet apex = vertex_bit(n);
  const VertexSet rest = layout.W & ~apex;
  for_each_subset(rest, k / 2 - 1, [&](VertexSet b) { layout.traces.push_back(b); });
  const auto& traces = layout.traces;
  EdgeColoring coloring = paint(layout, [&](VertexSet trace) {
    for (std::size_t i = 0; i < traces.size(); ++i) {
      if (trace == (traces[i] | apex) || trace == (rest & ~traces[i])) return static_cast<int>(i);
    }
    return -1;
  });
  return {std::move(coloring), std::move(layout)};
}

TuranColoring build_turan_plus_one_coloring(int n, int k, int s) {
  if (k < 2 || s < 2 || n < k * s) fail("turan-plus-one colouring needs k >= 2, s >= 2, n >= ks");
  if (n > kMaxVertices || binomial_u64(n, k) > kMaxColoredEdges) fail("instance too large to colour");
  const int bound = s - 2;  // nu(F) <= s-2, i.e. F has no (s-1)-matching
  UniformHypergraph family(n, k);
  if (bound > 0) {
    family = build_Hcover(n, k, bound);
    if (k * (bound + 1) - 1 <= n) {
      UniformHypergraph clique = build_D(n, k, bound);
      if (clique.edge_count() > family.edge_count()) family = std::move(clique);
    }
  }
  std::vector<int> colors;
  colors.reserve(binomial_u64(n, k));
  int next = 0;
  for_each_subset(prefix_set(n), k, [&](Edge e) { colors.push_back(family.contains(e) ? ++next : 0); });

  Validity extremal = Validity::kProved;  // ex(n,k,M_1) = 0
  if (bound > 0) {
    extremal = k == 3 ? turan_3(n, s - 1).valid : turan_conjectured(n, k, bound).valid;
  }
  return {EdgeColoring(n, k, std::move(colors)).renumbered(), std::move(family), extremal};
}

namespace {

class RainbowSearch {
 public:
  RainbowSearch(const EdgeColoring& c, int s)
      : c_(c), k_(c.k()), target_(s), used_(static_cast<std::size_t>(c.max_color()) + 1, 0) {}

  std::optional<Matching> run() {
    const int slack = c_.n() - k_ * target_;
    if (slack < 0) return std::nullopt;
    if (dfs(prefix_set(c_.n()), target_, slack)) return Matching{stack_};
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(VertexSet uncovered, int need, int skips) {
    ++nodes_;
    if (need == 0) return true;
    if (set_size(uncovered) < k_ * need) return false;
    if (c_.palette_size() - used_count_ < need) return false;
    const VertexSet v = uncovered & (~uncovered + 1);
    const VertexSet rest = uncovered ^ v;
    bool found = false;
    for_each_subset(rest, k_ - 1, [&](VertexSet t) {
      const Edge e = v | t;
      const int color = c_.color_of(e);
      if (used_[color]) return true;
      used_[color] = 1;
      ++used_count_;
      stack_.push_back(e);
      found = dfs(rest & ~t, need - 1, skips);
      if (found) return false;
      stack_.pop_back();
      --used_count_;
      used_[color] = 0;
      return true;
    });
    if (found) return true;
    return skips > 0 && dfs(rest, need, skips - 1);
  }

  const EdgeColoring& c_;
  int k_;
  int target_ = 0;
  int used_count_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<char> used_;
  std::vector<Edge> stack_;
};

void census_from(const EdgeColoring& c, VertexSet uncovered, std::vector<int>& colors, PerfectMatchingCensus& out) {
  if (uncovered == 0) {
    ++out.matchings;
    bool rainbow = true;
    for (std::size_t i = 0; rainbow && i < colors.size(); ++i) {
      for (std::size_t j = i + 1; j < colors.size(); ++j) {
        if (colors[i] == colors[j]) {
          rainbow = false;
          break;
        }
      }
    }
    out.rainbow += rainbow;
    return;
  }
  const VertexSet v = uncovered & (~uncovered + 1);
  const VertexSet rest = uncovered ^ v;
  for_each_subset(rest, c.k() - 1, [&](VertexSet t) {
    colors.push_back(c.color_of(v | t));
    census_from(c, rest & ~t, colors, out);
    colors.pop_back();
  });
}

void check_divisible(const EdgeColoring& c) {
  if (c.n() % c.k() != 0) fail("perfect matchings need k | n");
}

}  // namespace

std::optional<Matching> find_rainbow_matching(const EdgeColoring& c, int s, SearchStats* stats) {
  if (s < 1) fail("find_rainbow_matching needs s >= 1");
  RainbowSearch search(c, s);
  auto result = search.run();
  if (stats) stats->nodes += search.nodes();
  return result;
}

PerfectMatchingCensus perfect_matching_census_serial(const EdgeColoring& c) {
  check_divisible(c);
  PerfectMatchingCensus out;
  std::vector<int> colors;
  census_from(c, prefix_set(c.n()), colors, out);
  return out;
}

PerfectMatchingCensus perfect_matching_census(const EdgeColoring& c, int threads) {
  check_divisible(c);
  const VertexSet first = vertex_bit(1);
  const VertexSet rest = prefix_set(c.n()) & ~first;
  std::vector<VertexSet> shards;
  for_each_subset(rest, c.k() - 1, [&](VertexSet t) { shards.push_back(t); });

  std::uint64_t matchings = 0;
  std::uint64_t rainbow = 0;
  const long long count = static_cast<long long>(shards.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1)) reduction(+ : matchings, rainbow)
  for (long long i = 0; i < count; ++i) {
    PerfectMatchingCensus local;
    std::vector<int> colors{c.color_of(first | shards[i])};
    census_from(c, rest & ~shards[i], colors, local);
    matchings += local.matchings;
    rainbow += local.rainbow;
  }
  return {matchings, rainbow};
}

Certificate certify_no_rainbow_perfect_matching(const EdgeColoring& c, int threads) {
  check_divisible(c);
  Stopwatch clock;
  const PerfectMatchingCensus census =
      threads > 1 ? perfect_matching_census(c, threads) : perfect_matching_census_serial(c);
  Certificate cert;
  cert.claim = "no rainbow perfect matching in the " + std::to_string(c.palette_size()) +
               "-colouring of K^" + std::to_string(c.k()) + "_" + std::to_string(c.n());
  cert.parameters = {{"n", c.n()},
                     {"k", c.k()},
                     {"palette_size", c.palette_size()},
                     {"rainbow_perfect_matchings", census.rainbow},
                     {"threads", std::max(threads, 1)}};
  cert.search_size = census.matchings;
  cert.verdict = census.rainbow == 0;
  cert.elapsed_ms = clock.elapsed_ms();
  return cert;
}

}  // namespace armatch
