#include "armatch/solvers.hpp"

#include <algorithm>
#include <deque>
#include <vector>

namespace armatch {

namespace {

class MatchingSearch {
 public:
  MatchingSearch(int k, int target) : k_(k), target_(target) {}

  void run(std::span<const Edge> edges) {
    levels_.clear();
    search(edges, 0);
  }

  int best() const { return best_; }
  const std::vector<Edge>& best_edges() const { return best_edges_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool done() const { return best_ >= target_; }

  void search(std::span<const Edge> avail, int depth) {
    ++nodes_;
    if (depth > best_) {
      best_ = depth;
      best_edges_ = stack_;
    }
    if (done() || avail.empty()) return;

    VertexSet cover = 0;
    for (Edge e : avail) cover |= e;
    const int bound = depth + static_cast<int>(std::min<std::size_t>(set_size(cover) / k_, avail.size()));
    if (bound <= best_) return;

    if (levels_.size() <= static_cast<std::size_t>(depth_index_)) levels_.emplace_back();
    std::vector<Edge>& child = levels_[depth_index_];
    ++depth_index_;

    const VertexSet v = cover & (~cover + 1);
    for (Edge e : avail) {
      if ((e & v) == 0) continue;
      child.clear();
      for (Edge f : avail) {
        if (disjoint(e, f)) child.push_back(f);
      }
      stack_.push_back(e);
      search(child, depth + 1);
      stack_.pop_back();
      if (done()) break;
    }
    if (!done()) {
      child.clear();
      for (Edge f : avail) {
        if ((f & v) == 0) child.push_back(f);
      }
      search(child, depth);
    }
    --depth_index_;
  }

  int k_;
  int target_;
  int best_ = 0;
  int depth_index_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<Edge> stack_;
  std::vector<Edge> best_edges_;
  // One scratch buffer per recursion level; deque keeps references stable.
  std::deque<std::vector<Edge>> levels_;
};

MatchingSearch run_search(const UniformHypergraph& h, int target, SearchStats* stats) {
  MatchingSearch search(h.k(), target);
  search.run(h.edges());
  if (stats) stats->nodes += search.nodes();
  return search;
}

}  // namespace

int matching_number(const UniformHypergraph& h, SearchStats* stats) {
  return run_search(h, h.n() / h.k(), stats).best();
}

Matching maximum_matching(const UniformHypergraph& h, SearchStats* stats) {
  return Matching{run_search(h, h.n() / h.k(), stats).best_edges()};
}

bool has_matching_of_size(const UniformHypergraph& h, int s, SearchStats* stats) {
  if (s <= 0) return true;
  if (s > h.n() / h.k()) return false;
  return run_search(h, s, stats).best() >= s;
}

std::optional<Matching> find_matching_of_size(const UniformHypergraph& h, int s, SearchStats* stats) {
  if (s <= 0) return Matching{};
  if (s > h.n() / h.k()) return std::nullopt;
  auto search = run_search(h, s, stats);
  if (search.best() < s) return std::nullopt;
  return Matching{search.best_edges()};
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const UniformHypergraph& h) : h_(h), degree_(h.n() + 1, 0) {
    for (Edge e : h.edges()) {
      for (VertexSet s = e; s != 0; s &= s - 1) ++degree_[lowest_vertex(s)];
    }
  }

  int run() {
    if (h_.empty()) return 0;
    best_ = h_.k();  // any edge is a complete k-set
    extend(0, h_.vertices(), 0);
    return best_;
  }

 private:
  // Does `clique` + v keep every k-subset through v present?
  bool compatible(VertexSet clique, int v) const {
    if (set_size(clique) < h_.k() - 1) return true;
    bool ok = true;
    for_each_subset(clique, h_.k() - 1, [&](VertexSet f) {
      ok = h_.contains(f | vertex_bit(v));
      return ok;
    });
    return ok;
  }

  void extend(VertexSet clique, VertexSet candidates, int size) {
    if (size > best_) best_ = size;
    if (size + set_size(candidates) <= best_) return;
    // A vertex of a clique of size best_ + 1 has degree >= C(best_, k - 1).
    const std::uint64_t need = binomial_u64(best_, h_.k() - 1);
    while (candidates != 0) {
      if (size + set_size(candidates) <= best_) return;
      const int v = lowest_vertex(candidates);
      candidates &= candidates - 1;
      if (static_cast<std::uint64_t>(degree_[v]) < need) continue;
      if (!compatible(clique, v)) continue;
      const VertexSet grown = clique | vertex_bit(v);
      VertexSet next = 0;
      for (VertexSet c = candidates; c != 0; c &= c - 1) {
        const int w = lowest_vertex(c);
        if (compatible(grown, w)) next |= vertex_bit(w);
      }
      extend(grown, next, size + 1);
    }
  }

  const UniformHypergraph& h_;
  std::vector<int> degree_;
  int best_ = 0;
};

}  // namespace

int clique_number(const UniformHypergraph& h) { return CliqueSearch(h).run(); }

}  // namespace armatch
