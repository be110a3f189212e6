#include "armatch/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "armatch/solvers.hpp"

namespace armatch {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

VertexSet vertex_set_in(int n, const std::vector<int>& list, const char* name) {
  const VertexSet s = make_set(list);
  if ((s & ~prefix_set(n)) != 0) fail(std::string(name) + " leaves [n]");
  return s;
}

}  // namespace

std::string_view to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::kClique: return "D";
    case ConstructionKind::kCover: return "Hcover";
    case ConstructionKind::kScriptD: return "DScript";
  }
  return "?";
}

ConstructionKind construction_kind_from_string(std::string_view name) {
  if (name == "D") return ConstructionKind::kClique;
  if (name == "Hcover") return ConstructionKind::kCover;
  if (name == "DScript") return ConstructionKind::kScriptD;
  fail("unknown construction kind: " + std::string(name));
}

void validate(const ConstructionSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxVertices) fail("n must be in [1, 64]");
  if (spec.s < 0) fail("s must be nonnegative");
  switch (spec.kind) {
    case ConstructionKind::kClique: {
      if (spec.k < 2) fail("k must be >= 2");
      const int size = spec.k * (spec.s + 1) - 1;
      if (size > spec.n) fail("D needs k(s+1)-1 <= n");
      if (spec.U && static_cast<int>(spec.U->size()) != size) {
        fail("D needs |U| = k(s+1)-1 = " + std::to_string(size));
      }
      if (spec.U) vertex_set_in(spec.n, *spec.U, "U");
      break;
    }
    case ConstructionKind::kCover: {
      if (spec.k < 2) fail("k must be >= 2");
      if (spec.s > spec.n) fail("Hcover needs s <= n");
      if (spec.W && static_cast<int>(spec.W->size()) != spec.s) fail("Hcover needs |W| = s");
      const VertexSet w = spec.W ? vertex_set_in(spec.n, *spec.W, "W") : prefix_set(spec.s);
      if (spec.U && vertex_set_in(spec.n, *spec.U, "U") != (prefix_set(spec.n) & ~w)) {
        fail("Hcover needs U = [n] \\ W");
      }
      break;
    }
    case ConstructionKind::kScriptD:
      if (spec.k != 3) fail("DScript is defined for k = 3 only");
      if (spec.s < 1 || spec.n < 3 * spec.s + 2) fail("DScript needs s >= 1 and n >= 3s+2");
      if (spec.U || spec.W) fail("DScript takes no U or W");
      break;
  }
}

ConstructionSpec resolved(const ConstructionSpec& spec) {
  validate(spec);
  ConstructionSpec out = spec;
  switch (spec.kind) {
    case ConstructionKind::kClique:
      if (!out.U) out.U = vertices_of(prefix_set(spec.k * (spec.s + 1) - 1));
      out.W = std::vector<int>{};
      break;
    case ConstructionKind::kCover: {
      if (!out.W) out.W = vertices_of(prefix_set(spec.s));
      out.U = vertices_of(prefix_set(spec.n) & ~make_set(*out.W));
      break;
    }
    case ConstructionKind::kScriptD:
      break;
  }
  return out;
}

bool matching_number_guaranteed(const ConstructionSpec& spec) {
  if (spec.kind == ConstructionKind::kScriptD) return true;
  return spec.n >= spec.k * spec.s + spec.k - 1;
}

UniformHypergraph build(const ConstructionSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case ConstructionKind::kClique:
      return build_D(spec.n, spec.k, spec.s, spec.U ? std::optional(make_set(*spec.U)) : std::nullopt);
    case ConstructionKind::kCover:
      return build_Hcover(spec.n, spec.k, spec.s, spec.W ? std::optional(make_set(*spec.W)) : std::nullopt);
    case ConstructionKind::kScriptD:
      return build_DScript(spec.n, spec.s);
  }
  fail("unreachable");
}

UniformHypergraph build_D(int n, int k, int s, std::optional<VertexSet> U) {
  const int size = k * (s + 1) - 1;
  if (s < 0 || size > n) fail("D needs k(s+1)-1 <= n");
  const VertexSet u = U.value_or(prefix_set(size));
  if (set_size(u) != size || (u & ~prefix_set(n)) != 0) fail("D needs U inside [n] with |U| = k(s+1)-1");
  return UniformHypergraph::complete_on(n, k, u);
}

UniformHypergraph build_Hcover(int n, int k, int s, std::optional<VertexSet> W) {
  if (s < 0 || s > n) fail("Hcover needs 0 <= s <= n");
  const VertexSet w = W.value_or(prefix_set(s));
  if (set_size(w) != s || (w & ~prefix_set(n)) != 0) fail("Hcover needs W inside [n] with |W| = s");
  std::vector<Edge> edges;
  for_each_subset(prefix_set(n), k, [&](Edge e) {
    if ((e & w) != 0) edges.push_back(e);
  });
  return HypergraphAccess::adopt_sorted(n, k, std::move(edges));
}

UniformHypergraph build_DScript(int n, int s) {
  if (s < 1 || n < 3 * s + 2 || n > kMaxVertices) fail("DScript needs s >= 1 and 3s+2 <= n <= 64");
  const int core = 3 * s + 1;
  std::vector<Edge> edges;
  for_each_subset(prefix_set(core), 3, [&](Edge e) { edges.push_back(e); });
  for (int i = core + 1; i <= n; ++i) {
    for (int x = 2; x <= core; ++x) edges.push_back(vertex_bit(1) | vertex_bit(x) | vertex_bit(i));
  }
  return UniformHypergraph(n, 3, std::move(edges));
}

namespace {

// Would adding e to the current edge list (sorted) create an (s+1)-matching?
bool completes_matching(int n, int k, const std::vector<Edge>& edges, Edge e, int s) {
  std::vector<Edge> rest;
  for (Edge f : edges) {
    if (disjoint(e, f)) rest.push_back(f);
  }
  return has_matching_of_size(HypergraphAccess::adopt_sorted(n, k, std::move(rest)), s);
}

}  // namespace

UniformHypergraph saturate(const UniformHypergraph& h, int s) {
  if (s < 0) fail("saturate needs s >= 0");
  if (has_matching_of_size(h, s + 1)) fail("saturate needs nu(H) <= s");
  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  for_each_subset(h.vertices(), h.k(), [&](Edge e) {
    auto pos = std::lower_bound(edges.begin(), edges.end(), e);
    if (pos != edges.end() && *pos == e) return;
    if (!completes_matching(h.n(), h.k(), edges, e, s)) edges.insert(pos, e);
  });
  return HypergraphAccess::adopt_sorted(h.n(), h.k(), std::move(edges));
}

bool is_saturated(const UniformHypergraph& h, int s) {
  if (has_matching_of_size(h, s + 1)) return false;
  const std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  bool ok = true;
  for_each_subset(h.vertices(), h.k(), [&](Edge e) {
    if (!h.contains(e)) ok = completes_matching(h.n(), h.k(), edges, e, s);
    return ok;
  });
  return ok;
}

bool is_subgraph_of_D(const UniformHypergraph& h, int s) {
  return set_size(h.support()) <= h.k() * (s + 1) - 1;
}

namespace {

bool hit_all(std::span<const Edge> edges, VertexSet chosen, int budget, VertexSet& out) {
  auto miss = std::find_if(edges.begin(), edges.end(), [chosen](Edge e) { return disjoint(e, chosen); });
  if (miss == edges.end()) {
    out = chosen;
    return true;
  }
  if (budget == 0) return false;
  for (VertexSet c = *miss; c != 0; c &= c - 1) {
    if (hit_all(edges, chosen | (c & (~c + 1)), budget - 1, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_transversal(const UniformHypergraph& h, int s) {
  if (s < 0) return std::nullopt;
  VertexSet cover = 0;
  if (!hit_all(h.edges(), 0, s, cover)) return std::nullopt;
  // Pad with the lowest unused vertices so the result has exactly s members.
  for (int v = 1; v <= h.n() && set_size(cover) < s; ++v) cover |= vertex_bit(v);
  return cover;
}

bool is_subgraph_of_Hcover(const UniformHypergraph& h, int s) {
  return s <= h.n() && find_transversal(h, s).has_value();
}

void to_json(nlohmann::json& j, const ConstructionSpec& spec) {
  j = nlohmann::json{{"kind", to_string(spec.kind)}, {"n", spec.n}, {"k", spec.k}, {"s", spec.s}};
  j["U"] = spec.U.value_or(std::vector<int>{});
  j["W"] = spec.W.value_or(std::vector<int>{});
}

void from_json(const nlohmann::json& j, ConstructionSpec& spec) {
  spec.kind = construction_kind_from_string(j.at("kind").get<std::string>());
  spec.n = j.at("n").get<int>();
  spec.k = j.value("k", spec.kind == ConstructionKind::kScriptD ? 3 : 0);
  spec.s = j.at("s").get<int>();
  spec.U.reset();
  spec.W.reset();
  // Empty lists mean "use the default".
  if (j.contains("U") && !j["U"].empty()) spec.U = j["U"].get<std::vector<int>>();
  if (j.contains("W") && !j["W"].empty()) spec.W = j["W"].get<std::vector<int>>();
}

}  // namespace armatch
