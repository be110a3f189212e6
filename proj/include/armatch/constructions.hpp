#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "armatch/hypergraph.hpp"

namespace armatch {

enum class ConstructionKind {
  kClique,   // D: all k-sets inside U, |U| = k(s+1) - 1
  kCover,    // H: all k-sets meeting W, |W| = s
  kScriptD,  // the k = 3 family on [3s+1] plus pendant edges {1, i, x}
};

std::string_view to_string(ConstructionKind kind);
ConstructionKind construction_kind_from_string(std::string_view name);

/// Parameters of one named construction. U and W are 1-based vertex lists;
/// when absent the index prefixes are used.
struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::kClique;
  int n = 0;
  int k = 0;
  int s = 0;
  std::optional<std::vector<int>> U;
  std::optional<std::vector<int>> W;
};

/// Throws std::invalid_argument when the spec violates its kind's size rules.
void validate(const ConstructionSpec& spec);

/// Fills in default U/W so the spec names its vertex sets explicitly.
ConstructionSpec resolved(const ConstructionSpec& spec);

/// Whether nu = s is asserted for this spec. The clique and cover families
/// only carry that guarantee for n >= ks + k - 1.
bool matching_number_guaranteed(const ConstructionSpec& spec);

UniformHypergraph build(const ConstructionSpec& spec);

UniformHypergraph build_D(int n, int k, int s, std::optional<VertexSet> U = std::nullopt);
UniformHypergraph build_Hcover(int n, int k, int s, std::optional<VertexSet> W = std::nullopt);
UniformHypergraph build_DScript(int n, int s);

/// Greedy s-saturation: scans absent edges in colex order and adds each one
/// whose addition keeps nu <= s. Throws std::invalid_argument if nu(H) > s.
UniformHypergraph saturate(const UniformHypergraph& h, int s);

/// nu(H) <= s and every absent edge would create an (s+1)-matching.
bool is_saturated(const UniformHypergraph& h, int s);

/// The support of H fits inside some k(s+1)-1 vertices.
bool is_subgraph_of_D(const UniformHypergraph& h, int s);

/// An s-set (or smaller) meeting every edge, if one exists.
std::optional<VertexSet> find_transversal(const UniformHypergraph& h, int s);
bool is_subgraph_of_Hcover(const UniformHypergraph& h, int s);

void to_json(nlohmann::json& j, const ConstructionSpec& spec);
void from_json(const nlohmann::json& j, ConstructionSpec& spec);

}  // namespace armatch
