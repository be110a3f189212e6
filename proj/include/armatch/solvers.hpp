#pragma once

#include <cstdint>
#include <optional>

#include "armatch/hypergraph.hpp"

namespace armatch {

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Exact matching number nu(H).
///
/// Branch and bound: take the lowest vertex v still covered by an available
/// edge; either match v through one of its edges (colex order) or discard v.
/// A branch is cut when depth + min(|covered| / k, #edges) cannot beat the
/// incumbent.
int matching_number(const UniformHypergraph& h, SearchStats* stats = nullptr);

/// A maximum matching (the first one found in branch order).
Matching maximum_matching(const UniformHypergraph& h, SearchStats* stats = nullptr);

/// nu(H) >= s; returns as soon as an s-matching is found.
bool has_matching_of_size(const UniformHypergraph& h, int s, SearchStats* stats = nullptr);

/// Some s-matching, or nothing when nu(H) < s.
std::optional<Matching> find_matching_of_size(const UniformHypergraph& h, int s, SearchStats* stats = nullptr);

/// Largest |U| such that every k-subset of U is an edge; 0 when H has no
/// edges.
int clique_number(const UniformHypergraph& h);

}  // namespace armatch
