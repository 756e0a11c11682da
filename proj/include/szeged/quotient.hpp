#pragma once

#include "szeged/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace szeged {

/// Strength-weighted quotient G / E_i. Quotient vertices are the components of
/// G with the group removed, numbered by their smallest original vertex.
/// Quotient edges appear in order of their first fiber edge.
struct QuotientGraph {
    Graph graph;                                   // carries the induced weights
    std::vector<std::uint32_t> component_of;       // original vertex -> quotient vertex
    std::vector<std::vector<EdgeId>> fibers;       // quotient edge -> original group edges
    /// Group edges whose endpoints stay in one component. Always empty for
    /// groups of a c-partition.
    std::vector<EdgeId> internal_group_edges;
};

/// Induced weights:
///   w_v(X) = Σ_{x∈X} w_v(x)          s_v(X) = Σ_{f⊆X} s_e(f) + Σ_{x∈X} s_v(x)
///   w_e(E) = Σ_{e∈fiber(E)} w_e(e)   s_e(E) = Σ_{e∈fiber(E)} s_e(e)
/// Throws Error(GroupNotSubsetOfEdges) for out-of-range or repeated edge ids.
QuotientGraph quotient_by_group(const Graph& g, std::span<const EdgeId> group);

}  // namespace szeged
