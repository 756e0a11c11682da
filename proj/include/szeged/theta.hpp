#pragma once

#include "szeged/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace szeged {

/// The Θ*-partition of E(G). Each class is sorted; classes are ordered by
/// their smallest edge index.
struct ThetaClasses {
    std::vector<std::vector<EdgeId>> classes;
    std::vector<std::uint32_t> class_of;  // edge -> class index

    std::size_t size() const { return classes.size(); }
};

/// A partition of E(G) into groups that are unions of whole Θ*-classes
/// (a c-partition). Same ordering rules as ThetaClasses.
struct EdgePartition {
    std::vector<std::vector<EdgeId>> groups;
    std::vector<std::uint32_t> group_of;  // edge -> group index

    std::size_t size() const { return groups.size(); }
};

/// Djoković–Winkler relation: d(u1,u2) + d(v1,v2) != d(u1,v2) + d(u2,v1).
inline bool theta_related(const DistanceMatrix& d, const Edge& e1, const Edge& e2) {
    if (e1 == e2) return true;
    return std::uint64_t{d(e1.u, e2.u)} + d(e1.v, e2.v) != std::uint64_t{d(e1.u, e2.v)} + d(e2.u, e1.v);
}

/// Transitive closure of Θ by pairwise testing and union-find.
/// Throws Error(Disconnected).
ThetaClasses theta_star_classes(const Graph& g);
ThetaClasses theta_star_classes(const Graph& g, const DistanceMatrix& d);

/// Unions of Θ*-classes named by `grouping` (class indices). Throws
/// Error(NotAPartitionOfClasses) unless every class index appears exactly once.
EdgePartition coarsen(const ThetaClasses& tc, const std::vector<std::vector<std::uint32_t>>& grouping);

/// The Θ*-partition itself as an EdgePartition.
EdgePartition finest_partition(const ThetaClasses& tc);

/// Accepts `groups` iff it partitions E(G) into nonempty unions of Θ*-classes.
/// Throws Error(NotEdgePartition) or Error(SplitsThetaClass).
EdgePartition validate_c_partition(const ThetaClasses& tc, const std::vector<std::vector<EdgeId>>& groups);

/// A pair of edges that share a Θ*-class without being Θ-related, if any.
/// Absence of such a pair means Θ is already transitive on g.
std::optional<std::pair<EdgeId, EdgeId>> non_theta_pair(const Graph& g, const DistanceMatrix& d,
                                                        const ThetaClasses& tc);

bool is_bipartite(const Graph& g);

/// Connected, bipartite, and Θ = Θ*.
bool is_partial_cube(const Graph& g);

}  // namespace szeged
