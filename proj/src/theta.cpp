#include "szeged/theta.hpp"

#include "szeged/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace szeged {
namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned> rank_;
};

// Sorts members, orders groups by smallest member and fills the inverse map.
template <typename Groups>
void normalize(Groups& groups, std::vector<std::uint32_t>& owner, std::size_t edge_count) {
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    owner.assign(edge_count, 0);
    for (std::uint32_t i = 0; i < groups.size(); ++i)
        for (EdgeId e : groups[i]) owner[e] = i;
}

}  // namespace

ThetaClasses theta_star_classes(const Graph& g) {
    return theta_star_classes(g, all_pairs_distances(g));
}

ThetaClasses theta_star_classes(const Graph& g, const DistanceMatrix& d) {
    const std::size_t m = g.edge_count();
    DisjointSets sets(m);
    const auto edges = g.edges();
    for (EdgeId a = 0; a < m; ++a)
        for (EdgeId b = a + 1; b < m; ++b)
            if (sets.find(a) != sets.find(b) && theta_related(d, edges[a], edges[b])) sets.unite(a, b);

    ThetaClasses tc;
    std::vector<std::size_t> slot(m, m);
    for (EdgeId e = 0; e < m; ++e) {
        const std::size_t root = sets.find(e);
        if (slot[root] == m) {
            slot[root] = tc.classes.size();
            tc.classes.emplace_back();
        }
        tc.classes[slot[root]].push_back(e);
    }
    normalize(tc.classes, tc.class_of, m);
    return tc;
}

EdgePartition coarsen(const ThetaClasses& tc, const std::vector<std::vector<std::uint32_t>>& grouping) {
    std::vector<int> seen(tc.size(), 0);
    EdgePartition p;
    for (const auto& names : grouping) {
        if (names.empty()) throw Error(ErrorCode::NotAPartitionOfClasses, "empty group of classes");
        std::vector<EdgeId> group;
        for (std::uint32_t c : names) {
            if (c >= tc.size())
                throw Error(ErrorCode::NotAPartitionOfClasses, "class index " + std::to_string(c) + " out of range");
            if (seen[c]++)
                throw Error(ErrorCode::NotAPartitionOfClasses, "class " + std::to_string(c) + " named twice");
            group.insert(group.end(), tc.classes[c].begin(), tc.classes[c].end());
        }
        p.groups.push_back(std::move(group));
    }
    for (std::size_t c = 0; c < seen.size(); ++c)
        if (!seen[c]) throw Error(ErrorCode::NotAPartitionOfClasses, "class " + std::to_string(c) + " missing");
    normalize(p.groups, p.group_of, tc.class_of.size());
    return p;
}

EdgePartition finest_partition(const ThetaClasses& tc) {
    EdgePartition p{tc.classes, tc.class_of};
    return p;
}

EdgePartition validate_c_partition(const ThetaClasses& tc, const std::vector<std::vector<EdgeId>>& groups) {
    const std::size_t m = tc.class_of.size();
    constexpr std::uint32_t unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> owner(m, unset);
    for (std::uint32_t i = 0; i < groups.size(); ++i) {
        if (groups[i].empty()) throw Error(ErrorCode::NotEdgePartition, "group " + std::to_string(i) + " is empty");
        for (EdgeId e : groups[i]) {
            if (e >= m) throw Error(ErrorCode::NotEdgePartition, "edge " + std::to_string(e) + " out of range");
            if (owner[e] != unset)
                throw Error(ErrorCode::NotEdgePartition, "edge " + std::to_string(e) + " appears in two groups");
            owner[e] = i;
        }
    }
    for (EdgeId e = 0; e < m; ++e)
        if (owner[e] == unset) throw Error(ErrorCode::NotEdgePartition, "edge " + std::to_string(e) + " not covered");
    for (std::size_t c = 0; c < tc.size(); ++c) {
        const auto& cls = tc.classes[c];
        for (EdgeId e : cls)
            if (owner[e] != owner[cls.front()])
                throw Error(ErrorCode::SplitsThetaClass, "edges " + std::to_string(cls.front()) + " and " +
                                                             std::to_string(e) + " share a class but not a group");
    }
    EdgePartition p;
    p.groups = groups;
    normalize(p.groups, p.group_of, m);
    return p;
}

std::optional<std::pair<EdgeId, EdgeId>> non_theta_pair(const Graph& g, const DistanceMatrix& d,
                                                        const ThetaClasses& tc) {
    const auto edges = g.edges();
    for (const auto& cls : tc.classes)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (!theta_related(d, edges[cls[i]], edges[cls[j]])) return std::pair{cls[i], cls[j]};
    return std::nullopt;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incident(x)) {
                if (side[inc.neighbor] == -1) {
                    side[inc.neighbor] = 1 - side[x];
                    stack.push_back(inc.neighbor);
                } else if (side[inc.neighbor] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_partial_cube(const Graph& g) {
    if (!is_connected(g) || !is_bipartite(g)) return false;
    const auto d = all_pairs_distances(g);
    return !non_theta_pair(g, d, theta_star_classes(g, d)).has_value();
}

}  // namespace szeged
