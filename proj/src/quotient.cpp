#include "szeged/quotient.hpp"

#include "szeged/error.hpp"

#include <map>
#include <string>
#include <utility>

namespace szeged {

QuotientGraph quotient_by_group(const Graph& g, std::span<const EdgeId> group) {
    std::vector<std::uint8_t> in_group(g.edge_count(), 0);
    for (EdgeId e : group) {
        if (e >= g.edge_count())
            throw Error(ErrorCode::GroupNotSubsetOfEdges, "edge " + std::to_string(e) + " is not an edge of the graph");
        if (in_group[e]) throw Error(ErrorCode::GroupNotSubsetOfEdges, "edge " + std::to_string(e) + " listed twice");
        in_group[e] = 1;
    }

    auto labels = component_labels(g, in_group);
    QuotientGraph q;
    q.component_of = std::move(labels.label);
    const std::size_t k = labels.count;

    Weights w;
    w.vertex_weight.assign(k, Rational(0));
    w.vertex_strength.assign(k, Rational(0));
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        w.vertex_weight[q.component_of[x]] += g.vertex_weight(x);
        w.vertex_strength[q.component_of[x]] += g.vertex_strength(x);
    }

    std::vector<Edge> edges;
    std::map<std::pair<VertexId, VertexId>, EdgeId> index;
    const auto original = g.edges();
    for (EdgeId e = 0; e < original.size(); ++e) {
        const VertexId a = q.component_of[original[e].u];
        const VertexId b = q.component_of[original[e].v];
        if (!in_group[e]) {
            w.vertex_strength[a] += g.edge_strength(e);  // a == b
            continue;
        }
        if (a == b) {
            q.internal_group_edges.push_back(e);
            continue;
        }
        const auto key = std::minmax(a, b);
        auto [it, inserted] = index.try_emplace(key, static_cast<EdgeId>(edges.size()));
        if (inserted) {
            edges.push_back({key.first, key.second});
            q.fibers.emplace_back();
            w.edge_weight.emplace_back(0);
            w.edge_strength.emplace_back(0);
        }
        q.fibers[it->second].push_back(e);
        w.edge_weight[it->second] += g.edge_weight(e);
        w.edge_strength[it->second] += g.edge_strength(e);
    }

    q.graph = Graph::build(k, std::move(edges), std::move(w));
    return q;
}

}  // namespace szeged
