#include "szeged/graph.hpp"

#include "szeged/error.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace szeged {
namespace {

void check_weight_table(const std::vector<Rational>& table, std::size_t expected, const char* name) {
    if (table.size() != expected)
        throw std::invalid_argument(std::string(name) + " table has wrong length");
    for (std::size_t i = 0; i < table.size(); ++i)
        if (sgn(table[i]) < 0)
            throw Error(ErrorCode::NegativeWeight,
                        std::string(name) + "[" + std::to_string(i) + "] = " + format_rational(table[i]));
}

}  // namespace

Weights Weights::normal(std::size_t vertex_count, std::size_t edge_count) {
    return Weights{std::vector<Rational>(vertex_count, Rational(1)),
                   std::vector<Rational>(vertex_count, Rational(0)),
                   std::vector<Rational>(edge_count, Rational(1)),
                   std::vector<Rational>(edge_count, Rational(1))};
}

Graph Graph::build(std::size_t vertex_count, std::vector<Edge> edges, Weights weights) {
    if (vertex_count >= kUnreachable)
        throw Error(ErrorCode::IdOutOfRange, "too many vertices");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw Error(ErrorCode::IdOutOfRange, "edge " + std::to_string(i) + " (" + std::to_string(e.u) +
                                                     ", " + std::to_string(e.v) + ") with " +
                                                     std::to_string(vertex_count) + " vertices");
        if (e.u == e.v)
            throw Error(ErrorCode::SelfLoop, "edge " + std::to_string(i) + " at vertex " + std::to_string(e.u));
    }
    check_weight_table(weights.vertex_weight, vertex_count, "w_v");
    check_weight_table(weights.vertex_strength, vertex_count, "s_v");
    check_weight_table(weights.edge_weight, edges.size(), "w_e");
    check_weight_table(weights.edge_strength, edges.size(), "s_e");

    Graph g;
    g.vertex_count_ = vertex_count;
    g.offsets_.assign(vertex_count + 1, 0);
    for (const Edge& e : edges) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.incidences_.resize(g.offsets_.back());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId i = 0; i < edges.size(); ++i) {
        g.incidences_[fill[edges[i].u]++] = {edges[i].v, i};
        g.incidences_[fill[edges[i].v]++] = {edges[i].u, i};
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto first = g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last, [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
        auto dup = std::adjacent_find(first, last, [](const Incidence& a, const Incidence& b) {
            return a.neighbor == b.neighbor;
        });
        if (dup != last)
            throw Error(ErrorCode::DuplicateEdge, "edges " + std::to_string(dup->edge) + " and " +
                                                      std::to_string((dup + 1)->edge) + " join " +
                                                      std::to_string(v) + " and " + std::to_string(dup->neighbor));
    }
    g.edges_ = std::move(edges);
    g.weights_ = std::move(weights);
    return g;
}

Graph Graph::normal(std::size_t vertex_count, std::vector<Edge> edges) {
    const std::size_t m = edges.size();
    return build(vertex_count, std::move(edges), Weights::normal(vertex_count, m));
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
    if (a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
    auto inc = incident(a);
    auto it = std::lower_bound(inc.begin(), inc.end(), b,
                               [](const Incidence& x, VertexId key) { return x.neighbor < key; });
    if (it != inc.end() && it->neighbor == b) return it->edge;
    return std::nullopt;
}

Rational Graph::total_vertex_weight() const {
    Rational sum = 0;
    for (const auto& w : weights_.vertex_weight) sum += w;
    return sum;
}

Rational Graph::total_strength() const {
    Rational sum = 0;
    for (const auto& s : weights_.vertex_strength) sum += s;
    for (const auto& s : weights_.edge_strength) sum += s;
    return sum;
}

Graph Graph::with_edge_weights(std::vector<Rational> edge_weight) const {
    Weights w = weights_;
    w.edge_weight = std::move(edge_weight);
    return with_weights(std::move(w));
}

Graph Graph::with_weights(Weights weights) const {
    check_weight_table(weights.vertex_weight, vertex_count_, "w_v");
    check_weight_table(weights.vertex_strength, vertex_count_, "s_v");
    check_weight_table(weights.edge_weight, edges_.size(), "w_e");
    check_weight_table(weights.edge_strength, edges_.size(), "s_e");
    Graph g = *this;
    g.weights_ = std::move(weights);
    return g;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source) {
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        for (const auto& inc : g.incident(x)) {
            if (dist[inc.neighbor] == kUnreachable) {
                dist[inc.neighbor] = dist[x] + 1;
                queue.push_back(inc.neighbor);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> cells;
    cells.reserve(n * n);
    for (VertexId s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        if (std::find(row.begin(), row.end(), kUnreachable) != row.end())
            throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(s) + " cannot reach every vertex");
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return DistanceMatrix(n, std::move(cells));
}

ComponentLabels component_labels(const Graph& g, std::span<const std::uint8_t> removed) {
    ComponentLabels out;
    out.label.assign(g.vertex_count(), kUnreachable);
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        if (out.label[start] != kUnreachable) continue;
        const auto id = static_cast<std::uint32_t>(out.count++);
        out.label[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incident(x)) {
                if (!removed.empty() && removed[inc.edge]) continue;
                if (out.label[inc.neighbor] == kUnreachable) {
                    out.label[inc.neighbor] = id;
                    stack.push_back(inc.neighbor);
                }
            }
        }
    }
    return out;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
    const auto labels = component_labels(g);
    std::vector<std::vector<VertexId>> out(labels.count);
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[labels.label[v]].push_back(v);
    return out;
}

bool is_connected(const Graph& g) {
    return component_labels(g).count == 1;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

}  // namespace szeged
