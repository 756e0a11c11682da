#pragma once

#include "szeged/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace szeged {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    VertexId u;
    VertexId v;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// The four weight functions of a strength-weighted graph.
struct Weights {
    std::vector<Rational> vertex_weight;    // w_v
    std::vector<Rational> vertex_strength;  // s_v
    std::vector<Rational> edge_weight;      // w_e
    std::vector<Rational> edge_strength;    // s_e

    /// w_v = 1, s_v = 0, w_e = 1, s_e = 1.
    static Weights normal(std::size_t vertex_count, std::size_t edge_count);
};

/// Simple undirected graph with vertex and edge weights. Immutable once built;
/// the edge list keeps the order it was given.
class Graph {
public:
    struct Incidence {
        VertexId neighbor;
        EdgeId edge;
    };

    Graph() = default;

    /// Validates simplicity, id ranges and nonnegativity, then builds sorted
    /// adjacency lists. Throws Error (SelfLoop, DuplicateEdge, IdOutOfRange,
    /// NegativeWeight).
    static Graph build(std::size_t vertex_count, std::vector<Edge> edges, Weights weights);

    /// Unit-weighted ("normal") graph: w_v = 1, s_v = 0, w_e = 1, s_e = 1.
    static Graph normal(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    /// Incident edges of `v`, sorted by neighbor id.
    std::span<const Incidence> incident(VertexId v) const {
        return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

    const Weights& weights() const { return weights_; }
    const Rational& vertex_weight(VertexId v) const { return weights_.vertex_weight[v]; }
    const Rational& vertex_strength(VertexId v) const { return weights_.vertex_strength[v]; }
    const Rational& edge_weight(EdgeId e) const { return weights_.edge_weight[e]; }
    const Rational& edge_strength(EdgeId e) const { return weights_.edge_strength[e]; }

    /// Σ w_v over all vertices.
    Rational total_vertex_weight() const;
    /// Σ s_v over all vertices plus Σ s_e over all edges.
    Rational total_strength() const;

    /// Same graph with every w_e replaced.
    Graph with_edge_weights(std::vector<Rational> edge_weight) const;
    Graph with_weights(Weights weights) const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    Weights weights_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Incidence> incidences_;
};

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Hop distances from one source; kUnreachable where no path exists.
std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source);

/// Dense all-pairs hop-distance table.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(std::size_t n, std::vector<std::uint32_t> cells)
        : n_(n), cells_(std::move(cells)) {}

    std::size_t size() const { return n_; }
    std::uint32_t operator()(VertexId a, VertexId b) const { return cells_[std::size_t{a} * n_ + b]; }
    std::span<const std::uint32_t> row(VertexId a) const {
        return {cells_.data() + std::size_t{a} * n_, n_};
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> cells_;
};

/// BFS from every vertex. Throws Error(Disconnected) if some pair is unreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

/// d(u, f) = min(d(u, x), d(u, y)) for f = xy.
inline std::uint32_t vertex_edge_distance(const DistanceMatrix& d, VertexId u, const Edge& f) {
    return std::min(d(u, f.u), d(u, f.v));
}

struct ComponentLabels {
    std::vector<std::uint32_t> label;  // vertex -> component index
    std::size_t count = 0;
};

/// Connected components of g with the flagged edges removed. Components are
/// numbered in order of their smallest vertex id. `removed` may be empty.
ComponentLabels component_labels(const Graph& g, std::span<const std::uint8_t> removed = {});

/// Vertex sets of the components, sorted by smallest contained vertex.
std::vector<std::vector<VertexId>> components(const Graph& g);

bool is_connected(const Graph& g);

/// Connected and |E| = |V| - 1.
bool is_tree(const Graph& g);

}  // namespace szeged
