#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

namespace testing_support {

using szeged::Edge;
using szeged::HexCell;
using szeged::VertexId;

Rational random_weight(Rng& rng, int max_numerator) {
    static constexpr int denominators[] = {1, 2, 4};
    std::uniform_int_distribution<int> num(0, max_numerator);
    std::uniform_int_distribution<int> den(0, 2);
    Rational r(num(rng), denominators[den(rng)]);
    r.canonicalize();
    return r;
}

szeged::Weights random_weights(Rng& rng, std::size_t n, std::size_t m) {
    szeged::Weights w;
    for (std::size_t i = 0; i < n; ++i) {
        w.vertex_weight.push_back(random_weight(rng));
        w.vertex_strength.push_back(random_weight(rng));
    }
    for (std::size_t i = 0; i < m; ++i) {
        w.edge_weight.push_back(random_weight(rng));
        w.edge_strength.push_back(random_weight(rng));
    }
    return w;
}

Graph random_connected_graph(Rng& rng, std::size_t n, std::size_t max_edges, bool weighted) {
    std::set<std::pair<VertexId, VertexId>> present;
    std::vector<Edge> edges;
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        const VertexId a = order[pick(rng)];
        const VertexId b = order[i];
        present.insert(std::minmax(a, b));
        edges.push_back({a, b});
    }
    const std::size_t all_pairs = n * (n - 1) / 2;
    const std::size_t cap = std::min(max_edges, all_pairs);
    std::uniform_int_distribution<std::size_t> extra_count(0, cap - edges.size());
    const std::size_t extra = extra_count(rng);
    std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
    while (edges.size() < n - 1 + extra) {
        const VertexId a = vertex(rng);
        const VertexId b = vertex(rng);
        if (a == b || !present.insert(std::minmax(a, b)).second) continue;
        edges.push_back({a, b});
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    const std::size_t m = edges.size();
    if (!weighted) return Graph::normal(n, std::move(edges));
    return Graph::build(n, std::move(edges), random_weights(rng, n, m));
}

Graph random_tree_graph(Rng& rng, std::size_t n, bool weighted) {
    return random_connected_graph(rng, n, n - 1, weighted);
}

std::vector<std::vector<long>> floyd_distances(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const long inf = static_cast<long>(n) + 1;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
    for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (long& x : row)
            if (x == inf) x = -1;
    return d;
}

szeged::EdgeQuantities oracle_quantities(const Graph& g, const std::vector<std::vector<long>>& d, EdgeId e) {
    const auto [u, v] = g.edge(e);
    szeged::EdgeQuantities q;
    q.n_u = q.n_v = q.n_0 = q.m_u = q.m_v = q.m_0 = 0;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        const Rational& wv = g.weights().vertex_weight[x];
        const Rational& sv = g.weights().vertex_strength[x];
        if (d[u][x] < d[v][x]) {
            q.n_u += wv;
            q.m_u += sv;
        } else if (d[v][x] < d[u][x]) {
            q.n_v += wv;
            q.m_v += sv;
        } else {
            q.n_0 += wv;
            q.m_0 += sv;
        }
    }
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        const auto [x, y] = g.edge(f);
        const long du = std::min(d[u][x], d[u][y]);
        const long dv = std::min(d[v][x], d[v][y]);
        const Rational& se = g.weights().edge_strength[f];
        if (du < dv) q.m_u += se;
        else if (dv < du) q.m_v += se;
        else q.m_0 += se;
    }
    return q;
}

Rational oracle_edge_weight(const Graph& g, szeged::WeightMode mode, EdgeId e) {
    auto degree = [&](VertexId x) {
        long k = 0;
        for (const Edge& f : g.edges()) k += (f.u == x) + (f.v == x);
        return k;
    };
    const auto [u, v] = g.edge(e);
    switch (mode) {
        case szeged::WeightMode::Unit: return 1;
        case szeged::WeightMode::DegreeSum: return degree(u) + degree(v);
        case szeged::WeightMode::DegreeProduct: return degree(u) * degree(v);
        case szeged::WeightMode::Stored: return g.weights().edge_weight[e];
    }
    return 0;
}

Rational oracle_index(const Graph& g, const szeged::IndexDescriptor& index) {
    const auto d = floyd_distances(g);
    Rational total = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Rational w = oracle_edge_weight(g, index.weight_mode, e);
        if (w == 0) continue;
        total += w * index.function(oracle_quantities(g, d, e));
    }
    return total;
}

std::vector<std::vector<EdgeId>> oracle_theta_classes(const Graph& g) {
    const auto d = floyd_distances(g);
    const std::size_t m = g.edge_count();
    auto related = [&](EdgeId a, EdgeId b) {
        const auto [u1, v1] = g.edge(a);
        const auto [u2, v2] = g.edge(b);
        return d[u1][u2] + d[v1][v2] != d[u1][v2] + d[u2][v1];
    };
    std::vector<int> label(m, -1);
    std::vector<std::vector<EdgeId>> classes;
    for (EdgeId s = 0; s < m; ++s) {
        if (label[s] >= 0) continue;
        const int c = static_cast<int>(classes.size());
        classes.emplace_back();
        std::vector<EdgeId> queue{s};
        label[s] = c;
        while (!queue.empty()) {
            const EdgeId a = queue.back();
            queue.pop_back();
            classes[c].push_back(a);
            for (EdgeId b = 0; b < m; ++b)
                if (label[b] < 0 && related(a, b)) {
                    label[b] = c;
                    queue.push_back(b);
                }
        }
        std::sort(classes[c].begin(), classes[c].end());
    }
    return classes;
}

long wiener_index(const Graph& g) {
    const auto d = floyd_distances(g);
    long total = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) total += d[i][j];
    return total;
}

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

std::pair<double, double> center(HexCell c) {
    return {kSqrt3 * (c.q + c.r / 2.0), 1.5 * c.r};
}

std::pair<long, long> corner_key(HexCell c, int i) {
    const auto [x, y] = center(c);
    const double angle = M_PI / 6 + i * M_PI / 3;
    return {std::lround(1000 * (x + std::cos(angle))), std::lround(1000 * (y + std::sin(angle)))};
}

}  // namespace

HexCounts geometric_counts(const std::vector<HexCell>& cells) {
    std::set<std::pair<long, long>> corners;
    std::set<std::pair<std::pair<long, long>, std::pair<long, long>>> sides;
    for (const HexCell& c : cells)
        for (int i = 0; i < 6; ++i) {
            corners.insert(corner_key(c, i));
            sides.insert(std::minmax(corner_key(c, i), corner_key(c, (i + 1) % 6)));
        }
    return {corners.size(), sides.size()};
}

std::vector<HexCell> random_cells(Rng& rng, std::size_t size, bool catacondensed) {
    static constexpr HexCell steps[] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    std::vector<HexCell> cells{{0, 0}};
    std::set<HexCell> present{{0, 0}};
    std::map<std::pair<long, long>, int> use;
    for (int i = 0; i < 6; ++i) ++use[corner_key({0, 0}, i)];
    std::uniform_int_distribution<int> dir(0, 5);
    int attempts = 0;
    while (cells.size() < size && ++attempts < 100000) {
        std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
        const HexCell base = cells[pick(rng)];
        const HexCell step = steps[dir(rng)];
        const HexCell next{base.q + step.q, base.r + step.r};
        if (present.count(next)) continue;
        bool reject = false;
        if (catacondensed)
            for (int i = 0; i < 6; ++i) reject = reject || use[corner_key(next, i)] >= 2;
        auto trial = cells;
        trial.push_back(next);
        const HexCounts counts = geometric_counts(trial);
        // A hole shows up as Euler characteristic below one.
        if (static_cast<long>(counts.vertices) - static_cast<long>(counts.edges) + static_cast<long>(trial.size()) != 1)
            reject = true;
        if (reject) continue;
        cells.push_back(next);
        present.insert(next);
        for (int i = 0; i < 6; ++i) ++use[corner_key(next, i)];
    }
    return cells;
}

szeged::EdgePartition random_coarsening(Rng& rng, const szeged::ThetaClasses& tc) {
    std::uniform_int_distribution<std::uint32_t> group(0, static_cast<std::uint32_t>(tc.size() - 1));
    std::vector<std::vector<std::uint32_t>> grouping(tc.size());
    for (std::uint32_t c = 0; c < tc.size(); ++c) grouping[group(rng)].push_back(c);
    std::erase_if(grouping, [](const auto& g) { return g.empty(); });
    return szeged::coarsen(tc, grouping);
}

Rational polynomial(const std::vector<long>& coefficients, long n) {
    mpz_class value = 0;
    for (long c : coefficients) value = value * n + c;
    return Rational(value);
}

Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) edges.push_back({i, static_cast<VertexId>((i + 1) % n)});
    return Graph::normal(n, std::move(edges));
}

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::normal(n, std::move(edges));
}

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (VertexId i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph::normal(leaves + 1, std::move(edges));
}

}  // namespace testing_support
