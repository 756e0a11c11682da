#include "szeged/index.hpp"

#include "szeged/error.hpp"
#include "szeged/quotient.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>

namespace szeged {
namespace {

Rational catalog_value(CatalogFunction f, const Rational& x1, const Rational& x2, const Rational& x3,
                       const Rational& x4, const Rational& x5, const Rational& x6) {
    switch (f) {
        case CatalogFunction::VertexProduct: return x1 * x2;
        case CatalogFunction::EdgeProduct: return x3 * x4;
        case CatalogFunction::RevisedVertexProduct: {
            const Rational half = x5 / 2;
            return (x1 + half) * (x2 + half);
        }
        case CatalogFunction::RevisedEdgeProduct: {
            const Rational half = x6 / 2;
            return (x3 + half) * (x4 + half);
        }
        case CatalogFunction::VertexEdgeProduct: return x1 * x4 + x2 * x3;
        case CatalogFunction::TotalProduct: return (x1 + x3) * (x2 + x4);
        case CatalogFunction::EdgeSum: return x3 + x4;
        case CatalogFunction::VertexSum: return x1 + x2;
        case CatalogFunction::TotalSum: return x1 + x2 + x3 + x4;
        case CatalogFunction::VertexDifference: return abs(x1 - x2);
        case CatalogFunction::EdgeDifference: return abs(x3 - x4);
        case CatalogFunction::TotalDifference: return abs(x1 + x3 - x2 - x4);
        case CatalogFunction::VertexSquareSum: return x1 * x1 + x2 * x2;
    }
    return Rational(0);
}

std::string_view catalog_formula(CatalogFunction f) {
    switch (f) {
        case CatalogFunction::VertexProduct: return "x1*x2";
        case CatalogFunction::EdgeProduct: return "x3*x4";
        case CatalogFunction::RevisedVertexProduct: return "(x1+x5/2)*(x2+x5/2)";
        case CatalogFunction::RevisedEdgeProduct: return "(x3+x6/2)*(x4+x6/2)";
        case CatalogFunction::VertexEdgeProduct: return "x1*x4+x2*x3";
        case CatalogFunction::TotalProduct: return "(x1+x3)*(x2+x4)";
        case CatalogFunction::EdgeSum: return "x3+x4";
        case CatalogFunction::VertexSum: return "x1+x2";
        case CatalogFunction::TotalSum: return "x1+x2+x3+x4";
        case CatalogFunction::VertexDifference: return "abs(x1-x2)";
        case CatalogFunction::EdgeDifference: return "abs(x3-x4)";
        case CatalogFunction::TotalDifference: return "abs(x1+x3-x2-x4)";
        case CatalogFunction::VertexSquareSum: return "x1*x1+x2*x2";
    }
    return "";
}

std::array<Rational, 6> swapped(const std::array<Rational, 6>& x) {
    return {x[1], x[0], x[3], x[2], x[4], x[5]};
}

void check_symmetric(const Expression& e) {
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_int_distribution<long> numerator(1, 100);
    std::uniform_int_distribution<long> denominator(1, 16);

    auto probe = [&](const std::array<Rational, 6>& x) {
        auto value = [&](const std::array<Rational, 6>& args) -> std::optional<Rational> {
            try {
                return e.evaluate(args);
            } catch (const Error& err) {
                if (err.code() != ErrorCode::DivisionByZero) throw;
                return std::nullopt;
            }
        };
        const auto a = value(x);
        const auto b = value(swapped(x));
        if (a != b) {
            std::string point;
            for (const auto& v : x) point += (point.empty() ? "" : ",") + format_rational(v);
            throw Error(ErrorCode::SymmetryViolation,
                        "'" + e.source() + "' differs after swapping (x1,x3) with (x2,x4) at (" + point + ")");
        }
    };

    std::array<Rational, 6> ones;
    ones.fill(Rational(1));
    probe(ones);
    for (int sample = 0; sample < 64; ++sample) {
        std::array<Rational, 6> x;
        for (auto& v : x) {
            v = Rational(numerator(rng), denominator(rng));
            v.canonicalize();
        }
        probe(x);
    }
}

// Splits vertices and edges by which endpoint of e they are closer to.
EdgeQuantities classify(const Graph& g, std::span<const std::uint32_t> du, std::span<const std::uint32_t> dv) {
    EdgeQuantities q{};
    const auto& w = g.weights();
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        Rational* n;
        Rational* m;
        if (du[x] < dv[x]) {
            n = &q.n_u;
            m = &q.m_u;
        } else if (dv[x] < du[x]) {
            n = &q.n_v;
            m = &q.m_v;
        } else {
            n = &q.n_0;
            m = &q.m_0;
        }
        if (sgn(w.vertex_weight[x]) != 0) *n += w.vertex_weight[x];
        if (sgn(w.vertex_strength[x]) != 0) *m += w.vertex_strength[x];
    }
    const auto edges = g.edges();
    for (EdgeId f = 0; f < edges.size(); ++f) {
        if (sgn(w.edge_strength[f]) == 0) continue;
        const std::uint32_t a = std::min(du[edges[f].u], du[edges[f].v]);
        const std::uint32_t b = std::min(dv[edges[f].u], dv[edges[f].v]);
        if (a < b) q.m_u += w.edge_strength[f];
        else if (b < a) q.m_v += w.edge_strength[f];
        else q.m_0 += w.edge_strength[f];
    }
    return q;
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

std::vector<Rational> sum_indices(const Graph& g, const std::vector<EdgeQuantities>& quantities,
                                  std::span<const IndexDescriptor> indices) {
    std::vector<Rational> totals;
    totals.reserve(indices.size());
    for (const auto& index : indices) {
        const auto weights = edge_weights_for(g, index.weight_mode);
        Rational total = 0;
        for (EdgeId e = 0; e < quantities.size(); ++e)
            if (sgn(weights[e]) != 0) total += weights[e] * index.function(quantities[e]);
        totals.push_back(std::move(total));
    }
    return totals;
}

std::string normalize_name(std::string_view name) {
    std::string out;
    constexpr std::string_view superscript_plus = "⁺";
    for (std::size_t i = 0; i < name.size();) {
        if (name.substr(i, superscript_plus.size()) == superscript_plus) {
            out += '+';
            i += superscript_plus.size();
        } else {
            out += name[i++];
        }
    }
    return out;
}

}  // namespace

RegularFunction RegularFunction::parse(std::string_view source) {
    Expression e = Expression::parse(source);
    check_symmetric(e);
    return RegularFunction(std::move(e));
}

Rational RegularFunction::operator()(const EdgeQuantities& q) const {
    if (const auto* f = std::get_if<CatalogFunction>(&impl_))
        return catalog_value(*f, q.n_u, q.n_v, q.m_u, q.m_v, q.n_0, q.m_0);
    return std::get<Expression>(impl_).evaluate(q.arguments());
}

Rational RegularFunction::operator()(const std::array<Rational, 6>& x) const {
    if (const auto* f = std::get_if<CatalogFunction>(&impl_)) return catalog_value(*f, x[0], x[1], x[2], x[3], x[4], x[5]);
    return std::get<Expression>(impl_).evaluate(x);
}

std::string RegularFunction::formula() const {
    if (const auto* f = std::get_if<CatalogFunction>(&impl_)) return std::string(catalog_formula(*f));
    return std::get<Expression>(impl_).source();
}

std::string_view to_string(WeightMode mode) {
    switch (mode) {
        case WeightMode::Unit: return "unit";
        case WeightMode::DegreeSum: return "degree-sum";
        case WeightMode::DegreeProduct: return "degree-product";
        case WeightMode::Stored: return "stored";
    }
    return "";
}

WeightMode parse_weight_mode(std::string_view text) {
    for (auto mode : {WeightMode::Unit, WeightMode::DegreeSum, WeightMode::DegreeProduct, WeightMode::Stored})
        if (text == to_string(mode)) return mode;
    throw Error(ErrorCode::InvalidDocument, "unknown weight mode '" + std::string(text) + "'");
}

const std::vector<IndexDescriptor>& index_catalog() {
    static const std::vector<IndexDescriptor> catalog = [] {
        using F = CatalogFunction;
        using W = WeightMode;
        auto entry = [](const char* name, F f, W w) { return IndexDescriptor{name, RegularFunction(f), w}; };
        return std::vector<IndexDescriptor>{
            entry("Sz", F::VertexProduct, W::Unit),
            entry("Sz_e", F::EdgeProduct, W::Unit),
            entry("Sz*", F::RevisedVertexProduct, W::Unit),
            entry("Sz_e*", F::RevisedEdgeProduct, W::Unit),
            entry("Sz_ve", F::VertexEdgeProduct, W::Unit),
            entry("Sz_t", F::TotalProduct, W::Unit),
            entry("w+Sz", F::VertexProduct, W::DegreeSum),
            entry("w*Sz", F::VertexProduct, W::DegreeProduct),
            entry("w+Sz_e", F::EdgeProduct, W::DegreeSum),
            entry("w*Sz_e", F::EdgeProduct, W::DegreeProduct),
            entry("w+Sz_t", F::TotalProduct, W::DegreeSum),
            entry("w*Sz_t", F::TotalProduct, W::DegreeProduct),
            entry("PI", F::EdgeSum, W::Unit),
            entry("PI_v", F::VertexSum, W::Unit),
            entry("PI_t", F::TotalSum, W::Unit),
            entry("w+PI", F::EdgeSum, W::DegreeSum),
            entry("w*PI", F::EdgeSum, W::DegreeProduct),
            entry("w+PI_v", F::VertexSum, W::DegreeSum),
            entry("w*PI_v", F::VertexSum, W::DegreeProduct),
            entry("Mo", F::VertexDifference, W::Unit),
            entry("Mo_e", F::EdgeDifference, W::Unit),
            entry("Mo_t", F::TotalDifference, W::Unit),
            entry("w+Mo", F::VertexDifference, W::DegreeSum),
            entry("w*Mo", F::VertexDifference, W::DegreeProduct),
            entry("w+Mo_e", F::EdgeDifference, W::DegreeSum),
            entry("w*Mo_e", F::EdgeDifference, W::DegreeProduct),
            entry("w+Mo_t", F::TotalDifference, W::DegreeSum),
            entry("w*Mo_t", F::TotalDifference, W::DegreeProduct),
            entry("w+Sz_e*", F::RevisedEdgeProduct, W::DegreeSum),
            entry("PI_v^s", F::VertexSquareSum, W::Unit),
        };
    }();
    return catalog;
}

const IndexDescriptor& find_index(std::string_view name) {
    const std::string key = normalize_name(name);
    const auto& catalog = index_catalog();
    auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& d) { return d.name == key; });
    if (it == catalog.end()) {
        if (key == "PI_e") return find_index("PI");
        throw Error(ErrorCode::UnknownIndex, "no catalog index named '" + std::string(name) + "'");
    }
    return *it;
}

IndexDescriptor parse_index(std::string_view text, WeightMode custom_mode) {
    constexpr std::string_view prefix = "expr:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string_view source = text.substr(prefix.size());
        return IndexDescriptor{std::string(text), RegularFunction::parse(source), custom_mode};
    }
    return find_index(text);
}

std::vector<Rational> edge_weights_for(const Graph& g, WeightMode mode) {
    if (mode == WeightMode::Stored) return g.weights().edge_weight;
    std::vector<Rational> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        const auto du = static_cast<unsigned long>(g.degree(e.u));
        const auto dv = static_cast<unsigned long>(g.degree(e.v));
        switch (mode) {
            case WeightMode::Unit: out.emplace_back(1); break;
            case WeightMode::DegreeSum: out.emplace_back(du + dv); break;
            case WeightMode::DegreeProduct: out.emplace_back(du * dv); break;
            case WeightMode::Stored: break;
        }
    }
    return out;
}

Graph apply_weight_mode(const Graph& g, WeightMode mode) {
    if (mode == WeightMode::Stored) return g;
    return g.with_edge_weights(edge_weights_for(g, mode));
}

Graph normally_weight(const Graph& g, WeightMode mode) {
    require_connected(g);
    Weights w = Weights::normal(g.vertex_count(), g.edge_count());
    w.edge_weight = edge_weights_for(g, mode);
    return g.with_weights(std::move(w));
}

EdgeQuantities edge_quantities(const Graph& g, const DistanceMatrix& d, EdgeId e) {
    return classify(g, d.row(g.edge(e).u), d.row(g.edge(e).v));
}

std::vector<EdgeQuantities> direct_edge_quantities(const Graph& g, DirectOptions options) {
    require_connected(g);
    std::vector<EdgeQuantities> out;
    out.reserve(g.edge_count());
    const std::size_t n = g.vertex_count();
    if (n * n <= options.max_table_cells) {
        const auto d = all_pairs_distances(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(edge_quantities(g, d, e));
    } else {
        for (const Edge& e : g.edges()) {
            const auto du = bfs_distances(g, e.u);
            const auto dv = bfs_distances(g, e.v);
            out.push_back(classify(g, du, dv));
        }
    }
    return out;
}

namespace {

// Vertex weights, vertex strengths and edge strengths as integers over one
// common denominator.
struct ScaledWeights {
    mpz_class denominator;
    std::vector<std::int64_t> vertex_weight;
    std::vector<std::int64_t> vertex_strength;
    std::vector<std::int64_t> edge_strength;
};

// Empty when the common denominator or the scaled totals overflow 62 bits.
std::optional<ScaledWeights> scale_to_integers(const Graph& t) {
    const auto& w = t.weights();
    const mpz_class limit = mpz_class(1) << 62;
    mpz_class den = 1;
    for (const auto* list : {&w.vertex_weight, &w.vertex_strength, &w.edge_strength})
        for (const Rational& x : *list) {
            if (x.get_den() == 1) continue;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
            if (den >= limit) return std::nullopt;
        }
    ScaledWeights out;
    out.denominator = den;
    mpz_class total = 0;
    mpz_class scaled;
    auto convert = [&](const std::vector<Rational>& in, std::vector<std::int64_t>& dst) {
        dst.reserve(in.size());
        for (const Rational& x : in) {
            scaled = x.get_num() * (den / x.get_den());
            total += scaled;
            if (total >= limit) return false;
            dst.push_back(scaled.get_si());
        }
        return true;
    };
    // Every subtree sum is bounded by the sum of all weights.
    if (!convert(w.vertex_weight, out.vertex_weight)) return std::nullopt;
    total = 0;
    if (!convert(w.vertex_strength, out.vertex_strength) || !convert(w.edge_strength, out.edge_strength))
        return std::nullopt;
    return out;
}

void assign_edge_weight(Rational& out, const Graph& g, WeightMode mode, EdgeId e) {
    const Edge& f = g.edge(e);
    switch (mode) {
        case WeightMode::Unit: out = 1; break;
        case WeightMode::DegreeSum: out = static_cast<unsigned long>(g.degree(f.u) + g.degree(f.v)); break;
        case WeightMode::DegreeProduct: out = static_cast<unsigned long>(g.degree(f.u) * g.degree(f.v)); break;
        case WeightMode::Stored: out = g.edge_weight(e); break;
    }
}

void assign_scaled(Rational& r, std::int64_t numerator, const mpz_class& denominator) {
    mpz_set_si(r.get_num_mpz_t(), numerator);
    mpz_set(r.get_den_mpz_t(), denominator.get_mpz_t());
    if (denominator != 1) r.canonicalize();
}

// Calls visit(e, q) for every edge of the tree t; q is reused between calls.
template <class Visit>
void for_each_tree_edge(const Graph& t, Visit&& visit) {
    require_connected(t);
    if (t.edge_count() + 1 != t.vertex_count())
        throw Error(ErrorCode::NotATree, std::to_string(t.vertex_count()) + " vertices but " +
                                             std::to_string(t.edge_count()) + " edges");
    const std::size_t n = t.vertex_count();
    constexpr EdgeId none = ~EdgeId{0};
    std::vector<EdgeId> parent_edge(n, none);
    std::vector<VertexId> parent(n, 0);
    std::vector<VertexId> order;
    order.reserve(n);
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (const auto& inc : t.incident(x)) {
            if (seen[inc.neighbor]) continue;
            seen[inc.neighbor] = 1;
            parent[inc.neighbor] = x;
            parent_edge[inc.neighbor] = inc.edge;
            stack.push_back(inc.neighbor);
        }
    }

    EdgeQuantities q;
    q.n_0 = 0;
    // Child endpoint of every edge; edges are then visited in index order.
    std::vector<VertexId> child_of_edge(t.edge_count());
    for (VertexId v = 0; v < n; ++v)
        if (parent_edge[v] != none) child_of_edge[parent_edge[v]] = v;
    auto emit = [&](VertexId c, auto set_inner_w, auto set_inner_s, auto set_outer_w, auto set_outer_s) {
        const EdgeId e = parent_edge[c];
        const bool child_is_u = t.edge(e).u == c;
        set_inner_w(child_is_u ? q.n_u : q.n_v);
        set_inner_s(child_is_u ? q.m_u : q.m_v);
        set_outer_w(child_is_u ? q.n_v : q.n_u);
        set_outer_s(child_is_u ? q.m_v : q.m_u);
        q.m_0 = t.edge_strength(e);
        visit(e, static_cast<const EdgeQuantities&>(q));
    };

    if (auto scaled = scale_to_integers(t)) {
        // subtree_w[v] = Σ w_v below v; subtree_s[v] = Σ s_v below v + Σ s_e of edges below v.
        std::vector<std::int64_t> subtree_w = std::move(scaled->vertex_weight);
        std::vector<std::int64_t> subtree_s = std::move(scaled->vertex_strength);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const VertexId v = *it;
            if (parent_edge[v] == none) continue;
            subtree_w[parent[v]] += subtree_w[v];
            subtree_s[parent[v]] += subtree_s[v] + scaled->edge_strength[parent_edge[v]];
        }
        const mpz_class& den = scaled->denominator;
        const std::int64_t total_w = subtree_w[0];
        const std::int64_t total_s = subtree_s[0];
        for (const VertexId c : child_of_edge) {
            const std::int64_t se = scaled->edge_strength[parent_edge[c]];
            emit(
                c, [&](Rational& r) { assign_scaled(r, subtree_w[c], den); },
                [&](Rational& r) { assign_scaled(r, subtree_s[c], den); },
                [&](Rational& r) { assign_scaled(r, total_w - subtree_w[c], den); },
                [&](Rational& r) { assign_scaled(r, total_s - subtree_s[c] - se, den); });
        }
        return;
    }

    std::vector<Rational> subtree_w(t.weights().vertex_weight);
    std::vector<Rational> subtree_s(t.weights().vertex_strength);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const VertexId v = *it;
        if (parent_edge[v] == none) continue;
        subtree_w[parent[v]] += subtree_w[v];
        subtree_s[parent[v]] += subtree_s[v];
        subtree_s[parent[v]] += t.edge_strength(parent_edge[v]);
    }
    const Rational& total_w = subtree_w[0];
    const Rational& total_s = subtree_s[0];
    for (const VertexId c : child_of_edge) {
        const Rational& se = t.edge_strength(parent_edge[c]);
        emit(
            c, [&](Rational& r) { r = subtree_w[c]; }, [&](Rational& r) { r = subtree_s[c]; },
            [&](Rational& r) { r = total_w - subtree_w[c]; },
            [&](Rational& r) {
                r = total_s - subtree_s[c];
                r -= se;
            });
    }
}

}  // namespace

std::vector<EdgeQuantities> tree_edge_quantities(const Graph& t) {
    std::vector<EdgeQuantities> out(t.edge_count());
    for_each_tree_edge(t, [&](EdgeId e, const EdgeQuantities& q) { out[e] = q; });
    return out;
}

Rational ti_direct(const Graph& g, const IndexDescriptor& index, DirectOptions options) {
    return ti_direct(g, std::span<const IndexDescriptor>(&index, 1), options).front();
}

std::vector<Rational> ti_direct(const Graph& g, std::span<const IndexDescriptor> indices, DirectOptions options) {
    return sum_indices(g, direct_edge_quantities(g, options), indices);
}

namespace {

void check_partition_shape(const Graph& g, const EdgePartition& p) {
    std::vector<std::uint8_t> covered(g.edge_count(), 0);
    for (const auto& group : p.groups) {
        if (group.empty()) throw Error(ErrorCode::NotEdgePartition, "empty group");
        for (EdgeId e : group) {
            if (e >= g.edge_count() || covered[e]++)
                throw Error(ErrorCode::NotEdgePartition, "edge " + std::to_string(e) + " out of range or repeated");
        }
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end())
        throw Error(ErrorCode::NotEdgePartition, "partition does not cover every edge");
}

void check_quotient(const QuotientGraph& q, std::size_t group) {
    if (!q.internal_group_edges.empty())
        throw Error(ErrorCode::SplitsThetaClass,
                    "group " + std::to_string(group) + " contains edge " + std::to_string(q.internal_group_edges.front()) +
                        " whose endpoints stay connected, so it is not a union of classes");
}

}  // namespace

Rational ti_cut(const Graph& g, const EdgePartition& partition, const IndexDescriptor& index) {
    require_connected(g);
    check_partition_shape(g, partition);
    const Graph weighted = apply_weight_mode(g, index.weight_mode);
    const IndexDescriptor stored = index.with_mode(WeightMode::Stored);
    Rational total = 0;
    for (std::size_t i = 0; i < partition.groups.size(); ++i) {
        const auto q = quotient_by_group(weighted, partition.groups[i]);
        check_quotient(q, i);
        total += ti_direct(q.graph, stored);
    }
    return total;
}

std::vector<Rational> ti_cut(const Graph& g, const EdgePartition& partition, std::span<const IndexDescriptor> indices) {
    require_connected(g);
    check_partition_shape(g, partition);
    std::vector<std::vector<Rational>> weights;
    weights.reserve(indices.size());
    for (const auto& index : indices) weights.push_back(edge_weights_for(g, index.weight_mode));

    std::vector<Rational> totals(indices.size(), Rational(0));
    for (std::size_t i = 0; i < partition.groups.size(); ++i) {
        const auto q = quotient_by_group(g, partition.groups[i]);
        check_quotient(q, i);
        const auto quantities = direct_edge_quantities(q.graph);
        // The quotient's quantities never depend on w_e, so each index only
        // needs its own fiber sums.
        for (std::size_t k = 0; k < indices.size(); ++k) {
            for (EdgeId qe = 0; qe < q.fibers.size(); ++qe) {
                Rational induced = 0;
                for (EdgeId e : q.fibers[qe]) induced += weights[k][e];
                if (sgn(induced) != 0) totals[k] += induced * indices[k].function(quantities[qe]);
            }
        }
    }
    return totals;
}

Rational ti_tree(const Graph& t, const IndexDescriptor& index) {
    return ti_tree(t, std::span<const IndexDescriptor>(&index, 1)).front();
}

std::vector<Rational> ti_tree(const Graph& t, std::span<const IndexDescriptor> indices) {
    std::vector<Rational> totals(indices.size(), Rational(0));
    Rational weight;
    Rational term;
    for_each_tree_edge(t, [&](EdgeId e, const EdgeQuantities& q) {
        for (std::size_t k = 0; k < indices.size(); ++k) {
            assign_edge_weight(weight, t, indices[k].weight_mode, e);
            if (sgn(weight) == 0) continue;
            term = indices[k].function(q);
            term *= weight;
            totals[k] += term;
        }
    });
    return totals;
}

}  // namespace szeged
