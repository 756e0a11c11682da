#pragma once

#include "szeged/expression.hpp"
#include "szeged/graph.hpp"
#include "szeged/rational.hpp"
#include "szeged/theta.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace szeged {

/// The six per-edge sums for e = uv.
struct EdgeQuantities {
    Rational n_u, n_v, n_0;
    Rational m_u, m_v, m_0;

    /// Argument tuple (x1..x6) = (n_u, n_v, m_u, m_v, n_0, m_0).
    std::array<Rational, 6> arguments() const { return {n_u, n_v, m_u, m_v, n_0, m_0}; }

    friend bool operator==(const EdgeQuantities&, const EdgeQuantities&) = default;
};

/// Hand-coded catalog functions. Each is symmetric under (x1,x3) <-> (x2,x4)
/// by construction.
enum class CatalogFunction {
    VertexProduct,         // x1 x2
    EdgeProduct,           // x3 x4
    RevisedVertexProduct,  // (x1 + x5/2)(x2 + x5/2)
    RevisedEdgeProduct,    // (x3 + x6/2)(x4 + x6/2)
    VertexEdgeProduct,     // x1 x4 + x2 x3
    TotalProduct,          // (x1 + x3)(x2 + x4)
    EdgeSum,               // x3 + x4
    VertexSum,             // x1 + x2
    TotalSum,              // x1 + x2 + x3 + x4
    VertexDifference,      // |x1 - x2|
    EdgeDifference,        // |x3 - x4|
    TotalDifference,       // |x1 + x3 - x2 - x4|
    VertexSquareSum,       // x1^2 + x2^2
};

/// F(x1..x6) with F(x1,x2,x3,x4,x5,x6) = F(x2,x1,x4,x3,x5,x6).
class RegularFunction {
public:
    explicit RegularFunction(CatalogFunction f) : impl_(f) {}

    /// Parses a custom expression and checks symmetry on 64 seeded random
    /// positive tuples plus the all-ones tuple. Throws SyntaxError,
    /// Error(UnknownIdentifier) or Error(SymmetryViolation).
    static RegularFunction parse(std::string_view source);

    Rational operator()(const EdgeQuantities& q) const;
    Rational operator()(const std::array<Rational, 6>& x) const;

    /// Human-readable formula, e.g. "x1*x2".
    std::string formula() const;

private:
    explicit RegularFunction(Expression e) : impl_(std::move(e)) {}

    std::variant<CatalogFunction, Expression> impl_;
};

/// How w_e is assigned before evaluation. Stored keeps the graph's own w_e.
enum class WeightMode { Unit, DegreeSum, DegreeProduct, Stored };

std::string_view to_string(WeightMode mode);
/// Accepts "unit", "degree-sum", "degree-product", "stored".
WeightMode parse_weight_mode(std::string_view text);

struct IndexDescriptor {
    std::string name;
    RegularFunction function;
    WeightMode weight_mode;

    IndexDescriptor with_mode(WeightMode mode) const { return {name, function, mode}; }
};

/// The 28 classical indices plus w+Sz_e* and PI_v^s, in a fixed order.
const std::vector<IndexDescriptor>& index_catalog();

/// Catalog lookup by name ("Sz", "w+Sz_e*", "PI_v^s", ...). A superscript plus
/// ("w⁺Sz") is accepted for '+'. Throws Error(UnknownIndex).
const IndexDescriptor& find_index(std::string_view name);

/// Catalog name, or "expr:<formula>" for a parsed custom function.
IndexDescriptor parse_index(std::string_view text, WeightMode custom_mode = WeightMode::Stored);

/// w_e values the mode prescribes for g (Stored returns g's own w_e).
std::vector<Rational> edge_weights_for(const Graph& g, WeightMode mode);

/// g with w_e replaced according to `mode`; the other weights are kept.
Graph apply_weight_mode(const Graph& g, WeightMode mode);

/// Normally strength-weighted copy: w_v = 1, s_v = 0, s_e = 1, w_e by mode
/// (Stored keeps g's w_e). Throws Error(Disconnected).
Graph normally_weight(const Graph& g, WeightMode mode);

/// Classifies every vertex and every edge (e included, always in M_0)
/// relative to e = uv by exact distance comparison.
EdgeQuantities edge_quantities(const Graph& g, const DistanceMatrix& d, EdgeId e);

struct DirectOptions {
    /// Largest |V|^2 for which a shared all-pairs table is built; above it
    /// every edge runs its own pair of BFS passes.
    std::size_t max_table_cells = 100'000'000;
};

/// Quantities of every edge by brute force. Throws Error(Disconnected).
std::vector<EdgeQuantities> direct_edge_quantities(const Graph& g, DirectOptions options = {});

/// Quantities of every edge of a tree by one traversal, O(n).
/// Throws Error(Disconnected) or Error(NotATree).
std::vector<EdgeQuantities> tree_edge_quantities(const Graph& t);

/// TI_F = Σ_e w_e(e) F(e), straight from the definition.
Rational ti_direct(const Graph& g, const IndexDescriptor& index, DirectOptions options = {});
std::vector<Rational> ti_direct(const Graph& g, std::span<const IndexDescriptor> indices,
                                DirectOptions options = {});

/// Sum over the groups of a c-partition of TI_F of the strength-weighted
/// quotient, using the induced weights as stored. Throws Error(Disconnected)
/// and Error(NotEdgePartition) / Error(SplitsThetaClass) for groups that
/// cannot belong to a c-partition.
Rational ti_cut(const Graph& g, const EdgePartition& partition, const IndexDescriptor& index);
std::vector<Rational> ti_cut(const Graph& g, const EdgePartition& partition,
                             std::span<const IndexDescriptor> indices);

/// Linear-time evaluation on a tree. Throws Error(Disconnected) or Error(NotATree).
Rational ti_tree(const Graph& t, const IndexDescriptor& index);
std::vector<Rational> ti_tree(const Graph& t, std::span<const IndexDescriptor> indices);

}  // namespace szeged
