#pragma once

#include "szeged/generators.hpp"
#include "szeged/graph.hpp"
#include "szeged/index.hpp"
#include "szeged/theta.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using szeged::EdgeId;
using szeged::Graph;
using szeged::Rational;

using Rng = std::mt19937_64;

/// numerator in [0, max_numerator], denominator from {1, 2, 4}.
Rational random_weight(Rng& rng, int max_numerator = 10);

/// All four weight functions drawn with random_weight.
szeged::Weights random_weights(Rng& rng, std::size_t n, std::size_t m);

/// Connected simple graph: random spanning tree plus extra random edges.
Graph random_connected_graph(Rng& rng, std::size_t n, std::size_t max_edges, bool weighted);

/// Random recursive tree (independent of the library generator) with
/// optional random weights.
Graph random_tree_graph(Rng& rng, std::size_t n, bool weighted);

/// Floyd–Warshall over the edge list; -1 marks unreachable pairs.
std::vector<std::vector<long>> floyd_distances(const Graph& g);

/// The six quantities of edge e by enumerating the definitions.
szeged::EdgeQuantities oracle_quantities(const Graph& g, const std::vector<std::vector<long>>& d, EdgeId e);

/// w_e from degrees counted on the edge list.
Rational oracle_edge_weight(const Graph& g, szeged::WeightMode mode, EdgeId e);

/// Σ_e w_e F over oracle quantities.
Rational oracle_index(const Graph& g, const szeged::IndexDescriptor& index);

/// Θ* by building the Θ relation graph on edges and taking its components.
std::vector<std::vector<EdgeId>> oracle_theta_classes(const Graph& g);

/// Σ over unordered vertex pairs of d(u, v).
long wiener_index(const Graph& g);

/// Random connected cell set of the given size; with `catacondensed` no
/// corner is shared by three cells. Cell sets enclosing holes are rejected.
std::vector<szeged::HexCell> random_cells(Rng& rng, std::size_t size, bool catacondensed);

/// Vertex and edge counts of the hexagon union computed from floating-point
/// corner coordinates.
struct HexCounts {
    std::size_t vertices = 0;
    std::size_t edges = 0;
};
HexCounts geometric_counts(const std::vector<szeged::HexCell>& cells);

/// Random grouping of the Θ*-classes into at most `classes` groups.
szeged::EdgePartition random_coarsening(Rng& rng, const szeged::ThetaClasses& tc);

/// Evaluates a polynomial with integer coefficients, highest degree first.
Rational polynomial(const std::vector<long>& coefficients, long n);

Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);

}  // namespace testing_support
