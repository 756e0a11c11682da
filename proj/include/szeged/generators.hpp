#pragma once

#include "szeged/graph.hpp"
#include "szeged/theta.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace szeged {

/// Hexagonal cell in axial coordinates. Neighbors differ by (±1,0), (0,±1)
/// or ±(1,-1).
struct HexCell {
    int q = 0;
    int r = 0;

    friend auto operator<=>(const HexCell&, const HexCell&) = default;
};

int hex_distance(HexCell a, HexCell b);

/// All cells within hex distance `radius` of the origin.
std::vector<HexCell> hexagon_cells(int radius);

/// h cells in a straight row.
std::vector<HexCell> linear_chain_cells(int h);

/// Central cell plus three straight arms of n cells leaving through
/// alternating sides of the central cell.
std::vector<HexCell> phenylene_star_cells(int n);

/// Edge groups labeled by lattice direction (groups 0..2). Phenylenes add
/// group 3 for the square edges that join adjacent hexagons.
struct DirectionPartition {
    std::vector<std::vector<EdgeId>> groups;

    /// Nonempty groups, validated against the Θ*-classes of the graph.
    EdgePartition as_c_partition(const ThetaClasses& tc) const;
};

struct GeneratedSystem {
    Graph graph;  // normally weighted with w_e = 1
    DirectionPartition directions;
};

/// Benzenoid system spanned by the cells. Duplicate cells are ignored.
/// Throws Error(DisconnectedCells) or Error(HasHole).
GeneratedSystem benzenoid(std::span<const HexCell> cells);

/// Phenylene whose hexagonal squeeze is the catacondensed benzenoid on
/// `cells`: 6h vertices, 8h - 2 edges. Throws as benzenoid, plus
/// Error(NotCatacondensed).
GeneratedSystem phenylene_from_squeeze(std::span<const HexCell> cells);

/// The phenylene over phenylene_star_cells(n): 18n + 6 vertices, 24n + 6 edges.
GeneratedSystem phenylene_star(int n);

/// Coronoid with n layers of hexagons around a coronene-shaped hole:
/// hexagon_cells(n + 1) with the six corners of the central cell removed.
Graph coronoid(int n);

/// Random recursive tree on n vertices (vertex i attaches to a uniform
/// earlier vertex), unit weights. Deterministic for a given seed.
Graph random_tree(std::size_t n, std::uint64_t seed);

}  // namespace szeged
