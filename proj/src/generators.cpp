#include "szeged/generators.hpp"

#include "szeged/error.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>

namespace szeged {
namespace {

// Corners live on the triangular lattice spanned by unit vectors at 0° and
// 60°. Cell (q, r) is centered at q*(2,-1) + r*(1,1); its corners sit at the
// six unit offsets below, counter-clockwise from 0°.
using Corner = std::pair<int, int>;

constexpr std::array<Corner, 6> kCornerOffset{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
constexpr std::array<HexCell, 6> kNeighborStep{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

Corner corner(HexCell c, int i) {
    return {2 * c.q + c.r + kCornerOffset[i].first, -c.q + c.r + kCornerOffset[i].second};
}

// Side i joins corners i and i+1; opposite sides share a direction.
constexpr int side_direction(int i) {
    constexpr std::array<int, 6> direction{2, 0, 1, 2, 0, 1};
    return direction[i];
}

std::vector<HexCell> normalized(std::span<const HexCell> cells) {
    std::vector<HexCell> out(cells.begin(), cells.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_cells(const std::vector<HexCell>& cells) {
    if (cells.empty()) throw Error(ErrorCode::DisconnectedCells, "no cells given");
    const std::set<HexCell> lookup(cells.begin(), cells.end());
    std::set<HexCell> reached{cells.front()};
    std::vector<HexCell> stack{cells.front()};
    while (!stack.empty()) {
        const HexCell c = stack.back();
        stack.pop_back();
        for (const HexCell& step : kNeighborStep) {
            const HexCell n{c.q + step.q, c.r + step.r};
            if (lookup.count(n) && reached.insert(n).second) stack.push_back(n);
        }
    }
    if (reached.size() != cells.size())
        throw Error(ErrorCode::DisconnectedCells, std::to_string(cells.size() - reached.size()) +
                                                      " cell(s) not reachable through shared sides");

    std::set<Corner> corners;
    std::set<std::pair<Corner, Corner>> sides;
    for (const HexCell& c : cells)
        for (int i = 0; i < 6; ++i) {
            corners.insert(corner(c, i));
            sides.insert(std::minmax(corner(c, i), corner(c, (i + 1) % 6)));
        }
    const long euler = static_cast<long>(corners.size()) - static_cast<long>(sides.size()) +
                       static_cast<long>(cells.size());
    if (euler != 1)
        throw Error(ErrorCode::HasHole, "cell set encloses " + std::to_string(1 - euler) +
                                            " hole(s); use the coronoid generator for systems with holes");
}

void check_catacondensed(const std::vector<HexCell>& cells) {
    std::map<Corner, int> use;
    for (const HexCell& c : cells)
        for (int i = 0; i < 6; ++i)
            if (++use[corner(c, i)] == 3)
                throw Error(ErrorCode::NotCatacondensed,
                            "three hexagons meet at an internal vertex near cell (" + std::to_string(c.q) + ", " +
                                std::to_string(c.r) + ")");
}

}  // namespace

int hex_distance(HexCell a, HexCell b) {
    const int dq = a.q - b.q;
    const int dr = a.r - b.r;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

std::vector<HexCell> hexagon_cells(int radius) {
    std::vector<HexCell> out;
    for (int q = -radius; q <= radius; ++q)
        for (int r = -radius; r <= radius; ++r)
            if (hex_distance({q, r}, {0, 0}) <= radius) out.push_back({q, r});
    return out;
}

std::vector<HexCell> linear_chain_cells(int h) {
    std::vector<HexCell> out;
    for (int t = 0; t < h; ++t) out.push_back({t, 0});
    return out;
}

std::vector<HexCell> phenylene_star_cells(int n) {
    // Steps 0, 2 and 4 of kNeighborStep are 120° apart.
    std::vector<HexCell> out{{0, 0}};
    for (int arm = 0; arm < 3; ++arm) {
        const HexCell step = kNeighborStep[2 * arm];
        for (int t = 1; t <= n; ++t) out.push_back({t * step.q, t * step.r});
    }
    return out;
}

EdgePartition DirectionPartition::as_c_partition(const ThetaClasses& tc) const {
    std::vector<std::vector<EdgeId>> nonempty;
    for (const auto& g : groups)
        if (!g.empty()) nonempty.push_back(g);
    return validate_c_partition(tc, nonempty);
}

namespace {

// Vertex v of the result sits at corners[v].
GeneratedSystem build_benzenoid(const std::vector<HexCell>& cells, std::vector<Corner>& corners) {
    check_cells(cells);
    std::map<Corner, VertexId> vertex_of;
    std::set<std::pair<VertexId, VertexId>> seen_sides;
    std::vector<Edge> edges;
    GeneratedSystem out;
    out.directions.groups.resize(3);
    for (const HexCell& c : cells) {
        std::array<VertexId, 6> ids{};
        for (int i = 0; i < 6; ++i) {
            auto [it, fresh] = vertex_of.try_emplace(corner(c, i), static_cast<VertexId>(corners.size()));
            if (fresh) corners.push_back(it->first);
            ids[i] = it->second;
        }
        for (int i = 0; i < 6; ++i) {
            const VertexId a = ids[i];
            const VertexId b = ids[(i + 1) % 6];
            if (!seen_sides.insert(std::minmax(a, b)).second) continue;
            out.directions.groups[side_direction(i)].push_back(static_cast<EdgeId>(edges.size()));
            edges.push_back({a, b});
        }
    }
    out.graph = Graph::normal(corners.size(), std::move(edges));
    return out;
}

}  // namespace

GeneratedSystem benzenoid(std::span<const HexCell> input) {
    std::vector<Corner> corners;
    return build_benzenoid(normalized(input), corners);
}

GeneratedSystem phenylene_from_squeeze(std::span<const HexCell> input) {
    const auto cells = normalized(input);
    check_cells(cells);
    check_catacondensed(cells);

    // Every hexagon gets its own six vertices; vertex 6k+i is corner i of cell k.
    std::vector<Edge> edges;
    GeneratedSystem out;
    out.directions.groups.resize(4);
    for (VertexId k = 0; k < cells.size(); ++k)
        for (int i = 0; i < 6; ++i) {
            out.directions.groups[side_direction(i)].push_back(static_cast<EdgeId>(edges.size()));
            edges.push_back({6 * k + static_cast<VertexId>(i), 6 * k + static_cast<VertexId>((i + 1) % 6)});
        }

    // Each pair of adjacent hexagons is joined by a square: the shared side is
    // duplicated and its two copies are linked corner to corner.
    std::map<Corner, std::vector<std::pair<VertexId, int>>> owners;
    for (VertexId k = 0; k < cells.size(); ++k)
        for (int i = 0; i < 6; ++i) owners[corner(cells[k], i)].push_back({k, i});
    std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<int, int>>> shared;
    for (const auto& [key, list] : owners)
        if (list.size() == 2) shared[{list[0].first, list[1].first}].push_back({list[0].second, list[1].second});
    for (const auto& [pair, corners] : shared) {
        for (const auto& [i, j] : corners) {
            out.directions.groups[3].push_back(static_cast<EdgeId>(edges.size()));
            edges.push_back({6 * pair.first + static_cast<VertexId>(i), 6 * pair.second + static_cast<VertexId>(j)});
        }
    }
    out.graph = Graph::normal(6 * cells.size(), std::move(edges));
    return out;
}

GeneratedSystem phenylene_star(int n) {
    const auto cells = phenylene_star_cells(n);
    return phenylene_from_squeeze(cells);
}

Graph coronoid(int n) {
    std::vector<Corner> corners;
    const GeneratedSystem full = build_benzenoid(normalized(hexagon_cells(n + 1)), corners);

    std::set<Corner> hole;
    for (int i = 0; i < 6; ++i) hole.insert(corner({0, 0}, i));
    std::vector<VertexId> remap(full.graph.vertex_count(), kUnreachable);
    VertexId next = 0;
    for (VertexId v = 0; v < full.graph.vertex_count(); ++v)
        if (!hole.count(corners[v])) remap[v] = next++;
    std::vector<Edge> edges;
    for (const Edge& e : full.graph.edges())
        if (remap[e.u] != kUnreachable && remap[e.v] != kUnreachable) edges.push_back({remap[e.u], remap[e.v]});
    return Graph::normal(next, std::move(edges));
}


Graph random_tree(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (VertexId v = 1; v < n; ++v) {
        std::uniform_int_distribution<VertexId> pick(0, v - 1);
        edges.push_back({pick(rng), v});
    }
    return Graph::normal(n, std::move(edges));
}

}  // namespace szeged
