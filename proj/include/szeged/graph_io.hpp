#pragma once

#include "szeged/generators.hpp"
#include "szeged/graph.hpp"
#include "szeged/index.hpp"
#include "szeged/quotient.hpp"

#include <json.hpp>

#include <filesystem>
#include <vector>

namespace szeged {

/// Graph document:
///   {"vertices": [{"id": 0, "wv": 1, "sv": "1/2"}, ...],
///    "edges":    [{"u": 0, "v": 1, "we": 4, "se": 1}, ...]}
/// Weights are nonnegative integers or "p/q" strings. Missing wv/sv/se take
/// the normal values 1/0/1; a missing we is filled in by `missing_edge_weight`
/// computed on the whole graph. Throws Error(InvalidDocument) on schema
/// problems and the Graph::build errors on invalid graphs.
Graph read_graph_document(const nlohmann::json& doc, WeightMode missing_edge_weight = WeightMode::Unit);

/// Writes every weight explicitly.
nlohmann::json graph_document(const Graph& g);

/// graph_document plus "component_map" and "fibers".
nlohmann::json quotient_document(const QuotientGraph& q);

/// A list of edge-index lists.
std::vector<std::vector<EdgeId>> read_partition_document(const nlohmann::json& doc);
nlohmann::json partition_document(const std::vector<std::vector<EdgeId>>& groups);

/// A list of [q, r] pairs.
std::vector<HexCell> read_cells_document(const nlohmann::json& doc);

/// Rational as a JSON integer when it is one and fits, otherwise "p/q".
nlohmann::json rational_json(const Rational& value);

/// Reads and parses a JSON file; Error(InvalidDocument) on I/O or syntax errors.
nlohmann::json load_json(const std::filesystem::path& path);

}  // namespace szeged
