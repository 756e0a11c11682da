#include "szeged/graph_io.hpp"

#include "szeged/error.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <string>

namespace szeged {
namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorCode::InvalidDocument, what);
}

Rational weight_value(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_unsigned() || v.is_number_integer()) {
        return Rational(mpz_class(std::to_string(v.get<long long>())));
    }
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            invalid(where + ": " + e.what());
        }
    }
    invalid(where + ": weight must be an integer or a \"p/q\" string");
}

std::uint32_t index_value(const nlohmann::json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) invalid(where + ": missing \"" + key + "\"");
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<long long>() >= static_cast<long long>(std::numeric_limits<std::uint32_t>::max()))
        invalid(where + ": \"" + key + "\" must be a nonnegative integer");
    return static_cast<std::uint32_t>(v.get<long long>());
}

}  // namespace

Graph read_graph_document(const nlohmann::json& doc, WeightMode missing_edge_weight) {
    if (!doc.is_object()) invalid("graph document must be a JSON object");
    if (!doc.contains("vertices") || !doc.at("vertices").is_array()) invalid("\"vertices\" must be an array");
    if (!doc.contains("edges") || !doc.at("edges").is_array()) invalid("\"edges\" must be an array");

    const auto& vertices = doc.at("vertices");
    const std::size_t n = vertices.size();
    Weights w = Weights::normal(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& v = vertices[i];
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (!v.is_object()) invalid(where + " must be an object");
        const std::uint32_t id = index_value(v, "id", where);
        if (id >= n) invalid(where + ": id " + std::to_string(id) + " outside 0.." + std::to_string(n - 1));
        if (seen[id]++) invalid(where + ": id " + std::to_string(id) + " repeated");
        if (v.contains("wv")) w.vertex_weight[id] = weight_value(v.at("wv"), where + ".wv");
        if (v.contains("sv")) w.vertex_strength[id] = weight_value(v.at("sv"), where + ".sv");
    }

    std::vector<Edge> edges;
    std::vector<std::optional<Rational>> given_we;
    for (std::size_t i = 0; i < doc.at("edges").size(); ++i) {
        const auto& e = doc.at("edges")[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_object()) invalid(where + " must be an object");
        edges.push_back({index_value(e, "u", where), index_value(e, "v", where)});
        w.edge_strength.push_back(e.contains("se") ? weight_value(e.at("se"), where + ".se") : Rational(1));
        given_we.push_back(e.contains("we") ? std::optional(weight_value(e.at("we"), where + ".we")) : std::nullopt);
        w.edge_weight.emplace_back(1);
    }

    Graph g = Graph::build(n, std::move(edges), std::move(w));
    const auto defaults = edge_weights_for(g, missing_edge_weight == WeightMode::Stored ? WeightMode::Unit
                                                                                        : missing_edge_weight);
    std::vector<Rational> we;
    we.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) we.push_back(given_we[e] ? *given_we[e] : defaults[e]);
    return g.with_edge_weights(std::move(we));
}

nlohmann::json rational_json(const Rational& value) {
    if (value.get_den() == 1 && value.get_num().fits_slong_p()) return value.get_num().get_si();
    return format_rational(value);
}

nlohmann::json graph_document(const Graph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        vertices.push_back(
            {{"id", v}, {"wv", rational_json(g.vertex_weight(v))}, {"sv", rational_json(g.vertex_strength(v))}});
    nlohmann::json edges = nlohmann::json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        edges.push_back({{"u", g.edge(e).u},
                         {"v", g.edge(e).v},
                         {"we", rational_json(g.edge_weight(e))},
                         {"se", rational_json(g.edge_strength(e))}});
    nlohmann::json doc;
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    return doc;
}

nlohmann::json quotient_document(const QuotientGraph& q) {
    nlohmann::json doc = graph_document(q.graph);
    doc["component_map"] = q.component_of;
    doc["fibers"] = q.fibers;
    return doc;
}

std::vector<std::vector<EdgeId>> read_partition_document(const nlohmann::json& doc) {
    if (!doc.is_array()) invalid("partition must be a list of edge-index lists");
    std::vector<std::vector<EdgeId>> groups;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        if (!doc[i].is_array()) invalid("partition group " + std::to_string(i) + " must be a list");
        std::vector<EdgeId> group;
        for (const auto& e : doc[i]) {
            if (!e.is_number_integer() || e.get<long long>() < 0)
                invalid("partition group " + std::to_string(i) + " holds a non-index entry");
            group.push_back(static_cast<EdgeId>(e.get<long long>()));
        }
        groups.push_back(std::move(group));
    }
    return groups;
}

nlohmann::json partition_document(const std::vector<std::vector<EdgeId>>& groups) {
    return nlohmann::json(groups);
}

std::vector<HexCell> read_cells_document(const nlohmann::json& doc) {
    if (!doc.is_array()) invalid("cell file must be a list of [q, r] pairs");
    std::vector<HexCell> cells;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& c = doc[i];
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
            invalid("cell " + std::to_string(i) + " must be an integer pair [q, r]");
        cells.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return cells;
}

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) invalid("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        invalid(path.string() + ": " + e.what());
    }
}

}  // namespace szeged
