#include "szeged/cli.hpp"

#include "szeged/error.hpp"
#include "szeged/generators.hpp"
#include "szeged/graph_io.hpp"
#include "szeged/index.hpp"
#include "szeged/quotient.hpp"
#include "szeged/theta.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace szeged::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

nlohmann::json read_json(const std::string& path, Streams& io) {
    if (path != "-") return load_json(path);
    try {
        return nlohmann::json::parse(io.in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::InvalidDocument, std::string("stdin: ") + e.what());
    }
}

void write_text(const std::string& path, const std::string& text, Streams& io) {
    if (path.empty() || path == "-") {
        io.out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::InvalidDocument, "cannot write " + path);
    f << text;
}

/// Index named on the command line plus the w_e mode used for edges whose
/// weight the document leaves out.
struct ResolvedIndex {
    IndexDescriptor index;
    WeightMode missing_edge_weight;
};

ResolvedIndex resolve_index(const std::string& text, const std::string& weights) {
    IndexDescriptor index = parse_index(text, WeightMode::Unit);
    const WeightMode mode = weights.empty() ? index.weight_mode : parse_weight_mode(weights);
    if (mode == WeightMode::Stored)
        throw Error(ErrorCode::InvalidDocument, "--weights takes unit, degree-sum or degree-product");
    // Document weights are resolved once; evaluation then uses them verbatim.
    return {index.with_mode(WeightMode::Stored), mode};
}

EdgePartition resolve_partition(const std::string& source, const ThetaClasses& tc, Streams& io) {
    if (source == "theta") return finest_partition(tc);
    return validate_c_partition(tc, read_partition_document(read_json(source, io)));
}

std::string timing(double ms) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << ms;
    return s.str();
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Best per-call wall time over at least `min_runs` calls, repeated until
/// `budget_ms` is spent.
double best_time_ms(const std::function<void()>& fn, int min_runs = 5, double budget_ms = 200.0) {
    double best = INFINITY;
    double spent = 0;
    int runs = 0;
    while (runs < min_runs || (spent < budget_ms && runs < 1000)) {
        const auto start = Clock::now();
        fn();
        const double ms = elapsed_ms(start);
        best = std::min(best, ms);
        spent += ms;
        ++runs;
    }
    return best;
}

nlohmann::json value_json(const Rational& v) {
    return {{"value", format_rational(v)}, {"p", v.get_num().get_str()}, {"q", v.get_den().get_str()}};
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
    std::string graph;
    std::string index;
    std::string method = "direct";
    std::string partition = "theta";
    std::string weights;
    std::string format = "human";
};

int compute(const ComputeArgs& a, Streams& io) {
    const auto resolved = resolve_index(a.index, a.weights);
    const Graph g = read_graph_document(read_json(a.graph, io), resolved.missing_edge_weight);
    const auto start = Clock::now();
    Rational value;
    if (a.method == "direct") {
        value = ti_direct(g, resolved.index);
    } else if (a.method == "cut") {
        const auto tc = theta_star_classes(g);
        value = ti_cut(g, resolve_partition(a.partition, tc, io), resolved.index);
    } else {
        value = ti_tree(g, resolved.index);
    }
    const double ms = elapsed_ms(start);

    if (a.format == "json") {
        nlohmann::json doc = value_json(value);
        doc["index"] = a.index;
        doc["method"] = a.method;
        io.out << doc.dump() << "\n";
    } else {
        io.out << "index: " << a.index << "\n"
               << "method: " << a.method << "\n"
               << "value: " << format_rational(value) << "\n"
               << "decimal: " << format_decimal(value) << "\n";
    }
    io.err << "time_ms: " << timing(ms) << "\n";
    return kOk;
}

// ---------------------------------------------------------------- classes

int classes(const std::string& graph, Streams& io) {
    const Graph g = read_graph_document(read_json(graph, io));
    io.out << nlohmann::json(theta_star_classes(g).classes).dump() << "\n";
    return kOk;
}

// ---------------------------------------------------------------- quotient

struct QuotientArgs {
    std::string graph;
    std::size_t group = 0;
    std::string partition = "theta";
    std::string weights = "unit";
};

int quotient(const QuotientArgs& a, Streams& io) {
    const Graph g = read_graph_document(read_json(a.graph, io), parse_weight_mode(a.weights));
    const auto tc = theta_star_classes(g);
    const auto p = resolve_partition(a.partition, tc, io);
    if (a.group >= p.size())
        throw Error(ErrorCode::InvalidDocument,
                    "group " + std::to_string(a.group) + " out of range (partition has " + std::to_string(p.size()) +
                        " groups)");
    io.out << quotient_document(quotient_by_group(g, p.groups[a.group])).dump(2) << "\n";
    return kOk;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    std::string kind;
    int n = 1;
    int h = 1;
    std::string cells;
    std::string out;
    std::string partition_out;
    std::string weights;
};

int generate(const GenerateArgs& a, Streams& io) {
    std::optional<GeneratedSystem> system;
    Graph g;
    if (a.kind == "coronoid") {
        g = coronoid(a.n);
    } else {
        if (a.kind == "benzenoid") system = benzenoid(read_cells_document(read_json(a.cells, io)));
        else if (a.kind == "phenylene") system = phenylene_from_squeeze(read_cells_document(read_json(a.cells, io)));
        else if (a.kind == "phenylene-star") system = phenylene_star(a.n);
        else system = benzenoid(linear_chain_cells(a.h));
        g = system->graph;
    }
    nlohmann::json doc = graph_document(g);
    if (a.weights.empty()) {
        // Leave w_e to the consumer's --weights / index mode.
        for (auto& e : doc["edges"]) e.erase("we");
    } else {
        doc = graph_document(normally_weight(g, parse_weight_mode(a.weights)));
    }
    write_text(a.out, doc.dump(2) + "\n", io);

    if (system) {
        std::string sidecar = a.partition_out;
        if (sidecar.empty() && !a.out.empty() && a.out != "-") {
            std::filesystem::path p(a.out);
            sidecar = (p.parent_path() / (p.stem().string() + ".partition.json")).string();
        }
        if (!sidecar.empty()) {
            std::vector<std::vector<EdgeId>> groups;
            for (const auto& grp : system->directions.groups)
                if (!grp.empty()) groups.push_back(grp);
            write_text(sidecar, partition_document(groups).dump() + "\n", io);
        }
    }
    return kOk;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
    std::string kind;
    std::string index;
    int from = 1;
    int to = 1;
    std::string format = "csv";
    std::string method;
};

Rational family_member(const std::string& kind, int n, const IndexDescriptor& index, const std::string& method) {
    Graph g;
    std::optional<DirectionPartition> directions;
    if (kind == "phenylene-star") {
        auto ph = phenylene_star(n);
        g = std::move(ph.graph);
        directions = std::move(ph.directions);
    } else {
        g = coronoid(n);
    }
    const std::string m = method.empty() ? (directions ? "cut" : "direct") : method;
    if (m == "direct") return ti_direct(g, index);
    const auto tc = theta_star_classes(g);
    return ti_cut(g, directions ? directions->as_c_partition(tc) : finest_partition(tc), index);
}

int family(const FamilyArgs& a, Streams& io) {
    if (a.from < 1 || a.to < a.from) throw Error(ErrorCode::InvalidDocument, "need 1 <= --from <= --to");
    // Family members are normally weighted, so the catalog mode applies as is.
    const IndexDescriptor index = parse_index(a.index, WeightMode::Unit);
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream csv;
    csv << "n,p,q\n";
    for (int n = a.from; n <= a.to; ++n) {
        const Rational v = family_member(a.kind, n, index, a.method);
        csv << n << "," << v.get_num().get_str() << "," << v.get_den().get_str() << "\n";
        nlohmann::json row = value_json(v);
        row["n"] = n;
        rows.push_back(std::move(row));
    }
    if (a.format == "json") io.out << rows.dump() << "\n";
    else io.out << csv.str();
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string graph;
    std::string index;
    std::string partition = "theta";
    std::string weights;
};

int verify(const VerifyArgs& a, Streams& io) {
    const auto resolved = resolve_index(a.index, a.weights);
    const Graph g = read_graph_document(read_json(a.graph, io), resolved.missing_edge_weight);
    const auto tc = theta_star_classes(g);
    const auto partition = resolve_partition(a.partition, tc, io);

    const Rational direct = ti_direct(g, resolved.index);
    const Rational cut = ti_cut(g, partition, resolved.index);
    bool agree = direct == cut;
    io.out << "index: " << a.index << "\n"
           << "direct: " << format_rational(direct) << "\n"
           << "cut: " << format_rational(cut) << " (" << partition.size() << " groups)\n";
    if (is_tree(g)) {
        const Rational tree = ti_tree(g, resolved.index);
        agree = agree && tree == direct;
        io.out << "tree: " << format_rational(tree) << "\n";
    } else {
        io.out << "tree: n/a\n";
    }
    io.out << "result: " << (agree ? "agree" : "MISMATCH") << "\n";
    return agree ? kOk : kMismatch;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::string kind = "tree";
    std::string index = "Sz";
    int from = 3;
    int to = 5;
    std::uint64_t seed = 1;
};

int bench(const BenchArgs& a, Streams& io) {
    const IndexDescriptor index = parse_index(a.index, WeightMode::Unit);
    if (a.kind == "tree") {
        // --from/--to are decimal exponents of the tree size.
        io.out << "vertices,tree_ms,direct_ms,growth\n";
        double previous = 0;
        for (int k = a.from; k <= a.to; ++k) {
            const auto n = static_cast<std::size_t>(std::llround(std::pow(10.0, k)));
            const Graph t = random_tree(n, a.seed + static_cast<std::uint64_t>(k));
            const double tree_ms = best_time_ms([&] { (void)ti_tree(t, index); });
            std::string direct_ms = "-";
            if (n <= 2000) direct_ms = timing(best_time_ms([&] { (void)ti_direct(t, index); }, 1, 0));
            io.out << n << "," << timing(tree_ms) << "," << direct_ms << ","
                   << (previous > 0 ? timing(tree_ms / previous) : std::string("-")) << "\n";
            previous = tree_ms;
        }
        return kOk;
    }
    io.out << "n,vertices,edges,direct_ms,cut_ms\n";
    for (int n = a.from; n <= a.to; ++n) {
        Graph g;
        std::optional<EdgePartition> partition;
        if (a.kind == "phenylene-star") {
            auto ph = phenylene_star(n);
            g = ph.graph;
            partition = ph.directions.as_c_partition(theta_star_classes(g));
        } else {
            g = coronoid(n);
            partition = finest_partition(theta_star_classes(g));
        }
        const double direct_ms = best_time_ms([&] { (void)ti_direct(g, index); }, 1, 0);
        const double cut_ms = best_time_ms([&] { (void)ti_cut(g, *partition, index); }, 1, 0);
        io.out << n << "," << g.vertex_count() << "," << g.edge_count() << "," << timing(direct_ms) << ","
               << timing(cut_ms) << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Streams io{in, out, err};
    CLI::App app{"Szeged-like topological indices by direct, cut and tree methods", "szeged"};
    app.require_subcommand(1);

    const std::vector<std::string> modes{"unit", "degree-sum", "degree-product"};

    ComputeArgs ca;
    auto* c = app.add_subcommand("compute", "Evaluate one index on a graph document");
    c->add_option("graph", ca.graph, "Graph JSON file, or - for stdin")->required();
    c->add_option("--index", ca.index, "Catalog name or expr:<formula>")->required();
    c->add_option("--method", ca.method)->check(CLI::IsMember({"direct", "cut", "tree"}));
    c->add_option("--partition", ca.partition, "theta or a partition JSON file");
    c->add_option("--weights", ca.weights, "w_e for edges without one")->check(CLI::IsMember(modes));
    c->add_option("--format", ca.format)->check(CLI::IsMember({"human", "json"}));

    std::string classes_graph;
    auto* cl = app.add_subcommand("classes", "List the Θ*-classes as edge-index lists");
    cl->add_option("graph", classes_graph)->required();

    QuotientArgs qa;
    auto* q = app.add_subcommand("quotient", "Dump the weighted quotient by one partition group");
    q->add_option("graph", qa.graph)->required();
    q->add_option("--group", qa.group)->required();
    q->add_option("--partition", qa.partition);
    q->add_option("--weights", qa.weights)->check(CLI::IsMember(modes));

    GenerateArgs ga;
    auto* gen = app.add_subcommand("generate", "Generate a molecular graph document");
    gen->set_help_flag("--help", "Print this help message and exit");
    gen->add_option("kind", ga.kind)
        ->required()
        ->check(CLI::IsMember({"benzenoid", "phenylene", "phenylene-star", "coronoid", "linear-chain"}));
    gen->add_option("--n", ga.n)->check(CLI::PositiveNumber);
    gen->add_option("--h", ga.h)->check(CLI::PositiveNumber);
    gen->add_option("--cells", ga.cells, "JSON list of [q, r] cells");
    gen->add_option("--out", ga.out);
    gen->add_option("--partition-out", ga.partition_out);
    gen->add_option("--weights", ga.weights)->check(CLI::IsMember(modes));

    FamilyArgs fa;
    auto* fam = app.add_subcommand("family", "Tabulate an index over a graph family");
    fam->add_option("--kind", fa.kind)->required()->check(CLI::IsMember({"phenylene-star", "coronoid"}));
    fam->add_option("--index", fa.index)->required();
    fam->add_option("--from", fa.from);
    fam->add_option("--to", fa.to);
    fam->add_option("--format", fa.format)->check(CLI::IsMember({"csv", "json"}));
    fam->add_option("--method", fa.method)->check(CLI::IsMember({"direct", "cut"}));

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Check that all applicable methods agree");
    ver->add_option("graph", va.graph)->required();
    ver->add_option("--index", va.index)->required();
    ver->add_option("--partition", va.partition);
    ver->add_option("--weights", va.weights)->check(CLI::IsMember(modes));

    BenchArgs ba;
    auto* be = app.add_subcommand("bench", "Timing table for the evaluation methods");
    be->add_option("--kind", ba.kind)->check(CLI::IsMember({"tree", "phenylene-star", "coronoid"}));
    be->add_option("--index", ba.index);
    be->add_option("--from", ba.from);
    be->add_option("--to", ba.to);
    be->add_option("--seed", ba.seed);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*c) return compute(ca, io);
        if (*cl) return classes(classes_graph, io);
        if (*q) return quotient(qa, io);
        if (*gen) {
            if ((ga.kind == "benzenoid" || ga.kind == "phenylene") && ga.cells.empty())
                throw Error(ErrorCode::InvalidDocument, ga.kind + " needs --cells");
            return generate(ga, io);
        }
        if (*fam) return family(fa, io);
        if (*ver) return verify(va, io);
        if (*be) return bench(ba, io);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_structural(e.code()) ? kStructural : kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}

}  // namespace szeged::cli
