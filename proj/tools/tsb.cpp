// tsb — command-line front end for the transmission/balance library.
//
// Subcommands are thin wrappers over the library operations; all heavy
// lifting (exact arithmetic, subset DP, root isolation) lives in the
// headers under include/tsb. Reports are JSON (stable key order, exact
// rationals as "num/den" strings) or a flattened key/value table.
//
// Exit codes: 0 success / check true, 1 check false, 2 parse/usage error,
// 3 guard exceeded, 4 disconnected input.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tsb/builtins.hpp"
#include "tsb/errors.hpp"
#include "tsb/exact.hpp"
#include "tsb/graph.hpp"
#include "tsb/graph_io.hpp"
#include "tsb/polynomial.hpp"
#include "tsb/roots.hpp"
#include "tsb/symmetry.hpp"
#include "tsb/ts_balance.hpp"
#include "tsb/version.hpp"
#include "tsb/walk_dp.hpp"
#include "tsb/wreath.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr unsigned kDecimalDigits = 12;

struct GlobalOpts {
    std::string format = "auto"; // auto | json | table
    unsigned threads = 0;        // 0 = available parallelism
    int max_n = tsb::kDefaultWalkGuard;
    std::int64_t max_product = tsb::kDefaultWreathGuard;
};

// ---------------------------------------------------------------------------
// Environment defaults (overridden by flags).
// ---------------------------------------------------------------------------

std::int64_t env_int(const char* name, std::int64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    std::string s(raw);
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw tsb::ParseError(std::string(name) + " must be an integer, got '" + s + "'");
    }
    if (pos != s.size())
        throw tsb::ParseError(std::string(name) + " must be an integer, got '" + s + "'");
    if (value < 1)
        throw tsb::ParseError(std::string(name) + " must be at least 1, got '" + s + "'");
    return value;
}

// ---------------------------------------------------------------------------
// Graph loading: file path, "-" for stdin, or builtin:<name>[:<params>].
// Format is sniffed: graph6 when the name ends in .g6/.graph6, the content
// carries the ">>graph6<<" prefix, or the first payload line has no
// edge-list shape (no "n=", no whitespace-separated pair, no comments).
// ---------------------------------------------------------------------------

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool looks_like_edge_list(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') return true;
        if (t.rfind("n=", 0) == 0) return true;
        return t.find(' ') != std::string::npos || t.find('\t') != std::string::npos;
    }
    return true; // nothing but blanks: treat as an (empty) edge list
}

tsb::Graph parse_graph_payload(const std::string& content, const std::string& display,
                               bool force_graph6) {
    std::string body = content;
    bool graph6 = force_graph6;
    std::string trimmed = trim(body);
    if (trimmed.rfind(">>graph6<<", 0) == 0) graph6 = true;
    if (!graph6 && !looks_like_edge_list(body)) graph6 = true;

    if (!graph6) return tsb::parse_edge_list(body);

    std::istringstream in(body);
    std::string line;
    std::vector<std::string> records;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (!t.empty()) records.push_back(t);
    }
    if (records.empty()) throw tsb::ParseError(display + ": no graph6 record found");
    if (records.size() > 1)
        throw tsb::ParseError(display + ": holds " + std::to_string(records.size()) +
                              " graph6 records; this subcommand takes a single graph "
                              "(use 'search' for streams)");
    return tsb::parse_graph6(records.front());
}

struct GraphSource {
    tsb::Graph graph;
    std::string display;
};

GraphSource load_graph(const std::string& source) {
    GraphSource out;
    out.display = source;
    if (source.rfind("builtin:", 0) == 0) {
        out.graph = tsb::builtin_from_spec(source.substr(8));
        return out;
    }
    std::string content;
    if (source == "-") {
        out.display = "<stdin>";
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        content = buf.str();
    } else {
        std::ifstream f(source, std::ios::binary);
        if (!f) throw tsb::ParseError("cannot open graph file '" + source + "'");
        std::ostringstream buf;
        buf << f.rdbuf();
        content = buf.str();
    }
    bool force_graph6 = has_suffix(source, ".g6") || has_suffix(source, ".graph6");
    out.graph = parse_graph_payload(content, out.display, force_graph6);
    return out;
}

// ---------------------------------------------------------------------------
// Report assembly.
// ---------------------------------------------------------------------------

bool use_json(const GlobalOpts& g) {
    if (g.format == "json") return true;
    if (g.format == "table") return false;
    return isatty(STDOUT_FILENO) == 0;
}

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
        return;
    }
    if (j.is_array()) {
        bool scalars = true;
        for (const auto& e : j)
            if (e.is_object() || e.is_array()) scalars = false;
        if (scalars) {
            rows.emplace_back(prefix, j.dump());
            return;
        }
        std::size_t i = 0;
        for (const auto& e : j) flatten(e, prefix + "[" + std::to_string(i++) + "]", rows);
        return;
    }
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

void emit_report(const ordered_json& report, const GlobalOpts& g) {
    if (use_json(g)) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::size_t width = 0;
    for (const auto& [k, _] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows)
        std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

ordered_json meta_json(const GlobalOpts& g) {
    unsigned threads = g.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : g.threads;
    ordered_json meta;
    meta["tool"] = "tsb";
    meta["version"] = tsb::kVersion;
    meta["threads"] = threads;
    meta["guards"] = ordered_json{{"max_n", g.max_n},
                                  {"max_product", g.max_product},
                                  {"orbit_guard", tsb::kDefaultOrbitGuard}};
    meta["decimal_digits"] = kDecimalDigits;
    return meta;
}

ordered_json rational_json(const tsb::Rational& q) {
    return ordered_json{{"exact", tsb::to_fraction_string(q)},
                        {"decimal", tsb::to_decimal_string(q, kDecimalDigits)}};
}

ordered_json entries_json(const std::vector<std::int64_t>& entries) {
    return ordered_json(entries);
}

ordered_json poly_json(const tsb::IntPolynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
    return ordered_json{{"degree", p.degree()},
                        {"coefficients_ascending", coeffs},
                        {"display", p.to_string()}};
}

ordered_json graph_brief_json(const GraphSource& src) {
    return ordered_json{{"source", src.display},
                        {"order", src.graph.order()},
                        {"size", src.graph.size()}};
}

std::string root_display(const tsb::RootEntry& r) {
    if (r.exact) return tsb::to_fraction_string(r.value);
    return "[" + tsb::to_decimal_string(r.lo, 5) + "," + tsb::to_decimal_string(r.hi, 5) + "]";
}

ordered_json root_json(const tsb::RootEntry& r) {
    if (r.exact)
        return ordered_json{{"kind", "exact"},
                            {"value", tsb::to_fraction_string(r.value)},
                            {"decimal", tsb::to_decimal_string(r.value, kDecimalDigits)}};
    return ordered_json{{"kind", "interval"},
                        {"lo", tsb::to_fraction_string(r.lo)},
                        {"hi", tsb::to_fraction_string(r.hi)},
                        {"lo_decimal", tsb::to_decimal_string(r.lo, kDecimalDigits)},
                        {"hi_decimal", tsb::to_decimal_string(r.hi, kDecimalDigits)},
                        {"width", tsb::to_fraction_string(r.hi - r.lo)}};
}

ordered_json balancing_json(const tsb::BalancingProbabilities& b) {
    ordered_json out;
    out["all_of_interval"] = b.all_of_interval;
    if (b.all_of_interval) {
        out["display"] = "[0,1] (all probabilities)";
        return out;
    }
    ordered_json roots = ordered_json::array();
    std::string display = "{";
    for (std::size_t i = 0; i < b.roots.roots.size(); ++i) {
        roots.push_back(root_json(b.roots.roots[i]));
        if (i > 0) display += ", ";
        display += root_display(b.roots.roots[i]);
    }
    display += "}";
    out["roots"] = roots;
    out["display"] = display;
    out["certificate"] = poly_json(b.certificate);
    out["certificate_square_free"] = poly_json(b.roots.square_free);
    return out;
}

// Probability arguments: exact rationals only ("3/10", "0", "1").
tsb::Rational parse_probability(const std::string& text) {
    tsb::Rational p = tsb::parse_rational(text);
    if (p < 0 || p > 1)
        throw tsb::ValidationError("probability " + text + " is outside [0, 1]");
    return p;
}

std::optional<bool> try_vertex_transitive(const tsb::Graph& g, std::string& note) {
    try {
        return tsb::is_vertex_transitive(g, tsb::kDefaultOrbitGuard);
    } catch (const tsb::GuardError& e) {
        note = e.what();
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Subcommands.
// ---------------------------------------------------------------------------

int run_info(const std::string& source, const GlobalOpts& opts) {
    GraphSource src = load_graph(source);
    const tsb::Graph& g = src.graph;
    g.require_connected("info");

    tsb::GraphClass cls = tsb::classify(g);
    auto trans = tsb::transmissions(g);
    auto medians = tsb::median_vertices(g);
    bool self_median = static_cast<int>(medians.size()) == g.order();
    bool db = tsb::is_distance_balanced(g);
    auto gamma = tsb::nicely_distance_balanced_value(g);

    ordered_json report;
    report["graph"] = graph_brief_json(src);
    report["classify"] = ordered_json{{"connected", cls.connected},
                                      {"bipartite", cls.bipartite},
                                      {"regular", cls.regular},
                                      {"degree_sequence", cls.degree_sequence}};
    if (cls.regular) report["classify"]["regular_degree"] = cls.regular_degree;

    std::int64_t tmin = *std::min_element(trans.begin(), trans.end());
    std::int64_t tmax = *std::max_element(trans.begin(), trans.end());
    report["distance"] = ordered_json{
        {"diameter", tsb::diameter(g)},
        {"transmission_min", tmin},
        {"transmission_max", tmax},
        {"total_distance_min", rational_json(tsb::Rational(tmin, g.order()))},
        {"total_distance_max", rational_json(tsb::Rational(tmax, g.order()))},
        {"median_vertices", medians},
        {"self_median", self_median}};

    report["balance"] = ordered_json{{"distance_balanced", db},
                                     {"nicely_distance_balanced", gamma.has_value()}};
    if (gamma) report["balance"]["gamma"] = *gamma;

    std::string note;
    auto vt = try_vertex_transitive(g, note);
    if (vt)
        report["symmetry"] = ordered_json{{"vertex_transitive", *vt}};
    else
        report["symmetry"] = ordered_json{{"vertex_transitive", nullptr}, {"note", note}};

    report["meta"] = meta_json(opts);
    emit_report(report, opts);
    return 0;
}

int run_rho(const std::string& source, const std::string& set_csv, int from, int to,
            const GlobalOpts& opts) {
    GraphSource src = load_graph(source);
    tsb::VisitSet set;
    std::string token;
    std::istringstream in(set_csv);
    while (std::getline(in, token, ',')) {
        token = trim(token);
        if (token.empty()) continue;
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw tsb::ParseError("--set expects a comma-separated vertex list, got '" + token + "'");
        }
        if (pos != token.size())
            throw tsb::ParseError("--set expects a comma-separated vertex list, got '" + token + "'");
        set.push_back(value);
    }

    std::int64_t value = tsb::rho(src.graph, set, from, to, opts.max_n);

    ordered_json report;
    report["graph"] = graph_brief_json(src);
    report["query"] = ordered_json{{"set", set}, {"from", from}, {"to", to}};
    report["rho"] = value;
    report["meta"] = meta_json(opts);
    emit_report(report, opts);
    return 0;
}

int run_vector(const std::string& source, std::optional<int> vertex, const GlobalOpts& opts) {
    GraphSource src = load_graph(source);
    ordered_json report;
    report["graph"] = graph_brief_json(src);

    ordered_json vectors = ordered_json::array();
    if (vertex) {
        auto vec = tsb::total_distance_vector(src.graph, *vertex, opts.max_n);
        vectors.push_back(ordered_json{{"vertex", vec.vertex}, {"entries", entries_json(vec.entries)}});
    } else {
        auto all = tsb::all_total_distance_vectors(src.graph, opts.max_n, opts.threads);
        bool all_equal = true;
        for (const auto& vec : all) {
            vectors.push_back(
                ordered_json{{"vertex", vec.vertex}, {"entries", entries_json(vec.entries)}});
            if (vec.entries != all.front().entries) all_equal = false;
        }
        report["all_equal"] = all_equal;
    }
    report["vectors"] = vectors;
    report["meta"] = meta_json(opts);
    emit_report(report, opts);
    return 0;
}

int run_balance(const std::string& source, const std::string& p_text, bool ts, bool roots,
                const GlobalOpts& opts) {
    GraphSource src = load_graph(source);
    const tsb::Graph& g = src.graph;

    ordered_json report;
    report["graph"] = graph_brief_json(src);
    int rc = 0;

    if (roots) {
        tsb::BalanceReport full = tsb::full_balance_report(g, std::nullopt, true, opts.max_n,
                                                           opts.threads);
        report["distance_balanced"] = full.distance_balanced;
        report["ts_distance_balanced"] = full.ts_distance_balanced;
        report["balancing_probabilities"] = balancing_json(*full.balancing);
        ordered_json vectors = ordered_json::array();
        for (const auto& vec : full.vectors)
            vectors.push_back(
                ordered_json{{"vertex", vec.vertex}, {"entries", entries_json(vec.entries)}});
        report["vectors"] = vectors;
        ordered_json polys = ordered_json::array();
        for (std::size_t i = 0; i < full.polynomials.size(); ++i)
            polys.push_back(ordered_json{{"vertex", static_cast<int>(i)},
                                         {"polynomial", poly_json(full.polynomials[i])}});
        report["balance_polynomials"] = polys;
    } else if (!p_text.empty()) {
        tsb::Rational p = parse_probability(p_text);
        bool balanced = tsb::is_pts_distance_balanced(g, p, opts.max_n, opts.threads);
        report["p"] = tsb::to_fraction_string(p);
        report["pts_distance_balanced"] = balanced;
        ordered_json values = ordered_json::array();
        auto expected = tsb::all_expected_distances(g, p, opts.max_n, opts.threads);
        for (std::size_t i = 0; i < expected.size(); ++i)
            values.push_back(ordered_json{{"vertex", static_cast<int>(i)},
                                          {"expected_distance", rational_json(expected[i])}});
        report["expected_distances"] = values;
        rc = balanced ? 0 : 1;
    } else if (ts) {
        bool balanced = tsb::is_ts_distance_balanced(g, opts.max_n, opts.threads);
        report["ts_distance_balanced"] = balanced;
        rc = balanced ? 0 : 1;
    } else {
        bool db = tsb::is_distance_balanced(g);
        auto gamma = tsb::nicely_distance_balanced_value(g);
        report["distance_balanced"] = db;
        report["nicely_distance_balanced"] = gamma.has_value();
        if (gamma) report["gamma"] = *gamma;
        rc = db ? 0 : 1;
    }

    report["meta"] = meta_json(opts);
    emit_report(report, opts);
    return rc;
}

int run_median(const std::string& source, const std::string& p_text, const GlobalOpts& opts) {
    GraphSource src = load_graph(source);
    const tsb::Graph& g = src.graph;

    ordered_json report;
    report["graph"] = graph_brief_json(src);

    if (p_text.empty()) {
        g.require_connected("median");
        auto medians = tsb::median_vertices(g);
        report["median_vertices"] = medians;
        report["self_median"] = static_cast<int>(medians.size()) == g.order();
        ordered_json values = ordered_json::array();
        for (tsb::Vertex v = 0; v < g.order(); ++v)
            values.push_back(ordered_json{{"vertex", v},
                                          {"total_distance", rational_json(tsb::total_distance(g, v))}});
        report["total_distances"] = values;
    } else {
        tsb::Rational p = parse_probability(p_text);
        auto medians = tsb::pts_median_vertices(g, p, opts.max_n, opts.threads);
        report["p"] = tsb::to_fraction_string(p);
        report["median_vertices"] = medians;
        report["self_median"] = static_cast<int>(medians.size()) == g.order();
        ordered_json values = ordered_json::array();
        auto expected = tsb::all_expected_distances(g, p, opts.max_n, opts.threads);
        for (std::size_t i = 0; i < expected.size(); ++i)
            values.push_back(ordered_json{{"vertex", static_cast<int>(i)},
                                          {"expected_distance", rational_json(expected[i])}});
        report["expected_distances"] = values;
    }

    report["meta"] = meta_json(opts);
    emit_report(report, opts);
    return 0;
}

int run_hamilton(const std::string& source, bool gate_connected, const GlobalOpts& opts) {
    GraphSource src = load_graph(source);
    bool hamiltonian = tsb::is_hamiltonian(src.graph, opts.max_n);
    bool connected_pairs = tsb::is_hamilton_connected(src.graph, opts.max_n);

    ordered_json report;
    report["graph"] = graph_brief_json(src);
    report["hamiltonian"] = hamiltonian;
    report["hamilton_connected"] = connected_pairs;
    report["meta"] = meta_json(opts);
    emit_report(report, opts);
    return (gate_connected ? connected_pairs : hamiltonian) ? 0 : 1;
}

int run_orbits(const std::string& source, const GlobalOpts& opts) {
    GraphSource src = load_graph(source);
    auto partition = tsb::automorphism_orbits(src.graph, tsb::kDefaultOrbitGuard);

    ordered_json report;
    report["graph"] = graph_brief_json(src);
    report["orbit_count"] = partition.classes.size();
    report["orbits"] = partition.classes;
    report["vertex_transitive"] = partition.single_orbit();
    report["meta"] = meta_json(opts);
    emit_report(report, opts);
    return 0;
}

int run_wreath(const std::string& g_source, const std::string& h_source, const std::string& out_path,
               bool check, const GlobalOpts& opts) {
    GraphSource gs = load_graph(g_source);
    GraphSource hs = load_graph(h_source);
    tsb::WreathProduct product = tsb::wreath_product(gs.graph, hs.graph, opts.max_product);

    ordered_json report;
    report["g"] = graph_brief_json(gs);
    report["h"] = graph_brief_json(hs);
    report["product"] = ordered_json{{"order", product.codec.order()},
                                     {"size", product.graph.size()},
                                     {"positions", product.codec.position_order()},
                                     {"colors", product.codec.color_order()},
                                     {"encoding", product.codec.description()}};

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw tsb::DataFileError("cannot write '" + out_path + "'");
        if (has_suffix(out_path, ".g6") || has_suffix(out_path, ".graph6")) {
            out << tsb::emit_graph6(product.graph) << "\n";
        } else {
            out << "# wreath product; " << product.codec.position_order() << " positions, "
                << product.codec.color_order() << " colors\n";
            out << "# " << product.codec.description() << "\n";
            out << tsb::emit_edge_list(product.graph);
        }
        if (!out.good()) throw tsb::DataFileError("cannot write '" + out_path + "'");
        report["out"] = out_path;
    }

    int rc = 0;
    if (check) {
        auto result = tsb::check_wreath_balance(gs.graph, hs.graph, product, opts.max_n, opts.threads);
        report["check"] = ordered_json{{"p", tsb::to_fraction_string(result.p)},
                                       {"factor_pts_db", result.factor_pts_db},
                                       {"factor_h_db", result.factor_h_db},
                                       {"product_db", result.product_db},
                                       {"theorem_consistent", result.theorem_consistent}};
        rc = result.theorem_consistent ? 0 : 1;
    }

    report["meta"] = meta_json(opts);
    emit_report(report, opts);
    return rc;
}

int run_search(const std::string& input_path, const GlobalOpts& opts) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!input_path.empty() && input_path != "-") {
        file.open(input_path, std::ios::binary);
        if (!file) throw tsb::ParseError("cannot open graph stream '" + input_path + "'");
        in = &file;
    }

    auto on_hit = [](const tsb::SearchHit& hit) {
        ordered_json record;
        record["graph6"] = hit.graph6;
        record["u"] = hit.u;
        record["v"] = hit.v;
        record["orbit_u"] = hit.orbit_u;
        record["orbit_v"] = hit.orbit_v;
        record["entries"] = entries_json(hit.vector_entries);
        std::cout << record.dump() << "\n" << std::flush;
    };
    auto summary = tsb::search_counterexamples(*in, on_hit, opts.max_n, tsb::kDefaultOrbitGuard,
                                               opts.threads);

    ordered_json record;
    record["processed"] = summary.processed;
    record["skipped"] = summary.skipped;
    record["hits"] = summary.hits;
    std::cout << record.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"transmission/balance toolkit for finite connected graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    int exit_code = 0;

    try {
        opts.max_n = static_cast<int>(env_int("TSB_MAX_N", tsb::kDefaultWalkGuard));
        opts.max_product = env_int("TSB_MAX_PRODUCT", tsb::kDefaultWreathGuard);

        app.add_option("--format", opts.format, "Report format (default: table on a terminal, json otherwise)")
            ->check(CLI::IsMember({"auto", "json", "table"}));
        app.add_option("--threads", opts.threads, "Worker threads (0 = available parallelism)");
        app.add_option("--max-n", opts.max_n, "Order guard for exponential subset work")
            ->check(CLI::PositiveNumber);
        app.add_option("--max-product", opts.max_product, "Order guard for wreath products")
            ->check(CLI::PositiveNumber);

        std::string source, source_h;
        std::string set_csv, p_text, out_path, input_path;
        int from = 0, to = 0;
        int vertex = -1;
        bool all = false, ts = false, roots = false, gate_connected = false, check = false;

        auto* info = app.add_subcommand("info", "Classification and balance summary");
        info->add_option("graph", source, "Graph source: path, '-', or builtin:<name>[:<params>]")
            ->required();
        info->callback([&] { exit_code = run_info(source, opts); });

        auto* rho = app.add_subcommand("rho", "Shortest walk visiting a required set");
        rho->add_option("graph", source, "Graph source")->required();
        rho->add_option("--set", set_csv, "Required vertices, comma separated (default: empty)");
        rho->add_option("--from", from, "Start vertex")->required();
        rho->add_option("--to", to, "End vertex")->required();
        rho->callback([&] { exit_code = run_rho(source, set_csv, from, to, opts); });

        auto* vec = app.add_subcommand("vector", "Total distance vectors");
        vec->add_option("graph", source, "Graph source")->required();
        auto* vopt = vec->add_option("--vertex", vertex, "Single source vertex");
        vec->add_flag("--all", all, "All vertices (default)")->excludes(vopt);
        vec->callback([&] {
            exit_code = run_vector(source, vec->count("--vertex") ? std::optional<int>(vertex)
                                                                  : std::nullopt,
                                   opts);
        });

        auto* balance = app.add_subcommand("balance", "Balance checks and balancing probabilities");
        balance->add_option("graph", source, "Graph source")->required();
        auto* popt = balance->add_option("--p", p_text, "Probability as NUM/DEN, 0, or 1");
        auto* tsopt = balance->add_flag("--ts", ts, "Check balance at every probability");
        auto* rootsopt = balance->add_flag("--roots", roots, "Report the exact balancing probability set");
        popt->excludes(tsopt)->excludes(rootsopt);
        tsopt->excludes(rootsopt);
        balance->callback([&] { exit_code = run_balance(source, p_text, ts, roots, opts); });

        auto* median = app.add_subcommand("median", "Median vertices (classical or at a probability)");
        median->add_option("graph", source, "Graph source")->required();
        median->add_option("--p", p_text, "Probability as NUM/DEN, 0, or 1");
        median->callback([&] { exit_code = run_median(source, p_text, opts); });

        auto* hamilton = app.add_subcommand("hamilton", "Hamiltonicity via full-visit walks");
        hamilton->add_option("graph", source, "Graph source")->required();
        hamilton->add_flag("--connected", gate_connected,
                           "Exit 0 only when Hamilton-connected (default gate: Hamiltonian cycle)");
        hamilton->callback([&] { exit_code = run_hamilton(source, gate_connected, opts); });

        auto* orbits = app.add_subcommand("orbits", "Automorphism orbits and vertex transitivity");
        orbits->add_option("graph", source, "Graph source")->required();
        orbits->callback([&] { exit_code = run_orbits(source, opts); });

        auto* wreath = app.add_subcommand("wreath", "Wreath product construction and balance check");
        wreath->add_option("G", source, "Active factor (colors move along its edges)")->required();
        wreath->add_option("H", source_h, "Color factor")->required();
        wreath->add_option("--out", out_path, "Write the product (.g6/.graph6 for graph6, else edge list)");
        wreath->add_flag("--check", check, "Verify product balance against the factor criterion");
        wreath->callback([&] { exit_code = run_wreath(source, source_h, out_path, check, opts); });

        auto* search = app.add_subcommand("search", "Scan a graph6 stream for cross-orbit vector ties");
        search->add_option("--input", input_path, "graph6 stream, one record per line (default: stdin)");
        search->callback([&] { exit_code = run_search(input_path, opts); });

        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const tsb::GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tsb::DisconnectedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const tsb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tsb::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tsb::DataFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return exit_code;
}
