// Command-line front end: every structural verification as a subcommand,
// with machine-readable output for CI.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gcm/checks.hpp"
#include "gcm/cliques.hpp"
#include "gcm/morphisms.hpp"
#include "gcm/spectral.hpp"
#include "gcm/trace_space.hpp"

using json = nlohmann::json;
using namespace gcm;

namespace {

struct Options {
    std::string group;
    std::string group2;
    int m = 2;
    std::string format = "text";
    std::string fixture;
    std::string out_path;
    std::string target;
    std::uint64_t seed = 1;
    int cap_group = 24;
    std::size_t cap_materialize = 4096;
    std::size_t cap_exact = 2048;
    std::size_t cap_numeric = 50000;
    std::size_t cap_ir = 2000;
};

GraphCaps graph_caps(const Options& opt) {
    return GraphCaps{.materialize = opt.cap_materialize, .hard = 1000000};
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw ParseError("cannot open output file: " + opt.out_path);
        out << text;
    }
}

std::string dot_export(const GcmGraph& graph) {
    std::ostringstream out;
    out << "graph g {\n";
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
        out << "  " << v << " [label=\"" << graph.vertex_name(v) << "\"];\n";
    for (Vertex u = 0; u < graph.vertex_count(); ++u)
        for (Vertex s : graph.gen_set()) {
            Vertex v = graph.vertex_mul(s, u);
            if (u < v) out << "  " << u << " -- " << v << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string adjacency_csv(const GcmGraph& graph) {
    std::ostringstream out;
    for (Vertex u = 0; u < graph.vertex_count(); ++u) {
        for (Vertex v = 0; v < graph.vertex_count(); ++v) {
            if (v) out << ",";
            out << (graph.adjacent(u, v) ? 1 : 0);
        }
        out << "\n";
    }
    return out.str();
}

int cmd_build(const Options& opt) {
    GcmGraph graph(build_group(opt.group, opt.cap_group), opt.m, graph_caps(opt));
    if (opt.format == "dot") {
        emit(opt, dot_export(graph));
    } else if (opt.format == "csv") {
        emit(opt, adjacency_csv(graph));
    } else {
        json j{{"group", opt.group},
               {"n", graph.group().order()},
               {"m", graph.m()},
               {"vertices", graph.vertex_count()},
               {"degree", graph.degree()},
               {"edges", graph.edge_count()}};
        if (opt.format == "json")
            emit(opt, j.dump(2) + "\n");
        else
            emit(opt, "graph on " + std::to_string(graph.vertex_count()) +
                          " vertices, " + std::to_string(graph.degree()) +
                          "-regular, " + std::to_string(graph.edge_count()) +
                          " edges\n");
    }
    return 0;
}

int cmd_spectrum(const Options& opt) {
    GroupTable G = build_group(opt.group, opt.cap_group);
    ExactSpectrum s = abelian_spectrum(G, opt.m);
    if (opt.format == "csv") {
        std::ostringstream out;
        for (auto [l, mult] : s.eigs) out << l << "," << mult << "\n";
        emit(opt, out.str());
    } else if (opt.format == "json") {
        json rows = json::array();
        for (auto [l, mult] : s.eigs)
            rows.push_back({{"eigenvalue", l}, {"multiplicity", mult}});
        emit(opt, rows.dump(2) + "\n");
    } else {
        std::ostringstream out;
        for (auto [l, mult] : s.eigs) out << l << " (x" << mult << ")\n";
        emit(opt, out.str());
    }
    return 0;
}

int cmd_regularity(const Options& opt) {
    GcmGraph graph(build_group(opt.group, opt.cap_group), opt.m, graph_caps(opt));
    RegularityReport rep = check_regularity(graph, opt.cap_materialize);
    json j{{"n", rep.n},
           {"k", rep.k},
           {"a", rep.a},
           {"k_regular", rep.k_regular},
           {"edge_regular", rep.edge_regular}};
    if (opt.m == 2) {
        j["c"] = rep.c;
        j["strongly_regular"] = rep.strongly_regular;
    }
    const long long n = graph.group().order();
    bool pass = rep.edge_regular && rep.a == n + 2 * opt.m - 4;
    if (opt.m == 2)
        pass = pass && rep.strongly_regular &&
               (rep.nonadjacent_pairs == 0 || rep.c == 6);
    j["pass"] = pass;
    emit(opt, opt.format == "json"
                  ? j.dump(2) + "\n"
                  : std::string(pass ? "pass " : "FAIL ") + j.dump() + "\n");
    return pass ? 0 : 1;
}

int cmd_cliques(const Options& opt) {
    GcmGraph graph(build_group(opt.group, opt.cap_group), opt.m, graph_caps(opt));
    auto cliques = max_cliques_through_e(graph, opt.cap_materialize);
    json out = json::array();
    for (const auto& rec : cliques) {
        json names = json::array();
        for (Vertex v : rec.vertices) names.push_back(graph.vertex_name(v));
        std::string type;
        switch (rec.type) {
            case CliqueType::Interval:
                type = "interval";
                break;
            case CliqueType::Dispersed:
                type = "dispersed";
                break;
            case CliqueType::DispersedOther:
                type = "dispersed-other";
                break;
            default:
                type = "invalid";
        }
        NeighborGraphReport rep = neighbor_graph(graph, rec);
        json hist = json::array();
        for (auto [deg, cnt] : rep.degree_histogram)
            hist.push_back({{"degree", deg}, {"count", cnt}});
        out.push_back({{"size", rec.vertices.size()},
                       {"type", type},
                       {"vertices", names},
                       {"neighbor_degree_histogram", hist}});
    }
    if (opt.format == "json") {
        emit(opt, out.dump(2) + "\n");
    } else {
        std::ostringstream text;
        text << "clique number " << clique_number(graph, opt.cap_materialize)
             << ", " << cliques.size() << " maximum cliques through e\n";
        emit(opt, text.str());
    }
    return 0;
}

int cmd_trace_rank(const Options& opt) {
    GroupTable G = build_group(opt.group, opt.cap_group);
    TraceSystem sys(G, opt.m, opt.cap_exact);
    const std::size_t rank = rational_rank(sys);
    const bool full = rank == sys.col_count();
    json j{{"rows", sys.row_count()},
           {"cols", sys.col_count()},
           {"rank", rank},
           {"full", full}};
    int exit_code = 0;
    if (G.abelian()) {
        // Independent route through the exact spectrum.
        ExactSpectrum s = abelian_spectrum(G, opt.m);
        const long long bound = static_cast<long long>(opt.m) * (opt.m + 1) / 2;
        const bool spectral_full = s.min_eigenvalue() > -bound;
        j["spectral_route_full"] = spectral_full;
        j["routes_agree"] = spectral_full == full;
        if (spectral_full != full) exit_code = 1;
    }
    emit(opt, opt.format == "json"
                  ? j.dump(2) + "\n"
                  : "rank " + std::to_string(rank) + "/" +
                        std::to_string(sys.col_count()) +
                        (full ? " (full)" : " (deficient)") + "\n");
    return exit_code;
}

int cmd_express(const Options& opt) {
    GroupTable G = build_group(opt.group, opt.cap_group);
    TraceSystem sys(G, opt.m, opt.cap_exact);
    // Target tuple as comma-separated element names.
    std::vector<int> tuple;
    std::stringstream ss(opt.target);
    std::string name;
    while (std::getline(ss, name, ',')) {
        int idx = G.index_of(name);
        if (idx < 0) throw ParseError("unknown element name: " + name);
        tuple.push_back(idx);
    }
    if (static_cast<int>(tuple.size()) != opt.m)
        throw ParseError("target tuple must have m entries");
    const std::uint32_t target = sys.encode(tuple);
    auto y = express_monomial(sys, target);
    if (!y) {
        emit(opt, "{\"feasible\": false}\n");
        return 0;
    }
    if (!check_certificate(sys, *y, target)) return 1;
    // Clear denominators for display.
    mpz_class lcm = 1;
    for (const auto& q : *y) {
        mpz_class den = q.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    json terms = json::array();
    for (std::size_t r = 0; r < y->size(); ++r) {
        if ((*y)[r] == 0) continue;
        const TraceRow& row = sys.rows()[r];
        json outside = json::array(), inside = json::array();
        for (int g : row.outside) outside.push_back(G.name(g));
        for (int g : row.inside) inside.push_back(G.name(g));
        mpq_class scaled = (*y)[r] * lcm;
        terms.push_back({{"coeff", scaled.get_num().get_str()},
                         {"window", {row.k, row.l}},
                         {"outside", outside},
                         {"inside", inside}});
    }
    json j{{"feasible", true},
           {"target_coeff", lcm.get_str()},
           {"target_tuple", opt.target},
           {"verified", true},
           {"terms", terms}};
    emit(opt, j.dump(2) + "\n");
    return 0;
}

int cmd_verify_identity(const Options& opt) {
    GroupTable G = build_group(opt.group, opt.cap_group);
    TraceIdentity id = load_identity_fixture(opt.fixture, G, opt.m);
    bool ok = verify_identity(G, opt.m, id);
    emit(opt, std::string(ok ? "verified" : "FAILED") + " (" +
                  std::to_string(id.terms.size()) + " terms)\n");
    return ok ? 0 : 1;
}

int cmd_aut(const Options& opt, bool emit_generators) {
    GroupTable G = build_group(opt.group, opt.cap_group);
    GcmGraph graph(G, opt.m, graph_caps(opt));
    PredictedAutOrder predicted = predicted_aut_order(G, opt.m);
    json j;
    j["exceptional"] = predicted.exceptional;
    if (predicted.order) j["predicted"] = predicted.order->get_str();
    mpz_class generated = 0, canonical = 0;
    bool have_generated = false, have_canonical = false;
    if (!predicted.exceptional) {
        std::vector<VertexPermutation> gens = assemble_full_aut(graph);
        generated = group_order(gens, graph.vertex_count());
        have_generated = true;
        j["generated"] = generated.get_str();
        if (emit_generators) {
            json arr = json::array();
            for (const auto& p : gens)
                arr.push_back({{"label", p.label()}, {"images", p.images()}});
            j["generators"] = arr;
        }
    }
    if (graph.vertex_count() <= opt.cap_ir) {
        canonical = graph_canonical_aut_order(graph, opt.cap_ir);
        have_canonical = true;
        j["canonical"] = canonical.get_str();
    }
    bool match = true;
    if (predicted.order && have_generated)
        match &= generated == *predicted.order;
    if (predicted.order && have_canonical)
        match &= canonical == *predicted.order;
    j["match"] = match;
    emit(opt, j.dump(2) + "\n");
    return match ? 0 : 1;
}

int cmd_iso(const Options& opt) {
    GroupTable G = build_group(opt.group, opt.cap_group);
    GroupTable H = build_group(opt.group2, opt.cap_group);
    bool group_iso = groups_isomorphic(G, H).has_value();
    GcmGraph a(G, opt.m, graph_caps(opt)), b(H, opt.m, graph_caps(opt));
    bool graph_iso = graphs_isomorphic(a, b, opt.cap_ir);
    json j{{"groups_isomorphic", group_iso},
           {"graphs_isomorphic", graph_iso},
           {"agree", group_iso == graph_iso}};
    emit(opt, j.dump(2) + "\n");
    return group_iso == graph_iso ? 0 : 1;
}

int cmd_probe(const Options& opt) {
    GroupTable G = build_group(opt.group, opt.cap_group);
    Q26Probe probe =
        question26_probe(G, opt.m, opt.seed, graph_caps(opt), opt.cap_numeric);
    std::string verdict =
        probe.verdict == Q26Verdict::StrictlyAbove
            ? "strictly-above"
            : probe.verdict == Q26Verdict::AtBound ? "at-bound" : "below";
    json j{{"verdict", verdict},
           {"exact", probe.exact},
           {"bound", -probe.bound}};
    // Numeric eigenvalues within 1e-6 of an integer are reported as that
    // integer.
    const double rounded = std::round(probe.lambda_min);
    if (probe.exact || std::abs(probe.lambda_min - rounded) < 1e-6)
        j["lambda_min"] = static_cast<long long>(rounded);
    else
        j["lambda_min"] = probe.lambda_min;
    if (!probe.exact) j["residual"] = probe.residual;
    emit(opt, j.dump(2) + "\n");
    // A certified violation of the positive-semidefiniteness bound would
    // mean a broken build, not new mathematics.
    return probe.verdict == Q26Verdict::Below ? 1 : 0;
}

int cmd_verify_all(const Options& opt, bool keep_going) {
    auto results = run_all_checks(!keep_going, opt.seed);
    bool all = true;
    std::ostringstream out;
    for (const auto& r : results) {
        out << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << " "
            << r.label << " —" << r.detail << "\n";
        all &= r.pass;
    }
    emit(opt, out.str());
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generic Cayley graphs of finite groups: build and verify"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd, bool needs_group = true) {
        if (needs_group)
            cmd->add_option("--group", opt.group,
                            "group spec, e.g. C3, S3, C2xC4, table:<path>")
                ->required();
        cmd->add_option("--m", opt.m, "power of the group (default 2)");
        cmd->add_option("--format", opt.format, "json, csv, dot or text");
        cmd->add_option("--out", opt.out_path, "write output to a file");
        cmd->add_option("--seed", opt.seed, "seed for numeric paths");
        cmd->add_option("--cap-group", opt.cap_group, "group order cap");
        cmd->add_option("--cap-materialize", opt.cap_materialize,
                        "bit-set adjacency cap");
        cmd->add_option("--cap-exact", opt.cap_exact, "exact-arithmetic cap");
        cmd->add_option("--cap-numeric", opt.cap_numeric, "numeric cap");
        cmd->add_option("--cap-ir", opt.cap_ir, "canonical-labeling cap");
    };

    auto* build = app.add_subcommand("build", "construct the graph");
    add_common(build);
    auto* spectrum =
        app.add_subcommand("spectrum", "exact spectrum (abelian groups)");
    add_common(spectrum);
    auto* regularity =
        app.add_subcommand("regularity", "edge/strong regularity scan");
    add_common(regularity);
    auto* cliques =
        app.add_subcommand("cliques", "maximum cliques through the identity");
    add_common(cliques);
    auto* trace_rank =
        app.add_subcommand("trace-rank", "exact rank of the trace system");
    add_common(trace_rank);
    auto* express = app.add_subcommand(
        "express", "express a monomial through trace elements");
    add_common(express);
    express->add_option("--target", opt.target, "comma-separated element names")
        ->required();
    auto* verify_identity =
        app.add_subcommand("verify-identity", "check a trace identity fixture");
    add_common(verify_identity);
    verify_identity->add_option("--fixture", opt.fixture, "identity fixture path")
        ->required();
    auto* aut = app.add_subcommand("aut", "automorphism group orders");
    add_common(aut);
    bool emit_generators = false;
    aut->add_flag("--generators", emit_generators,
                  "include generator image arrays in the output");
    auto* iso = app.add_subcommand("iso", "graph vs group isomorphism");
    add_common(iso);
    iso->add_option("--group2", opt.group2, "second group spec")->required();
    auto* probe =
        app.add_subcommand("probe-q26", "smallest-eigenvalue bound probe");
    add_common(probe);
    auto* verify_all =
        app.add_subcommand("verify-all", "run the full verification battery");
    add_common(verify_all, false);
    bool keep_going = false;
    verify_all->add_flag("--keep-going", keep_going,
                         "run every check instead of stopping at the first failure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(opt);
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (regularity->parsed()) return cmd_regularity(opt);
        if (cliques->parsed()) return cmd_cliques(opt);
        if (trace_rank->parsed()) return cmd_trace_rank(opt);
        if (express->parsed()) return cmd_express(opt);
        if (verify_identity->parsed()) return cmd_verify_identity(opt);
        if (aut->parsed()) return cmd_aut(opt, emit_generators);
        if (iso->parsed()) return cmd_iso(opt);
        if (probe->parsed()) return cmd_probe(opt);
        if (verify_all->parsed()) return cmd_verify_all(opt, keep_going);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
