#pragma once

// Command-line front end. Subcommands: construct, spectral, detect, certify,
// climb, analyze, table. stdout carries data only (graph6 or JSON); stderr
// carries diagnostics; exit codes are stable (detect: 0 pattern-free,
// 1 contains, 2 error; everything else: 0 ok, 2 error). Identical argv and
// seed give byte-identical stdout.
//
// Needs CLI11.hpp and json.hpp on the include path (vendored in this repo).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "specturan.hpp"

namespace specturan {

namespace cli_detail {

using nlohmann::json;

inline std::vector<int> parse_cycles(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

// Inclusive "a..b" or a single value.
inline std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    int a = std::stoi(text.substr(0, dots));
    int b = std::stoi(text.substr(dots + 2));
    if (b < a) throw std::invalid_argument("range: upper end below lower end");
    return {a, b};
}

// One graph from --g6, a file, or stdin (first non-empty line).
inline Graph read_input_graph(const std::string& inline_g6, const std::string& path, std::istream& fallback) {
    if (!inline_g6.empty() && !path.empty())
        throw std::invalid_argument("give either --g6 or --input, not both");
    if (!inline_g6.empty()) return parse_graph6(inline_g6);
    std::string line;
    if (!path.empty()) {
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot open input file: " + path);
        while (std::getline(f, line))
            if (!line.empty()) return parse_graph6(line);
        throw std::invalid_argument("input file holds no graph line");
    }
    while (std::getline(fallback, line))
        if (!line.empty()) return parse_graph6(line);
    throw std::invalid_argument("no graph on stdin");
}

inline int threads_from_env() {
    const char* env = std::getenv("SPECTRAL_TURAN_THREADS");
    if (!env) return 1;
    int t = std::atoi(env);
    return t >= 1 ? t : 1;
}

inline json spectral_json(const SpectralResult& r) {
    json j;
    j["lambda"] = r.lambda;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    if (r.connected) j["min_entry"] = perron_entry_min(r);
    else j["min_entry"] = nullptr;
    j["converged"] = r.converged;
    return j;
}

inline json embedding_json(const FlowerEmbedding& e) {
    json j;
    j["apex"] = e.apex;
    j["triangles"] = json::array();
    for (auto [a, b] : e.triangles) j["triangles"].push_back({a, b});
    j["cycles"] = json::array();
    for (const auto& c : e.cycles) j["cycles"].push_back(c);
    return j;
}

inline json report_json(const SearchReport& rep) {
    json j;
    j["n"] = rep.n;
    j["spec"] = {{"s", rep.spec.s}, {"cycles", rep.spec.lengths}};
    j["max_edges"] = rep.max_edges;
    j["max_lambda"] = rep.max_lambda;
    j["edge_witnesses"] = rep.edge_witnesses;
    j["lambda_witnesses"] = rep.lambda_witnesses;
    j["graphs_enumerated"] = rep.graphs_enumerated;
    return j;
}

inline json stability_json(const StabilityReport& rep) {
    json j;
    j["side_S"] = rep.partition.side_S;
    j["side_T"] = rep.partition.side_T;
    j["cut"] = rep.partition.cut;
    j["within"] = rep.partition.within;
    j["W"] = rep.W;
    j["L"] = rep.L;
    j["side_balance"] = rep.side_balance;
    j["freeness"] = {{"S", {{"star_free", rep.freeness_S.star_free}, {"matching_free", rep.freeness_S.matching_free}}},
                     {"T", {{"star_free", rep.freeness_T.star_free}, {"matching_free", rep.freeness_T.matching_free}}}};
    j["min_perron_entry"] = rep.min_perron_entry;
    j["lambda"] = rep.lambda;
    j["e_G1"] = rep.e_G1;
    j["e_G2"] = rep.e_G2;
    j["contains_forbidden"] = rep.contains_forbidden;
    j["delta_used"] = rep.delta_used;
    json gaps = json::object();
    for (const auto& gap : rep.gaps)
        gaps[gap.name] = {{"lhs", gap.lhs}, {"rhs", gap.rhs}, {"holds", gap.holds}};
    j["gaps"] = gaps;
    return j;
}

struct ConstructArgs {
    std::string what;
    int n = 0, r = 2, s = 0, k = 1, q = 5, a = 1, b = 1, t = 1;
    std::string cycles;
    std::string variant = "bipartite";
};

inline Graph build_named(const ConstructArgs& c) {
    if (c.what == "flower") return flower(FlowerSpec(c.s, parse_cycles(c.cycles)));
    if (c.what == "turan") return turan(c.n, c.r);
    if (c.what == "bouquet") return cycle_bouquet(c.k, c.q);
    if (c.what == "family") {
        FamilyVariant v = c.variant == "triangles" ? FamilyVariant::threeTriangles : FamilyVariant::bipartiteQ;
        return extremal_family_member(c.n, c.s, c.k, v);
    }
    if (c.what == "fan-extremal") return fan_extremal(c.n, c.k);
    if (c.what == "split") return split_graph(c.n, c.k);
    if (c.what == "complete") return complete(c.n);
    if (c.what == "complete-bipartite") return complete_bipartite(c.a, c.b);
    if (c.what == "path") return path(c.t);
    if (c.what == "cycle") return cycle(c.n);
    if (c.what == "star") return star(c.t);
    if (c.what == "matching") return matching(c.t);
    if (c.what == "petersen") return petersen();
    throw std::invalid_argument("unknown construction: " + c.what);
}

}  // namespace cli_detail

// Entry point behind main(); streams injected for testability.
inline int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
    using cli_detail::json;
    CLI::App app{"spectral extremal graph toolkit"};
    app.require_subcommand(1);

    // construct
    cli_detail::ConstructArgs cons;
    auto* c_construct = app.add_subcommand("construct", "emit a named graph as graph6");
    c_construct->add_option("what", cons.what,
                            "flower|turan|bouquet|family|fan-extremal|split|complete|complete-bipartite|path|cycle|star|matching|petersen")
        ->required();
    c_construct->add_option("--n", cons.n);
    c_construct->add_option("--r", cons.r);
    c_construct->add_option("--s", cons.s);
    c_construct->add_option("--k", cons.k);
    c_construct->add_option("--q", cons.q);
    c_construct->add_option("--a", cons.a);
    c_construct->add_option("--b", cons.b);
    c_construct->add_option("--t", cons.t);
    c_construct->add_option("--cycles", cons.cycles, "comma-separated odd lengths >= 5");
    c_construct->add_option("--variant", cons.variant, "bipartite|triangles");

    // shared input options
    std::string in_g6, in_path;
    double tol = kSpectralTol;
    bool signless = false;

    auto* c_spectral = app.add_subcommand("spectral", "dominant eigenvalue of a graph");
    c_spectral->add_option("--g6", in_g6, "inline graph6");
    c_spectral->add_option("--input", in_path, "file with a graph6 line");
    c_spectral->add_option("--tol", tol);
    c_spectral->add_flag("--signless", signless, "use D+A instead of A");

    int det_s = 0, det_apex = -1;
    std::string det_cycles;
    bool det_witness = false;
    auto* c_detect = app.add_subcommand("detect", "pattern containment (exit 0 free, 1 contains)");
    c_detect->add_option("--g6", in_g6);
    c_detect->add_option("--input", in_path);
    c_detect->add_option("--s", det_s, "triangle count");
    c_detect->add_option("--cycles", det_cycles, "comma-separated odd lengths >= 5");
    c_detect->add_option("--apex", det_apex, "pin the apex vertex");
    c_detect->add_flag("--witness", det_witness, "emit JSON witness");

    int cert_n = 0, cert_threads = 0, cert_s = 0;
    std::string cert_cycles;
    bool cert_large = false;
    auto* c_certify = app.add_subcommand("certify", "exact pattern-free maxima by enumeration");
    c_certify->add_option("--n", cert_n)->required();
    c_certify->add_option("--s", cert_s);
    c_certify->add_option("--cycles", cert_cycles);
    c_certify->add_option("--threads", cert_threads, "0 = SPECTRAL_TURAN_THREADS or 1");
    c_certify->add_flag("--allow-large", cert_large, "permit n = 10");

    int climb_n = 0, climb_s = 0;
    std::string climb_cycles;
    std::uint64_t climb_seed = 1;
    long long climb_budget = 100;
    auto* c_climb = app.add_subcommand("climb", "seeded spectral hill climb over pattern-free graphs");
    c_climb->add_option("--n", climb_n)->required();
    c_climb->add_option("--s", climb_s);
    c_climb->add_option("--cycles", climb_cycles);
    c_climb->add_option("--seed", climb_seed);
    c_climb->add_option("--budget", climb_budget, "max accepted moves");

    int ana_s = 0;
    std::string ana_cycles;
    double ana_delta = 0.0;
    std::uint64_t ana_seed = 1;
    auto* c_analyze = app.add_subcommand("analyze", "stability report for a graph");
    c_analyze->add_option("--g6", in_g6);
    c_analyze->add_option("--input", in_path);
    c_analyze->add_option("--s", ana_s);
    c_analyze->add_option("--cycles", ana_cycles);
    c_analyze->add_option("--delta", ana_delta, "same-side degree fraction; 0 = formula default");
    c_analyze->add_option("--seed", ana_seed);

    std::string tab_which, tab_beta = "1..3", tab_delta = "1..3", tab_n = "10..20", tab_format = "csv";
    int tab_s = 1, tab_k = 1;
    auto* c_table = app.add_subcommand("table", "formula tables (csv or json)");
    c_table->add_option("which", tab_which, "ch|family")->required();
    c_table->add_option("--beta", tab_beta, "range a..b");
    c_table->add_option("--delta", tab_delta, "range a..b");
    c_table->add_option("--n", tab_n, "range a..b");
    c_table->add_option("--s", tab_s);
    c_table->add_option("--k", tab_k);
    c_table->add_option("--format", tab_format, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::stringstream msg;
        int code = app.exit(e, msg, msg);
        if (code == 0) {  // --help and friends
            out << msg.str();
            return 0;
        }
        err << msg.str();
        return 2;
    }

    try {
        if (*c_construct) {
            out << to_graph6(cli_detail::build_named(cons)) << "\n";
            return 0;
        }
        if (*c_spectral) {
            Graph g = cli_detail::read_input_graph(in_g6, in_path, in);
            SpectralResult r = signless ? signless_laplacian_radius(g, tol) : spectral_radius(g, tol);
            out << cli_detail::spectral_json(r).dump(2) << "\n";
            return 0;
        }
        if (*c_detect) {
            Graph g = cli_detail::read_input_graph(in_g6, in_path, in);
            FlowerSpec spec(det_s, cli_detail::parse_cycles(det_cycles));
            std::optional<FlowerEmbedding> emb =
                det_apex >= 0 ? contains_flower_at(g, det_apex, spec) : contains_flower(g, spec);
            if (det_witness) {
                json j;
                j["contains"] = emb.has_value();
                j["witness"] = emb ? cli_detail::embedding_json(*emb) : json(nullptr);
                out << j.dump(2) << "\n";
            }
            return emb ? 1 : 0;
        }
        if (*c_certify) {
            int threads = cert_threads >= 1 ? cert_threads : cli_detail::threads_from_env();
            FlowerSpec spec(cert_s, cli_detail::parse_cycles(cert_cycles));
            SearchReport rep = certify(cert_n, spec, threads, cert_large);
            out << cli_detail::report_json(rep).dump(2) << "\n";
            err << "elapsed_seconds " << rep.elapsed_seconds << "\n";
            return 0;
        }
        if (*c_climb) {
            FlowerSpec spec(climb_s, cli_detail::parse_cycles(climb_cycles));
            ClimbResult r = hill_climb_spectral(climb_n, spec, climb_seed, climb_budget);
            json j;
            j["graph6"] = to_graph6(r.graph);
            j["lambda_trace"] = r.lambda_trace;
            j["moves_accepted"] = r.moves_accepted;
            j["local_optimum"] = r.reached_local_optimum;
            out << j.dump(2) << "\n";
            return 0;
        }
        if (*c_analyze) {
            Graph g = cli_detail::read_input_graph(in_g6, in_path, in);
            FlowerSpec spec(ana_s, cli_detail::parse_cycles(ana_cycles));
            StabilityReport rep = stability_report(g, spec, ana_delta, ana_seed);
            out << cli_detail::stability_json(rep).dump(2) << "\n";
            return 0;
        }
        if (*c_table) {
            bool as_json = tab_format == "json";
            json rows = json::array();
            if (tab_which == "ch") {
                auto [b0, b1] = cli_detail::parse_range(tab_beta);
                auto [d0, d1] = cli_detail::parse_range(tab_delta);
                if (!as_json) out << "beta,delta,f\n";
                for (int b = b0; b <= b1; ++b)
                    for (int d = d0; d <= d1; ++d) {
                        if (as_json) rows.push_back({{"beta", b}, {"delta", d}, {"f", ch_f(b, d)}});
                        else out << b << "," << d << "," << ch_f(b, d) << "\n";
                    }
            } else if (tab_which == "family") {
                auto [n0, n1] = cli_detail::parse_range(tab_n);
                if (!as_json) out << "n,s,k,edges\n";
                for (int n = n0; n <= n1; ++n) {
                    long long e = static_cast<long long>(n) * n / 4 +
                                  static_cast<long long>(tab_s + tab_k - 1) * (tab_s + tab_k - 1);
                    if (as_json) rows.push_back({{"n", n}, {"s", tab_s}, {"k", tab_k}, {"edges", e}});
                    else out << n << "," << tab_s << "," << tab_k << "," << e << "\n";
                }
            } else {
                throw std::invalid_argument("unknown table: " + tab_which);
            }
            if (as_json) out << rows.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace specturan
