// qrh: command-line front end.
//
// Exit codes: 0 success, 1 check failure, 2 usage or input error,
// 3 resource refusal (exact-mode cap exceeded).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "acceptance/criteria.hpp"
#include "qrh/certifiers.hpp"
#include "qrh/constructions.hpp"
#include "qrh/detectors.hpp"
#include "qrh/errors.hpp"
#include "qrh/experiment.hpp"
#include "qrh/io.hpp"
#include "qrh/multipartite.hpp"
#include "qrh/report.hpp"

using namespace qrh;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2, kRefused = 3;

struct Global {
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::string format = "json";
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_file(path, text);
}

ojson envelope(const std::string& command) {
    return ojson{{"schema_version", kReportSchemaVersion}, {"command", command}};
}

std::optional<Rational> reference_density(const std::string& d) {
    if (d.empty() || d == "empirical") return std::nullopt;
    return parse_rational(d);
}

Method parse_method(const std::string& mode) {
    if (mode == "exact") return Method::exact;
    if (mode == "search") return Method::local_search;
    throw InputError("mode must be exact or search, got '" + mode + "'");
}

// ------------------------------------------------------------------ generate

struct GenerateArgs {
    std::string construction, out;
    std::size_t n = 0;
    unsigned k = 4;
};

int run_generate(const GenerateArgs& a, const Global& g) {
    const Construction c = parse_construction(a.construction);
    emit(a.out, write_hypergraph(generate(c, a.n, a.k, g.seed)));
    return kOk;
}

// ------------------------------------------------------------------- certify

struct CertifyArgs {
    std::string kind, in, d, mode = "exact", report;
    std::size_t samples = 200, restarts = 32;
    std::vector<std::size_t> parts{0, 1};
    std::optional<double> max_eta;
    bool check_sieve = false;
};

int run_certify(const CertifyArgs& a, const Global& g) {
    SearchOptions opt;
    opt.mode = parse_method(a.mode);
    opt.restarts = a.restarts;
    opt.seed = g.seed;
    const auto d = reference_density(a.d);
    const std::string text = read_file(a.in);

    ojson out = envelope("certify");
    out["input"] = a.in;
    DeviationReport rep;
    bool failed = false;
    if (a.kind == "bipartite") {
        const MultipartiteGraph mp = read_multipartite(text);
        if (a.parts.size() != 2 || a.parts[0] >= mp.parts() || a.parts[1] >= mp.parts() || a.parts[0] == a.parts[1])
            throw InputError("--parts needs two distinct part indices");
        const BipartiteGraph bg = mp.bipartite(a.parts[0], a.parts[1]);
        const Rational dd = d.value_or(Rational(static_cast<std::int64_t>(bg.edge_count()),
                                                static_cast<std::int64_t>(std::max<std::size_t>(bg.left * bg.right, 1))));
        rep = bipartite_regularity_deviation(bg, dd, opt);
        out["spectral_upper_bound"] = bipartite_deviation_upper_bound(bg, dd);
    } else if (a.kind == "quad") {
        const Hypergraph4 h = read_hypergraph4(text);
        out["edges"] = h.edge_count();
        rep = quad_vertex_deviation(h, d, a.samples, g.seed);
    } else {
        const Hypergraph3 h = read_hypergraph3(text);
        out["edges"] = h.edge_count();
        if (a.kind == "weak") {
            rep = weak_deviation(h, d, opt);
        } else if (a.kind == "pair") {
            rep = pair_deviation(h, d, opt);
        } else if (a.kind == "xyz") {
            std::optional<Rational> weak;
            if (a.check_sieve) {
                SearchOptions ex = opt;
                ex.mode = Method::exact;
                weak = weak_deviation(h, d, ex).max_deviation;
            }
            rep = xyz_deviation(h, d, a.samples, g.seed, weak);
            failed = rep.bound_violations > 0;
        } else {
            throw InputError("unknown certifier kind '" + a.kind + "'");
        }
    }
    out["report"] = to_json(rep);
    if (a.max_eta) {
        out["max_eta"] = *a.max_eta;
        // a heuristic value above the threshold refutes it; below it proves nothing
        out["within_threshold"] = rep.eta <= *a.max_eta;
        failed = failed || rep.eta > *a.max_eta;
    }
    out["status"] = failed ? "check-failed" : "ok";
    emit(a.report, out.dump(2) + "\n");
    return failed ? kCheckFailed : kOk;
}

// -------------------------------------------------------------------- detect

struct DetectArgs {
    std::string pattern, in, pattern_file, report, expect;
    std::size_t k = 4;
    bool ordered = false, count = false;
    std::optional<Vertex> apex;
};

int run_detect(const DetectArgs& a, const Global& g) {
    ojson out = envelope("detect");
    out["pattern"] = a.pattern;
    std::optional<bool> present;

    if (a.pattern == "link-classes") {
        // the colouring is construction metadata, so regenerate rather than read
        if (a.in.empty()) throw InputError("link-classes needs --in with an sk-free hypergraph");
        const Hypergraph3 h = read_hypergraph3(read_file(a.in));
        const PairColouring psi = sk_free_colouring(h.n(), static_cast<unsigned>(a.k), g.seed);
        if (!(sk_free_from_colouring(psi, SkRuleTable(static_cast<unsigned>(a.k))) == h))
            throw InputError("input is not gen_sk_free(n, k, seed) for the given --k and --seed");
        std::size_t violations = 0;
        ojson per = ojson::array();
        for (Vertex v = 0; v < h.n(); ++v) {
            if (a.apex && *a.apex != v) continue;
            const auto r = link_colouring_witness(h, psi, v);
            violations += r.violations;
            if (a.apex) out["classes"] = r.classes;
            per.push_back({{"apex", v}, {"violations", r.violations}, {"partition", r.partition}});
        }
        out["apexes"] = per;
        out["violations"] = violations;
        present = violations > 0;
    } else if (a.pattern == "f4") {
        const auto w = find_F4(read_hypergraph4(read_file(a.in)));
        present = w.has_value();
        out["witness"] = w ? to_json(*w) : ojson(nullptr);
    } else {
        const Hypergraph3 h = read_hypergraph3(read_file(a.in));
        std::optional<Witness> w;
        if (a.pattern == "k4minus") {
            w = find_k4_minus(h, a.ordered);
            if (a.count) out["count"] = count_k4_minus(h);
        } else if (a.pattern == "clique") {
            w = find_clique3(h, a.k);
        } else if (a.pattern == "sk") {
            w = find_Sk(h, a.k);
        } else if (a.pattern == "custom") {
            if (a.pattern_file.empty()) throw InputError("custom pattern needs --pattern-file");
            const Hypergraph3 f = read_hypergraph3(read_file(a.pattern_file));
            const auto phi = embed_small(f, h, a.ordered);
            present = phi.has_value();
            out["embedding"] = phi ? ojson(*phi) : ojson(nullptr);
        } else if (a.pattern == "vanishing") {
            // the input is the pattern F itself
            const auto v = check_vanishing_condition(h);
            present = v.has_value();
            if (v) {
                ojson pairs = ojson::array();
                for (Vertex y = 1; y < h.n(); ++y)
                    for (Vertex x = 0; x < y; ++x) pairs.push_back({x, y, v->colouring.colour(x, y)});
                out["witness"] = {{"order", v->order}, {"colours", pairs}};
            } else {
                out["witness"] = nullptr;
            }
        } else {
            throw InputError("unknown pattern '" + a.pattern + "'");
        }
        if (!present) {
            present = w.has_value();
            out["witness"] = w ? to_json(*w) : ojson(nullptr);
        }
    }
    out["present"] = *present;
    bool failed = false;
    if (!a.expect.empty()) {
        if (a.expect != "present" && a.expect != "absent") throw InputError("--expect must be present or absent");
        failed = (a.expect == "present") != *present;
    }
    out["status"] = failed ? "check-failed" : "ok";
    emit(a.report, out.dump(2) + "\n");
    return failed ? kCheckFailed : kOk;
}

// -------------------------------------------------------------- multipartite

struct MultipartiteArgs {
    std::string op, in, out, report, delta = "1/20", eps, threshold = "1/4";
    std::size_t m = 3, s = 10, restarts = 20, steps = 2000, k = 3;
};

int run_multipartite(const MultipartiteArgs& a, const Global& g) {
    ojson out = envelope("multipartite");
    out["op"] = a.op;
    bool failed = false;
    auto need_in = [&] {
        if (a.in.empty()) throw InputError("--op " + a.op + " needs --in");
        return read_file(a.in);
    };
    if (a.op == "halfsplit") {
        const MultipartiteGraph hs = half_split(a.m, a.s);
        if (!a.out.empty()) write_file(a.out, write_multipartite(hs));
        out["edges"] = hs.edge_count();
        out["profile"] = to_json(mean_square_profile(hs));
    } else if (a.op == "profile") {
        const MultipartiteGraph mp = read_multipartite(need_in());
        const MeanSquareProfile p = mean_square_profile(mp);
        const Rational threshold = parse_rational(a.threshold);
        const Rational eps = a.eps.empty() ? Rational(0) : parse_rational(a.eps);
        out["profile"] = to_json(p);
        out["threshold"] = rational_json(threshold);
        out["hypothesis"] = p.satisfies(threshold, eps);
    } else if (a.op == "triangle") {
        const MultipartiteGraph mp = read_multipartite(need_in());
        const auto t = a.k == 3 ? find_triangle_mp(mp) : find_clique_mp(mp, a.k);
        ojson w = nullptr;
        if (t) {
            w = ojson::array();
            for (auto [part, idx] : *t) w.push_back({part, idx});
        }
        out["k"] = a.k;
        out["witness"] = w;
        if (mp.parts() == 3) {
            SearchOptions opt;
            opt.seed = g.seed;
            const bool small = std::min({mp.part_size(0), mp.part_size(1), mp.part_size(2)}) <= opt.caps.bipartite;
            out["triangle_count"] = to_json(triangle_count_tripartite(
                mp, std::nullopt, small ? DeltaSource::exact : DeltaSource::search, opt));
        }
    } else if (a.op == "diagnostics") {
        const MultipartiteGraph mp = read_multipartite(need_in());
        const auto eps = a.eps.empty() ? std::nullopt : std::optional<Rational>(parse_rational(a.eps));
        const ProofDiagnostics d = proof_diagnostics(mp, parse_rational(a.delta), eps);
        out["diagnostics"] = to_json(d);
        failed = !d.claim_violations.empty();
    } else if (a.op == "project") {
        const AuxBlock blk = aux_block_from_json(nlohmann::json::parse(need_in()));
        const AuxProjection p = project_auxiliary(blk, a.eps.empty() ? Rational(1, 20) : parse_rational(a.eps));
        out["projection"] = to_json(p);
        failed = !p.consistent;
    } else if (a.op == "threetriples") {
        const AuxiliaryHypergraph aux = aux_from_json(nlohmann::json::parse(need_in()));
        const auto t = find_three_triples(aux);
        out["configuration"] = t ? to_json(*t) : ojson(nullptr);
        if (t) failed = !verify_three_triples(aux, *t);
    } else if (a.op == "explore") {
        const Rational eps = a.eps.empty() ? Rational(1, 20) : parse_rational(a.eps);
        const ExploreResult r = explore_extremal(a.m, a.s, eps, a.restarts, g.seed, a.steps);
        if (!a.out.empty()) write_file(a.out, write_multipartite(r.graph));
        out["min_ratio"] = rational_json(r.min_ratio);
        out["start_ratio"] = rational_json(r.start_ratio);
        out["triangle_free"] = r.triangle_free;
        out["target_reached"] = r.target_reached;
        out["best_restart"] = r.best_restart;
        out["accepted_moves"] = r.accepted_moves;
        out["edges"] = r.graph.edge_count();
        failed = !r.triangle_free;
    } else {
        throw InputError("unknown op '" + a.op + "'");
    }
    out["status"] = failed ? "check-failed" : "ok";
    emit(a.report, out.dump(2) + "\n");
    return failed ? kCheckFailed : kOk;
}

// ---------------------------------------------------------------- experiment

struct ExperimentArgs {
    std::string spec, out, plot;
    bool timing = false;
};

// gnuplot data: one block per (construction, k), "n mean_density cells".
std::string plot_data(const std::vector<ReportRow>& rows) {
    std::map<std::pair<std::string, unsigned>, std::map<std::size_t, std::pair<double, int>>> acc;
    for (const auto& r : rows) {
        if (r.status != "ok") continue;
        auto& cell = acc[{r.construction, r.k}][r.n];
        cell.first += to_double(r.density);
        ++cell.second;
    }
    std::ostringstream s;
    for (const auto& [key, by_n] : acc) {
        s << "# " << key.first << (key.second ? " k=" + std::to_string(key.second) : "") << "\n";
        for (const auto& [n, v] : by_n) s << n << " " << v.first / v.second << " " << v.second << "\n";
        s << "\n\n";
    }
    return s.str();
}

int run_experiment_cmd(const ExperimentArgs& a, const Global& g) {
    const ExperimentSpec spec = parse_experiment_spec(nlohmann::json::parse(read_file(a.spec)));
    const auto rows = run_experiment(spec, g.threads);
    if (g.format == "json")
        emit(a.out, rows_to_json(rows, a.timing).dump(2) + "\n");
    else
        emit(a.out, rows_to_csv(rows, a.timing));
    if (!a.plot.empty()) write_file(a.plot, plot_data(rows));
    for (const auto& r : rows)
        if (r.status != "ok") return kCheckFailed;
    return kOk;
}

// -------------------------------------------------------------------- verify

int run_verify(const std::string& level) {
    if (level != "quick" && level != "full") throw InputError("verify level must be quick or full");
    const auto results =
        acceptance::run_all(level == "quick" ? acceptance::Level::quick : acceptance::Level::full, std::cout);
    std::size_t failed = 0;
    for (const auto& r : results) failed += !r.pass;
    std::cout << (failed ? "FAILED " : "PASSED ") << results.size() - failed << "/" << results.size()
              << " criteria\n";
    return failed ? kCheckFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasirandom hypergraph constructions, certifiers and detectors"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--seed", g.seed, "Seed for generators and heuristics");
    app.add_option("--threads", g.threads, "Worker threads for experiments")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Table format")->check(CLI::IsMember({"csv", "json"}));

    GenerateArgs ga;
    auto* gen = app.add_subcommand("generate", "Generate a construction");
    gen->add_option("--construction,-c", ga.construction,
                    "tournament3 | colouring-kk | party6 | rainbow27 | sk-free | oriented4 | leader-tan")
        ->required();
    gen->add_option("--n", ga.n, "Number of vertices")->required();
    gen->add_option("--k", ga.k, "Parameter k (colouring-kk, sk-free)");
    gen->add_option("--out,-o", ga.out, "Output file (default stdout)");

    CertifyArgs ca;
    auto* cert = app.add_subcommand("certify", "Quasirandomness deviation scans");
    cert->add_option("--kind", ca.kind)->required()->check(CLI::IsMember({"weak", "xyz", "pair", "quad", "bipartite"}));
    cert->add_option("--in", ca.in, "Hypergraph file (multipartite file for bipartite)")->required();
    cert->add_option("--d", ca.d, "Reference density P/Q (default: empirical)");
    cert->add_option("--mode", ca.mode, "exact | search");
    cert->add_option("--samples", ca.samples, "Samples for xyz / quad");
    cert->add_option("--restarts", ca.restarts, "Local-search restarts");
    cert->add_option("--parts", ca.parts, "Two part indices for bipartite")->expected(2)->delimiter(',');
    cert->add_option("--max-eta", ca.max_eta, "Exit 1 when eta exceeds this value");
    cert->add_flag("--check-sieve", ca.check_sieve, "xyz: check every sample against 7 x exact weak D");
    cert->add_option("--report", ca.report, "JSON report (default stdout)");

    DetectArgs da;
    auto* det = app.add_subcommand("detect", "Find forbidden configurations");
    det->add_option("--pattern", da.pattern)
        ->required()
        ->check(CLI::IsMember({"k4minus", "clique", "sk", "f4", "custom", "vanishing", "link-classes"}));
    det->add_option("--in", da.in, "Hypergraph file");
    det->add_option("--k", da.k, "Clique / S_k size");
    det->add_flag("--ordered", da.ordered, "Order-respecting search");
    det->add_flag("--count", da.count, "Also count K4- copies");
    det->add_option("--pattern-file", da.pattern_file, "Pattern F for custom");
    det->add_option("--apex", da.apex, "link-classes: single apex");
    det->add_option("--expect", da.expect, "present | absent; exit 1 on mismatch");
    det->add_option("--report", da.report, "JSON report (default stdout)");

    MultipartiteArgs ma;
    auto* mp = app.add_subcommand("multipartite", "Multipartite mean-square tools");
    mp->add_option("--op", ma.op)
        ->required()
        ->check(CLI::IsMember({"profile", "triangle", "halfsplit", "diagnostics", "project", "threetriples", "explore"}));
    mp->add_option("--in", ma.in, "Multipartite file, or JSON block / auxiliary hypergraph");
    mp->add_option("--out", ma.out, "Write the resulting graph (halfsplit, explore)");
    mp->add_option("--m", ma.m, "Number of parts");
    mp->add_option("--s", ma.s, "Part size");
    mp->add_option("--k", ma.k, "Clique size for triangle (default 3)");
    mp->add_option("--delta", ma.delta, "delta for diagnostics");
    mp->add_option("--eps", ma.eps, "epsilon");
    mp->add_option("--threshold", ma.threshold, "profile threshold (default 1/4)");
    mp->add_option("--restarts", ma.restarts, "explore restarts");
    mp->add_option("--steps", ma.steps, "explore steps per restart");
    mp->add_option("--report", ma.report, "JSON report (default stdout)");

    ExperimentArgs ea;
    auto* ex = app.add_subcommand("experiment", "Run a seed sweep from a JSON spec");
    ex->add_option("--spec", ea.spec, "Experiment spec (JSON)")->required();
    ex->add_option("--out,-o", ea.out, "Table output (default stdout)");
    ex->add_option("--plot", ea.plot, "gnuplot data file of mean densities");
    ex->add_flag("--timing", ea.timing, "Add wall-time column (output no longer byte-stable)");

    std::string level;
    auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
    ver->add_option("level", level, "quick | full")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return run_generate(ga, g);
        if (*cert) return run_certify(ca, g);
        if (*det) return run_detect(da, g);
        if (*mp) return run_multipartite(ma, g);
        if (*ex) {
            if (app.get_option("--format")->count() == 0) g.format = "csv";
            return run_experiment_cmd(ea, g);
        }
        if (*ver) return run_verify(level);
    } catch (const ResourceRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
