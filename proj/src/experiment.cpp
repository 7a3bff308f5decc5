#include "qrh/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <thread>

#include "qrh/detectors.hpp"
#include "qrh/errors.hpp"
#include "qrh/io.hpp"
#include "qrh/report.hpp"

namespace qrh {

namespace {

const char* const kEtaKinds[] = {"weak", "xyz", "pair", "quad"};
const char* const kDetectorNames[] = {"k4minus", "k4minus-ordered", "k4minus-count", "clique", "sk", "f4"};

Method parse_mode(const std::string& s) {
    if (s == "exact") return Method::exact;
    if (s == "search") return Method::local_search;
    throw InputError("certifier mode must be exact or search");
}

}  // namespace

ExperimentSpec parse_experiment_spec(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("experiment spec must be a JSON object");
    ExperimentSpec s;
    if (j.contains("construction")) s.construction = parse_construction(j.at("construction").get<std::string>());
    s.k = j.value("k", 4U);
    if (j.contains("cells")) {
        for (const auto& c : j.at("cells")) s.cells.push_back({c.at("n").get<std::size_t>(), c.at("seed").get<std::uint64_t>()});
    } else if (j.contains("n")) {
        for (const auto& n : j.at("n"))
            for (const auto& seed : j.at("seeds")) s.cells.push_back({n.get<std::size_t>(), seed.get<std::uint64_t>()});
    }
    if (!s.cells.empty() && !s.construction) throw InputError("experiment spec has cells but no construction");
    for (const auto& c : j.value("certifiers", nlohmann::json::array())) {
        CertifierTask t;
        t.kind = c.at("kind").get<std::string>();
        if (std::find(std::begin(kEtaKinds), std::end(kEtaKinds), t.kind) == std::end(kEtaKinds))
            throw InputError("unknown certifier kind '" + t.kind + "'");
        t.mode = parse_mode(c.value("mode", std::string("search")));
        t.restarts = c.value("restarts", t.restarts);
        t.samples = c.value("samples", t.samples);
        t.d = c.value("d", t.d);
        s.certifiers.push_back(t);
    }
    for (const auto& d : j.value("detectors", nlohmann::json::array())) {
        const auto name = d.get<std::string>();
        if (std::find(std::begin(kDetectorNames), std::end(kDetectorNames), name) == std::end(kDetectorNames))
            throw InputError("unknown detector '" + name + "'");
        s.detectors.push_back(name);
    }
    s.hypergraph_dir = j.value("hypergraph_dir", std::string());
    return s;
}

std::string cell_file_name(const ReportRow& row) {
    return row.construction + "_n" + std::to_string(row.n) + "_k" + std::to_string(row.k) + "_s" +
           std::to_string(row.seed) + ".txt";
}

namespace {

ReportRow run_cell(const ExperimentSpec& spec, const Cell& cell) {
    const Construction c = *spec.construction;
    ReportRow row;
    row.construction = construction_name(c);
    row.n = cell.n;
    row.k = construction_uses_k(c) ? spec.k : 0;
    row.seed = cell.seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const AnyHypergraph any = generate(c, cell.n, spec.k, cell.seed);
        const DensityReport dens = std::visit([](const auto& h) { return h.density(); }, any);
        row.edges = dens.edge_count;
        row.density = dens.density;
        if (!spec.hypergraph_dir.empty()) {
            std::filesystem::create_directories(spec.hypergraph_dir);
            write_file((std::filesystem::path(spec.hypergraph_dir) / cell_file_name(row)).string(),
                       write_hypergraph(any));
        }
        for (const CertifierTask& t : spec.certifiers) {
            std::optional<Rational> d;
            if (t.d == "expected") d = expected_density(c, spec.k);
            else if (t.d != "empirical") d = parse_rational(t.d);
            SearchOptions opt;
            opt.mode = t.mode;
            opt.restarts = t.restarts;
            opt.seed = cell.seed;
            if (const auto* h3 = std::get_if<Hypergraph3>(&any)) {
                if (t.kind == "weak") row.eta["weak"] = weak_deviation(*h3, d, opt).eta;
                else if (t.kind == "pair") row.eta["pair"] = pair_deviation(*h3, d, opt).eta;
                else if (t.kind == "xyz") row.eta["xyz"] = xyz_deviation(*h3, d, t.samples, cell.seed).eta;
            } else if (const auto* h4 = std::get_if<Hypergraph4>(&any)) {
                if (t.kind == "quad") row.eta["quad"] = quad_vertex_deviation(*h4, d, t.samples, cell.seed).eta;
            }
        }
        for (const std::string& name : spec.detectors) {
            if (const auto* h3 = std::get_if<Hypergraph3>(&any)) {
                if (name == "k4minus") row.detectors[name] = find_k4_minus(*h3, false).has_value();
                else if (name == "k4minus-ordered") row.detectors[name] = find_k4_minus(*h3, true).has_value();
                else if (name == "k4minus-count") row.detectors[name] = count_k4_minus(*h3);
                else if (name == "clique") row.detectors[name] = find_clique3(*h3, std::max(4U, spec.k)).has_value();
                else if (name == "sk") row.detectors[name] = find_Sk(*h3, std::max(3U, spec.k)).has_value();
            } else if (const auto* h4 = std::get_if<Hypergraph4>(&any)) {
                if (name == "f4") row.detectors[name] = find_F4(*h4).has_value();
            }
        }
    } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string csv_field(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

}  // namespace

std::vector<ReportRow> run_experiment(const ExperimentSpec& spec, std::size_t threads) {
    std::vector<ReportRow> rows(spec.cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < spec.cells.size(); i = next++) rows[i] = run_cell(spec, spec.cells[i]);
    };
    const std::size_t t = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(spec.cells.size(), 1));
    if (t == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < t; ++i) pool.emplace_back(worker);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return std::tie(a.construction, a.n, a.k, a.seed) < std::tie(b.construction, b.n, b.k, b.seed);
    });
    return rows;
}

std::string rows_to_csv(const std::vector<ReportRow>& rows, bool timing) {
    std::string out = "schema_v" + std::to_string(kReportSchemaVersion) +
                      ",construction,n,k,seed,edges,density,density_value";
    for (const char* k : kEtaKinds) out += std::string(",eta_") + k;
    for (const char* d : kDetectorNames) out += std::string(",") + d;
    if (timing) out += ",wall_ms";
    out += ",status\n";
    for (const ReportRow& r : rows) {
        out += std::to_string(kReportSchemaVersion) + "," + r.construction + "," + std::to_string(r.n) + "," +
               std::to_string(r.k) + "," + std::to_string(r.seed) + "," + std::to_string(r.edges) + "," +
               to_string(r.density) + "," + format_double(to_double(r.density));
        for (const char* k : kEtaKinds) {
            out += ",";
            if (auto it = r.eta.find(k); it != r.eta.end()) out += format_double(it->second);
        }
        for (const char* d : kDetectorNames) {
            out += ",";
            if (auto it = r.detectors.find(d); it != r.detectors.end()) out += std::to_string(it->second);
        }
        if (timing) out += "," + format_double(r.wall_ms);
        out += "," + csv_field(r.status) + "\n";
    }
    return out;
}

nlohmann::ordered_json rows_to_json(const std::vector<ReportRow>& rows, bool timing) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ReportRow& r : rows) {
        nlohmann::ordered_json j{{"construction", r.construction},
                                 {"n", r.n},
                                 {"k", r.k},
                                 {"seed", r.seed},
                                 {"edges", r.edges},
                                 {"density", rational_json(r.density)},
                                 {"eta", r.eta},
                                 {"detectors", r.detectors}};
        if (timing) j["wall_ms"] = r.wall_ms;
        j["status"] = r.status;
        arr.push_back(j);
    }
    return nlohmann::ordered_json{{"schema_version", kReportSchemaVersion}, {"rows", arr}};
}

}  // namespace qrh
