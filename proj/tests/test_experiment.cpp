#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "qrh/errors.hpp"
#include "qrh/experiment.hpp"
#include "qrh/io.hpp"

using namespace qrh;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
}

}  // namespace

TEST_CASE("experiment spec parsing") {
    const auto spec = parse_experiment_spec(nlohmann::json::parse(R"({
        "construction": "sk-free", "k": 5, "n": [20, 30], "seeds": [1, 2, 3],
        "certifiers": [{"kind": "weak", "mode": "search", "restarts": 2}],
        "detectors": ["sk"]})"));
    CHECK(spec.cells.size() == 6);
    CHECK(spec.k == 5);
    REQUIRE(spec.certifiers.size() == 1);
    CHECK(spec.certifiers[0].d == "empirical");
    CHECK_THROWS_AS(parse_experiment_spec(nlohmann::json::parse(R"({"construction": "x"})")), InputError);
    CHECK_THROWS_AS(parse_experiment_spec(nlohmann::json::parse(
                        R"({"construction": "party6", "n": [5], "seeds": [1], "detectors": ["bogus"]})")),
                    InputError);
}

TEST_CASE("empty spec gives an empty table") {
    const auto rows = run_experiment(parse_experiment_spec(nlohmann::json::object()));
    CHECK(rows.empty());
    const auto csv = parse_csv(rows_to_csv(rows));
    REQUIRE(csv.size() == 1);
    CHECK(csv[0][0] == "schema_v1");
}

TEST_CASE("csv output is deterministic across thread counts") {
    const auto spec = parse_experiment_spec(nlohmann::json::parse(R"({
        "construction": "tournament3", "n": [12, 20], "seeds": [3, 1, 2],
        "certifiers": [{"kind": "weak", "mode": "search", "restarts": 3},
                       {"kind": "xyz", "samples": 50}, {"kind": "pair", "mode": "search", "restarts": 2}],
        "detectors": ["k4minus", "k4minus-count", "clique"]})"));
    const std::string one = rows_to_csv(run_experiment(spec, 1));
    const std::string three = rows_to_csv(run_experiment(spec, 3));
    CHECK(one == three);
    CHECK(one == rows_to_csv(run_experiment(spec, 2)));
    const auto csv = parse_csv(one);
    REQUIRE(csv.size() == 7);
    const std::size_t seed = column(csv[0], "seed"), n = column(csv[0], "n");
    CHECK(csv[1][n] == "12");
    CHECK(csv[1][seed] == "1");
    CHECK(csv[3][seed] == "3");
    CHECK(csv[0].back() == "status");
    CHECK(column(csv[0], "wall_ms") == csv[0].size());
    const auto timed = parse_csv(rows_to_csv(run_experiment(spec, 1), true));
    CHECK(column(timed[0], "wall_ms") < timed[0].size());
}

TEST_CASE("csv densities match the emitted hypergraph files") {
    const fs::path dir = fs::temp_directory_path() / "qrh_experiment_test";
    fs::remove_all(dir);
    nlohmann::json j = nlohmann::json::parse(R"({"construction": "rainbow27", "n": [15, 25], "seeds": [4, 5]})");
    j["hypergraph_dir"] = dir.string();
    const auto rows = run_experiment(parse_experiment_spec(j));
    const auto csv = parse_csv(rows_to_csv(rows));
    REQUIRE(csv.size() == 5);
    const std::size_t dcol = column(csv[0], "density"), ecol = column(csv[0], "edges");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Hypergraph3 h = read_hypergraph3(read_file((dir / cell_file_name(rows[i])).string()));
        const auto n = static_cast<std::int64_t>(h.n());
        const Rational d(static_cast<std::int64_t>(h.edge_count()), n * (n - 1) * (n - 2) / 6);
        CHECK(csv[i + 1][dcol] == to_string(d));
        CHECK(csv[i + 1][ecol] == std::to_string(h.edge_count()));
    }
    fs::remove_all(dir);
}

TEST_CASE("cell failures are recorded per row") {
    const auto spec = parse_experiment_spec(nlohmann::json::parse(R"({
        "construction": "party6", "n": [10, 40], "seeds": [1],
        "certifiers": [{"kind": "weak", "mode": "exact"}]})"));
    const auto rows = run_experiment(spec);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].status == "ok");
    CHECK(rows[1].status != "ok");
}

TEST_CASE("json rows") {
    const auto spec = parse_experiment_spec(nlohmann::json::parse(R"({
        "construction": "oriented4", "n": [10], "seeds": [1], "certifiers": [{"kind": "quad", "samples": 20}],
        "detectors": ["f4"]})"));
    const auto j = rows_to_json(run_experiment(spec));
    CHECK(j["schema_version"] == 1);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["detectors"]["f4"] == 0);
    CHECK(j["rows"][0].contains("eta"));
}
