#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrh/certifiers.hpp"
#include "qrh/constructions.hpp"

namespace qrh {

struct CertifierTask {
    std::string kind;  // weak | xyz | pair | quad
    Method mode = Method::local_search;
    std::size_t restarts = 8;
    std::size_t samples = 200;
    /// "empirical" (default), "expected" (construction constant) or a rational.
    std::string d = "empirical";
};

struct Cell {
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

/// One construction, its parameters and a list of cells. JSON form:
///   {"construction": "tournament3", "k": 4,
///    "cells": [{"n": 100, "seed": 1}, ...]            (or "n": [...], "seeds": [...])
///    "certifiers": [{"kind": "weak", "mode": "search", "restarts": 8}, ...],
///    "detectors": ["k4minus", "k4minus-ordered", "k4minus-count", "clique", "sk", "f4"],
///    "hypergraph_dir": "out/"}                           (optional)
struct ExperimentSpec {
    std::optional<Construction> construction;
    unsigned k = 4;
    std::vector<Cell> cells;
    std::vector<CertifierTask> certifiers;
    std::vector<std::string> detectors;
    std::string hypergraph_dir;
};
ExperimentSpec parse_experiment_spec(const nlohmann::json& j);

struct ReportRow {
    std::string construction;
    std::size_t n = 0;
    unsigned k = 0;  // 0 when the construction takes no k
    std::uint64_t seed = 0;
    std::int64_t edges = 0;
    Rational density{0};
    std::map<std::string, double> eta;              // per certifier kind
    std::map<std::string, std::int64_t> detectors;  // witness presence (0/1) or count
    double wall_ms = 0.0;
    std::string status = "ok";
};

/// Runs every cell (in parallel when threads > 1); a failing cell is
/// recorded in its row's status. Rows are sorted by (construction, n, k, seed).
std::vector<ReportRow> run_experiment(const ExperimentSpec& spec, std::size_t threads = 1);

/// Fixed, versioned CSV schema. Wall time appears only with `timing`, which
/// keeps default output byte-identical across runs.
std::string rows_to_csv(const std::vector<ReportRow>& rows, bool timing = false);
nlohmann::ordered_json rows_to_json(const std::vector<ReportRow>& rows, bool timing = false);

/// File name used for a cell's hypergraph in `hypergraph_dir`.
std::string cell_file_name(const ReportRow& row);

}  // namespace qrh
