#pragma once

#include <json.hpp>

#include "qrh/certifiers.hpp"
#include "qrh/detectors.hpp"
#include "qrh/multipartite.hpp"

namespace qrh {

/// Version of every structured report and of the CSV header.
inline constexpr int kReportSchemaVersion = 1;

nlohmann::ordered_json rational_json(const Rational& r);
nlohmann::ordered_json to_json(const DeviationReport& r);
nlohmann::ordered_json to_json(const Witness& w);
nlohmann::ordered_json to_json(const TriangleCountReport& r);
nlohmann::ordered_json to_json(const MeanSquareProfile& p);
nlohmann::ordered_json to_json(const ProofDiagnostics& d);
nlohmann::ordered_json to_json(const AuxProjection& p);
nlohmann::ordered_json to_json(const ThreeTriples& t);

/// Auxiliary hypergraph / block documents:
///   block: {"a":..,"b":..,"c":..,"triples":[[x,y,z],...]}
///   aux:   {"m":..,"classes":[[i,j,size],...],"blocks":[{"i":..,"j":..,"k":..,"triples":[...]},...]}
AuxBlock aux_block_from_json(const nlohmann::json& j);
AuxiliaryHypergraph aux_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const AuxBlock& b);
nlohmann::ordered_json to_json(const AuxiliaryHypergraph& a);

/// Seeded random block with each triple present independently with
/// probability p; used by the CLI and by tests.
AuxBlock random_aux_block(std::size_t a, std::size_t b, std::size_t c, double p, std::uint64_t seed);
AuxiliaryHypergraph random_aux(std::size_t m, std::size_t class_size, double p, std::uint64_t seed);

}  // namespace qrh
