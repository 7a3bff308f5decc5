#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "qrh/hypergraph.hpp"

namespace qrh {

using AnyHypergraph = std::variant<Hypergraph3, Hypergraph4>;

// Text format: header "<arity> <n> <m>" (arity 3 or 4), then m lines of
// strictly increasing 0-based vertex ids, LF line endings. The writer emits
// edges in lexicographic order; the reader accepts any line order but rejects
// duplicates and out-of-range vertices with a ParseError naming the line.

AnyHypergraph read_hypergraph(std::string_view text);
Hypergraph3 read_hypergraph3(std::string_view text);
Hypergraph4 read_hypergraph4(std::string_view text);

std::string write_hypergraph(const Hypergraph3& h);
std::string write_hypergraph(const Hypergraph4& h);
std::string write_hypergraph(const AnyHypergraph& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace qrh
