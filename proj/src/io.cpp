#include "qrh/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "qrh/errors.hpp"

namespace qrh {

namespace {

std::vector<std::int64_t> parse_fields(std::string_view line, std::size_t lineno) {
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
        if (ec != std::errc()) throw ParseError(lineno, "expected an integer");
        i = static_cast<std::size_t>(ptr - line.data());
        if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            throw ParseError(lineno, "unexpected character '" + std::string(1, line[i]) + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

template <std::size_t K, typename Builder>
void read_edges(const std::vector<std::string_view>& lines, std::size_t n, std::int64_t m, Builder& b) {
    std::size_t lineno = 1;
    std::int64_t seen = 0;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        lineno = li + 1;
        auto f = parse_fields(lines[li], lineno);
        if (f.empty()) continue;
        if (f.size() != K)
            throw ParseError(lineno, "expected " + std::to_string(K) + " vertices, got " + std::to_string(f.size()));
        std::array<Vertex, K> e{};
        for (std::size_t i = 0; i < K; ++i) {
            if (f[i] < 0 || static_cast<std::size_t>(f[i]) >= n)
                throw ParseError(lineno, "vertex " + std::to_string(f[i]) + " out of range");
            if (i > 0 && f[i] <= f[i - 1]) throw ParseError(lineno, "vertices not strictly increasing");
            e[i] = static_cast<Vertex>(f[i]);
        }
        bool fresh;
        if constexpr (K == 3) fresh = b.add(e[0], e[1], e[2]);
        else fresh = b.add(e);
        if (!fresh) throw ParseError(lineno, "duplicate edge");
        ++seen;
    }
    if (seen != m)
        throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
}

}  // namespace

AnyHypergraph read_hypergraph(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input");
    auto header = parse_fields(lines[0], 1);
    if (header.size() != 3) throw ParseError(1, "header must be '<arity> <n> <m>'");
    const std::int64_t arity = header[0], n = header[1], m = header[2];
    if (arity != 3 && arity != 4) throw ParseError(1, "unsupported arity " + std::to_string(arity));
    if (n < 0 || m < 0) throw ParseError(1, "negative count in header");
    const std::size_t cap = arity == 3 ? Hypergraph3::kMaxVertices : Hypergraph4::kMaxVertices;
    if (static_cast<std::size_t>(n) > cap) throw ParseError(1, "n exceeds cap " + std::to_string(cap));
    if (arity == 3) {
        Hypergraph3Builder b(static_cast<std::size_t>(n));
        read_edges<3>(lines, static_cast<std::size_t>(n), m, b);
        return std::move(b).build();
    }
    Hypergraph4Builder b(static_cast<std::size_t>(n));
    read_edges<4>(lines, static_cast<std::size_t>(n), m, b);
    return std::move(b).build();
}

Hypergraph3 read_hypergraph3(std::string_view text) {
    auto h = read_hypergraph(text);
    if (auto* p = std::get_if<Hypergraph3>(&h)) return std::move(*p);
    throw ParseError(1, "expected a 3-uniform hypergraph");
}

Hypergraph4 read_hypergraph4(std::string_view text) {
    auto h = read_hypergraph(text);
    if (auto* p = std::get_if<Hypergraph4>(&h)) return std::move(*p);
    throw ParseError(1, "expected a 4-uniform hypergraph");
}

namespace {
template <typename H>
std::string write_any(const H& h, int arity) {
    std::string out = std::to_string(arity) + " " + std::to_string(h.n()) + " " + std::to_string(h.edge_count()) + "\n";
    out.reserve(out.size() + h.edge_count() * 4 * static_cast<std::size_t>(arity));
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}
}  // namespace

std::string write_hypergraph(const Hypergraph3& h) { return write_any(h, 3); }
std::string write_hypergraph(const Hypergraph4& h) { return write_any(h, 4); }
std::string write_hypergraph(const AnyHypergraph& h) {
    return std::visit([](const auto& x) { return write_hypergraph(x); }, h);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace qrh
