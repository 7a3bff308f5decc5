#include "qrh/multipartite_graph.hpp"

#include <charconv>
#include <sstream>

#include "qrh/errors.hpp"

namespace qrh {

std::size_t BipartiteGraph::edge_count() const {
    std::size_t e = 0;
    for (const auto& r : rows) e += r.count();
    return e;
}

BipartiteGraph BipartiteGraph::transposed() const {
    BipartiteGraph t(right, left);
    for (std::size_t x = 0; x < left; ++x) rows[x].for_each([&](std::size_t y) { t.rows[y].set(x); });
    return t;
}

MultipartiteGraph::MultipartiteGraph(std::vector<std::size_t> part_sizes) : sizes_(std::move(part_sizes)) {
    const std::size_t m = sizes_.size();
    offsets_.assign(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) offsets_[i + 1] = offsets_[i] + sizes_[i];
    adj_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) adj_[i * m + j].assign(sizes_[i], Bitset(sizes_[j]));
}

void MultipartiteGraph::check(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
    if (i >= parts() || j >= parts()) throw InputError("part index out of range");
    if (i == j) throw InputError("no edges inside a part");
    if (a >= sizes_[i] || b >= sizes_[j]) throw InputError("vertex index out of range for its part");
}

void MultipartiteGraph::add_edge(std::size_t i, std::size_t a, std::size_t j, std::size_t b) {
    check(i, a, j, b);
    adj_[i * parts() + j][a].set(b);
    adj_[j * parts() + i][b].set(a);
}

void MultipartiteGraph::remove_edge(std::size_t i, std::size_t a, std::size_t j, std::size_t b) {
    check(i, a, j, b);
    adj_[i * parts() + j][a].reset(b);
    adj_[j * parts() + i][b].reset(a);
}

bool MultipartiteGraph::has_edge(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const {
    if (i == j || i >= parts() || j >= parts() || a >= sizes_[i] || b >= sizes_[j]) return false;
    return adj_[i * parts() + j][a].test(b);
}

std::size_t MultipartiteGraph::edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < parts(); ++i)
        for (std::size_t j = i + 1; j < parts(); ++j)
            for (const auto& r : adj_[i * parts() + j]) e += r.count();
    return e;
}

BipartiteGraph MultipartiteGraph::bipartite(std::size_t i, std::size_t j) const {
    if (i == j || i >= parts() || j >= parts()) throw InputError("bipartite(): need two distinct parts");
    BipartiteGraph b(sizes_[i], sizes_[j]);
    b.rows = adj_[i * parts() + j];
    return b;
}

Graph MultipartiteGraph::flatten() const {
    Graph g(vertex_count());
    for (std::size_t i = 0; i < parts(); ++i)
        for (std::size_t j = i + 1; j < parts(); ++j)
            for (std::size_t a = 0; a < sizes_[i]; ++a)
                adj_[i * parts() + j][a].for_each([&](std::size_t b) {
                    g.add_edge(static_cast<Vertex>(global(i, a)), static_cast<Vertex>(global(j, b)));
                });
    return g;
}

namespace {

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream ss{std::string(line)};
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

std::size_t to_index(const std::string& s, std::size_t lineno) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(lineno, "expected a non-negative integer");
    return v;
}

}  // namespace

MultipartiteGraph read_multipartite(std::string_view text) {
    std::size_t lineno = 0, start = 0;
    MultipartiteGraph g;
    bool have_header = false;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++lineno;
        auto t = tokens(line);
        if (t.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (!have_header) {
            if (t[0] != "mp" || t.size() < 2) throw ParseError(lineno, "header must be 'mp <m> <s_1..s_m>'");
            const std::size_t m = to_index(t[1], lineno);
            if (t.size() != m + 2) throw ParseError(lineno, "header lists the wrong number of part sizes");
            std::vector<std::size_t> sizes;
            for (std::size_t i = 0; i < m; ++i) sizes.push_back(to_index(t[i + 2], lineno));
            g = MultipartiteGraph(std::move(sizes));
            have_header = true;
            continue;
        }
        if (t.size() != 4) throw ParseError(lineno, "edge line must be '<i> <a> <j> <b>'");
        const std::size_t i = to_index(t[0], lineno), a = to_index(t[1], lineno);
        const std::size_t j = to_index(t[2], lineno), b = to_index(t[3], lineno);
        if (i >= j) throw ParseError(lineno, "edge line needs i < j");
        if (j >= g.parts() || a >= g.part_size(i) || b >= g.part_size(j))
            throw ParseError(lineno, "vertex out of range");
        if (g.has_edge(i, a, j, b)) throw ParseError(lineno, "duplicate edge");
        g.add_edge(i, a, j, b);
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError(1, "missing 'mp' header");
    return g;
}

std::string write_multipartite(const MultipartiteGraph& g) {
    std::string out = "mp " + std::to_string(g.parts());
    for (auto s : g.part_sizes()) out += " " + std::to_string(s);
    out += '\n';
    for (std::size_t i = 0; i < g.parts(); ++i)
        for (std::size_t a = 0; a < g.part_size(i); ++a)
            for (std::size_t j = i + 1; j < g.parts(); ++j)
                g.neighbours(i, a, j).for_each([&](std::size_t b) {
                    out += std::to_string(i) + " " + std::to_string(a) + " " + std::to_string(j) + " " +
                           std::to_string(b) + "\n";
                });
    return out;
}

}  // namespace qrh
