#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qrh/bitset.hpp"
#include "qrh/graph.hpp"

namespace qrh {

/// Bipartite graph with sides X = 0..left-1 and Y = 0..right-1.
struct BipartiteGraph {
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<Bitset> rows;  // rows[x] = N(x) within Y

    BipartiteGraph() = default;
    BipartiteGraph(std::size_t l, std::size_t r) : left(l), right(r), rows(l, Bitset(r)) {}
    void add_edge(std::size_t x, std::size_t y) { rows[x].set(y); }
    bool has_edge(std::size_t x, std::size_t y) const { return rows[x].test(y); }
    std::size_t edge_count() const;
    BipartiteGraph transposed() const;
};

/// m-partite graph: parts V_0..V_{m-1}, vertex a of part i written (i, a).
/// Adjacency is stored in both directions for every ordered pair of parts.
class MultipartiteGraph {
public:
    MultipartiteGraph() = default;
    explicit MultipartiteGraph(std::vector<std::size_t> part_sizes);

    std::size_t parts() const { return sizes_.size(); }
    std::size_t part_size(std::size_t i) const { return sizes_[i]; }
    const std::vector<std::size_t>& part_sizes() const { return sizes_; }
    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.back(); }
    /// Index of (i, a) in the flattened graph.
    std::size_t global(std::size_t i, std::size_t a) const { return offsets_[i] + a; }

    void add_edge(std::size_t i, std::size_t a, std::size_t j, std::size_t b);
    void remove_edge(std::size_t i, std::size_t a, std::size_t j, std::size_t b);
    bool has_edge(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const;
    /// N_j(a) for a in V_i, as a bitset over V_j.
    const Bitset& neighbours(std::size_t i, std::size_t a, std::size_t j) const { return adj_[i * parts() + j][a]; }
    /// d_j(a) for a in V_i.
    std::size_t degree(std::size_t i, std::size_t a, std::size_t j) const { return neighbours(i, a, j).count(); }
    std::size_t edge_count() const;

    BipartiteGraph bipartite(std::size_t i, std::size_t j) const;
    /// Ordinary graph on all vertices, part by part.
    Graph flatten() const;

    friend bool operator==(const MultipartiteGraph&, const MultipartiteGraph&) = default;

private:
    void check(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const;
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> offsets_;
    std::vector<std::vector<Bitset>> adj_;  // [i*m + j][a]
};

// Text format: "mp <m> <s_1> ... <s_m>" then one line "<i> <a> <j> <b>" per
// edge with i < j, 0-based; the writer sorts lines lexicographically.
MultipartiteGraph read_multipartite(std::string_view text);
std::string write_multipartite(const MultipartiteGraph& g);

}  // namespace qrh
