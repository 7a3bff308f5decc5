#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qrh/bitset.hpp"

namespace qrh {

using Vertex = std::uint32_t;

/// Simple undirected graph on 0..n-1 with one adjacency bitset per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t n() const { return rows_.size(); }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
    const Bitset& neighbours(Vertex v) const { return rows_[v]; }
    std::size_t degree(Vertex v) const { return rows_[v].count(); }
    std::size_t edge_count() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Bitset> rows_;
};

/// Lexicographically least k-clique (vertices ascending), or nothing.
/// Depth-first over increasing vertices with candidate-set intersection and a
/// greedy-colouring bound for pruning.
std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k);

/// Number of triangles, each counted once.
std::size_t count_triangles(const Graph& g);

}  // namespace qrh
