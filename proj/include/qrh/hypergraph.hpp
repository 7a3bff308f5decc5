#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qrh/bitset.hpp"
#include "qrh/graph.hpp"
#include "qrh/rational.hpp"

namespace qrh {

using Triple = std::array<Vertex, 3>;
using Quad = std::array<Vertex, 4>;

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Colex rank of u<v among pairs.
inline std::size_t pair_rank(Vertex u, Vertex v) {
    return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
}
/// Colex rank of a<b<c among triples.
inline std::size_t triple_rank(Vertex a, Vertex b, Vertex c) {
    const std::size_t cc = c, bb = b;
    return cc * (cc - 1) * (cc - 2) / 6 + bb * (bb - 1) / 2 + a;
}

struct DensityReport {
    std::int64_t edge_count = 0;
    Rational density{0};
    double value = 0.0;
};

class Hypergraph3Builder;

/// 3-uniform hypergraph on the ordered vertex set 0..n-1.
///
/// Edges are kept twice: as a lexicographically sorted triple list and as one
/// bitset row per unordered pair {u,v} holding every w with {u,v,w} an edge.
/// Immutable once built.
class Hypergraph3 {
public:
    static constexpr std::size_t kMaxVertices = 4096;

    Hypergraph3() : Hypergraph3(0) {}
    explicit Hypergraph3(std::size_t n);
    /// Throws InputError on a repeated vertex, an out-of-range vertex or a
    /// duplicate edge. Triples may be given in any vertex order.
    Hypergraph3(std::size_t n, std::span<const Triple> edges);

    std::size_t n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Triple>& edges() const { return edges_; }
    bool has_edge(Vertex a, Vertex b, Vertex c) const;

    /// {w : {u,v,w} in E}; requires u != v.
    RowView link_row(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        return RowView(rows_.data() + pair_rank(u, v) * words_, words_);
    }
    std::size_t words_per_row() const { return words_; }

    DensityReport density() const;

    friend bool operator==(const Hypergraph3& a, const Hypergraph3& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    friend class Hypergraph3Builder;
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Triple> edges_;
    std::vector<Word> rows_;
};

/// Incremental construction; `build()` derives the sorted edge list.
class Hypergraph3Builder {
public:
    explicit Hypergraph3Builder(std::size_t n);
    /// Returns false when the edge is already present.
    bool add(Vertex a, Vertex b, Vertex c);
    Hypergraph3 build() &&;

private:
    Hypergraph3 h_;
};

/// 4-uniform analogue. One bitset row per unordered triple {a,b,c} holding
/// the fourth vertices d with {a,b,c,d} an edge; pair links are derived.
class Hypergraph4 {
public:
    static constexpr std::size_t kMaxVertices = 512;

    Hypergraph4() : Hypergraph4(0) {}
    explicit Hypergraph4(std::size_t n);
    Hypergraph4(std::size_t n, std::span<const Quad> edges);

    std::size_t n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Quad>& edges() const { return edges_; }
    bool has_edge(Quad q) const;

    /// {d : {a,b,c,d} in E}; a,b,c distinct, any order.
    RowView quad_row(Vertex a, Vertex b, Vertex c) const;

    /// Graph on 0..n-1 with {x,y} adjacent iff {u,v,x,y} is an edge
    /// (u and v are isolated).
    Graph pair_link(Vertex u, Vertex v) const;

    DensityReport density() const;

    friend bool operator==(const Hypergraph4& a, const Hypergraph4& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    friend class Hypergraph4Builder;
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Quad> edges_;
    std::vector<Word> rows_;
};

class Hypergraph4Builder {
public:
    explicit Hypergraph4Builder(std::size_t n);
    bool add(Quad q);
    Hypergraph4 build() &&;

private:
    Hypergraph4 h_;
};

/// Vertex set as a membership mask; throws InputError on an out-of-range vertex.
Bitset vertex_mask(std::size_t n, std::span<const Vertex> set);

/// Number of edges contained in U.
std::int64_t count_edges_within(const Hypergraph3& h, std::span<const Vertex> set);
/// Ordered triples (x,y,z) in X x Y x Z whose underlying set is an edge.
std::int64_t count_edges_xyz(const Hypergraph3& h, std::span<const Vertex> xs, std::span<const Vertex> ys,
                             std::span<const Vertex> zs);
/// Link graph of a on 0..n-1 (a itself isolated).
Graph link_graph(const Hypergraph3& h, Vertex a);
/// Sub-hypergraph spanned by U, relabelled 0..|U|-1 in increasing order.
Hypergraph3 induced(const Hypergraph3& h, std::span<const Vertex> set);
Hypergraph4 induced(const Hypergraph4& h, std::span<const Vertex> set);

}  // namespace qrh
