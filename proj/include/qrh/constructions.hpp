#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrh/hypergraph.hpp"
#include "qrh/io.hpp"

namespace qrh {

/// Colour indices used by the three-colour constructions.
enum Colour : std::uint8_t { red = 0, blue = 1, green = 2 };

/// Symmetric map from unordered vertex pairs to colours in [0, colours).
///
/// The hashed form sets colour(u,v) = tuple_hash(seed, colour, {min, max}) mod
/// colours, so a pair's colour depends only on the pair and the seed.
class PairColouring {
public:
    static PairColouring hashed(std::size_t n, unsigned colours, std::uint64_t seed);
    /// All pairs colour 0; use `set` to fill in an explicit colouring.
    static PairColouring uniform(std::size_t n, unsigned colours);

    std::size_t n() const { return n_; }
    unsigned colours() const { return colours_; }
    std::optional<std::uint64_t> seed() const { return seed_; }
    unsigned colour(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        return table_[pair_rank(u, v)];
    }
    void set(Vertex u, Vertex v, unsigned c);

private:
    PairColouring(std::size_t n, unsigned colours) : n_(n), colours_(colours) {}
    std::size_t n_;
    unsigned colours_;
    std::optional<std::uint64_t> seed_;
    std::vector<std::uint8_t> table_;
};

/// Tournament on 0..n-1: arc(u,v) is true iff the pair is directed u -> v.
class Tournament {
public:
    static Tournament hashed(std::size_t n, std::uint64_t seed);
    std::size_t n() const { return n_; }
    bool arc(Vertex u, Vertex v) const {
        return u < v ? low_to_high_[pair_rank(u, v)] : !low_to_high_[pair_rank(v, u)];
    }
    std::size_t out_degree(Vertex v) const;

private:
    std::size_t n_ = 0;
    std::vector<bool> low_to_high_;
};

/// One of the two cyclic orientations for every triple. For a<b<c, "forward"
/// is the cycle a->b->c->a, "backward" is a->c->b->a.
class TripleOrientation {
public:
    /// Independent fair coin per triple.
    static TripleOrientation hashed(std::size_t n, std::uint64_t seed);
    /// Leader-Tan rule: pick the cyclic orientation whose arcs agree with the
    /// tournament an odd number of times (once or three times). Exactly one of
    /// the two orientations qualifies, since their agreement counts sum to 3.
    static TripleOrientation from_tournament(const Tournament& t);
    /// Explicit bits by triple rank (tests and oracles).
    static TripleOrientation from_bits(std::size_t n, std::vector<bool> forward_by_rank);

    std::size_t n() const { return n_; }
    /// Orientation of the sorted triple a<b<c.
    bool forward(Vertex a, Vertex b, Vertex c) const { return forward_[triple_rank(a, b, c)]; }
    /// +1 if the orientation of triple t traverses the pair as p -> q, else -1.
    int traversal(Triple t, Vertex p, Vertex q) const;

private:
    std::size_t n_ = 0;
    std::vector<bool> forward_;
};

/// Rule table for the S_k-free construction, indexed by the ordered colour
/// pattern (c(x,y), c(x,z), c(y,z)) of a triple x<y<z over k-1 colours.
/// Allowed: (i) c(x,y) = c(y,z) != c(x,z); (ii) all three different, except
/// patterns (i, j, i+1) with addition mod k-1.
class SkRuleTable {
public:
    explicit SkRuleTable(unsigned k);
    /// Arbitrary table (mutation tests).
    SkRuleTable(unsigned k, std::vector<bool> allowed);

    unsigned k() const { return k_; }
    unsigned colours() const { return k_ - 1; }
    bool allowed(unsigned xy, unsigned xz, unsigned yz) const { return allowed_[index(xy, xz, yz)]; }
    std::size_t allowed_count() const;
    const std::vector<bool>& table() const { return allowed_; }
    std::size_t index(unsigned xy, unsigned xz, unsigned yz) const {
        const unsigned c = colours();
        return (static_cast<std::size_t>(xy) * c + xz) * c + yz;
    }

private:
    unsigned k_;
    std::vector<bool> allowed_;
};

/// (k-1)(k-2) + (k-1)(k-3)^2.
std::int64_t expected_sk_pattern_count(unsigned k);

/// Three-vertex edge rule: every triple x<y<z whose ordered pair-colour
/// pattern satisfies `rule` becomes an edge.
template <typename Rule>
Hypergraph3 hypergraph_from_colouring(const PairColouring& c, Rule rule) {
    const std::size_t n = c.n();
    Hypergraph3Builder b(n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            const unsigned cxy = c.colour(x, y);
            for (Vertex z = y + 1; z < n; ++z)
                if (rule(cxy, c.colour(x, z), c.colour(y, z))) b.add(x, y, z);
        }
    return std::move(b).build();
}

/// Triple is an edge iff the tournament spans a directed 3-cycle on it.
Hypergraph3 gen_tournament_3hg(std::size_t n, std::uint64_t seed);
Hypergraph3 hypergraph_from_tournament(const Tournament& t);

/// Edge {x<y<z} iff phi(x,y) != phi(x,z) for a hashed (k-2)-colouring phi.
Hypergraph3 gen_colouring_kk_free(std::size_t n, unsigned k, std::uint64_t seed);
/// Edge iff the three pairs of a hashed 2-colouring are not monochromatic.
Hypergraph3 gen_party_of_six(std::size_t n, std::uint64_t seed);
/// Edge {i<j<k} iff (psi(i,j), psi(i,k), psi(j,k)) = (red, blue, green).
Hypergraph3 gen_rainbow_1_27(std::size_t n, std::uint64_t seed);
Hypergraph3 rainbow_from_colouring(const PairColouring& psi);
/// S_k-free construction over a hashed (k-1)-colouring.
Hypergraph3 gen_sk_free(std::size_t n, unsigned k, std::uint64_t seed);
Hypergraph3 sk_free_from_colouring(const PairColouring& psi, const SkRuleTable& rule);
/// The colouring gen_sk_free(n, k, seed) uses.
PairColouring sk_free_colouring(std::size_t n, unsigned k, std::uint64_t seed);

/// True iff each of the six pairs of q is traversed in opposite directions by
/// the two triples of q containing it.
bool opposite_traversal(Quad q, const TripleOrientation& o);
Hypergraph4 hypergraph_from_orientation(const TripleOrientation& o);
Hypergraph4 gen_oriented_4hg(std::size_t n, std::uint64_t seed);
Hypergraph4 gen_leader_tan(std::size_t n, std::uint64_t seed);

enum class Construction { tournament3, colouring_kk, party6, rainbow27, sk_free, oriented4, leader_tan };

Construction parse_construction(const std::string& name);
std::string construction_name(Construction c);
bool construction_uses_k(Construction c);
int construction_arity(Construction c);
/// Dispatch used by the CLI and experiment runner; k ignored where unused.
AnyHypergraph generate(Construction c, std::size_t n, unsigned k, std::uint64_t seed);
/// Limiting density of the construction as an exact rational (for
/// Leader-Tan the empirical value, 1/4).
Rational expected_density(Construction c, unsigned k);

}  // namespace qrh
