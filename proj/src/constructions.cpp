#include "qrh/constructions.hpp"

#include <algorithm>

#include "qrh/errors.hpp"
#include "qrh/hash.hpp"

namespace qrh {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

void check_n3(std::size_t n, std::size_t min_n, const char* what) {
    require(n >= min_n && n <= Hypergraph3::kMaxVertices,
            std::string(what) + ": n must lie in [" + std::to_string(min_n) + "," +
                std::to_string(Hypergraph3::kMaxVertices) + "]");
}

void check_n4(std::size_t n, const char* what) {
    require(n >= 4 && n <= Hypergraph4::kMaxVertices,
            std::string(what) + ": n must lie in [4," + std::to_string(Hypergraph4::kMaxVertices) + "]");
}

}  // namespace

// -------------------------------------------------------------- PairColouring

PairColouring PairColouring::hashed(std::size_t n, unsigned colours, std::uint64_t seed) {
    require(colours >= 1 && colours <= 255, "colour count must lie in [1,255]");
    PairColouring c(n, colours);
    c.seed_ = seed;
    c.table_.resize(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), 2)));
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            c.table_[pair_rank(u, v)] =
                static_cast<std::uint8_t>(tuple_hash(seed, HashDomain::colour, {u, v}) % colours);
    return c;
}

PairColouring PairColouring::uniform(std::size_t n, unsigned colours) {
    require(colours >= 1 && colours <= 255, "colour count must lie in [1,255]");
    PairColouring c(n, colours);
    c.table_.assign(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), 2)), 0);
    return c;
}

void PairColouring::set(Vertex u, Vertex v, unsigned c) {
    require(u != v && u < n_ && v < n_, "invalid pair");
    require(c < colours_, "colour out of range");
    if (u > v) std::swap(u, v);
    table_[pair_rank(u, v)] = static_cast<std::uint8_t>(c);
    seed_.reset();
}

// ----------------------------------------------------------------- Tournament

Tournament Tournament::hashed(std::size_t n, std::uint64_t seed) {
    Tournament t;
    t.n_ = n;
    t.low_to_high_.resize(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), 2)));
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            t.low_to_high_[pair_rank(u, v)] = tuple_hash(seed, HashDomain::arc, {u, v}) & 1U;
    return t;
}

std::size_t Tournament::out_degree(Vertex v) const {
    std::size_t d = 0;
    for (Vertex u = 0; u < n_; ++u)
        if (u != v && arc(v, u)) ++d;
    return d;
}

// ---------------------------------------------------------- TripleOrientation

TripleOrientation TripleOrientation::hashed(std::size_t n, std::uint64_t seed) {
    TripleOrientation o;
    o.n_ = n;
    o.forward_.resize(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), 3)));
    for (Vertex c = 2; c < n; ++c)
        for (Vertex b = 1; b < c; ++b)
            for (Vertex a = 0; a < b; ++a)
                o.forward_[triple_rank(a, b, c)] = tuple_hash(seed, HashDomain::triple, {a, b, c}) & 1U;
    return o;
}

// Arc pattern of a<b<c (1 = low->high) and the orientation it induces.
// forward a->b->c->a agrees with arc(a,b), arc(b,c), arc(c,a); the count is
// odd exactly when arc(a,b) ^ arc(b,c) ^ arc(a,c) == 0:
//   ab bc ac | agree(fwd) | orientation
//    1  1  0 |     3      | forward   (directed cycle a->b->c->a)
//    0  0  1 |     0      | backward  (directed cycle a->c->b->a)
//    1  1  1 |     2      | backward  (transitive a->b->c)
//    1  0  0 |     2      | backward
//    0  1  0 |     2      | backward
//    0  0  0 |     1      | forward
//    1  0  1 |     1      | forward
//    0  1  1 |     1      | forward
TripleOrientation TripleOrientation::from_tournament(const Tournament& t) {
    TripleOrientation o;
    o.n_ = t.n();
    o.forward_.resize(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(o.n_), 3)));
    for (Vertex c = 2; c < o.n_; ++c)
        for (Vertex b = 1; b < c; ++b)
            for (Vertex a = 0; a < b; ++a) {
                const int agree = int(t.arc(a, b)) + int(t.arc(b, c)) + int(t.arc(c, a));
                o.forward_[triple_rank(a, b, c)] = (agree % 2) == 1;
            }
    return o;
}

TripleOrientation TripleOrientation::from_bits(std::size_t n, std::vector<bool> forward_by_rank) {
    require(forward_by_rank.size() == static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), 3)),
            "orientation bit count must be C(n,3)");
    TripleOrientation o;
    o.n_ = n;
    o.forward_ = std::move(forward_by_rank);
    return o;
}

int TripleOrientation::traversal(Triple t, Vertex p, Vertex q) const {
    std::sort(t.begin(), t.end());
    // forward cycle t0->t1->t2->t0 traverses (t0,t1) and (t1,t2) upward, (t0,t2) downward.
    const Vertex lo = std::min(p, q), hi = std::max(p, q);
    const bool outer = lo == t[0] && hi == t[2];
    int upward = outer ? -1 : 1;
    if (!forward(t[0], t[1], t[2])) upward = -upward;
    return p < q ? upward : -upward;
}

// --------------------------------------------------------------- SkRuleTable

SkRuleTable::SkRuleTable(unsigned k) : k_(k) {
    require(k >= 4, "S_k construction needs k >= 4");
    const unsigned c = k - 1;
    allowed_.assign(static_cast<std::size_t>(c) * c * c, false);
    for (unsigned xy = 0; xy < c; ++xy)
        for (unsigned xz = 0; xz < c; ++xz)
            for (unsigned yz = 0; yz < c; ++yz) {
                const bool same_outer = xy == yz && xy != xz;
                const bool rainbow = xy != xz && xy != yz && xz != yz;
                const bool excluded = yz == (xy + 1) % c;
                allowed_[index(xy, xz, yz)] = same_outer || (rainbow && !excluded);
            }
}

SkRuleTable::SkRuleTable(unsigned k, std::vector<bool> allowed) : k_(k), allowed_(std::move(allowed)) {
    require(k >= 4, "S_k construction needs k >= 4");
    require(allowed_.size() == static_cast<std::size_t>(k - 1) * (k - 1) * (k - 1), "rule table size mismatch");
}

std::size_t SkRuleTable::allowed_count() const {
    return static_cast<std::size_t>(std::count(allowed_.begin(), allowed_.end(), true));
}

std::int64_t expected_sk_pattern_count(unsigned k) {
    const std::int64_t a = k - 1, b = k - 2, c = static_cast<std::int64_t>(k) - 3;
    return a * b + a * c * c;
}

// ---------------------------------------------------------------- generators

Hypergraph3 hypergraph_from_tournament(const Tournament& t) {
    const std::size_t n = t.n();
    Hypergraph3Builder b(n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            const bool xy = t.arc(x, y);
            for (Vertex z = y + 1; z < n; ++z)
                // cyclic iff x->y->z->x or x<-y<-z<-x
                if (xy == t.arc(y, z) && xy == t.arc(z, x)) b.add(x, y, z);
        }
    return std::move(b).build();
}

Hypergraph3 gen_tournament_3hg(std::size_t n, std::uint64_t seed) {
    check_n3(n, 4, "tournament3");
    return hypergraph_from_tournament(Tournament::hashed(n, seed));
}

Hypergraph3 gen_colouring_kk_free(std::size_t n, unsigned k, std::uint64_t seed) {
    require(k >= 3, "colouring-kk needs k >= 3");
    require(k - 2 <= 255, "colouring-kk: too many colours");
    check_n3(n, 0, "colouring-kk");
    return hypergraph_from_colouring(PairColouring::hashed(n, k - 2, seed),
                                     [](unsigned xy, unsigned xz, unsigned) { return xy != xz; });
}

Hypergraph3 gen_party_of_six(std::size_t n, std::uint64_t seed) {
    check_n3(n, 0, "party6");
    return hypergraph_from_colouring(PairColouring::hashed(n, 2, seed), [](unsigned a, unsigned b, unsigned c) {
        return !(a == b && b == c);
    });
}

Hypergraph3 rainbow_from_colouring(const PairColouring& psi) {
    require(psi.colours() == 3, "rainbow construction needs a 3-colouring");
    return hypergraph_from_colouring(psi, [](unsigned xy, unsigned xz, unsigned yz) {
        return xy == red && xz == blue && yz == green;
    });
}

Hypergraph3 gen_rainbow_1_27(std::size_t n, std::uint64_t seed) {
    check_n3(n, 0, "rainbow27");
    return rainbow_from_colouring(PairColouring::hashed(n, 3, seed));
}

PairColouring sk_free_colouring(std::size_t n, unsigned k, std::uint64_t seed) {
    require(k >= 4, "S_k construction needs k >= 4");
    require(k - 1 <= 255, "sk-free: too many colours");
    return PairColouring::hashed(n, k - 1, seed);
}

Hypergraph3 sk_free_from_colouring(const PairColouring& psi, const SkRuleTable& rule) {
    require(psi.colours() == rule.colours(), "colouring and rule table disagree on colour count");
    return hypergraph_from_colouring(
        psi, [&](unsigned xy, unsigned xz, unsigned yz) { return rule.allowed(xy, xz, yz); });
}

Hypergraph3 gen_sk_free(std::size_t n, unsigned k, std::uint64_t seed) {
    check_n3(n, 0, "sk-free");
    return sk_free_from_colouring(sk_free_colouring(n, k, seed), SkRuleTable(k));
}

bool opposite_traversal(Quad q, const TripleOrientation& o) {
    std::sort(q.begin(), q.end());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            // the two remaining vertices give the two triples through {q_i, q_j}
            Vertex rest[2];
            int r = 0;
            for (int l = 0; l < 4; ++l)
                if (l != i && l != j) rest[r++] = q[l];
            const int s1 = o.traversal({q[i], q[j], rest[0]}, q[i], q[j]);
            const int s2 = o.traversal({q[i], q[j], rest[1]}, q[i], q[j]);
            if (s1 == s2) return false;
        }
    return true;
}

Hypergraph4 hypergraph_from_orientation(const TripleOrientation& o) {
    const std::size_t n = o.n();
    Hypergraph4Builder b(n);
    // F(t) = +1 forward / -1 backward. With the pair-by-pair sign rules the
    // opposite-traversal condition on a<b<c<d reduces to
    //   F(acd) = F(abc), F(abd) = F(bcd) = -F(abc)
    // (checked against opposite_traversal() over all 16 assignments in tests).
    for (Vertex a = 0; a < n; ++a)
        for (Vertex bb = a + 1; bb < n; ++bb)
            for (Vertex c = bb + 1; c < n; ++c) {
                const bool abc = o.forward(a, bb, c);
                for (Vertex d = c + 1; d < n; ++d) {
                    if (o.forward(a, c, d) != abc || o.forward(a, bb, d) == abc || o.forward(bb, c, d) == abc)
                        continue;
                    b.add({a, bb, c, d});
                }
            }
    return std::move(b).build();
}

Hypergraph4 gen_oriented_4hg(std::size_t n, std::uint64_t seed) {
    check_n4(n, "oriented4");
    return hypergraph_from_orientation(TripleOrientation::hashed(n, seed));
}

Hypergraph4 gen_leader_tan(std::size_t n, std::uint64_t seed) {
    check_n4(n, "leader-tan");
    return hypergraph_from_orientation(TripleOrientation::from_tournament(Tournament::hashed(n, seed)));
}

// ------------------------------------------------------------------ dispatch

namespace {
struct NamedConstruction {
    Construction c;
    const char* name;
};
constexpr NamedConstruction kNames[] = {
    {Construction::tournament3, "tournament3"}, {Construction::colouring_kk, "colouring-kk"},
    {Construction::party6, "party6"},           {Construction::rainbow27, "rainbow27"},
    {Construction::sk_free, "sk-free"},         {Construction::oriented4, "oriented4"},
    {Construction::leader_tan, "leader-tan"},
};
}  // namespace

Construction parse_construction(const std::string& name) {
    for (const auto& nc : kNames)
        if (name == nc.name) return nc.c;
    throw InputError("unknown construction '" + name + "'");
}

std::string construction_name(Construction c) {
    for (const auto& nc : kNames)
        if (nc.c == c) return nc.name;
    return "?";
}

bool construction_uses_k(Construction c) { return c == Construction::colouring_kk || c == Construction::sk_free; }

int construction_arity(Construction c) {
    return (c == Construction::oriented4 || c == Construction::leader_tan) ? 4 : 3;
}

AnyHypergraph generate(Construction c, std::size_t n, unsigned k, std::uint64_t seed) {
    switch (c) {
        case Construction::tournament3: return gen_tournament_3hg(n, seed);
        case Construction::colouring_kk: return gen_colouring_kk_free(n, k, seed);
        case Construction::party6: return gen_party_of_six(n, seed);
        case Construction::rainbow27: return gen_rainbow_1_27(n, seed);
        case Construction::sk_free: return gen_sk_free(n, k, seed);
        case Construction::oriented4: return gen_oriented_4hg(n, seed);
        case Construction::leader_tan: return gen_leader_tan(n, seed);
    }
    throw InputError("unknown construction");
}

Rational expected_density(Construction c, unsigned k) {
    switch (c) {
        case Construction::tournament3: return Rational(1, 4);
        case Construction::colouring_kk: return Rational(k - 3, k - 2);
        case Construction::party6: return Rational(3, 4);
        case Construction::rainbow27: return Rational(1, 27);
        case Construction::sk_free: {
            const std::int64_t c1 = k - 1;
            return Rational(expected_sk_pattern_count(k), c1 * c1 * c1);
        }
        case Construction::oriented4: return Rational(1, 8);
        case Construction::leader_tan: return Rational(1, 4);
    }
    return Rational(0);
}

}  // namespace qrh
