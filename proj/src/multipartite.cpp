#include "qrh/multipartite.hpp"

#include <algorithm>
#include <tuple>

#include "qrh/errors.hpp"
#include "qrh/hash.hpp"

namespace qrh {

// ---------------------------------------------------------------- profile

bool MeanSquareProfile::satisfies(const Rational& threshold, const Rational& eps) const {
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (rho[i][j] < threshold + eps) return false;
    return true;
}

Rational MeanSquareProfile::min_ratio() const {
    Rational best(1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) best = std::min(best, rho[i][j]);
    return best;
}

Rational clique_threshold(std::size_t k) {
    if (k < 3) throw InputError("clique threshold needs k >= 3");
    const Rational r(static_cast<std::int64_t>(k) - 2, static_cast<std::int64_t>(k) - 1);
    return r * r;
}

MeanSquareProfile mean_square_profile(const MultipartiteGraph& g) {
    const std::size_t m = g.parts();
    for (std::size_t i = 0; i < m; ++i)
        if (g.part_size(i) == 0) throw InputError("mean_square_profile: part " + std::to_string(i) + " is empty");
    MeanSquareProfile p;
    p.m = m;
    p.rho.assign(m, std::vector<Rational>(m, Rational(0)));
    p.sum_squares.assign(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            std::int64_t s = 0;
            for (std::size_t x = 0; x < g.part_size(i); ++x) {
                const auto d = static_cast<std::int64_t>(g.degree(i, x, j));
                s += d * d;
            }
            const auto vi = static_cast<std::int64_t>(g.part_size(i)), vj = static_cast<std::int64_t>(g.part_size(j));
            p.sum_squares[i][j] = s;
            p.rho[i][j] = Rational(s, vi * vj * vj);
        }
    return p;
}

// ----------------------------------------------------------------- cliques

namespace {

PartVertex locate(const MultipartiteGraph& g, std::size_t global) {
    std::size_t i = 0;
    while (global >= g.part_size(i)) global -= g.part_size(i++);
    return {i, global};
}

}  // namespace

std::optional<std::vector<PartVertex>> find_clique_mp(const MultipartiteGraph& g, std::size_t k) {
    auto c = find_clique(g.flatten(), k);
    if (!c) return std::nullopt;
    std::vector<PartVertex> out;
    for (Vertex v : *c) out.push_back(locate(g, v));
    return out;
}

std::optional<std::vector<PartVertex>> find_triangle_mp(const MultipartiteGraph& g) { return find_clique_mp(g, 3); }

MultipartiteGraph half_split(std::size_t m, std::size_t s) {
    if (s % 2 != 0) throw InputError("half_split needs an even part size");
    MultipartiteGraph g(std::vector<std::size_t>(m, s));
    const std::size_t h = s / 2;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t a = 0; a < h; ++a)
                for (std::size_t b = 0; b < h; ++b) {
                    g.add_edge(i, a, j, h + b);  // A_i - B_j
                    g.add_edge(i, h + a, j, b);  // B_i - A_j
                }
    return g;
}

// ------------------------------------------------------------- diagnostics

ProofDiagnostics proof_diagnostics(const MultipartiteGraph& g, const Rational& delta, std::optional<Rational> eps) {
    if (delta <= 0 || delta >= Rational(1, 2)) throw InputError("proof_diagnostics: delta must lie in (0, 1/2)");
    const std::size_t m = g.parts();
    ProofDiagnostics d;
    d.delta = delta;
    d.r_max = static_cast<std::size_t>(boost::rational_cast<std::int64_t>(Rational(1) / (2 * delta)));
    if (Rational(static_cast<std::int64_t>(d.r_max)) > Rational(1) / (2 * delta)) --d.r_max;
    d.q_sizes.assign(m, std::vector<std::vector<std::size_t>>(m));
    d.r.assign(m, std::vector<std::size_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const auto vi = static_cast<std::int64_t>(g.part_size(i)), vj = static_cast<std::int64_t>(g.part_size(j));
            auto& q = d.q_sizes[i][j];
            q.assign(d.r_max, 0);
            for (std::size_t x = 0; x < g.part_size(i); ++x) {
                const Rational deg(static_cast<std::int64_t>(g.degree(i, x, j)));
                for (std::size_t r = 1; r <= d.r_max; ++r) {
                    if (deg < (Rational(1, 2) + static_cast<std::int64_t>(r) * delta) * vj) break;
                    ++q[r - 1];
                }
            }
            for (std::size_t r = d.r_max; r >= 1; --r)
                if (Rational(static_cast<std::int64_t>(q[r - 1])) >= delta * vi) {
                    d.r[i][j] = r;
                    break;
                }
        }
    d.eps = eps;
    if (eps) {
        d.claim_applicable = *eps >= 2 * delta + delta * delta;
        const MeanSquareProfile p = mean_square_profile(g);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                if (p.rho[i][j] < triangle_threshold() + *eps) continue;
                d.claim_checked.emplace_back(i, j);
                const std::size_t q1 = d.r_max >= 1 ? d.q_sizes[i][j][0] : 0;
                if (d.claim_applicable &&
                    Rational(static_cast<std::int64_t>(q1)) < delta * static_cast<std::int64_t>(g.part_size(i)))
                    d.claim_violations.emplace_back(i, j);
            }
    }
    return d;
}

// --------------------------------------------------------------- auxiliary

AuxProjection project_auxiliary(const AuxBlock& blk, const Rational& eps) {
    if (blk.a == 0 || blk.b == 0 || blk.c == 0) throw InputError("project_auxiliary: empty class");
    AuxProjection p;
    p.q_i = BipartiteGraph(blk.a, blk.b);
    p.q_k = BipartiteGraph(blk.b, blk.c);
    std::vector<char> seen(blk.a * blk.b * blk.c, 0);
    for (const auto& t : blk.triples) {
        if (t[0] >= blk.a || t[1] >= blk.b || t[2] >= blk.c) throw InputError("project_auxiliary: triple out of range");
        char& s = seen[(t[0] * blk.b + t[1]) * blk.c + t[2]];
        if (s) throw InputError("project_auxiliary: duplicate triple");
        s = 1;
        p.q_i.add_edge(t[0], t[1]);
        p.q_k.add_edge(t[1], t[2]);
    }
    p.triples = static_cast<std::int64_t>(blk.triples.size());
    std::vector<std::int64_t> di(blk.b, 0);
    for (std::size_t x = 0; x < blk.a; ++x) p.q_i.rows[x].for_each([&](std::size_t y) { ++di[y]; });
    for (std::size_t y = 0; y < blk.b; ++y) {
        const auto dk = static_cast<std::int64_t>(p.q_k.rows[y].count());
        p.s1 += di[y] * di[y];
        p.s2 += dk * dk;
    }
    const auto a = static_cast<std::int64_t>(blk.a), b = static_cast<std::int64_t>(blk.b),
               c = static_cast<std::int64_t>(blk.c);
    const Rational level = Rational(1, 4) + eps;
    p.star = Rational(p.s1) >= level * (a * a * b);
    p.star_star = Rational(p.s2) >= level * (c * c * b);
    p.hypothesis = Rational(p.triples) >= level * (a * b * c);
    p.colour = p.star ? BlockColour::green : BlockColour::red;
    p.flagged = p.star == p.star_star;
    p.consistent = !p.hypothesis || p.star || p.star_star;
    return p;
}

std::size_t AuxiliaryHypergraph::size(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    auto it = class_size.find({i, j});
    return it == class_size.end() ? 0 : it->second;
}

namespace {

// Membership of the triple on classes {u,v}, {u,w}, {v,w} with given vertices.
class TripleLookup {
public:
    explicit TripleLookup(const AuxiliaryHypergraph& aux) : aux_(aux) {
        for (const auto& [key, blk] : aux.blocks) {
            auto& bits = sets_[key];
            bits.assign(blk.a * blk.b * blk.c, 0);
            for (const auto& t : blk.triples)
                if (t[0] < blk.a && t[1] < blk.b && t[2] < blk.c) bits[(t[0] * blk.b + t[1]) * blk.c + t[2]] = 1;
        }
    }

    bool has(std::size_t u, std::size_t v, std::size_t w, std::uint32_t uv, std::uint32_t uw, std::uint32_t vw) const {
        std::array<std::pair<std::size_t, std::uint32_t>, 3> by_missing{{{w, uv}, {v, uw}, {u, vw}}};
        std::array<std::size_t, 3> key{u, v, w};
        std::sort(key.begin(), key.end());
        auto it = sets_.find(key);
        if (it == sets_.end()) return false;
        const AuxBlock& blk = aux_.blocks.at(key);
        // class P^{pq} is the one missing r, etc.
        auto vertex_missing = [&](std::size_t idx) {
            for (const auto& [miss, vert] : by_missing)
                if (miss == idx) return vert;
            return std::uint32_t{0};
        };
        const std::uint32_t x = vertex_missing(key[2]), y = vertex_missing(key[1]), z = vertex_missing(key[0]);
        if (x >= blk.a || y >= blk.b || z >= blk.c) return false;
        return it->second[(x * blk.b + y) * blk.c + z];
    }

private:
    const AuxiliaryHypergraph& aux_;
    std::map<std::array<std::size_t, 3>, std::vector<char>> sets_;
};

}  // namespace

bool verify_three_triples(const AuxiliaryHypergraph& aux, const ThreeTriples& t) {
    const TripleLookup look(aux);
    const auto [i1, i2, i3, i4] = t.index;
    const auto& v = t.vertex;  // 12 13 14 23 24 34
    return look.has(i1, i2, i4, v[0], v[2], v[4]) && look.has(i1, i3, i4, v[1], v[2], v[5]) &&
           look.has(i2, i3, i4, v[3], v[4], v[5]);
}

std::optional<ThreeTriples> find_three_triples(const AuxiliaryHypergraph& aux) {
    const std::size_t m = aux.m;
    if (m > 8) throw ResourceRefusal("find_three_triples: m exceeds 8");
    for (const auto& [key, s] : aux.class_size)
        if (s > 16) throw ResourceRefusal("find_three_triples: class size exceeds 16");
    if (m < 4) return std::nullopt;
    const TripleLookup look(aux);

    std::vector<std::size_t> apex_order{m - 1, 0};
    for (std::size_t i = 1; i + 1 < m; ++i) apex_order.push_back(i);
    for (std::size_t i4 : apex_order) {
        std::vector<std::size_t> parts, sizes;
        for (std::size_t i = 0; i < m; ++i)
            if (i != i4) {
                parts.push_back(i);
                sizes.push_back(aux.size(i, i4));
            }
        MultipartiteGraph g(sizes);
        for (std::size_t t = 0; t < parts.size(); ++t)
            for (std::size_t u = t + 1; u < parts.size(); ++u) {
                const std::size_t i = parts[t], j = parts[u];
                for (std::uint32_t p = 0; p < sizes[t]; ++p)
                    for (std::uint32_t q = 0; q < sizes[u]; ++q)
                        for (std::uint32_t w = 0; w < aux.size(i, j); ++w)
                            if (look.has(i, j, i4, w, p, q)) {
                                g.add_edge(t, p, u, q);
                                break;
                            }
            }
        auto tri = find_triangle_mp(g);
        if (!tri) continue;
        ThreeTriples out;
        out.index = {parts[(*tri)[0].first], parts[(*tri)[1].first], parts[(*tri)[2].first], i4};
        const auto p14 = static_cast<std::uint32_t>((*tri)[0].second);
        const auto p24 = static_cast<std::uint32_t>((*tri)[1].second);
        const auto p34 = static_cast<std::uint32_t>((*tri)[2].second);
        auto complete = [&](std::size_t ia, std::size_t ib, std::uint32_t va, std::uint32_t vb) {
            for (std::uint32_t w = 0; w < aux.size(ia, ib); ++w)
                if (look.has(ia, ib, i4, w, va, vb)) return w;
            throw std::logic_error("projection edge without a completing vertex");
        };
        const auto [i1, i2, i3, _] = out.index;
        out.vertex = {complete(i1, i2, p14, p24), complete(i1, i3, p14, p34), p14,
                      complete(i2, i3, p24, p34), p24, p34};
        out.extreme = i4 > i3 || i4 < i1;
        return out;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- explorer

namespace {

struct Objective {
    Rational min{0};
    std::size_t at_min = 0;
    Rational sum{0};

    bool better_than(const Objective& o) const {
        if (min != o.min) return min > o.min;
        if (at_min != o.at_min) return at_min < o.at_min;
        return sum > o.sum;
    }
};

Objective objective(const MultipartiteGraph& g) {
    const MeanSquareProfile p = mean_square_profile(g);
    Objective o;
    o.min = p.min_ratio();
    for (std::size_t i = 0; i < p.m; ++i)
        for (std::size_t j = i + 1; j < p.m; ++j) {
            o.sum += p.rho[i][j];
            if (p.rho[i][j] == o.min) ++o.at_min;
        }
    return o;
}

struct Slot {
    std::size_t i, a, j, b;
};

}  // namespace

ExploreResult explore_extremal(std::size_t m, std::size_t s, const Rational& eps_target, std::size_t restarts,
                               std::uint64_t seed, std::size_t steps) {
    const MultipartiteGraph start = half_split(m, s);
    const Objective start_obj = objective(start);
    const Rational target = triangle_threshold() + eps_target;

    ExploreResult best;
    best.graph = start;
    best.start_ratio = start_obj.min;
    Objective best_obj = start_obj;

    for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
        SplitMixRng rng(tuple_hash(seed, HashDomain::search, {static_cast<std::uint64_t>(r)}));
        MultipartiteGraph g = start;
        Objective cur = start_obj;
        std::size_t accepted = 0;
        // with fewer than three parts nothing can close a triangle, so keep
        // going past the target towards the complete graph
        for (std::size_t step = 0; step < steps && (m < 3 || cur.min < target); ++step) {
            std::vector<Slot> free;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    for (std::size_t a = 0; a < s; ++a)
                        for (std::size_t b = 0; b < s; ++b)
                            if (!g.has_edge(i, a, j, b)) free.push_back({i, a, j, b});
            if (free.empty()) break;
            const Slot e = free[rng.below(free.size())];
            // common neighbours of the new edge's ends
            std::vector<PartVertex> common;
            for (std::size_t k = 0; k < m; ++k) {
                if (k == e.i || k == e.j) continue;
                Bitset both = g.neighbours(e.i, e.a, k);
                both &= g.neighbours(e.j, e.b, k).view();
                both.for_each([&](std::size_t c) { common.emplace_back(k, c); });
            }
            MultipartiteGraph cand = g;
            if (common.size() == 1) {
                const auto [k, c] = common.front();
                if (rng.coin()) cand.remove_edge(e.i, e.a, k, c);
                else cand.remove_edge(e.j, e.b, k, c);
            } else if (!common.empty()) {
                continue;
            }
            cand.add_edge(e.i, e.a, e.j, e.b);
            const Objective o = objective(cand);
            if (o.better_than(cur)) {
                g = std::move(cand);
                cur = o;
                ++accepted;
            }
        }
        if (cur.better_than(best_obj)) {
            best_obj = cur;
            best.graph = g;
            best.best_restart = r;
            best.accepted_moves = accepted;
        }
    }
    best.min_ratio = best_obj.min;
    best.target_reached = best_obj.min >= target;
    best.triangle_free = !find_triangle_mp(best.graph).has_value();
    return best;
}

}  // namespace qrh
