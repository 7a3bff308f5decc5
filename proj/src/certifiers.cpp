#include "qrh/certifiers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "qrh/errors.hpp"
#include "qrh/hash.hpp"

namespace qrh {

using i128 = __int128;

std::string method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::local_search: return "local-search";
        case Method::sampled: return "sampled";
    }
    return "?";
}

namespace {

i128 iabs(i128 x) { return x < 0 ? -x : x; }

Rational resolve_density(std::optional<Rational> d, const Rational& fallback) {
    Rational r = d.value_or(fallback);
    if (r < 0 || r > 1) throw InputError("reference density must lie in [0,1]");
    return r;
}

/// num/den as a reduced Rational; throws if it does not fit 64 bits.
Rational make_rational(i128 num, std::int64_t den) {
    i128 a = iabs(num), b = den;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    const i128 g = a == 0 ? 1 : a;
    const i128 rn = num / g, rd = den / g;
    if (rn > INT64_MAX || rn < INT64_MIN)
        throw InputError("deviation numerator overflows; pass a reference density with a smaller denominator");
    return Rational(static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd));
}

void check_cap(std::size_t size, std::size_t cap, std::size_t hard, const char* what) {
    if (cap > hard)
        throw InputError(std::string(what) + ": configured exact cap " + std::to_string(cap) + " exceeds hard limit " +
                         std::to_string(hard));
    if (size > cap)
        throw ResourceRefusal(std::string(what) + ": exact mode refused for size " + std::to_string(size) +
                              " (cap " + std::to_string(cap) + ")");
}

std::vector<Vertex> mask_members(std::uint64_t mask) {
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

std::vector<Vertex> flag_members(const std::vector<char>& in) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < in.size(); ++v)
        if (in[v]) out.push_back(static_cast<Vertex>(v));
    return out;
}

double cube(std::size_t n) { return static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n); }

std::uint64_t restart_seed(std::uint64_t seed, std::size_t r) {
    return tuple_hash(seed, HashDomain::search, {static_cast<std::uint64_t>(r)});
}

// Small-n adjacency: mask32[u*n+v] = {w : {u,v,w} in E}.
std::vector<std::uint32_t> small_rows(const Hypergraph3& h) {
    const std::size_t n = h.n();
    std::vector<std::uint32_t> rows(n * n, 0);
    for (const Triple& t : h.edges()) {
        auto add = [&](Vertex a, Vertex b, Vertex c) {
            rows[a * n + b] |= 1U << c;
            rows[b * n + a] |= 1U << c;
        };
        add(t[0], t[1], t[2]);
        add(t[0], t[2], t[1]);
        add(t[1], t[2], t[0]);
    }
    return rows;
}

// ------------------------------------------------------------ weak: exact

DeviationReport weak_exact(const Hypergraph3& h, const Rational& d) {
    const std::size_t n = h.n();
    const auto rows = small_rows(h);
    const i128 p = d.numerator(), q = d.denominator();
    std::vector<std::int64_t> c3(n + 1);
    for (std::size_t s = 0; s <= n; ++s) c3[s] = binomial(static_cast<std::int64_t>(s), 3);

    std::uint32_t u = 0, best_u = 0;
    std::int64_t e = 0;
    std::size_t s = 0;
    i128 best = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        const unsigned v = static_cast<unsigned>(std::countr_zero(i));
        const std::uint32_t bit = 1U << v;
        const std::uint32_t rest = u & ~bit;
        std::int64_t twice = 0;
        for (std::uint32_t m = rest; m; m &= m - 1)
            twice += std::popcount(rows[v * n + static_cast<unsigned>(std::countr_zero(m))] & rest);
        if (u & bit) {
            e -= twice / 2;
            --s;
        } else {
            e += twice / 2;
            ++s;
        }
        u ^= bit;
        const i128 val = iabs(q * e - p * c3[s]);
        if (val > best) {
            best = val;
            best_u = u;
        }
    }
    DeviationReport r;
    r.max_deviation = make_rational(best, static_cast<std::int64_t>(q));
    r.witness = {mask_members(best_u)};
    r.method = Method::exact;
    return r;
}

// ----------------------------------------------------------- weak: search

DeviationReport weak_search(const Hypergraph3& h, const Rational& d, const SearchOptions& opt) {
    const std::size_t n = h.n();
    const i128 p = d.numerator(), q = d.denominator();
    auto value = [&](std::int64_t e, std::int64_t s) {
        return iabs(q * e - p * binomial(s, 3));
    };
    i128 best = -1;
    std::vector<char> best_in;
    for (std::size_t r = 0; r < std::max<std::size_t>(opt.restarts, 1); ++r) {
        SplitMixRng rng(restart_seed(opt.seed, r));
        std::vector<char> in(n, 0);
        Bitset mask(n);
        for (std::size_t v = 0; v < n; ++v)
            if (r == 0 || rng.coin()) {
                in[v] = 1;
                mask.set(v);
            }
        std::vector<std::int64_t> deg(n, 0);
        std::int64_t e = 0, s = static_cast<std::int64_t>(std::count(in.begin(), in.end(), 1));
        for (const Triple& t : h.edges()) {
            if (in[t[1]] && in[t[2]]) ++deg[t[0]];
            if (in[t[0]] && in[t[2]]) ++deg[t[1]];
            if (in[t[0]] && in[t[1]]) ++deg[t[2]];
            if (in[t[0]] && in[t[1]] && in[t[2]]) ++e;
        }
        i128 cur = value(e, s);
        while (true) {
            i128 cand_best = cur;
            std::size_t pick = n;
            for (std::size_t v = 0; v < n; ++v) {
                const i128 val = in[v] ? value(e - deg[v], s - 1) : value(e + deg[v], s + 1);
                if (val > cand_best) {
                    cand_best = val;
                    pick = v;
                }
            }
            if (pick == n) break;
            const Vertex v = static_cast<Vertex>(pick);
            const int sign = in[v] ? -1 : 1;
            e += sign * deg[v];
            s += sign;
            for (Vertex w = 0; w < n; ++w)
                if (w != v) deg[w] += sign * static_cast<std::int64_t>(popcount_and(h.link_row(v, w), mask.view()));
            in[v] = !in[v];
            mask.assign(v, in[v]);
            cur = cand_best;
        }
        if (cur > best) {
            best = cur;
            best_in = in;
        }
    }
    DeviationReport rep;
    rep.max_deviation = make_rational(best, static_cast<std::int64_t>(q));
    rep.witness = {flag_members(best_in)};
    rep.method = Method::local_search;
    rep.restarts = std::max<std::size_t>(opt.restarts, 1);
    rep.seed = opt.seed;
    return rep;
}

}  // namespace

DeviationReport weak_deviation(const Hypergraph3& h, std::optional<Rational> d_opt, const SearchOptions& opt) {
    const Rational d = resolve_density(d_opt, h.density().density);
    DeviationReport r;
    if (opt.mode == Method::exact) {
        check_cap(h.n(), opt.caps.weak, ExactCaps::kWeakHardLimit, "weak_deviation");
        r = weak_exact(h, d);
    } else {
        r = weak_search(h, d, opt);
    }
    r.kind = "weak";
    r.n = h.n();
    r.reference_density = d;
    r.eta = h.n() == 0 ? 0.0 : to_double(r.max_deviation) / cube(h.n());
    return r;
}

// ------------------------------------------------------------------- xyz

DeviationReport xyz_deviation(const Hypergraph3& h, std::optional<Rational> d_opt, std::size_t samples,
                              std::uint64_t seed, std::optional<Rational> weak_max_deviation) {
    if (samples < 1) throw InputError("xyz_deviation needs samples >= 1");
    const Rational d = resolve_density(d_opt, h.density().density);
    const std::size_t n = h.n();
    const i128 p = d.numerator(), q = d.denominator();

    DeviationReport rep;
    rep.kind = "xyz";
    rep.n = n;
    rep.reference_density = d;
    rep.method = Method::sampled;
    rep.samples = samples;
    rep.seed = seed;

    // |q e - p xyz| * bd <= 7 bn q  <=>  |e - d xyz| <= 7 D
    const bool check_bound = weak_max_deviation.has_value();
    const i128 bn = check_bound ? weak_max_deviation->numerator() : 0;
    const i128 bd = check_bound ? weak_max_deviation->denominator() : 1;

    i128 best = -1;
    std::vector<std::int8_t> best_lab;
    SplitMixRng rng(seed);
    for (std::size_t sample = 0; sample < samples; ++sample) {
        std::vector<std::int8_t> lab(n, -1);
        std::array<Bitset, 3> part{Bitset(n), Bitset(n), Bitset(n)};
        std::array<std::int64_t, 3> size{0, 0, 0};
        const double keep = rng.unit();
        for (std::size_t v = 0; v < n; ++v)
            if (rng.unit() < keep) {
                const auto l = static_cast<std::int8_t>(rng.below(3));
                lab[v] = l;
                part[l].set(v);
                ++size[l];
            }
        // contribution of v when labelled l: edges {v,a,b} with a, b in the other two parts
        auto contribution = [&](Vertex v, int l) {
            const int l1 = (l + 1) % 3, l2 = (l + 2) % 3;
            std::int64_t c = 0;
            part[l1].for_each([&](std::size_t a) {
                if (a != v) c += static_cast<std::int64_t>(popcount_and(h.link_row(v, static_cast<Vertex>(a)), part[l2].view()));
            });
            return c;
        };
        std::int64_t e = 0;
        part[0].for_each([&](std::size_t x) { e += contribution(static_cast<Vertex>(x), 0); });
        auto value = [&](std::int64_t ee, const std::array<std::int64_t, 3>& sz) {
            return iabs(q * ee - p * (i128{sz[0]} * sz[1] * sz[2]));
        };
        auto record = [&](i128 val) {
            if (!check_bound) return;
            ++rep.bound_checks;
            if (val * bd > 7 * bn * q) ++rep.bound_violations;
        };
        i128 cur = value(e, size);
        record(cur);
        for (int sweep = 0; sweep < 8; ++sweep) {
            bool improved = false;
            for (Vertex v = 0; v < n; ++v) {
                const int from = lab[v];
                std::array<std::int64_t, 3> c{};
                for (int l = 0; l < 3; ++l) c[l] = contribution(v, l);
                const std::int64_t base = e - (from >= 0 ? c[from] : 0);
                int best_to = from;
                i128 best_val = cur;
                for (int to = -1; to < 3; ++to) {
                    if (to == from) continue;
                    auto sz = size;
                    if (from >= 0) --sz[from];
                    if (to >= 0) ++sz[to];
                    const i128 val = value(base + (to >= 0 ? c[to] : 0), sz);
                    if (val > best_val) {
                        best_val = val;
                        best_to = to;
                    }
                }
                if (best_to != from) {
                    if (from >= 0) {
                        part[from].reset(v);
                        --size[from];
                    }
                    if (best_to >= 0) {
                        part[best_to].set(v);
                        ++size[best_to];
                    }
                    e = base + (best_to >= 0 ? c[best_to] : 0);
                    lab[v] = static_cast<std::int8_t>(best_to);
                    cur = best_val;
                    record(cur);
                    improved = true;
                }
            }
            if (!improved) break;
        }
        if (cur > best) {
            best = cur;
            best_lab = lab;
        }
    }
    rep.max_deviation = make_rational(best, static_cast<std::int64_t>(q));
    rep.eta = n == 0 ? 0.0 : to_double(rep.max_deviation) / cube(n);
    rep.witness.assign(3, {});
    for (std::size_t v = 0; v < n; ++v)
        if (best_lab[v] >= 0) rep.witness[best_lab[v]].push_back(static_cast<Vertex>(v));
    return rep;
}

// ------------------------------------------------------------------ pair

namespace {

DeviationReport pair_exact(const Hypergraph3& h, const Rational& d) {
    const std::size_t n = h.n();
    const auto rows = small_rows(h);
    std::vector<std::uint32_t> pr;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            pr.push_back(rows[u * n + v]);
            pairs.emplace_back(u, v);
        }
    const std::int64_t p = d.numerator(), q = d.denominator();
    std::int64_t best = -1;
    std::uint32_t best_u = 0;
    bool best_positive = true;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < total; ++m) {
        const auto u = static_cast<std::uint32_t>(m);
        const std::int64_t ps = p * std::popcount(u);
        std::int64_t pos = 0, neg = 0;
        for (std::uint32_t row : pr) {
            const std::int64_t r = q * std::popcount(row & u) - ps;
            if (r > 0) pos += r;
            else neg -= r;
        }
        const std::int64_t val = std::max(pos, neg);
        if (val > best) {
            best = val;
            best_u = u;
            best_positive = pos >= neg;
        }
    }
    DeviationReport rep;
    rep.max_deviation = Rational(best, q);
    rep.witness = {mask_members(best_u)};
    const std::int64_t ps = p * std::popcount(best_u);
    for (std::size_t i = 0; i < pr.size(); ++i) {
        const std::int64_t r = q * std::popcount(pr[i] & best_u) - ps;
        if ((best_positive && r > 0) || (!best_positive && r < 0)) rep.witness_pairs.push_back(pairs[i]);
    }
    rep.method = Method::exact;
    return rep;
}

DeviationReport pair_search(const Hypergraph3& h, const Rational& d, const SearchOptions& opt) {
    const std::size_t n = h.n();
    const i128 p = d.numerator(), q = d.denominator();
    const std::size_t npairs = static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), 2));
    // link[v] = pair ranks p with p + v an edge
    std::vector<std::vector<std::uint32_t>> link(n);
    for (const Triple& t : h.edges()) {
        link[t[0]].push_back(static_cast<std::uint32_t>(pair_rank(t[1], t[2])));
        link[t[1]].push_back(static_cast<std::uint32_t>(pair_rank(t[0], t[2])));
        link[t[2]].push_back(static_cast<std::uint32_t>(pair_rank(t[0], t[1])));
    }
    std::vector<std::pair<Vertex, Vertex>> pairs(npairs);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs[pair_rank(u, v)] = {u, v};

    // histogram of pair degrees; value = max(sum of positive, sum of negative residuals)
    auto evaluate = [&](const std::vector<std::int64_t>& cnt, std::int64_t s) {
        i128 pos = 0, neg = 0;
        for (std::size_t t = 0; t < cnt.size(); ++t) {
            if (!cnt[t]) continue;
            const i128 r = q * static_cast<i128>(t) - p * s;
            if (r > 0) pos += r * cnt[t];
            else neg -= r * cnt[t];
        }
        return std::pair{std::max(pos, neg), pos >= neg};
    };

    i128 best = -1;
    std::vector<char> best_in;
    const std::size_t restarts = std::max<std::size_t>(opt.restarts, 1);
    for (std::size_t r = 0; r < restarts; ++r) {
        SplitMixRng rng(restart_seed(opt.seed, r));
        std::vector<char> in(n, 0);
        for (std::size_t v = 0; v < n; ++v) in[v] = (r == 0 || rng.coin()) ? 1 : 0;
        std::vector<std::int64_t> deg(npairs, 0), cnt(n + 1, 0);
        std::int64_t s = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (in[v]) {
                ++s;
                for (auto pi : link[v]) ++deg[pi];
            }
        for (auto dg : deg) ++cnt[static_cast<std::size_t>(dg)];
        auto shift = [&](Vertex v, int sign) {
            for (auto pi : link[v]) {
                --cnt[static_cast<std::size_t>(deg[pi])];
                deg[pi] += sign;
                ++cnt[static_cast<std::size_t>(deg[pi])];
            }
        };
        i128 cur = evaluate(cnt, s).first;
        while (true) {
            i128 cand_best = cur;
            std::size_t pick = n;
            for (Vertex v = 0; v < n; ++v) {
                const int sign = in[v] ? -1 : 1;
                shift(v, sign);
                const i128 val = evaluate(cnt, s + sign).first;
                shift(v, -sign);
                if (val > cand_best) {
                    cand_best = val;
                    pick = v;
                }
            }
            if (pick == n) break;
            const int sign = in[pick] ? -1 : 1;
            shift(static_cast<Vertex>(pick), sign);
            s += sign;
            in[pick] = !in[pick];
            cur = cand_best;
        }
        if (cur > best) {
            best = cur;
            best_in = in;
        }
    }
    DeviationReport rep;
    rep.max_deviation = make_rational(best, static_cast<std::int64_t>(q));
    rep.witness = {flag_members(best_in)};
    // sign-optimal pair set for the witness U
    const Bitset mask = vertex_mask(n, rep.witness[0]);
    const i128 ps = p * static_cast<i128>(rep.witness[0].size());
    i128 pos = 0, neg = 0;
    std::vector<i128> res(npairs);
    for (std::size_t i = 0; i < npairs; ++i) {
        res[i] = q * static_cast<i128>(popcount_and(h.link_row(pairs[i].first, pairs[i].second), mask.view())) - ps;
        if (res[i] > 0) pos += res[i];
        else neg -= res[i];
    }
    for (std::size_t i = 0; i < npairs; ++i)
        if ((pos >= neg && res[i] > 0) || (pos < neg && res[i] < 0)) rep.witness_pairs.push_back(pairs[i]);
    rep.method = Method::local_search;
    rep.restarts = restarts;
    rep.seed = opt.seed;
    return rep;
}

}  // namespace

DeviationReport pair_deviation(const Hypergraph3& h, std::optional<Rational> d_opt, const SearchOptions& opt) {
    const Rational d = resolve_density(d_opt, h.density().density);
    DeviationReport r;
    if (opt.mode == Method::exact) {
        check_cap(h.n(), opt.caps.pair, ExactCaps::kPairHardLimit, "pair_deviation");
        r = pair_exact(h, d);
    } else {
        r = pair_search(h, d, opt);
    }
    r.kind = "pair";
    r.n = h.n();
    r.reference_density = d;
    r.eta = h.n() == 0 ? 0.0 : to_double(r.max_deviation) / cube(h.n());
    return r;
}

// ------------------------------------------------------------------ quad

DeviationReport quad_vertex_deviation(const Hypergraph4& h, std::optional<Rational> d_opt, std::size_t samples,
                                      std::uint64_t seed) {
    if (samples < 1) throw InputError("quad_vertex_deviation needs samples >= 1");
    const Rational d = resolve_density(d_opt, h.density().density);
    const std::size_t n = h.n();
    const i128 p = d.numerator(), q = d.denominator();
    std::vector<std::vector<std::uint32_t>> incident(n);
    for (std::uint32_t i = 0; i < h.edges().size(); ++i)
        for (Vertex v : h.edges()[i]) incident[v].push_back(i);

    auto value = [&](std::int64_t e, const std::array<std::int64_t, 4>& sz) {
        return iabs(q * e - p * (i128{sz[0]} * sz[1] * sz[2] * sz[3]));
    };
    DeviationReport rep;
    rep.kind = "quad";
    rep.n = n;
    rep.reference_density = d;
    rep.method = Method::sampled;
    rep.samples = samples;
    rep.seed = seed;

    i128 best = -1;
    std::vector<std::int8_t> best_lab;
    SplitMixRng rng(seed);
    for (std::size_t sample = 0; sample < samples; ++sample) {
        std::vector<std::int8_t> lab(n, -1);
        std::array<std::int64_t, 4> size{};
        const double keep = rng.unit();
        for (std::size_t v = 0; v < n; ++v)
            if (rng.unit() < keep) {
                lab[v] = static_cast<std::int8_t>(rng.below(4));
                ++size[lab[v]];
            }
        auto rainbow = [&](const Quad& e) {
            unsigned mask = 0;
            for (Vertex v : e) {
                if (lab[v] < 0) return false;
                mask |= 1U << lab[v];
            }
            return mask == 0xF;
        };
        std::int64_t e = 0;
        for (const Quad& q4 : h.edges()) e += rainbow(q4);
        i128 cur = value(e, size);
        for (int sweep = 0; sweep < 6; ++sweep) {
            bool improved = false;
            for (Vertex v = 0; v < n; ++v) {
                // c[l]: edges through v whose other three vertices carry exactly the labels != l
                std::array<std::int64_t, 4> c{};
                for (auto ei : incident[v]) {
                    unsigned mask = 0;
                    bool ok = true;
                    for (Vertex w : h.edges()[ei]) {
                        if (w == v) continue;
                        if (lab[w] < 0 || (mask >> lab[w]) & 1U) {
                            ok = false;
                            break;
                        }
                        mask |= 1U << lab[w];
                    }
                    if (ok) ++c[static_cast<std::size_t>(std::countr_zero(~mask & 0xFU))];
                }
                const int from = lab[v];
                const std::int64_t base = e - (from >= 0 ? c[from] : 0);
                int best_to = from;
                i128 best_val = cur;
                for (int to = -1; to < 4; ++to) {
                    if (to == from) continue;
                    auto sz = size;
                    if (from >= 0) --sz[from];
                    if (to >= 0) ++sz[to];
                    const i128 val = value(base + (to >= 0 ? c[to] : 0), sz);
                    if (val > best_val) {
                        best_val = val;
                        best_to = to;
                    }
                }
                if (best_to != from) {
                    if (from >= 0) --size[from];
                    if (best_to >= 0) ++size[best_to];
                    e = base + (best_to >= 0 ? c[best_to] : 0);
                    lab[v] = static_cast<std::int8_t>(best_to);
                    cur = best_val;
                    improved = true;
                }
            }
            if (!improved) break;
        }
        if (cur > best) {
            best = cur;
            best_lab = lab;
        }
    }
    rep.max_deviation = make_rational(best, static_cast<std::int64_t>(q));
    const double n4 = cube(n) * static_cast<double>(n);
    rep.eta = n == 0 ? 0.0 : to_double(rep.max_deviation) / n4;
    rep.witness.assign(4, {});
    for (std::size_t v = 0; v < n; ++v)
        if (best_lab[v] >= 0) rep.witness[best_lab[v]].push_back(static_cast<Vertex>(v));
    return rep;
}

// ------------------------------------------------------------- bipartite

namespace {

// Evaluates max(sum of positive, sum of negative) residuals q deg(y) - p s from
// a histogram of right-side degrees.
struct DegreeHistogram {
    std::vector<std::int64_t> cnt;
    std::pair<i128, bool> value(i128 p, i128 q, std::int64_t s) const {
        i128 pos = 0, neg = 0;
        for (std::size_t t = 0; t < cnt.size(); ++t) {
            if (!cnt[t]) continue;
            const i128 r = q * static_cast<i128>(t) - p * s;
            if (r > 0) pos += r * cnt[t];
            else neg -= r * cnt[t];
        }
        return {std::max(pos, neg), pos >= neg};
    }
};

std::vector<Vertex> sign_optimal_right(const BipartiteGraph& g, const std::vector<Vertex>& left_set, i128 p, i128 q,
                                       bool positive) {
    std::vector<std::int64_t> deg(g.right, 0);
    for (Vertex x : left_set) g.rows[x].for_each([&](std::size_t y) { ++deg[y]; });
    std::vector<Vertex> out;
    const i128 ps = p * static_cast<i128>(left_set.size());
    for (std::size_t y = 0; y < g.right; ++y) {
        const i128 r = q * deg[y] - ps;
        if ((positive && r > 0) || (!positive && r < 0)) out.push_back(static_cast<Vertex>(y));
    }
    return out;
}

DeviationReport bipartite_exact(const BipartiteGraph& g, const Rational& d) {
    const i128 p = d.numerator(), q = d.denominator();
    const std::size_t a = g.left;
    std::vector<std::vector<std::uint32_t>> nbrs(a);
    for (std::size_t x = 0; x < a; ++x)
        g.rows[x].for_each([&](std::size_t y) { nbrs[x].push_back(static_cast<std::uint32_t>(y)); });
    std::vector<std::int64_t> deg(g.right, 0);
    DegreeHistogram hist{std::vector<std::int64_t>(a + 1, 0)};
    hist.cnt[0] = static_cast<std::int64_t>(g.right);
    std::uint64_t cur = 0, best_mask = 0;
    std::int64_t s = 0;
    auto [best, best_pos] = hist.value(p, q, 0);
    const std::uint64_t total = std::uint64_t{1} << a;
    for (std::uint64_t i = 1; i < total; ++i) {
        const unsigned x = static_cast<unsigned>(std::countr_zero(i));
        const int sign = (cur >> x) & 1U ? -1 : 1;
        for (auto y : nbrs[x]) {
            --hist.cnt[static_cast<std::size_t>(deg[y])];
            deg[y] += sign;
            ++hist.cnt[static_cast<std::size_t>(deg[y])];
        }
        s += sign;
        cur ^= std::uint64_t{1} << x;
        auto [val, positive] = hist.value(p, q, s);
        if (val > best) {
            best = val;
            best_pos = positive;
            best_mask = cur;
        }
    }
    DeviationReport rep;
    rep.max_deviation = make_rational(best, static_cast<std::int64_t>(q));
    auto left_set = mask_members(best_mask);
    rep.witness = {left_set, sign_optimal_right(g, left_set, p, q, best_pos)};
    rep.method = Method::exact;
    return rep;
}

DeviationReport bipartite_search(const BipartiteGraph& g, const Rational& d, const SearchOptions& opt) {
    const i128 p = d.numerator(), q = d.denominator();
    const std::size_t a = g.left;
    std::vector<std::vector<std::uint32_t>> nbrs(a);
    for (std::size_t x = 0; x < a; ++x)
        g.rows[x].for_each([&](std::size_t y) { nbrs[x].push_back(static_cast<std::uint32_t>(y)); });
    i128 best = -1;
    bool best_pos = true;
    std::vector<char> best_in;
    const std::size_t restarts = std::max<std::size_t>(opt.restarts, 1);
    for (std::size_t r = 0; r < restarts; ++r) {
        SplitMixRng rng(restart_seed(opt.seed, r));
        std::vector<char> in(a, 0);
        std::vector<std::int64_t> deg(g.right, 0);
        std::int64_t s = 0;
        for (std::size_t x = 0; x < a; ++x)
            if (r == 0 || rng.coin()) {
                in[x] = 1;
                ++s;
                for (auto y : nbrs[x]) ++deg[y];
            }
        DegreeHistogram hist{std::vector<std::int64_t>(a + 1, 0)};
        for (auto dg : deg) ++hist.cnt[static_cast<std::size_t>(dg)];
        auto shift = [&](std::size_t x, int sign) {
            for (auto y : nbrs[x]) {
                --hist.cnt[static_cast<std::size_t>(deg[y])];
                deg[y] += sign;
                ++hist.cnt[static_cast<std::size_t>(deg[y])];
            }
        };
        auto [cur, cur_pos] = hist.value(p, q, s);
        while (true) {
            i128 cand = cur;
            bool cand_pos = cur_pos;
            std::size_t pick = a;
            for (std::size_t x = 0; x < a; ++x) {
                const int sign = in[x] ? -1 : 1;
                shift(x, sign);
                auto [val, positive] = hist.value(p, q, s + sign);
                shift(x, -sign);
                if (val > cand) {
                    cand = val;
                    cand_pos = positive;
                    pick = x;
                }
            }
            if (pick == a) break;
            const int sign = in[pick] ? -1 : 1;
            shift(pick, sign);
            s += sign;
            in[pick] = !in[pick];
            cur = cand;
            cur_pos = cand_pos;
        }
        if (cur > best) {
            best = cur;
            best_pos = cur_pos;
            best_in = in;
        }
    }
    DeviationReport rep;
    rep.max_deviation = make_rational(best, static_cast<std::int64_t>(q));
    auto left_set = flag_members(best_in);
    rep.witness = {left_set, sign_optimal_right(g, left_set, p, q, best_pos)};
    rep.method = Method::local_search;
    rep.restarts = restarts;
    rep.seed = opt.seed;
    return rep;
}

}  // namespace

DeviationReport bipartite_regularity_deviation(const BipartiteGraph& g, std::optional<Rational> d_opt,
                                               const SearchOptions& opt) {
    const std::int64_t cells = static_cast<std::int64_t>(g.left * g.right);
    const Rational d = resolve_density(
        d_opt, cells == 0 ? Rational(0) : Rational(static_cast<std::int64_t>(g.edge_count()), cells));
    // enumerate / search over the smaller side
    const bool swap_sides = g.right < g.left;
    const BipartiteGraph work = swap_sides ? g.transposed() : g;
    DeviationReport r;
    if (opt.mode == Method::exact) {
        check_cap(work.left, opt.caps.bipartite, ExactCaps::kBipartiteHardLimit, "bipartite_regularity_deviation");
        r = bipartite_exact(work, d);
    } else {
        r = bipartite_search(work, d, opt);
    }
    if (swap_sides) std::swap(r.witness[0], r.witness[1]);
    r.kind = "bipartite";
    r.n = g.left + g.right;
    r.reference_density = d;
    r.eta = cells == 0 ? 0.0 : to_double(r.max_deviation) / static_cast<double>(cells);
    return r;
}

double bipartite_deviation_upper_bound(const BipartiteGraph& g, const Rational& d) {
    const double dd = to_double(d);
    const double cells = static_cast<double>(g.left) * static_cast<double>(g.right);
    if (g.left == 0 || g.right == 0) return 0.0;
    Eigen::MatrixXd m = Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(g.left),
                                                  static_cast<Eigen::Index>(g.right), -dd);
    for (std::size_t x = 0; x < g.left; ++x)
        g.rows[x].for_each([&](std::size_t y) { m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) += 1.0; });
    // |1_X'^T M 1_Y'| <= sigma_max |X'|^(1/2) |Y'|^(1/2)
    const double sigma = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0);
    const double spectral = sigma * (1.0 + 1e-9) * std::sqrt(cells);
    return std::min(spectral, std::max(dd, 1.0 - dd) * cells);
}

// ---------------------------------------------------------- triangles / TCL

std::int64_t count_triangles_tripartite(const MultipartiteGraph& p) {
    if (p.parts() != 3) throw InputError("expected a tripartite graph");
    std::int64_t t = 0;
    for (std::size_t a = 0; a < p.part_size(0); ++a) {
        const Bitset& n2a = p.neighbours(0, a, 2);
        p.neighbours(0, a, 1).for_each([&](std::size_t b) {
            t += static_cast<std::int64_t>(popcount_and(n2a.view(), p.neighbours(1, b, 2).view()));
        });
    }
    return t;
}

std::string delta_source_name(DeltaSource s) {
    switch (s) {
        case DeltaSource::exact: return "exact";
        case DeltaSource::search: return "search-lower-bound";
        case DeltaSource::spectral: return "spectral-upper-bound";
    }
    return "?";
}

TriangleCountReport triangle_count_tripartite(const MultipartiteGraph& p, std::optional<Rational> d_opt,
                                              DeltaSource source, const SearchOptions& opt) {
    if (p.parts() != 3) throw InputError("expected a tripartite graph");
    const std::size_t s0 = p.part_size(0), s1 = p.part_size(1), s2 = p.part_size(2);
    const std::int64_t cells = static_cast<std::int64_t>(s0 * s1 + s0 * s2 + s1 * s2);
    TriangleCountReport r;
    r.d = resolve_density(d_opt,
                          cells == 0 ? Rational(0) : Rational(static_cast<std::int64_t>(p.edge_count()), cells));
    r.triangles = count_triangles_tripartite(p);
    r.delta_source = delta_source_name(source);
    const std::pair<std::size_t, std::size_t> pieces[] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pieces) {
        const BipartiteGraph b = p.bipartite(i, j);
        const double piece_cells = static_cast<double>(b.left) * static_cast<double>(b.right);
        if (piece_cells == 0) continue;
        double dev;
        if (source == DeltaSource::spectral) {
            dev = bipartite_deviation_upper_bound(b, r.d);
        } else {
            SearchOptions o = opt;
            o.mode = source == DeltaSource::exact ? Method::exact : Method::local_search;
            dev = to_double(bipartite_regularity_deviation(b, r.d, o).max_deviation);
        }
        r.delta = std::max(r.delta, dev / piece_cells);
    }
    const double dd = to_double(r.d);
    const double vol = static_cast<double>(s0) * static_cast<double>(s1) * static_cast<double>(s2);
    r.bound = (dd * dd * dd + 3.0 * r.delta) * vol;
    r.holds = static_cast<double>(r.triangles) <= r.bound * (1.0 + 1e-12) + 1e-9;
    return r;
}

Rational relative_density(const Hypergraph3& h, const Triad& t) {
    const MultipartiteGraph& p = t.graph;
    if (p.parts() != 3 || t.labels.size() != 3) throw InputError("a triad has exactly three parts");
    for (std::size_t i = 0; i < 3; ++i) {
        if (t.labels[i].size() != p.part_size(i)) throw InputError("triad labels do not match part sizes");
        for (Vertex v : t.labels[i])
            if (v >= h.n()) throw InputError("triad label out of range");
    }
    std::int64_t total = 0, hits = 0;
    for (std::size_t a = 0; a < p.part_size(0); ++a) {
        const Bitset& n2a = p.neighbours(0, a, 2);
        p.neighbours(0, a, 1).for_each([&](std::size_t b) {
            Bitset common = n2a;
            common &= p.neighbours(1, b, 2).view();
            common.for_each([&](std::size_t c) {
                ++total;
                if (h.has_edge(t.labels[0][a], t.labels[1][b], t.labels[2][c])) ++hits;
            });
        });
    }
    return total == 0 ? Rational(0) : Rational(hits, total);
}

Rational quad_pair_profile(const Hypergraph4& h, const std::array<Graph, 6>& g) {
    const std::size_t n = h.n();
    for (const Graph& gi : g)
        if (gi.n() != n) throw InputError("pair graphs must live on the hypergraph's vertex set");
    const Graph &g12 = g[0], &g13 = g[1], &g14 = g[2], &g23 = g[3], &g24 = g[4], &g34 = g[5];
    std::int64_t total = 0, hits = 0;
    for (Vertex x1 = 0; x1 < n; ++x1)
        g12.neighbours(x1).for_each([&](std::size_t x2v) {
            const auto x2 = static_cast<Vertex>(x2v);
            Bitset c3 = g13.neighbours(x1);
            c3 &= g23.neighbours(x2).view();
            Bitset c4 = g14.neighbours(x1);
            c4 &= g24.neighbours(x2).view();
            c3.for_each([&](std::size_t x3) {
                Bitset last = c4;
                last &= g34.neighbours(static_cast<Vertex>(x3)).view();
                total += static_cast<std::int64_t>(last.count());
                if (x3 != x1 && x3 != x2)
                    hits += static_cast<std::int64_t>(popcount_and(last.view(), h.quad_row(x1, x2, static_cast<Vertex>(x3))));
            });
        });
    return total == 0 ? Rational(0) : Rational(hits, total);
}

}  // namespace qrh
