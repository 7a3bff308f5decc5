#include "qrh/detectors.hpp"

#include <algorithm>
#include <numeric>

#include "qrh/errors.hpp"

namespace qrh {

std::string apex_position_name(ApexPosition p) {
    switch (p) {
        case ApexPosition::min: return "min";
        case ApexPosition::max: return "max";
        case ApexPosition::interior: return "interior";
    }
    return "?";
}

namespace {

// Mask of bit positions > c inside word w.
Word above_mask(std::size_t w, std::size_t c) {
    const std::size_t first = c + 1;
    if ((w + 1) * kWordBits <= first) return 0;
    if (w * kWordBits >= first) return ~Word{0};
    return ~Word{0} << (first - w * kWordBits);
}

ApexPosition position_of(Vertex apex, const std::vector<Vertex>& sorted) {
    if (apex == sorted.front()) return ApexPosition::min;
    if (apex == sorted.back()) return ApexPosition::max;
    return ApexPosition::interior;
}

}  // namespace

// ------------------------------------------------------------------ K4-

std::optional<Witness> find_k4_minus(const Hypergraph3& h, bool ordered) {
    const std::size_t n = h.n(), words = h.words_per_row();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            const RowView r1 = h.link_row(a, b);  // d with abd
            for (Vertex c = b + 1; c + 1 < n; ++c) {
                const bool t = test_bit(r1, c);
                const RowView r2 = h.link_row(a, c);  // acd
                const RowView r3 = h.link_row(b, c);  // bcd
                for (std::size_t w = (c + 1) / kWordBits; w < words; ++w) {
                    Word cand;
                    if (ordered)
                        cand = (t ? r1[w] & r2[w] : Word{0}) | (r1[w] & r2[w] & r3[w]);
                    else
                        cand = t ? ((r1[w] & r2[w]) | (r1[w] & r3[w]) | (r2[w] & r3[w])) : (r1[w] & r2[w] & r3[w]);
                    cand &= above_mask(w, c);
                    if (!cand) continue;
                    const Vertex d = static_cast<Vertex>(w * kWordBits + std::countr_zero(cand));
                    const bool abd = test_bit(r1, d), acd = test_bit(r2, d), bcd = test_bit(r3, d);
                    Witness wit;
                    wit.kind = "k4minus";
                    wit.vertices = {a, b, c, d};
                    // apex = vertex lying in every present triple; smallest if several
                    Vertex apex;
                    if (t && abd && acd) apex = a;
                    else if (t && abd && bcd) apex = b;
                    else if (t && acd && bcd) apex = c;
                    else apex = d;
                    if (ordered && apex != a && apex != d) apex = d;
                    wit.apex = apex;
                    wit.apex_position = position_of(apex, wit.vertices);
                    return wit;
                }
            }
        }
    return std::nullopt;
}

std::int64_t count_k4_minus(const Hypergraph3& h) {
    const std::size_t n = h.n(), words = h.words_per_row();
    std::int64_t total = 0;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (b == a) continue;
            const RowView rab = h.link_row(a, b);
            // triangles {b,c,d} of link(a) with b < c < d
            for (std::size_t c = b + 1; c < n; ++c) {
                if (!test_bit(rab, c)) continue;
                const RowView rac = h.link_row(a, static_cast<Vertex>(c));
                for (std::size_t w = (c + 1) / kWordBits; w < words; ++w)
                    total += std::popcount(rab[w] & rac[w] & above_mask(w, c));
            }
        }
    return total;
}

// --------------------------------------------------------------- cliques

namespace {

bool extend_clique(const Hypergraph3& h, std::size_t k, std::vector<Vertex>& chosen, const Bitset& cand) {
    if (chosen.size() == k) return true;
    const std::size_t need = k - chosen.size();
    std::size_t left = cand.count();
    for (std::size_t w = cand.find_first(); w < cand.size() && left >= need; w = cand.find_next(w + 1), --left) {
        Bitset next = cand;
        next.clear_through(w);
        for (Vertex x : chosen) next &= h.link_row(x, static_cast<Vertex>(w));
        chosen.push_back(static_cast<Vertex>(w));
        if (need == 1 || next.count() + 1 >= need) {
            if (extend_clique(h, k, chosen, next)) return true;
        }
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Witness> find_clique3(const Hypergraph3& h, std::size_t k) {
    if (k < 4) throw InputError("find_clique3 needs k >= 4");
    const std::size_t n = h.n();
    if (k > n) return std::nullopt;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            Bitset cand(n);
            cand |= h.link_row(a, b);
            cand.clear_through(b);
            if (cand.count() + 2 < k) continue;
            std::vector<Vertex> chosen{a, b};
            if (extend_clique(h, k, chosen, cand)) return Witness{"clique", chosen, std::nullopt, std::nullopt};
        }
    return std::nullopt;
}

std::optional<Witness> find_Sk(const Hypergraph3& h, std::size_t k) {
    if (k < 3) throw InputError("find_Sk needs k >= 3");
    if (k > 8) throw ResourceRefusal("find_Sk: clique search is capped at k <= 8");
    for (Vertex a = 0; a < h.n(); ++a) {
        const Graph link = link_graph(h, a);
        if (auto clique = find_clique(link, k)) {
            Witness w;
            w.kind = "sk";
            w.vertices = *clique;
            w.vertices.push_back(a);
            std::sort(w.vertices.begin(), w.vertices.end());
            w.apex = a;
            w.apex_position = position_of(a, w.vertices);
            return w;
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_F4(const Hypergraph4& h) {
    const std::size_t n = h.n();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            // triangle {x<y<z} in the pair link of {u,v}
            for (Vertex x = 0; x < n; ++x) {
                if (x == u || x == v) continue;
                const RowView rx = h.quad_row(u, v, x);
                for (std::size_t y = x + 1; y < n; ++y) {
                    if (!test_bit(rx, y)) continue;
                    const RowView ry = h.quad_row(u, v, static_cast<Vertex>(y));
                    for (std::size_t w = (y + 1) / kWordBits; w < rx.size(); ++w) {
                        const Word c = rx[w] & ry[w] & above_mask(w, y);
                        if (!c) continue;
                        const auto z = static_cast<Vertex>(w * kWordBits + std::countr_zero(c));
                        return Witness{"f4", {u, v, x, static_cast<Vertex>(y), z}, std::nullopt, std::nullopt};
                    }
                }
            }
        }
    return std::nullopt;
}

// ------------------------------------------------------------ embeddings

namespace {

struct EmbedState {
    const Hypergraph3& h;
    bool ordered;
    std::vector<Vertex> order;                            // F vertices in placement order
    std::vector<std::vector<std::pair<Vertex, Vertex>>> back;  // earlier F-pairs closing an edge
    std::vector<Vertex> phi;                              // by F vertex
    std::vector<char> used;

    bool place(std::size_t depth) {
        if (depth == order.size()) return true;
        const Vertex fv = order[depth];
        Bitset cand(h.n());
        if (back[depth].empty()) {
            for (std::size_t v = 0; v < h.n(); ++v) cand.set(v);
        } else {
            const auto [x, y] = back[depth].front();
            cand |= h.link_row(phi[x], phi[y]);
            for (std::size_t i = 1; i < back[depth].size(); ++i)
                cand &= h.link_row(phi[back[depth][i].first], phi[back[depth][i].second]);
        }
        if (ordered && depth > 0) cand.clear_through(phi[order[depth - 1]]);
        for (std::size_t v = cand.find_first(); v < cand.size(); v = cand.find_next(v + 1)) {
            if (used[v]) continue;
            phi[fv] = static_cast<Vertex>(v);
            used[v] = 1;
            if (place(depth + 1)) return true;
            used[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> embed_small(const Hypergraph3& f, const Hypergraph3& h, bool ordered) {
    const std::size_t fn = f.n();
    if (fn > 9) throw ResourceRefusal("embed_small: pattern has more than 9 vertices");
    if (fn > h.n()) return std::nullopt;

    // placement order: natural in ordered mode, else greedily most-constrained
    std::vector<Vertex> order;
    std::vector<char> placed(fn, 0);
    auto closing = [&](Vertex v) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const Triple& t : f.edges()) {
            if (std::find(t.begin(), t.end(), v) == t.end()) continue;
            std::vector<Vertex> others;
            for (Vertex u : t)
                if (u != v && placed[u]) others.push_back(u);
            if (others.size() == 2) out.emplace_back(others[0], others[1]);
        }
        return out;
    };
    std::vector<std::size_t> degree(fn, 0);
    for (const Triple& t : f.edges())
        for (Vertex v : t) ++degree[v];
    std::vector<std::vector<std::pair<Vertex, Vertex>>> back;
    for (std::size_t step = 0; step < fn; ++step) {
        Vertex pick = 0;
        if (ordered) {
            pick = static_cast<Vertex>(step);
        } else {
            std::size_t best_close = 0, best_deg = 0;
            bool have = false;
            for (Vertex v = 0; v < fn; ++v) {
                if (placed[v]) continue;
                const std::size_t cl = closing(v).size();
                if (!have || cl > best_close || (cl == best_close && degree[v] > best_deg)) {
                    have = true;
                    pick = v;
                    best_close = cl;
                    best_deg = degree[v];
                }
            }
        }
        back.push_back(closing(pick));
        placed[pick] = 1;
        order.push_back(pick);
    }
    EmbedState st{h, ordered, order, back, std::vector<Vertex>(fn, 0), std::vector<char>(h.n(), 0)};
    if (st.place(0)) return st.phi;
    return std::nullopt;
}

// ----------------------------------------------------- vanishing condition

std::optional<VanishingWitness> check_vanishing_condition(const Hypergraph3& f) {
    const std::size_t fn = f.n();
    // isolated vertices never constrain anything; they go at the end
    std::vector<bool> touched(fn, false);
    for (const Triple& t : f.edges())
        for (Vertex v : t) touched[v] = true;
    std::vector<Vertex> active, idle;
    for (Vertex v = 0; v < fn; ++v) (touched[v] ? active : idle).push_back(v);
    if (active.size() > 9)
        throw ResourceRefusal("check_vanishing_condition: pattern has more than 9 non-isolated vertices");
    std::vector<Vertex> pos(fn);
    std::vector<int> colour(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(fn), 2)));
    do {
        for (std::size_t i = 0; i < active.size(); ++i) pos[active[i]] = static_cast<Vertex>(i);
        std::fill(colour.begin(), colour.end(), -1);
        auto force = [&](Vertex u, Vertex v, int c) {
            int& slot = colour[pair_rank(std::min(u, v), std::max(u, v))];
            if (slot >= 0 && slot != c) return false;
            slot = c;
            return true;
        };
        bool ok = true;
        for (const Triple& t : f.edges()) {
            Triple s = t;
            std::sort(s.begin(), s.end(), [&](Vertex x, Vertex y) { return pos[x] < pos[y]; });
            if (!force(s[0], s[1], red) || !force(s[0], s[2], blue) || !force(s[1], s[2], green)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            PairColouring c = PairColouring::uniform(fn, 3);
            for (Vertex v = 1; v < fn; ++v)
                for (Vertex u = 0; u < v; ++u) {
                    const int col = colour[pair_rank(u, v)];
                    c.set(u, v, col < 0 ? unsigned{red} : static_cast<unsigned>(col));
                }
            std::vector<Vertex> order = active;
            order.insert(order.end(), idle.begin(), idle.end());
            return VanishingWitness{order, c};
        }
    } while (std::next_permutation(active.begin(), active.end()));
    return std::nullopt;
}

// ---------------------------------------------------------- link classes

LinkColouringReport link_colouring_witness(const Hypergraph3& h, const std::optional<PairColouring>& psi, Vertex a) {
    if (!psi) throw InputError("link_colouring_witness: pair colouring metadata is required");
    if (psi->n() != h.n()) throw InputError("link_colouring_witness: colouring and hypergraph sizes differ");
    if (a >= h.n()) throw InputError("link_colouring_witness: apex out of range");
    const unsigned c = psi->colours();
    LinkColouringReport r;
    r.apex = a;
    r.classes.assign(c, {});
    std::vector<unsigned> cls(h.n(), c);
    for (Vertex x = 0; x < h.n(); ++x) {
        if (x == a) continue;
        const unsigned col = psi->colour(x, a);
        cls[x] = x < a ? col : (col + c - 1) % c;
        r.classes[cls[x]].push_back(x);
    }
    std::size_t covered = 0;
    for (const auto& k : r.classes) covered += k.size();
    r.partition = covered + 1 == h.n() || (h.n() == 0 && covered == 0);
    for (Vertex x = 0; x < h.n(); ++x) {
        if (x == a) continue;
        for_each_bit(h.link_row(a, x), [&](std::size_t y) {
            if (y > x && cls[y] == cls[x]) ++r.violations;
        });
    }
    return r;
}

}  // namespace qrh
