#include "qrh/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "qrh/errors.hpp"

namespace qrh {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

void check_size(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap)
        throw InputError(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

void check_vertex(std::size_t n, Vertex v) {
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
}

template <std::size_t K>
std::array<Vertex, K> sorted_distinct(std::size_t n, std::array<Vertex, K> t) {
    for (Vertex v : t) check_vertex(n, v);
    std::sort(t.begin(), t.end());
    for (std::size_t i = 1; i < K; ++i)
        if (t[i] == t[i - 1]) throw InputError("edge has repeated vertex " + std::to_string(t[i]));
    return t;
}

DensityReport make_density(std::size_t edges, std::int64_t total) {
    DensityReport r;
    r.edge_count = static_cast<std::int64_t>(edges);
    r.density = total == 0 ? Rational(0) : Rational(r.edge_count, total);
    r.value = to_double(r.density);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- Hypergraph3

Hypergraph3::Hypergraph3(std::size_t n) : n_(n), words_(words_for(n)) {
    check_size(n, kMaxVertices, "Hypergraph3");
    rows_.assign(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), 2)) * words_, 0);
}

Hypergraph3::Hypergraph3(std::size_t n, std::span<const Triple> edges) {
    Hypergraph3Builder b(n);
    for (const Triple& t : edges) {
        Triple s = sorted_distinct(n, t);
        if (!b.add(s[0], s[1], s[2]))
            throw InputError("duplicate edge {" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                             std::to_string(s[2]) + "}");
    }
    *this = std::move(b).build();
}

bool Hypergraph3::has_edge(Vertex a, Vertex b, Vertex c) const {
    if (a >= n_ || b >= n_ || c >= n_ || a == b || a == c || b == c) return false;
    return test_bit(link_row(a, b), c);
}

DensityReport Hypergraph3::density() const {
    return make_density(edges_.size(), binomial(static_cast<std::int64_t>(n_), 3));
}

Hypergraph3Builder::Hypergraph3Builder(std::size_t n) : h_(n) {}

bool Hypergraph3Builder::add(Vertex a, Vertex b, Vertex c) {
    Triple t = sorted_distinct(h_.n_, Triple{a, b, c});
    const std::size_t w = h_.words_;
    MutableRowView ab(h_.rows_.data() + pair_rank(t[0], t[1]) * w, w);
    if (test_bit(ab, t[2])) return false;
    set_bit(ab, t[2]);
    set_bit(MutableRowView(h_.rows_.data() + pair_rank(t[0], t[2]) * w, w), t[1]);
    set_bit(MutableRowView(h_.rows_.data() + pair_rank(t[1], t[2]) * w, w), t[0]);
    return true;
}

Hypergraph3 Hypergraph3Builder::build() && {
    h_.edges_.clear();
    for (Vertex u = 0; u < h_.n_; ++u)
        for (Vertex v = u + 1; v < h_.n_; ++v)
            for_each_bit(h_.link_row(u, v), [&](std::size_t w) {
                if (w > v) h_.edges_.push_back({u, v, static_cast<Vertex>(w)});
            });
    return std::move(h_);
}

// ---------------------------------------------------------------- Hypergraph4

Hypergraph4::Hypergraph4(std::size_t n) : n_(n), words_(words_for(n)) {
    check_size(n, kMaxVertices, "Hypergraph4");
    rows_.assign(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), 3)) * words_, 0);
}

Hypergraph4::Hypergraph4(std::size_t n, std::span<const Quad> edges) {
    Hypergraph4Builder b(n);
    for (const Quad& q : edges)
        if (!b.add(q)) throw InputError("duplicate 4-edge");
    *this = std::move(b).build();
}

RowView Hypergraph4::quad_row(Vertex a, Vertex b, Vertex c) const {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return RowView(rows_.data() + triple_rank(t[0], t[1], t[2]) * words_, words_);
}

bool Hypergraph4::has_edge(Quad q) const {
    for (Vertex v : q)
        if (v >= n_) return false;
    std::sort(q.begin(), q.end());
    for (std::size_t i = 1; i < 4; ++i)
        if (q[i] == q[i - 1]) return false;
    return test_bit(quad_row(q[0], q[1], q[2]), q[3]);
}

Graph Hypergraph4::pair_link(Vertex u, Vertex v) const {
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v) throw InputError("pair_link needs two distinct vertices");
    Graph g(n_);
    for (Vertex x = 0; x < n_; ++x) {
        if (x == u || x == v) continue;
        for_each_bit(quad_row(u, v, x), [&](std::size_t y) {
            if (y > x) g.add_edge(x, static_cast<Vertex>(y));
        });
    }
    return g;
}

DensityReport Hypergraph4::density() const {
    return make_density(edges_.size(), binomial(static_cast<std::int64_t>(n_), 4));
}

Hypergraph4Builder::Hypergraph4Builder(std::size_t n) : h_(n) {}

bool Hypergraph4Builder::add(Quad q) {
    q = sorted_distinct(h_.n_, q);
    const std::size_t w = h_.words_;
    auto row = [&](Vertex a, Vertex b, Vertex c) {
        return MutableRowView(h_.rows_.data() + triple_rank(a, b, c) * w, w);
    };
    if (test_bit(row(q[0], q[1], q[2]), q[3])) return false;
    set_bit(row(q[0], q[1], q[2]), q[3]);
    set_bit(row(q[0], q[1], q[3]), q[2]);
    set_bit(row(q[0], q[2], q[3]), q[1]);
    set_bit(row(q[1], q[2], q[3]), q[0]);
    return true;
}

Hypergraph4 Hypergraph4Builder::build() && {
    h_.edges_.clear();
    const std::size_t n = h_.n_;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for_each_bit(h_.quad_row(a, b, c), [&](std::size_t d) {
                    if (d > c) h_.edges_.push_back({a, b, c, static_cast<Vertex>(d)});
                });
    return std::move(h_);
}

// ----------------------------------------------------------------- operations

Bitset vertex_mask(std::size_t n, std::span<const Vertex> set) {
    Bitset m(n);
    for (Vertex v : set) {
        check_vertex(n, v);
        m.set(v);
    }
    return m;
}

namespace {
std::vector<Vertex> members(const Bitset& m) {
    std::vector<Vertex> out;
    m.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
    return out;
}
}  // namespace

std::int64_t count_edges_within(const Hypergraph3& h, std::span<const Vertex> set) {
    const Bitset mask = vertex_mask(h.n(), set);
    const std::vector<Vertex> us = members(mask);
    std::int64_t triple_hits = 0;
    for (std::size_t i = 0; i < us.size(); ++i)
        for (std::size_t j = i + 1; j < us.size(); ++j)
            triple_hits += static_cast<std::int64_t>(popcount_and(h.link_row(us[i], us[j]), mask.view()));
    return triple_hits / 3;
}

std::int64_t count_edges_xyz(const Hypergraph3& h, std::span<const Vertex> xs, std::span<const Vertex> ys,
                             std::span<const Vertex> zs) {
    const std::vector<Vertex> xv = members(vertex_mask(h.n(), xs));
    const std::vector<Vertex> yv = members(vertex_mask(h.n(), ys));
    const Bitset zmask = vertex_mask(h.n(), zs);
    std::int64_t total = 0;
    for (Vertex x : xv)
        for (Vertex y : yv)
            if (x != y) total += static_cast<std::int64_t>(popcount_and(h.link_row(x, y), zmask.view()));
    return total;
}

Graph link_graph(const Hypergraph3& h, Vertex a) {
    check_vertex(h.n(), a);
    Graph g(h.n());
    for (Vertex u = 0; u < h.n(); ++u) {
        if (u == a) continue;
        for_each_bit(h.link_row(a, u), [&](std::size_t v) {
            if (v > u) g.add_edge(u, static_cast<Vertex>(v));
        });
    }
    return g;
}

Hypergraph3 induced(const Hypergraph3& h, std::span<const Vertex> set) {
    const std::vector<Vertex> us = members(vertex_mask(h.n(), set));
    Hypergraph3Builder b(us.size());
    for (Vertex i = 0; i < us.size(); ++i)
        for (Vertex j = i + 1; j < us.size(); ++j) {
            RowView row = h.link_row(us[i], us[j]);
            for (Vertex k = j + 1; k < us.size(); ++k)
                if (test_bit(row, us[k])) b.add(i, j, k);
        }
    return std::move(b).build();
}

Hypergraph4 induced(const Hypergraph4& h, std::span<const Vertex> set) {
    const std::vector<Vertex> us = members(vertex_mask(h.n(), set));
    Hypergraph4Builder b(us.size());
    for (Vertex i = 0; i < us.size(); ++i)
        for (Vertex j = i + 1; j < us.size(); ++j)
            for (Vertex k = j + 1; k < us.size(); ++k) {
                RowView row = h.quad_row(us[i], us[j], us[k]);
                for (Vertex l = k + 1; l < us.size(); ++l)
                    if (test_bit(row, us[l])) b.add({i, j, k, l});
            }
    return std::move(b).build();
}

}  // namespace qrh
