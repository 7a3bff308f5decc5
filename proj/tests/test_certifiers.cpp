#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qrh/certifiers.hpp"
#include "qrh/errors.hpp"
#include "qrh/report.hpp"

using namespace qrh;
using testing::complete3;
using testing::complete4;

namespace {

SearchOptions exact() { return SearchOptions{}; }

SearchOptions search(std::size_t restarts = 8, std::uint64_t seed = 1) {
    SearchOptions o;
    o.mode = Method::local_search;
    o.restarts = restarts;
    o.seed = seed;
    return o;
}

BipartiteGraph random_bipartite(std::size_t l, std::size_t r, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    BipartiteGraph g(l, r);
    for (std::size_t x = 0; x < l; ++x)
        for (std::size_t y = 0; y < r; ++y)
            if (coin(rng)) g.add_edge(x, y);
    return g;
}

Hypergraph3 with_edge(const Hypergraph3& h, Triple t) {
    std::vector<Triple> e = h.edges();
    e.push_back(t);
    return Hypergraph3(h.n(), e);
}

}  // namespace

TEST_CASE("weak deviation examples") {
    CHECK(weak_deviation(complete3(8), Rational(1), exact()).max_deviation == Rational(0));
    CHECK(weak_deviation(Hypergraph3(8), Rational(0), exact()).max_deviation == Rational(0));

    const std::vector<Triple> one{{0, 1, 2}};
    const DeviationReport r = weak_deviation(Hypergraph3(3, one), Rational(0), exact());
    CHECK(r.max_deviation == Rational(1));
    REQUIRE(r.witness.size() == 1);
    CHECK(r.witness[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(r.eta == doctest::Approx(1.0 / 27));

    const Hypergraph3 t = gen_tournament_3hg(12, 7);
    CHECK(weak_deviation(t, Rational(1, 4), exact()).max_deviation == oracle::weak_max(t, Rational(1, 4)));
}

TEST_CASE("weak deviation: search is a certified lower bound") {
    for (std::uint64_t s = 0; s < 15; ++s) {
        const Hypergraph3 h = oracle::random_h3(8 + s % 5, 0.2 + 0.05 * static_cast<double>(s % 10), 70 + s);
        const Rational d = h.density().density;
        const DeviationReport ex = weak_deviation(h, d, exact());
        const DeviationReport se = weak_deviation(h, d, search(4, s));
        CHECK(se.max_deviation <= ex.max_deviation);
        CHECK(se.method == Method::local_search);
        const auto& u = se.witness.at(0);
        const Rational direct = qrh::abs(Rational(count_edges_within(h, u)) - d * oracle::choose3(static_cast<std::int64_t>(u.size())));
        CHECK(direct == se.max_deviation);
    }
}

TEST_CASE("weak deviation: adding an edge moves D by at most 1 + d") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Hypergraph3 h = oracle::random_h3(9, 0.3, 300 + s);
        const Rational d(1, 3);
        std::mt19937_64 rng(s);
        Triple t;
        do {
            std::vector<Vertex> v = testing::range(0, 9);
            std::shuffle(v.begin(), v.end(), rng);
            t = {v[0], v[1], v[2]};
        } while (h.has_edge(t[0], t[1], t[2]));
        const Rational before = weak_deviation(h, d, exact()).max_deviation;
        const Rational after = weak_deviation(with_edge(h, t), d, exact()).max_deviation;
        CHECK(qrh::abs(after - before) <= 1 + d);
    }
}

TEST_CASE("exact modes refuse beyond their caps") {
    CHECK_THROWS_AS(weak_deviation(Hypergraph3(25), std::nullopt, exact()), ResourceRefusal);
    CHECK_THROWS_AS(pair_deviation(Hypergraph3(21), std::nullopt, exact()), ResourceRefusal);
    CHECK_THROWS_AS(bipartite_regularity_deviation(BipartiteGraph(25, 30), Rational(0), exact()), ResourceRefusal);
    SearchOptions raised;
    raised.caps.weak = 31;
    CHECK_THROWS_AS(weak_deviation(Hypergraph3(5), std::nullopt, raised), InputError);
    // search mode has no cap
    CHECK_NOTHROW(weak_deviation(Hypergraph3(25), std::nullopt, search(1)));
}

TEST_CASE("xyz deviation") {
    const DeviationReport full = xyz_deviation(complete3(9), Rational(1), 50, 3);
    CHECK(full.max_deviation == Rational(0));
    const std::vector<Triple> one{{0, 1, 2}};
    const DeviationReport r = xyz_deviation(Hypergraph3(3, one), Rational(0), 50, 3);
    CHECK(r.max_deviation == Rational(1));
    CHECK(r.method == Method::sampled);

    const Hypergraph3 h = oracle::random_h3(11, 0.4, 8);
    const Rational d = h.density().density;
    const DeviationReport w = weak_deviation(h, d, exact());
    const DeviationReport x = xyz_deviation(h, d, 300, 5, w.max_deviation);
    CHECK(x.bound_checks >= 300);
    CHECK(x.bound_violations == 0);
    const auto& wit = x.witness;
    REQUIRE(wit.size() == 3);
    for (Vertex v : wit[0]) {
        CHECK(std::find(wit[1].begin(), wit[1].end(), v) == wit[1].end());
        CHECK(std::find(wit[2].begin(), wit[2].end(), v) == wit[2].end());
    }
}

TEST_CASE("pair deviation") {
    CHECK(pair_deviation(Hypergraph3(8), Rational(0), exact()).max_deviation == Rational(0));
    for (std::size_t n = 4; n <= 6; ++n) {
        const Hypergraph3 k = complete3(n);
        CHECK(pair_deviation(k, Rational(1), exact()).max_deviation == oracle::pair_max(k, Rational(1)));
    }

    // n = 16: the reported witness attains the value, and no probe beats it
    const Hypergraph3 h = gen_colouring_kk_free(16, 4, 3);
    const Rational d(1, 2);
    const DeviationReport r = pair_deviation(h, d, exact());
    const oracle::EdgeSet es(h);
    auto e_ux = [&](const std::vector<Vertex>& u, const std::vector<std::pair<Vertex, Vertex>>& x) {
        std::int64_t e = 0;
        for (Vertex w : u)
            for (auto [a, b] : x)
                if (w != a && w != b && es.has(w, a, b)) ++e;
        return e;
    };
    const auto& u = r.witness.at(0);
    CHECK(qrh::abs(Rational(e_ux(u, r.witness_pairs)) -
                   d * static_cast<std::int64_t>(u.size() * r.witness_pairs.size())) == r.max_deviation);
    std::mt19937_64 rng(99);
    for (int probe = 0; probe < 200; ++probe) {
        std::vector<Vertex> pu;
        for (Vertex v = 0; v < 16; ++v)
            if (rng() & 1) pu.push_back(v);
        std::vector<std::pair<Vertex, Vertex>> plus, minus, random;
        for (Vertex a = 0; a < 16; ++a)
            for (Vertex b = a + 1; b < 16; ++b) {
                const std::vector<std::pair<Vertex, Vertex>> one{{a, b}};
                const Rational res = Rational(e_ux(pu, one)) - d * static_cast<std::int64_t>(pu.size());
                if (res > 0) plus.push_back({a, b});
                if (res < 0) minus.push_back({a, b});
                if (rng() & 1) random.push_back({a, b});
            }
        for (const auto* x : {&plus, &minus, &random}) {
            const Rational dev =
                qrh::abs(Rational(e_ux(pu, *x)) - d * static_cast<std::int64_t>(pu.size() * x->size()));
            CHECK(dev <= r.max_deviation);
        }
    }

    // search lower bound
    for (std::uint64_t s = 0; s < 5; ++s) {
        const Hypergraph3 g = oracle::random_h3(7, 0.5, 40 + s);
        const Rational dd = g.density().density;
        CHECK(pair_deviation(g, dd, search(4, s)).max_deviation <= oracle::pair_max(g, dd));
    }
}

TEST_CASE("quad vertex deviation") {
    CHECK(quad_vertex_deviation(complete4(10), Rational(1), 100, 1).max_deviation == Rational(0));
    const std::vector<Quad> one{{0, 1, 2, 3}};
    CHECK(quad_vertex_deviation(Hypergraph4(4, one), Rational(0), 100, 1).max_deviation == Rational(1));
    const DeviationReport r = quad_vertex_deviation(gen_oriented_4hg(60, 2), Rational(1, 8), 500, 4);
    CHECK(r.eta <= 0.01);
    CHECK(r.samples == 500);
}

TEST_CASE("bipartite regularity deviation") {
    BipartiteGraph full(6, 7);
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t y = 0; y < 7; ++y) full.add_edge(x, y);
    CHECK(bipartite_regularity_deviation(full, Rational(1), exact()).max_deviation == Rational(0));
    CHECK(bipartite_regularity_deviation(BipartiteGraph(6, 7), Rational(0), exact()).max_deviation == Rational(0));

    for (std::uint64_t s = 0; s < 4; ++s) {
        const BipartiteGraph g = random_bipartite(10, 10 - s, 0.5, s);
        const Rational want = oracle::bipartite_max(g, Rational(1, 2));
        CHECK(bipartite_regularity_deviation(g, Rational(1, 2), exact()).max_deviation == want);
        CHECK(bipartite_regularity_deviation(g.transposed(), Rational(1, 2), exact()).max_deviation == want);
        CHECK(bipartite_regularity_deviation(g, Rational(1, 2), search(4, s)).max_deviation <= want);
        CHECK(bipartite_deviation_upper_bound(g, Rational(1, 2)) >= to_double(want) - 1e-9);
    }
    const BipartiteGraph g12 = random_bipartite(12, 12, 0.5, 77);
    const DeviationReport r = bipartite_regularity_deviation(g12, Rational(1, 2), exact());
    CHECK(r.eta == doctest::Approx(to_double(r.max_deviation) / 144));
}

TEST_CASE("triangle counting") {
    MultipartiteGraph p({2, 3, 4});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            for (std::size_t a = 0; a < p.part_size(i); ++a)
                for (std::size_t b = 0; b < p.part_size(j); ++b) p.add_edge(i, a, j, b);
    const TriangleCountReport r = triangle_count_tripartite(p, Rational(1), DeltaSource::exact);
    CHECK(r.triangles == 24);
    CHECK(r.delta == 0.0);
    CHECK(r.bound == doctest::Approx(24.0));
    CHECK(r.holds);

    const MultipartiteGraph empty_part({3, 0, 3});
    CHECK(count_triangles_tripartite(empty_part) == 0);

    for (std::uint64_t s = 0; s < 5; ++s) {
        const MultipartiteGraph g = oracle::random_tripartite(9, 0.5, s);
        CHECK(count_triangles_tripartite(g) == oracle::tripartite_triangles(g));
        const auto ex = triangle_count_tripartite(g, std::nullopt, DeltaSource::exact);
        const auto se = triangle_count_tripartite(g, std::nullopt, DeltaSource::search);
        const auto sp = triangle_count_tripartite(g, std::nullopt, DeltaSource::spectral);
        CHECK(se.delta <= ex.delta + 1e-12);
        CHECK(sp.delta >= ex.delta - 1e-12);
        CHECK(ex.holds);
        CHECK(sp.delta_source == "spectral-upper-bound");
    }
}

TEST_CASE("relative density") {
    Triad full{MultipartiteGraph({3, 3, 3}), {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b) full.graph.add_edge(i, a, j, b);
    CHECK(relative_density(complete3(9), full) == Rational(1));
    const Triad none{MultipartiteGraph({3, 3, 3}), full.labels};
    CHECK(relative_density(complete3(9), none) == Rational(0));

    const Hypergraph3 h = gen_tournament_3hg(60, 5);
    Triad t{MultipartiteGraph({20, 20, 20}), {testing::range(0, 20), testing::range(20, 40), testing::range(40, 60)}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            for (std::size_t a = 0; a < 20; ++a)
                for (std::size_t b = 0; b < 20; ++b) t.graph.add_edge(i, a, j, b);
    const Rational rd = relative_density(h, t);
    std::int64_t hits = 0;
    for (Vertex x = 0; x < 20; ++x)
        for (Vertex y = 20; y < 40; ++y)
            for (Vertex z = 40; z < 60; ++z) hits += h.has_edge(x, y, z);
    CHECK(rd == Rational(hits, 8000));
    CHECK(to_double(rd) == doctest::Approx(0.25).epsilon(0.2));
}

TEST_CASE("quad pair profile") {
    std::array<Graph, 6> graphs;
    for (auto& g : graphs) {
        g = Graph(4);
        for (Vertex u = 0; u < 4; ++u)
            for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v);
    }
    const std::vector<Quad> one{{0, 1, 2, 3}};
    CHECK(quad_pair_profile(Hypergraph4(4, one), graphs) == Rational(1));
    CHECK(quad_pair_profile(Hypergraph4(4), graphs) == Rational(0));
}

TEST_CASE("deviation report json") {
    const Hypergraph3 t = gen_tournament_3hg(10, 1);
    const auto j = to_json(weak_deviation(t, Rational(1, 4), exact()));
    CHECK(j["kind"] == "weak");
    CHECK(j["method"] == "exact");
    CHECK(j["reference_density"]["rational"] == "1/4");
    CHECK(j.contains("witness"));
    CHECK_FALSE(j.contains("restarts"));
}
