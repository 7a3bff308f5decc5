#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qrh/detectors.hpp"
#include "qrh/errors.hpp"

using namespace qrh;
using testing::complete3;
using testing::complete4;

namespace {

Hypergraph3 relabel(const Hypergraph3& f, const std::vector<Vertex>& perm) {
    std::vector<Triple> e;
    for (const auto& t : f.edges()) e.push_back({perm[t[0]], perm[t[1]], perm[t[2]]});
    return Hypergraph3(f.n(), e);
}

const std::vector<Triple> kK4Minus{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}};

}  // namespace

TEST_CASE("K4- detection") {
    const Hypergraph3 k4 = complete3(4);
    const auto w = find_k4_minus(k4, true);
    REQUIRE(w);
    CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(*w->apex == 0);
    CHECK(*w->apex_position == ApexPosition::min);
    CHECK(count_k4_minus(k4) == 4);

    for (std::size_t n : {10, 40, 120}) CHECK_FALSE(find_k4_minus(gen_tournament_3hg(n, n), false));

    const Hypergraph3 r = oracle::random_h3(40, 0.3, 12);
    const auto o = find_k4_minus(r, true);
    REQUIRE(o);
    CHECK(oracle::first_k4_minus(r, true).value() == std::array<Vertex, 4>{o->vertices[0], o->vertices[1],
                                                                             o->vertices[2], o->vertices[3]});
}

TEST_CASE("K4- counting and ordered apex position") {
    // interior apex only: apex 1 in {0,1,2,3}
    const std::vector<Triple> interior{{0, 1, 2}, {0, 1, 3}, {1, 2, 3}};
    const Hypergraph3 h(4, interior);
    CHECK(find_k4_minus(h, false));
    CHECK_FALSE(find_k4_minus(h, true));

    for (std::uint64_t s = 0; s < 30; ++s) {
        const Hypergraph3 g = oracle::random_h3(6 + s % 14, 0.15 + 0.02 * static_cast<double>(s % 10), s);
        CHECK(count_k4_minus(g) == oracle::count_k4_minus(g));
        for (bool ordered : {false, true}) {
            const auto w = find_k4_minus(g, ordered);
            const auto o = oracle::first_k4_minus(g, ordered);
            REQUIRE(w.has_value() == o.has_value());
            if (w) {
                CHECK(std::equal(w->vertices.begin(), w->vertices.end(), o->begin()));
                if (ordered) CHECK(*w->apex_position != ApexPosition::interior);
            }
        }
        CHECK(find_Sk(g, 3).has_value() == find_k4_minus(g, false).has_value());
    }
}

TEST_CASE("cliques") {
    const auto w = find_clique3(complete3(7), 6);
    REQUIRE(w);
    CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Hypergraph3 g = oracle::random_h3(9, 0.6, 500 + s);
        CHECK(find_clique3(g, 5).has_value() == oracle::has_clique3(g, 5));
    }
    CHECK_FALSE(find_clique3(gen_colouring_kk_free(40, 4, 2), 4));
    CHECK_FALSE(find_clique3(gen_party_of_six(30, 2), 6));
}

TEST_CASE("S_k detection") {
    const auto w = find_Sk(complete3(6), 4);
    REQUIRE(w);
    CHECK(*w->apex == 0);
    CHECK_FALSE(find_Sk(gen_sk_free(60, 4, 3), 4));
    CHECK_FALSE(find_Sk(gen_sk_free(60, 5, 3), 5));
    CHECK_THROWS_AS(find_Sk(complete3(12), 9), ResourceRefusal);
}

TEST_CASE("F4 detection") {
    const auto w = find_F4(complete4(5));
    REQUIRE(w);
    CHECK(w->vertices.size() == 5);
    CHECK_FALSE(find_F4(gen_oriented_4hg(40, 1)));
    CHECK_FALSE(find_F4(gen_leader_tan(40, 1)));
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Quad> e;
        for (Vertex a = 0; a < 8; ++a)
            for (Vertex b = a + 1; b < 8; ++b)
                for (Vertex c = b + 1; c < 8; ++c)
                    for (Vertex d = c + 1; d < 8; ++d)
                        if (rng() % 4 == 0) e.push_back({a, b, c, d});
        const Hypergraph4 h(8, e);
        CHECK(find_F4(h).has_value() == oracle::has_f4(h));
    }
}

TEST_CASE("small pattern embedding") {
    const std::vector<Triple> one{{0, 1, 2}};
    const Hypergraph3 edge(3, one);
    CHECK(embed_small(edge, oracle::random_h3(10, 0.2, 1), false));
    const Hypergraph3 k4m(4, kK4Minus);
    CHECK_FALSE(embed_small(k4m, gen_tournament_3hg(40, 6), false));
    CHECK_THROWS_AS(embed_small(Hypergraph3(10), complete3(12), false), ResourceRefusal);

    for (std::uint64_t s = 0; s < 10; ++s) {
        const Hypergraph3 h = oracle::random_h3(20, 0.3, 900 + s);
        const Hypergraph3 f = induced(h, testing::range(0, 7));
        for (bool ordered : {false, true}) {
            const auto phi = embed_small(f, h, ordered);
            REQUIRE(phi);
            for (const auto& t : f.edges()) CHECK(h.has_edge((*phi)[t[0]], (*phi)[t[1]], (*phi)[t[2]]));
            if (ordered) CHECK(std::is_sorted(phi->begin(), phi->end()));
        }
    }
    // ordered embedding of K4- needs an extreme apex
    const std::vector<Triple> interior{{0, 1, 2}, {0, 1, 3}, {1, 2, 3}};
    CHECK_FALSE(embed_small(k4m, Hypergraph3(4, interior), true));
    CHECK(embed_small(k4m, Hypergraph3(4, interior), false));
}

TEST_CASE("vanishing condition") {
    const std::vector<Triple> one{{0, 1, 2}};
    CHECK(check_vanishing_condition(Hypergraph3(3, one)));
    const std::vector<Triple> two{{0, 1, 2}, {2, 3, 4}};
    CHECK(check_vanishing_condition(Hypergraph3(5, two)));
    CHECK_FALSE(check_vanishing_condition(Hypergraph3(4, kK4Minus)));
    CHECK_FALSE(oracle::vanishing_blind(Hypergraph3(4, kK4Minus)));
    CHECK(check_vanishing_condition(Hypergraph3(12, one)));
    CHECK_THROWS_AS(check_vanishing_condition(complete3(10)), ResourceRefusal);

    // same answer under relabelling, and the same answer as the blind search
    const std::vector<std::vector<Triple>> tests{one, two, kK4Minus, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}},
                                                 {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}};
    std::mt19937_64 rng(5);
    for (const auto& es : tests) {
        Vertex top = 0;
        for (const auto& t : es) top = std::max({top, t[0], t[1], t[2]});
        const Hypergraph3 f(top + 1, es);
        const bool base = check_vanishing_condition(f).has_value();
        if (f.n() <= 5) CHECK(base == oracle::vanishing_blind(f));
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<Vertex> perm = testing::range(0, static_cast<Vertex>(f.n()));
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(check_vanishing_condition(relabel(f, perm)).has_value() == base);
        }
    }
}

TEST_CASE("link colouring witness") {
    const Hypergraph3 h = gen_sk_free(50, 4, 2);
    CHECK_THROWS_AS(link_colouring_witness(h, std::nullopt, 0), InputError);
    const PairColouring psi = sk_free_colouring(50, 4, 2);
    for (Vertex a : {0u, 17u, 49u}) {
        const auto r = link_colouring_witness(h, psi, a);
        CHECK(r.classes.size() == 3);
        CHECK(r.partition);
        CHECK(r.violations == 0);
    }
    const PairColouring tiny = sk_free_colouring(2, 4, 1);
    const auto r = link_colouring_witness(sk_free_from_colouring(tiny, SkRuleTable(4)), tiny, 0);
    std::size_t total = 0;
    for (const auto& c : r.classes) total += c.size();
    CHECK(total == 1);
    CHECK(r.partition);
}
