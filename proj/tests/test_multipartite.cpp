#include <doctest.h>

#include "oracles.hpp"
#include "qrh/errors.hpp"
#include "qrh/multipartite.hpp"
#include "qrh/report.hpp"

using namespace qrh;

namespace {

MultipartiteGraph complete_mp(std::vector<std::size_t> sizes) {
    MultipartiteGraph g(sizes);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = i + 1; j < sizes.size(); ++j)
            for (std::size_t a = 0; a < sizes[i]; ++a)
                for (std::size_t b = 0; b < sizes[j]; ++b) g.add_edge(i, a, j, b);
    return g;
}

bool has_triangle(const MultipartiteGraph& g) {
    for (std::size_t i = 0; i < g.parts(); ++i)
        for (std::size_t j = i + 1; j < g.parts(); ++j)
            for (std::size_t k = j + 1; k < g.parts(); ++k)
                for (std::size_t a = 0; a < g.part_size(i); ++a)
                    for (std::size_t b = 0; b < g.part_size(j); ++b)
                        for (std::size_t c = 0; c < g.part_size(k); ++c)
                            if (g.has_edge(i, a, j, b) && g.has_edge(i, a, k, c) && g.has_edge(j, b, k, c))
                                return true;
    return false;
}

// Sum of squared degrees via has_edge, not via neighbour rows.
std::int64_t sum_sq(const MultipartiteGraph& g, std::size_t i, std::size_t j) {
    std::int64_t s = 0;
    for (std::size_t a = 0; a < g.part_size(i); ++a) {
        std::int64_t d = 0;
        for (std::size_t b = 0; b < g.part_size(j); ++b) d += g.has_edge(i, a, j, b);
        s += d * d;
    }
    return s;
}

MultipartiteGraph random_mp(std::vector<std::size_t> sizes, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    MultipartiteGraph g(sizes);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = i + 1; j < sizes.size(); ++j)
            for (std::size_t a = 0; a < sizes[i]; ++a)
                for (std::size_t b = 0; b < sizes[j]; ++b)
                    if (coin(rng)) g.add_edge(i, a, j, b);
    return g;
}

}  // namespace

TEST_CASE("mean-square profile") {
    const auto full = mean_square_profile(complete_mp({3, 4, 5}));
    const auto none = mean_square_profile(MultipartiteGraph({3, 4, 5}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) {
                CHECK(full.rho[i][j] == Rational(1));
                CHECK(none.rho[i][j] == Rational(0));
            }
    const auto hs = mean_square_profile(half_split(4, 10));
    CHECK(hs.min_ratio() == Rational(1, 4));
    CHECK_FALSE(hs.satisfies(triangle_threshold(), Rational(1, 100)));
    CHECK(hs.satisfies(triangle_threshold(), Rational(0)));

    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto g = random_mp({4, 6, 5, 3}, 0.4, s);
        const auto p = mean_square_profile(g);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (i != j) {
                    const auto si = static_cast<std::int64_t>(g.part_size(i)), sj = static_cast<std::int64_t>(g.part_size(j));
                    CHECK(p.rho[i][j] == Rational(sum_sq(g, i, j), si * sj * sj));
                    CHECK(p.rho[i][j] >= Rational(0));
                    CHECK(p.rho[i][j] <= Rational(1));
                }
    }
    CHECK_THROWS_AS(mean_square_profile(MultipartiteGraph({3, 0, 2})), InputError);
    CHECK(clique_threshold(3) == Rational(1, 4));
    CHECK(clique_threshold(4) == Rational(4, 9));
}

TEST_CASE("multipartite triangles and cliques") {
    CHECK(find_triangle_mp(complete_mp({2, 2, 2})));
    CHECK(find_clique_mp(complete_mp({1, 1, 1, 1}), 4));
    for (std::size_t m = 3; m <= 6; ++m)
        for (std::size_t s = 2; s <= 20; s += 6) {
            const auto g = half_split(m, s);
            CHECK_FALSE(has_triangle(g));
            CHECK_FALSE(find_triangle_mp(g));
        }
    int found = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto g = oracle::random_tripartite(30, 0.7, s);
        const auto t = find_triangle_mp(g);
        if (t) {
            ++found;
            const auto& v = *t;
            CHECK(g.has_edge(v[0].first, v[0].second, v[1].first, v[1].second));
            CHECK(g.has_edge(v[0].first, v[0].second, v[2].first, v[2].second));
            CHECK(g.has_edge(v[1].first, v[1].second, v[2].first, v[2].second));
        }
    }
    CHECK(found == 50);
}

TEST_CASE("half split") {
    CHECK(half_split(3, 10).edge_count() == 150);
    CHECK_THROWS_AS(half_split(3, 7), InputError);
}

TEST_CASE("proof diagnostics") {
    const auto full = proof_diagnostics(complete_mp({5, 5, 5}), Rational(1, 10));
    CHECK(full.r_max == 5);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) {
                CHECK(full.r[i][j] == 5);
                CHECK(full.q_sizes[i][j][4] == 5);
            }
    const auto empty = proof_diagnostics(MultipartiteGraph({5, 5, 5}), Rational(1, 10));
    CHECK(empty.r[0][1] == 0);
    CHECK(empty.q_sizes[0][1][0] == 0);
    const auto hs = proof_diagnostics(half_split(3, 10), Rational(1, 20));
    CHECK(hs.q_sizes[0][1][0] == 0);
    CHECK(hs.r[1][2] == 0);
    CHECK_THROWS_AS(proof_diagnostics(half_split(3, 4), Rational(1, 2)), InputError);

    // with eps >= 2 delta + delta^2 the claim must hold wherever the hypothesis does
    const Rational delta(1, 20), eps(1, 8);
    std::size_t checked = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto d = proof_diagnostics(random_mp({8, 8, 8, 8}, 0.6 + 0.01 * static_cast<double>(s), s), delta, eps);
        CHECK(d.claim_applicable);
        CHECK(d.claim_violations.empty());
        checked += d.claim_checked.size();
    }
    CHECK(checked > 0);
}

TEST_CASE("auxiliary projection") {
    AuxBlock all{3, 4, 2, {}};
    for (std::uint32_t x = 0; x < 3; ++x)
        for (std::uint32_t y = 0; y < 4; ++y)
            for (std::uint32_t z = 0; z < 2; ++z) all.triples.push_back({x, y, z});
    const auto p = project_auxiliary(all, Rational(1, 20));
    CHECK(p.star);
    CHECK(p.star_star);
    CHECK(p.s1 == 3 * 3 * 4);
    CHECK(p.s2 == 2 * 2 * 4);
    CHECK(p.colour == BlockColour::green);
    CHECK(p.flagged);

    const auto e = project_auxiliary(AuxBlock{3, 4, 2, {}}, Rational(1, 20));
    CHECK_FALSE(e.star);
    CHECK_FALSE(e.star_star);
    CHECK_FALSE(e.hypothesis);
    CHECK(e.colour == BlockColour::red);
    CHECK(e.flagged);
    CHECK(e.consistent);

    CHECK_THROWS_AS(project_auxiliary(AuxBlock{0, 4, 2, {}}, Rational(0)), InputError);
    CHECK_THROWS_AS(project_auxiliary(AuxBlock{1, 1, 1, {{0, 0, 1}}}, Rational(0)), InputError);

    const AuxBlock blk = random_aux_block(5, 6, 4, 0.8, 3);
    CHECK(aux_block_from_json(nlohmann::json::parse(to_json(blk).dump())).triples == blk.triples);
}

TEST_CASE("three triples") {
    const AuxiliaryHypergraph full = random_aux(4, 3, 1.0, 1);
    const auto t = find_three_triples(full);
    REQUIRE(t);
    CHECK(t->index[3] == 3);
    CHECK(t->extreme);
    CHECK(verify_three_triples(full, *t));

    CHECK_FALSE(find_three_triples(random_aux(4, 3, 0.0, 1)));

    const AuxiliaryHypergraph dense = random_aux(5, 4, 0.6, 7);
    const auto d = find_three_triples(dense);
    REQUIRE(d);
    CHECK(verify_three_triples(dense, *d));

    const AuxiliaryHypergraph again = aux_from_json(nlohmann::json::parse(to_json(dense).dump()));
    CHECK(again.blocks.size() == dense.blocks.size());
    CHECK_THROWS_AS(find_three_triples(random_aux(9, 2, 0.5, 1)), ResourceRefusal);
}

TEST_CASE("extremal explorer") {
    const auto two = explore_extremal(2, 6, Rational(1, 4), 3, 1);
    CHECK(two.min_ratio == Rational(1));
    CHECK(two.triangle_free);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto r = explore_extremal(3, 8, Rational(1, 4), 5, seed, 300);
        CHECK(r.start_ratio == Rational(1, 4));
        CHECK(r.min_ratio >= Rational(1, 4));
        CHECK(r.triangle_free);
        CHECK_FALSE(has_triangle(r.graph));
    }
    const auto a = explore_extremal(4, 6, Rational(1, 4), 4, 9, 200);
    const auto b = explore_extremal(4, 6, Rational(1, 4), 4, 9, 200);
    CHECK(a.graph == b.graph);
}
