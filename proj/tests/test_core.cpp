#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qrh/errors.hpp"
#include "qrh/io.hpp"
#include "qrh/multipartite_graph.hpp"

using namespace qrh;
using testing::complete3;
using testing::range;

namespace {

bool regular5(const Tournament& t) {
    for (Vertex v = 0; v < 5; ++v)
        if (t.out_degree(v) != 2) return false;
    return true;
}

}  // namespace

TEST_CASE("hypergraph construction rejects bad edges") {
    const std::vector<Triple> repeated{{0, 0, 1}};
    const std::vector<Triple> out_of_range{{0, 1, 5}};
    const std::vector<Triple> twice{{0, 1, 2}, {2, 1, 0}};
    CHECK_THROWS_AS(Hypergraph3(4, repeated), InputError);
    CHECK_THROWS_AS(Hypergraph3(4, out_of_range), InputError);
    CHECK_THROWS_AS(Hypergraph3(4, twice), InputError);
    CHECK_THROWS_AS(Hypergraph3(Hypergraph3::kMaxVertices + 1), InputError);
}

TEST_CASE("edges are stored sorted and as link rows") {
    const std::vector<Triple> e{{3, 1, 2}, {0, 2, 1}};
    const Hypergraph3 h(4, e);
    CHECK(h.edge_count() == 2);
    CHECK(h.edges()[0] == Triple{0, 1, 2});
    CHECK(h.edges()[1] == Triple{1, 2, 3});
    CHECK(h.has_edge(2, 3, 1));
    CHECK_FALSE(h.has_edge(0, 1, 3));
    CHECK(test_bit(h.link_row(2, 1), 0));
    CHECK(test_bit(h.link_row(1, 2), 3));
    CHECK(h.density().density == Rational(2, 4));
}

TEST_CASE("count_e_U") {
    const auto k6 = complete3(6);
    const std::vector<Vertex> u{0, 2, 3, 5};
    CHECK(count_edges_within(k6, u) == 4);
    CHECK(count_edges_within(Hypergraph3(6), u) == 0);
    const std::vector<Vertex> bad{0, 6};
    CHECK_THROWS_AS(count_edges_within(k6, bad), InputError);

    // regular 5-vertex tournament: 10 - 5*C(2,2) = 5 cyclic triangles
    const auto s = testing::seed_where(5, regular5);
    const Hypergraph3 h = gen_tournament_3hg(5, s);
    CHECK(count_edges_within(h, range(0, 5)) == 5);
    CHECK(oracle::EdgeSet(h).e.size() == 5);
}

TEST_CASE("count_e_XYZ") {
    const auto k9 = complete3(9);
    const std::vector<Vertex> x{0, 1}, y{2, 3, 4}, z{5, 6, 7, 8};
    CHECK(count_edges_xyz(k9, x, y, z) == 24);
    const auto all = range(0, 9);
    CHECK(count_edges_xyz(k9, all, all, all) == 9 * 8 * 7);

    const std::vector<Triple> one{{0, 1, 2}};
    const Hypergraph3 h(3, one);
    const std::vector<Vertex> a{0}, b{1}, c{1, 2};
    CHECK(count_edges_xyz(h, a, b, c) == 1);
    const std::vector<Vertex> bad{3};
    CHECK_THROWS_AS(count_edges_xyz(h, a, b, bad), InputError);

    for (std::uint64_t s = 0; s < 10; ++s) {
        const Hypergraph3 r = oracle::random_h3(10, 0.4, s);
        const std::vector<Vertex> p{0, 1, 2, 7}, q{1, 3, 4}, t{2, 5, 6, 9};
        CHECK(count_edges_xyz(r, p, q, t) == oracle::count_xyz(r, p, q, t));
    }
}

TEST_CASE("link_graph") {
    const Graph g = link_graph(complete3(5), 0);
    CHECK(g.edge_count() == 6);
    CHECK(g.degree(0) == 0);
    CHECK(link_graph(Hypergraph3(5), 2).edge_count() == 0);

    const auto s = testing::seed_where(5, regular5);
    const Hypergraph3 h = gen_tournament_3hg(5, s);
    const Tournament t = Tournament::hashed(5, s);
    for (Vertex a = 0; a < 5; ++a) {
        std::size_t through = 0;
        for (Vertex x = 0; x < 5; ++x)
            for (Vertex y = 0; y < 5; ++y)
                if (x != a && y != a && x != y && t.arc(a, x) && t.arc(x, y) && t.arc(y, a)) ++through;
        CHECK(link_graph(h, a).edge_count() == through);
    }
}

TEST_CASE("induced") {
    const Hypergraph3 h = oracle::random_h3(9, 0.5, 3);
    CHECK(induced(h, range(0, 9)) == h);
    const std::vector<Vertex> u{1, 3, 4, 5};
    CHECK(induced(complete3(6), u) == complete3(4));
    const std::vector<Triple> one{{0, 1, 2}};
    const std::vector<Vertex> w{0, 1, 3};
    const Hypergraph3 sub = induced(Hypergraph3(4, one), w);
    CHECK(sub.n() == 3);
    CHECK(sub.edge_count() == 0);
}

TEST_CASE("hypergraph text format") {
    const AnyHypergraph a = read_hypergraph("3 3 1\n0 1 2\n");
    REQUIRE(std::holds_alternative<Hypergraph3>(a));
    CHECK(std::get<Hypergraph3>(a).edge_count() == 1);
    CHECK(std::get<Hypergraph3>(a).n() == 3);

    const std::string t = write_hypergraph(gen_tournament_3hg(30, 4));
    CHECK(write_hypergraph(read_hypergraph(t)) == t);
    const std::string q = write_hypergraph(gen_oriented_4hg(20, 4));
    CHECK(write_hypergraph(read_hypergraph(q)) == q);

    CHECK_THROWS_AS(read_hypergraph("5 6 0\n"), ParseError);
    CHECK_THROWS_AS(read_hypergraph("3 x 0\n"), ParseError);
    CHECK_THROWS_AS(read_hypergraph(""), ParseError);
    try {
        read_hypergraph("3 4 2\n0 1 2\n0 1 7\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        read_hypergraph("3 4 2\n0 1 2\n0 1 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(read_hypergraph("3 4 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(read_hypergraph3("4 5 0\n"), ParseError);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/4") == Rational(1, 4));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(to_string(Rational(6, 8)) == "3/4");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("multipartite text format") {
    MultipartiteGraph g({2, 3, 1});
    g.add_edge(0, 1, 1, 2);
    g.add_edge(1, 0, 2, 0);
    g.add_edge(0, 0, 2, 0);
    const std::string t = write_multipartite(g);
    CHECK(read_multipartite(t) == g);
    CHECK(g.has_edge(2, 0, 1, 0));
    CHECK_THROWS_AS(g.add_edge(0, 0, 0, 1), InputError);
    CHECK_THROWS_AS(read_multipartite("mp 2 2 2\n0 0 1 5\n"), ParseError);
    CHECK_THROWS_AS(read_multipartite("xx 2 2 2\n"), ParseError);
}

TEST_CASE("graph cliques and triangles") {
    Graph g(6);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v);
    g.add_edge(4, 5);
    CHECK(count_triangles(g) == 4);
    const auto c = find_clique(g, 4);
    REQUIRE(c);
    CHECK(*c == std::vector<Vertex>{0, 1, 2, 3});
    CHECK_FALSE(find_clique(g, 5));
}
