#include "qrh/report.hpp"

#include "qrh/errors.hpp"
#include "qrh/hash.hpp"

namespace qrh {

using ojson = nlohmann::ordered_json;

ojson rational_json(const Rational& r) {
    return ojson{{"rational", to_string(r)}, {"value", to_double(r)}};
}

ojson to_json(const DeviationReport& r) {
    ojson j;
    j["kind"] = r.kind;
    j["n"] = r.n;
    j["reference_density"] = rational_json(r.reference_density);
    j["max_deviation"] = rational_json(r.max_deviation);
    j["eta"] = r.eta;
    j["method"] = method_name(r.method);
    j["witness"] = r.witness;
    if (!r.witness_pairs.empty()) {
        ojson pairs = ojson::array();
        for (auto [u, v] : r.witness_pairs) pairs.push_back({u, v});
        j["witness_pairs"] = pairs;
    }
    if (r.method == Method::local_search) j["restarts"] = r.restarts;
    if (r.method == Method::sampled) j["samples"] = r.samples;
    if (r.method != Method::exact) j["seed"] = r.seed;
    if (r.bound_checks) {
        j["sieve_bound_checks"] = r.bound_checks;
        j["sieve_bound_violations"] = r.bound_violations;
    }
    return j;
}

ojson to_json(const Witness& w) {
    ojson j{{"kind", w.kind}, {"vertices", w.vertices}};
    if (w.apex) j["apex"] = *w.apex;
    if (w.apex_position) j["apex_position"] = apex_position_name(*w.apex_position);
    return j;
}

ojson to_json(const TriangleCountReport& r) {
    return ojson{{"triangles", r.triangles}, {"d", rational_json(r.d)},       {"delta", r.delta},
                 {"delta_source", r.delta_source}, {"bound", r.bound}, {"holds", r.holds}};
}

ojson to_json(const MeanSquareProfile& p) {
    ojson rho = ojson::array(), sums = ojson::array();
    for (std::size_t i = 0; i < p.m; ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < p.m; ++j) row.push_back(to_string(p.rho[i][j]));
        rho.push_back(row);
        sums.push_back(p.sum_squares[i]);
    }
    return ojson{{"m", p.m}, {"rho", rho}, {"sum_squares", sums}, {"min_ratio", rational_json(p.min_ratio())}};
}

ojson to_json(const ProofDiagnostics& d) {
    ojson j;
    j["delta"] = rational_json(d.delta);
    j["r_max"] = d.r_max;
    j["q_sizes"] = d.q_sizes;
    j["r"] = d.r;
    if (d.eps) {
        j["eps"] = rational_json(*d.eps);
        j["claim_applicable"] = d.claim_applicable;
        ojson checked = ojson::array(), bad = ojson::array();
        for (auto [a, b] : d.claim_checked) checked.push_back({a, b});
        for (auto [a, b] : d.claim_violations) bad.push_back({a, b});
        j["claim_checked"] = checked;
        j["claim_violations"] = bad;
    }
    return j;
}

ojson to_json(const AuxProjection& p) {
    return ojson{{"triples", p.triples},
                 {"q_i_edges", p.q_i.edge_count()},
                 {"q_k_edges", p.q_k.edge_count()},
                 {"s1", p.s1},
                 {"s2", p.s2},
                 {"star", p.star},
                 {"star_star", p.star_star},
                 {"hypothesis", p.hypothesis},
                 {"colour", p.colour == BlockColour::red ? "red" : "green"},
                 {"flagged", p.flagged},
                 {"consistent", p.consistent}};
}

ojson to_json(const ThreeTriples& t) {
    ojson v;
    const char* names[] = {"12", "13", "14", "23", "24", "34"};
    for (int i = 0; i < 6; ++i) v[names[i]] = t.vertex[static_cast<std::size_t>(i)];
    return ojson{{"index", t.index}, {"vertex", v}, {"extreme", t.extreme}};
}

namespace {

std::vector<std::array<std::uint32_t, 3>> triples_from(const nlohmann::json& j) {
    std::vector<std::array<std::uint32_t, 3>> out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw InputError("triple must be [x, y, z]");
        out.push_back({t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>(), t[2].get<std::uint32_t>()});
    }
    return out;
}

}  // namespace

AuxBlock aux_block_from_json(const nlohmann::json& j) {
    AuxBlock b;
    b.a = j.at("a").get<std::size_t>();
    b.b = j.at("b").get<std::size_t>();
    b.c = j.at("c").get<std::size_t>();
    b.triples = triples_from(j.at("triples"));
    return b;
}

AuxiliaryHypergraph aux_from_json(const nlohmann::json& j) {
    AuxiliaryHypergraph a;
    a.m = j.at("m").get<std::size_t>();
    for (const auto& c : j.at("classes")) {
        const auto i = c.at(0).get<std::size_t>(), k = c.at(1).get<std::size_t>();
        if (i >= k || k >= a.m) throw InputError("class index pair must satisfy i < j < m");
        a.class_size[{i, k}] = c.at(2).get<std::size_t>();
    }
    for (const auto& blk : j.value("blocks", nlohmann::json::array())) {
        const auto i = blk.at("i").get<std::size_t>(), jj = blk.at("j").get<std::size_t>(),
                   k = blk.at("k").get<std::size_t>();
        if (!(i < jj && jj < k && k < a.m)) throw InputError("block indices must satisfy i < j < k < m");
        AuxBlock b{a.size(i, jj), a.size(i, k), a.size(jj, k), triples_from(blk.at("triples"))};
        for (const auto& t : b.triples)
            if (t[0] >= b.a || t[1] >= b.b || t[2] >= b.c) throw InputError("block triple out of range");
        a.blocks[{i, jj, k}] = std::move(b);
    }
    return a;
}

ojson to_json(const AuxBlock& b) {
    ojson t = ojson::array();
    for (const auto& x : b.triples) t.push_back(x);
    return ojson{{"a", b.a}, {"b", b.b}, {"c", b.c}, {"triples", t}};
}

ojson to_json(const AuxiliaryHypergraph& a) {
    ojson classes = ojson::array(), blocks = ojson::array();
    for (const auto& [key, s] : a.class_size) classes.push_back({key.first, key.second, s});
    for (const auto& [key, b] : a.blocks) {
        ojson t = ojson::array();
        for (const auto& x : b.triples) t.push_back(x);
        blocks.push_back(ojson{{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"triples", t}});
    }
    return ojson{{"m", a.m}, {"classes", classes}, {"blocks", blocks}};
}

AuxBlock random_aux_block(std::size_t a, std::size_t b, std::size_t c, double p, std::uint64_t seed) {
    AuxBlock blk{a, b, c, {}};
    SplitMixRng rng(seed);
    for (std::uint32_t x = 0; x < a; ++x)
        for (std::uint32_t y = 0; y < b; ++y)
            for (std::uint32_t z = 0; z < c; ++z)
                if (rng.unit() < p) blk.triples.push_back({x, y, z});
    return blk;
}

AuxiliaryHypergraph random_aux(std::size_t m, std::size_t class_size, double p, std::uint64_t seed) {
    AuxiliaryHypergraph a;
    a.m = m;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) a.class_size[{i, j}] = class_size;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                a.blocks[{i, j, k}] = random_aux_block(class_size, class_size, class_size, p,
                                                       tuple_hash(seed, HashDomain::search, {i, j, k}));
    return a;
}

}  // namespace qrh
