#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrh/hypergraph.hpp"
#include "qrh/multipartite_graph.hpp"
#include "qrh/rational.hpp"

namespace qrh {

enum class Method { exact, local_search, sampled };
std::string method_name(Method m);

/// Outcome of a deviation scan.
///
/// `max_deviation` is in edge-count units and exact as a rational. For
/// Method::exact it is the true maximum over the whole search space; for the
/// heuristic methods it is attained by `witness` and so is a certified lower
/// bound on that maximum. `eta` divides by n^3 (n^4 for 4-uniform input,
/// |X||Y| for bipartite regularity).
struct DeviationReport {
    std::string kind;
    std::size_t n = 0;
    Rational reference_density{0};
    Rational max_deviation{0};
    double eta = 0.0;
    Method method = Method::exact;
    std::vector<std::vector<Vertex>> witness;          // U / X,Y,Z / U1..U4 / X',Y'
    std::vector<std::pair<Vertex, Vertex>> witness_pairs;  // pair set X of the pair form
    std::size_t restarts = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Sieve-bound bookkeeping for xyz scans (evaluated triples / violations).
    std::size_t bound_checks = 0;
    std::size_t bound_violations = 0;
};

/// Caps on exhaustive modes. Defaults are the configured caps; raising one past
/// its hard limit is an InputError, and an exact request beyond the configured
/// cap is a ResourceRefusal (never a silent fallback to search).
struct ExactCaps {
    std::size_t weak = 24;
    std::size_t pair = 20;
    std::size_t bipartite = 24;
    static constexpr std::size_t kWeakHardLimit = 30;
    static constexpr std::size_t kPairHardLimit = 26;
    static constexpr std::size_t kBipartiteHardLimit = 30;
};

struct SearchOptions {
    Method mode = Method::exact;
    std::size_t restarts = 32;
    std::uint64_t seed = 0;
    ExactCaps caps{};
};

/// max over U of |e(U) - d C(|U|,3)|. Exact mode walks all subsets in Gray-code
/// order, updating e(U) incrementally; search mode is steepest single-vertex
/// toggling from `restarts` starts (restart 0 starts from U = V).
/// d defaults to the density of h.
DeviationReport weak_deviation(const Hypergraph3& h, std::optional<Rational> d, const SearchOptions& opt);

/// max over sampled, locally improved, pairwise disjoint (X,Y,Z) of
/// |e(X,Y,Z) - d|X||Y||Z||. If `weak_max_deviation` (the exact D of
/// weak_deviation for the same d) is given, every evaluated triple is checked
/// against the sieve bound 7 D and violations are counted.
DeviationReport xyz_deviation(const Hypergraph3& h, std::optional<Rational> d, std::size_t samples,
                              std::uint64_t seed, std::optional<Rational> weak_max_deviation = std::nullopt);

/// max over U and pair sets X of |e(U,X) - d|U||X||. For fixed U the best X
/// takes every pair whose residual deg_U(p) - d|U| has the majority sign, so
/// only U is enumerated (exact) or searched.
DeviationReport pair_deviation(const Hypergraph3& h, std::optional<Rational> d, const SearchOptions& opt);

/// Sampled / locally improved max of |e(U1..U4) - d prod |U_i|| over pairwise
/// disjoint vertex sets.
DeviationReport quad_vertex_deviation(const Hypergraph4& h, std::optional<Rational> d, std::size_t samples,
                                      std::uint64_t seed);

/// max over X' in X, Y' in Y of |e(X',Y') - d|X'||Y'||; eta = D/(|X||Y|).
/// Exact mode enumerates subsets of the smaller side (cap applies to it).
DeviationReport bipartite_regularity_deviation(const BipartiteGraph& g, std::optional<Rational> d,
                                               const SearchOptions& opt);

/// Certified upper bound on the bipartite maximum deviation:
/// min(sigma_max(A - dJ) sqrt(|X||Y|), max(d, 1-d)|X||Y|).
double bipartite_deviation_upper_bound(const BipartiteGraph& g, const Rational& d);

/// Where the regularity parameter of the triangle counting check comes from.
/// exact: exhaustive deviation (smaller side of each piece within the
/// bipartite cap); search: local-search deviation, a certified lower bound;
/// spectral: the singular-value upper bound.
enum class DeltaSource { exact, search, spectral };
std::string delta_source_name(DeltaSource s);

/// Exact triangle count of a tripartite graph and the triangle counting bound
/// (d^3 + 3 delta)|X||Y||Z|, delta the largest normalised deviation of the
/// three bipartite pieces against d. The bound grows with delta, so if it
/// holds with a lower bound on delta (search) it holds with the true value.
struct TriangleCountReport {
    std::int64_t triangles = 0;
    Rational d{0};
    double delta = 0.0;
    std::string delta_source;
    double bound = 0.0;
    bool holds = false;
};
std::int64_t count_triangles_tripartite(const MultipartiteGraph& p);
/// d defaults to the edge density over the three pieces.
TriangleCountReport triangle_count_tripartite(const MultipartiteGraph& p, std::optional<Rational> d,
                                              DeltaSource source, const SearchOptions& opt = {});

/// Tripartite graph whose three parts are vertex subsets of a hypergraph.
struct Triad {
    MultipartiteGraph graph;                 // three parts
    std::vector<std::vector<Vertex>> labels;  // labels[i][a] = vertex of H
};
/// |E(H) cap K3(P)| / |K3(P)|, or 0 when P has no triangle.
Rational relative_density(const Hypergraph3& h, const Triad& p);

/// Fraction of ordered quadruples (x1..x4) with {x_a,x_b} in G_ab for all
/// six pairs that are edges of h (0 when there are none). Graphs are given in
/// the order G12, G13, G14, G23, G24, G34.
Rational quad_pair_profile(const Hypergraph4& h, const std::array<Graph, 6>& graphs);

}  // namespace qrh
