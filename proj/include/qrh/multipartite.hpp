#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qrh/multipartite_graph.hpp"
#include "qrh/rational.hpp"

namespace qrh {

/// rho[i][j] = sum_{x in V_i} d_j(x)^2 / (|V_i| |V_j|^2) for i != j
/// (diagonal 0). sum_squares holds the integer numerators.
struct MeanSquareProfile {
    std::size_t m = 0;
    std::vector<std::vector<Rational>> rho;
    std::vector<std::vector<std::int64_t>> sum_squares;

    /// rho[i][j] - threshold for i < j (the direction the hypotheses use).
    Rational margin(std::size_t i, std::size_t j, const Rational& threshold) const { return rho[i][j] - threshold; }
    /// rho[i][j] >= threshold + eps for every i < j.
    bool satisfies(const Rational& threshold, const Rational& eps) const;
    /// Smallest rho[i][j] over i < j (1 when m < 2).
    Rational min_ratio() const;
};

/// Threshold of the triangle condition.
inline Rational triangle_threshold() { return Rational(1, 4); }
/// Threshold ((k-2)/(k-1))^2 of the K_k condition; k >= 3.
Rational clique_threshold(std::size_t k);

/// Throws InputError on an empty part.
MeanSquareProfile mean_square_profile(const MultipartiteGraph& g);

/// A vertex (part, index).
using PartVertex = std::pair<std::size_t, std::size_t>;

/// Lexicographically least triangle / k-clique (by flattened index).
std::optional<std::vector<PartVertex>> find_triangle_mp(const MultipartiteGraph& g);
std::optional<std::vector<PartVertex>> find_clique_mp(const MultipartiteGraph& g, std::size_t k);

/// Parts of even size s split into A_i (first half) and B_i; A_i ~ B_j for
/// all i != j. Triangle-free, every rho exactly 1/4.
MultipartiteGraph half_split(std::size_t m, std::size_t s);

struct ProofDiagnostics {
    Rational delta{0};
    std::size_t r_max = 0;  // floor(1 / (2 delta))
    /// q_sizes[i][j][r-1] = |Q_ij(r)|, Q_ij(r) = {x in V_i : d_j(x) >= (1/2 + r delta)|V_j|}.
    std::vector<std::vector<std::vector<std::size_t>>> q_sizes;
    /// Largest r with |Q_ij(r)| >= delta |V_i|, 0 when there is none.
    std::vector<std::vector<std::size_t>> r;
    std::optional<Rational> eps;
    /// eps >= 2 delta + delta^2: then the hypothesis rho[i][j] >= 1/4 + eps
    /// forces |Q_ij(1)| >= delta |V_i|.
    bool claim_applicable = false;
    std::vector<std::pair<std::size_t, std::size_t>> claim_checked;     // pairs i < j meeting the hypothesis
    std::vector<std::pair<std::size_t, std::size_t>> claim_violations;  // of those, |Q_ij(1)| < delta |V_i|
};
/// delta must lie strictly between 0 and 1/2.
ProofDiagnostics proof_diagnostics(const MultipartiteGraph& g, const Rational& delta,
                                   std::optional<Rational> eps = std::nullopt);

// ---------------------------------------------------------- auxiliary hypergraph

/// Tripartite block on classes P^{ij} (size a), P^{ik} (size b), P^{jk}
/// (size c); each triple is (x, y, z) with x in P^{ij}, y in P^{ik}, z in P^{jk}.
struct AuxBlock {
    std::size_t a = 0, b = 0, c = 0;
    std::vector<std::array<std::uint32_t, 3>> triples;
};

enum class BlockColour { red, green };

struct AuxProjection {
    BipartiteGraph q_i;  // Q^i_{jk}: P^{ij} x P^{ik}
    BipartiteGraph q_k;  // Q^k_{ij}: P^{ik} x P^{jk}
    std::int64_t triples = 0;
    std::int64_t s1 = 0;  // sum over y in P^{ik} of d_{Q^i}(y)^2
    std::int64_t s2 = 0;  // sum over y in P^{ik} of d_{Q^k}(y)^2
    bool star = false;         // s1 >= (1/4 + eps) a^2 b
    bool star_star = false;    // s2 >= (1/4 + eps) c^2 b
    bool hypothesis = false;   // triples >= (1/4 + eps) a b c
    BlockColour colour = BlockColour::green;  // red iff (*) fails
    bool flagged = false;      // both or neither hold: colour is a convention
    bool consistent = true;    // hypothesis implies (*) or (**)
};
/// Throws InputError on an empty class or an out-of-range triple.
AuxProjection project_auxiliary(const AuxBlock& block, const Rational& eps);

/// Auxiliary hypergraph with classes P^{ij}, 0 <= i < j < m.
struct AuxiliaryHypergraph {
    std::size_t m = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> class_size;
    /// Keyed by i < j < k; block classes are P^{ij}, P^{ik}, P^{jk}.
    std::map<std::array<std::size_t, 3>, AuxBlock> blocks;

    std::size_t size(std::size_t i, std::size_t j) const;
};

struct ThreeTriples {
    std::array<std::size_t, 4> index{};  // i1 < i2 < i3, then i4
    /// P^{ab} for (a,b) in 12, 13, 14, 23, 24, 34 (1-based positions into index).
    std::array<std::uint32_t, 6> vertex{};
    bool extreme = false;  // i4 is the largest or smallest of the four
};
/// Projects onto W_i = P^{i,i4} and looks for a triangle, trying i4 = m-1,
/// then i4 = 0, then the rest. m <= 8 and class sizes <= 16, else
/// ResourceRefusal.
std::optional<ThreeTriples> find_three_triples(const AuxiliaryHypergraph& aux);
/// Direct membership check of the three triples of a configuration.
bool verify_three_triples(const AuxiliaryHypergraph& aux, const ThreeTriples& t);

// -------------------------------------------------------------- explorer

struct ExploreResult {
    MultipartiteGraph graph;
    Rational min_ratio{0};
    Rational start_ratio{0};
    bool triangle_free = false;  // certified by exhaustive scan
    bool target_reached = false;
    std::size_t best_restart = 0;
    std::size_t accepted_moves = 0;
};
/// Hill-climbing from half_split(m, s) by triangle-free edge insertions and
/// single edge swaps. A move is accepted when it strictly improves, in
/// lexicographic order, (min_{i<j} rho, -#pairs attaining the min, sum rho).
/// Stops a restart at `steps` moves or once min ratio >= 1/4 + eps_target.
ExploreResult explore_extremal(std::size_t m, std::size_t s, const Rational& eps_target, std::size_t restarts,
                               std::uint64_t seed, std::size_t steps = 2000);

}  // namespace qrh
