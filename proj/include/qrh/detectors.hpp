#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrh/constructions.hpp"
#include "qrh/hypergraph.hpp"

namespace qrh {

enum class ApexPosition { min, max, interior };
std::string apex_position_name(ApexPosition p);

struct Witness {
    std::string kind;
    std::vector<Vertex> vertices;  // ascending, except F4: (u, v, x, y, z)
    std::optional<Vertex> apex;
    std::optional<ApexPosition> apex_position;
};

/// Lexicographically least 4-set spanning at least three edges. In ordered
/// mode the apex must be the smallest or largest of the four; when several
/// vertices qualify as apex (a K4) the smallest admissible one is reported.
std::optional<Witness> find_k4_minus(const Hypergraph3& h, bool ordered);
/// Copies of K4-: pairs (apex a, 3-set T) with all three triples a+pair(T) in
/// E, i.e. triangles summed over all link graphs. A K4 contributes 4.
std::int64_t count_k4_minus(const Hypergraph3& h);

/// Lexicographically least k-set all of whose triples are edges; k >= 4.
std::optional<Witness> find_clique3(const Hypergraph3& h, std::size_t k);

/// Least apex a whose link graph contains a K_k, then the least such clique.
/// k in [3, 8]; larger k is a ResourceRefusal.
std::optional<Witness> find_Sk(const Hypergraph3& h, std::size_t k);

/// Pair {u,v} whose link graph contains a triangle {x,y,z}; least pair, then
/// least triangle. Vertices are reported as (u, v, x, y, z).
std::optional<Witness> find_F4(const Hypergraph4& h);

/// Injection phi: V(F) -> V(H) mapping every edge of F onto an edge of H
/// (not necessarily induced). Ordered mode requires phi increasing.
/// F with more than 9 vertices is a ResourceRefusal (enough for every
/// 3-edge pattern).
std::optional<std::vector<Vertex>> embed_small(const Hypergraph3& f, const Hypergraph3& h, bool ordered);

struct VanishingWitness {
    std::vector<Vertex> order;  // order[i] = v_{i+1}
    PairColouring colouring;    // colours red/blue/green on V(F); unforced pairs red
};
/// Searches every enumeration v_1..v_f of V(F) for a 3-colouring of the
/// pairs with {v_i,v_j} red, {v_i,v_k} blue, {v_j,v_k} green for every edge
/// {v_i,v_j,v_k}, i<j<k. An edge forces all three of its pair colours, so
/// each enumeration is decided by propagation alone.
/// Isolated vertices are placed last; more than 9 non-isolated vertices is
/// a ResourceRefusal.
std::optional<VanishingWitness> check_vanishing_condition(const Hypergraph3& f);

struct LinkColouringReport {
    Vertex apex = 0;
    std::vector<std::vector<Vertex>> classes;  // k-1 classes
    std::size_t violations = 0;                // link edges inside a class
    bool partition = false;                    // classes partition V \ {a}
};
/// Classes C_i = {x < a : psi(x,a) = i} + {x > a : psi(a,x) = i+1 mod (k-1)}
/// for an S_k-free hypergraph built from psi. Without psi this is an
/// InputError: the classes cannot be recovered from H alone.
LinkColouringReport link_colouring_witness(const Hypergraph3& h, const std::optional<PairColouring>& psi, Vertex a);

}  // namespace qrh
