#pragma once

#include <vector>

#include "qrh/constructions.hpp"
#include "qrh/hypergraph.hpp"

namespace testing {

using qrh::Vertex;

inline qrh::Hypergraph3 complete3(std::size_t n) {
    std::vector<qrh::Triple> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) e.push_back({a, b, c});
    return qrh::Hypergraph3(n, e);
}

inline qrh::Hypergraph4 complete4(std::size_t n) {
    std::vector<qrh::Quad> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) e.push_back({a, b, c, d});
    return qrh::Hypergraph4(n, e);
}

inline std::vector<Vertex> range(Vertex lo, Vertex hi) {
    std::vector<Vertex> v;
    for (Vertex x = lo; x < hi; ++x) v.push_back(x);
    return v;
}

/// First seed whose hashed tournament on n vertices satisfies `pred`.
template <typename Pred>
std::uint64_t seed_where(std::size_t n, Pred pred) {
    for (std::uint64_t s = 0;; ++s)
        if (pred(qrh::Tournament::hashed(n, s))) return s;
}

}  // namespace testing
