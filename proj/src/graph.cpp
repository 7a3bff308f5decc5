#include "qrh/graph.hpp"

namespace qrh {

Graph::Graph(std::size_t n) : rows_(n, Bitset(n)) {}

void Graph::add_edge(Vertex u, Vertex v) {
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    rows_[u].reset(v);
    rows_[v].reset(u);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

namespace {

// Number of colours a greedy sequential colouring uses on `cand`; an upper
// bound on the clique number of the induced subgraph.
std::size_t greedy_colour_bound(const Graph& g, const Bitset& cand, std::size_t stop_at) {
    Bitset uncoloured = cand;
    std::size_t colours = 0;
    while (!uncoloured.none()) {
        ++colours;
        if (colours >= stop_at) return colours;
        Bitset avail = uncoloured;
        for (std::size_t v = avail.find_first(); v < avail.size(); v = avail.find_next(v + 1)) {
            uncoloured.reset(v);
            const RowView nb = g.neighbours(static_cast<Vertex>(v)).view();
            MutableRowView a = avail.view();
            for (std::size_t w = 0; w < a.size(); ++w) a[w] &= ~nb[w];
        }
    }
    return colours;
}

bool extend(const Graph& g, std::size_t k, std::vector<Vertex>& chosen, const Bitset& cand) {
    if (chosen.size() == k) return true;
    const std::size_t need = k - chosen.size();
    if (cand.count() < need) return false;
    if (need > 2 && greedy_colour_bound(g, cand, need) < need) return false;
    for (std::size_t v = cand.find_first(); v < cand.size(); v = cand.find_next(v + 1)) {
        Bitset next = cand;
        next &= g.neighbours(static_cast<Vertex>(v)).view();
        next.clear_through(v);
        chosen.push_back(static_cast<Vertex>(v));
        if (extend(g, k, chosen, next)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k) {
    if (k == 0) return std::vector<Vertex>{};
    Bitset all(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) all.set(v);
    std::vector<Vertex> chosen;
    if (extend(g, k, chosen, all)) return chosen;
    return std::nullopt;
}

std::size_t count_triangles(const Graph& g) {
    std::size_t total = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
        const Bitset& nu = g.neighbours(u);
        for (std::size_t v = nu.find_next(u + 1); v < nu.size(); v = nu.find_next(v + 1)) {
            Bitset common = nu;
            common &= g.neighbours(static_cast<Vertex>(v)).view();
            common.clear_through(v);
            total += common.count();
        }
    }
    return total;
}

}  // namespace qrh
