#include "qcontext/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qcontext/matrix.hpp"
#include "qcontext/simplex.hpp"

namespace qcontext {

VertexSet mask_to_vertices(std::uint64_t mask) {
    VertexSet vs;
    while (mask) {
        vs.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return vs;
}

std::uint64_t vertices_to_mask(const VertexSet& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    return m;
}

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)) {
    if (labels_.size() > 64) throw std::invalid_argument("graph exceeds the 64-vertex cap");
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (!index_.emplace(labels_[static_cast<std::size_t>(i)], i).second)
            throw std::invalid_argument("duplicate vertex label \"" + labels_[static_cast<std::size_t>(i)] + "\"");
    }
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop on vertex \"" + labels_[static_cast<std::size_t>(a)] + "\"");
        adj_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        adj_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
}

int Graph::index_of(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex label \"" + label + "\"");
    return it->second;
}

bool Graph::adjacent(int i, int j) const {
    return (adj_.at(static_cast<std::size_t>(i)) >> j) & 1;
}

int Graph::degree(int i) const {
    return std::popcount(adj_.at(static_cast<std::size_t>(i)));
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (adjacent(i, j)) edges.emplace_back(i, j);
    return edges;
}

int Graph::edge_count() const {
    int m = 0;
    for (int i = 0; i < size(); ++i) m += degree(i);
    return m / 2;
}

namespace {

// Bron-Kerbosch with a max-degree-into-P pivot; all choices index-ordered so
// the output is reproducible before the final sort.
struct CliqueCollector {
    const std::vector<std::uint64_t>& adj;
    std::vector<std::uint64_t> found;

    void expand(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
            found.push_back(r);
            return;
        }
        int pivot = -1;
        int best = -1;
        for (std::uint64_t m = p | x; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            const int cnt = std::popcount(p & adj[static_cast<std::size_t>(u)]);
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        const std::uint64_t ext = p & ~adj[static_cast<std::size_t>(pivot)];
        for (std::uint64_t m = ext; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const std::uint64_t bit = std::uint64_t{1} << v;
            expand(r | bit, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)]);
            p &= ~bit;
            x |= bit;
        }
    }
};

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) adj[static_cast<std::size_t>(i)] = g.neighbor_mask(i);
    return adj;
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    if (g.size() == 0) return {};
    const auto adj = adjacency_masks(g);
    CliqueCollector collector{adj, {}};
    const std::uint64_t all = (g.size() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.size()) - 1);
    collector.expand(0, all, 0);
    std::vector<VertexSet> cliques;
    cliques.reserve(collector.found.size());
    for (std::uint64_t m : collector.found) cliques.push_back(mask_to_vertices(m));
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

WeightVector context_counts(const Graph& g) {
    WeightVector counts(static_cast<std::size_t>(g.size()), Rat(0));
    for (const VertexSet& c : maximal_cliques(g))
        for (int v : c) counts[static_cast<std::size_t>(v)] += 1;
    return counts;
}

int total_contexts(const Graph& g) {
    return static_cast<int>(maximal_cliques(g).size());
}

WeightVector ones_weights(const Graph& g) {
    return WeightVector(static_cast<std::size_t>(g.size()), Rat(1));
}

namespace {

struct MwisSearch {
    const std::vector<std::uint64_t>& adj;
    const WeightVector& w;
    Rat best = -1;
    std::uint64_t best_mask = 0;

    Rat cover_bound(std::uint64_t cand) const {
        std::vector<std::uint64_t> cliques;
        std::vector<Rat> maxima;
        for (std::uint64_t m = cand; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            bool placed = false;
            for (std::size_t k = 0; k < cliques.size(); ++k) {
                if ((cliques[k] & ~adj[static_cast<std::size_t>(v)]) == 0) {
                    cliques[k] |= std::uint64_t{1} << v;
                    if (w[static_cast<std::size_t>(v)] > maxima[k]) maxima[k] = w[static_cast<std::size_t>(v)];
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cliques.push_back(std::uint64_t{1} << v);
                maxima.push_back(w[static_cast<std::size_t>(v)]);
            }
        }
        Rat bound = 0;
        for (const Rat& x : maxima) bound += x;
        return bound;
    }

    void rec(std::uint64_t chosen, std::uint64_t cand, const Rat& cur) {
        if (cur > best) {
            best = cur;
            best_mask = chosen;
        }
        if (cand == 0) return;
        if (cur + cover_bound(cand) <= best) return;
        const int v = std::countr_zero(cand);
        const std::uint64_t bit = std::uint64_t{1} << v;
        rec(chosen | bit, cand & ~(adj[static_cast<std::size_t>(v)] | bit), cur + w[static_cast<std::size_t>(v)]);
        rec(chosen, cand & ~bit, cur);
    }
};

}  // namespace

IndependenceResult weighted_independence(const Graph& g, const WeightVector& w) {
    if (static_cast<int>(w.size()) != g.size())
        throw std::invalid_argument("weight vector length mismatch");
    for (const Rat& x : w)
        if (x < 0) throw std::invalid_argument("weights must be nonnegative");
    const auto adj = adjacency_masks(g);
    MwisSearch search{adj, w};
    const std::uint64_t all = (g.size() == 0)   ? 0
                              : (g.size() == 64) ? ~std::uint64_t{0}
                                                 : ((std::uint64_t{1} << g.size()) - 1);
    search.rec(0, all, Rat(0));
    return IndependenceResult{search.best, mask_to_vertices(search.best_mask)};
}

namespace {

struct VertexInvariant {
    int degree;
    std::vector<int> neighbor_degrees;  // sorted
    int clique_count;
    int max_clique_size;

    bool operator==(const VertexInvariant&) const = default;
};

std::vector<VertexInvariant> vertex_invariants(const Graph& g) {
    const auto cliques = maximal_cliques(g);
    std::vector<VertexInvariant> inv(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) {
        auto& vi = inv[static_cast<std::size_t>(i)];
        vi.degree = g.degree(i);
        for (int j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j)) vi.neighbor_degrees.push_back(g.degree(j));
        std::sort(vi.neighbor_degrees.begin(), vi.neighbor_degrees.end());
        vi.clique_count = 0;
        vi.max_clique_size = 0;
        for (const VertexSet& c : cliques) {
            if (std::binary_search(c.begin(), c.end(), i)) {
                ++vi.clique_count;
                vi.max_clique_size = std::max(vi.max_clique_size, static_cast<int>(c.size()));
            }
        }
    }
    return inv;
}

struct IsoSearch {
    const Graph& g1;
    const Graph& g2;
    const std::vector<std::vector<int>>& candidates;
    std::vector<int> map;   // g1 index -> g2 index, -1 unset
    std::uint64_t used = 0;

    bool extend(int i) {
        if (i == g1.size()) return true;
        for (int j : candidates[static_cast<std::size_t>(i)]) {
            if ((used >> j) & 1) continue;
            bool ok = true;
            for (int u = 0; u < i; ++u) {
                if (g1.adjacent(i, u) != g2.adjacent(j, map[static_cast<std::size_t>(u)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(i)] = j;
            used |= std::uint64_t{1} << j;
            if (extend(i + 1)) return true;
            used &= ~(std::uint64_t{1} << j);
            map[static_cast<std::size_t>(i)] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> graph_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    if (g1.size() == 0) return std::vector<int>{};
    const auto inv1 = vertex_invariants(g1);
    const auto inv2 = vertex_invariants(g2);
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(g1.size()));
    for (int i = 0; i < g1.size(); ++i) {
        for (int j = 0; j < g2.size(); ++j)
            if (inv1[static_cast<std::size_t>(i)] == inv2[static_cast<std::size_t>(j)])
                candidates[static_cast<std::size_t>(i)].push_back(j);
        if (candidates[static_cast<std::size_t>(i)].empty()) return std::nullopt;
    }
    IsoSearch search{g1, g2, candidates, std::vector<int>(static_cast<std::size_t>(g1.size()), -1), 0};
    if (!search.extend(0)) return std::nullopt;
    return search.map;
}

int graph_dimension(const Graph& g) {
    if (g.size() == 0) throw std::invalid_argument("empty graph has no dimension");
    int dim = 0;
    for (const VertexSet& c : maximal_cliques(g)) dim = std::max(dim, static_cast<int>(c.size()));
    return dim;
}

namespace {

void collect_independent(const Graph& g, int start, VertexSet& current, std::uint64_t forbidden,
                         std::vector<VertexSet>& out, std::size_t cap) {
    if (out.size() >= cap) throw std::runtime_error("too many independent sets");
    out.push_back(current);
    for (int v = start; v < g.size(); ++v) {
        if ((forbidden >> v) & 1) continue;
        current.push_back(v);
        collect_independent(g, v + 1, current, forbidden | g.neighbor_mask(v), out, cap);
        current.pop_back();
    }
}

}  // namespace

std::vector<VertexSet> independent_sets(const Graph& g, std::size_t cap) {
    std::vector<VertexSet> out;
    VertexSet current;
    collect_independent(g, 0, current, 0, out, cap);
    return out;
}

bool vp_membership(const Graph& g, const RatVec& x) {
    if (g.size() > 20) throw std::invalid_argument("vp_membership guarded to graphs with at most 20 vertices");
    if (static_cast<int>(x.size()) != g.size())
        throw std::invalid_argument("point length mismatch");
    const auto sets = independent_sets(g, 50000);
    const int n = g.size();
    // Columns are lambda weights per independent set; rows force the convex
    // combination of incidence vectors to hit x and the weights to sum to 1.
    Matrix a(n + 1, static_cast<int>(sets.size()));
    for (std::size_t j = 0; j < sets.size(); ++j) {
        for (int v : sets[j]) a.at(v, static_cast<int>(j)) = 1;
        a.at(n, static_cast<int>(j)) = 1;
    }
    RatVec b(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
    b[static_cast<std::size_t>(n)] = 1;
    return lp_feasible_point(a, b).has_value();
}

}  // namespace qcontext
