#ifndef QCONTEXT_GRAPH_HPP
#define QCONTEXT_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcontext/rational.hpp"

namespace qcontext {

// Vertex subsets are kept sorted ascending.
using VertexSet = std::vector<int>;
using WeightVector = RatVec;

VertexSet mask_to_vertices(std::uint64_t mask);
std::uint64_t vertices_to_mask(const VertexSet& vs);

/// Labeled simple undirected graph. Bitmask-backed, so at most 64 vertices;
/// everything here is desk scale and the cap is enforced on construction.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    int index_of(const std::string& label) const;
    bool has_label(const std::string& label) const { return index_.count(label) != 0; }

    bool adjacent(int i, int j) const;
    std::uint64_t neighbor_mask(int i) const { return adj_.at(static_cast<std::size_t>(i)); }
    int degree(int i) const;

    std::vector<std::pair<int, int>> edge_list() const;  // pairs i < j, sorted
    int edge_count() const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> adj_;
    std::map<std::string, int> index_;
};

// Inclusion-maximal cliques, each sorted ascending, list sorted lexicographically.
// Isolated vertices appear as singleton cliques.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// c_G(i): number of maximal cliques containing vertex i.
WeightVector context_counts(const Graph& g);

// c(G): number of maximal cliques.
int total_contexts(const Graph& g);

WeightVector ones_weights(const Graph& g);

struct IndependenceResult {
    Rat weight;
    VertexSet witness;
};

// alpha(G;w): exact branch and bound with a greedy clique-cover bound.
IndependenceResult weighted_independence(const Graph& g, const WeightVector& w);

// Adjacency-preserving bijection (index in g1 -> index in g2) if one exists.
std::optional<std::vector<int>> graph_isomorphic(const Graph& g1, const Graph& g2);

// Size of a maximum clique; the empty graph has none and raises.
int graph_dimension(const Graph& g);

// Every independent set (the empty set included), emitted in lexicographic
// order of the sorted vertex lists; raises std::runtime_error past the cap.
std::vector<VertexSet> independent_sets(const Graph& g, std::size_t cap);

// Membership of x in the convex hull of independent-set incidence vectors,
// by exact LP feasibility. Guarded to graphs with at most 20 vertices.
bool vp_membership(const Graph& g, const RatVec& x);

}  // namespace qcontext

#endif
