#ifndef QCONTEXT_EXTENSION_HPP
#define QCONTEXT_EXTENSION_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qcontext/graph.hpp"
#include "qcontext/orthorep.hpp"
#include "qcontext/pba.hpp"
#include "qcontext/projector.hpp"

namespace qcontext {

// One fresh vertex per maximal clique, adjacent exactly to that clique's
// members. The maximal cliques of the result are verified to be exactly the
// original cliques each grown by its fresh vertex.
Graph context_extension(const Graph& g);

// Fresh vertex only for maximal cliques below the maximum clique size; every
// clique of maximum size is left untouched. The result need not be an atom
// graph.
Graph equal_dim_extension(const Graph& g);

struct ExtensionResult {
    Graph base;
    Graph extended;
    std::map<int, std::string> added;  // canonical clique id -> fresh vertex label
    OrthoRep rep;
    // Rank-1 projectors onto the rep vectors, vertex order, then one
    // complement projector per maximal clique, clique order.
    std::vector<Projector> atom_projectors;
    Pba algebra;
    std::vector<int> iso;  // t-th atom of the algebra -> vertex of extended
};

// Realization of the context extension: faithful linearly independent rep of
// g, rank-1 projectors onto its vectors, the complement of each maximal
// clique's span, and the closure of all of these. The atom graph of the
// closure is verified against context_extension(g) through the canonical
// bijection; a mismatch is an internal error, not an input error.
ExtensionResult realize_extension(const Graph& g, std::size_t cap = 4096);

// embed is an injective vertex map from g into h; true iff it preserves both
// edges and non-edges.
bool verify_induced_subgraph(const Graph& g, const Graph& h, const std::vector<int>& embed);

}  // namespace qcontext

#endif
