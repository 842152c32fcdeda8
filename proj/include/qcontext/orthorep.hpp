#ifndef QCONTEXT_ORTHOREP_HPP
#define QCONTEXT_ORTHOREP_HPP

#include <array>

#include "qcontext/graph.hpp"
#include "qcontext/matrix.hpp"

namespace qcontext {

/// Vertex-indexed family of exact rational vectors of one common dimension,
/// with the Gram matrix cached. Vectors are deliberately not unit length:
/// unit norms are generally irrational, and both faithfulness and linear
/// independence are scale invariant.
struct OrthoRep {
    Graph graph;
    std::vector<RatVec> vectors;
    Matrix gram;
};

// Validates counts, a common dimension, and nonzero vectors; fills the Gram cache.
OrthoRep make_orthorep(Graph graph, std::vector<RatVec> vectors);

// Faithful linearly independent orthogonal co-representation in dimension
// |V(g)|. Inductive: each new vector is a combination of its predecessors
// plus a fresh coordinate, with coefficients solving the orthogonality
// equations exactly and avoiding the finitely many hyperplanes where some
// required non-orthogonality would fail. Deterministic for a fixed vertex
// order.
OrthoRep construct_flior(const Graph& g);

// Vectors pairwise distinct, and adjacency holds iff the inner product is zero.
bool verify_faithful(const Graph& g, const OrthoRep& rep);

// Stacked vectors have rank |V(g)| exactly.
bool verify_linear_independence(const OrthoRep& rep);

/// The analytic three-dimensional pentagon representation: five unit vectors
/// on a cone around the z axis, consecutive ones orthogonal, plus the axis
/// state that evaluates every vertex to 1/sqrt(5).
struct KcbsUmbrella {
    Graph pentagon;
    std::array<std::array<double, 3>, 5> vectors;
    std::array<double, 3> axis_state;
};

KcbsUmbrella kcbs_umbrella();

}  // namespace qcontext

#endif
