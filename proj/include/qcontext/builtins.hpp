#ifndef QCONTEXT_BUILTINS_HPP
#define QCONTEXT_BUILTINS_HPP

#include <string>
#include <vector>

#include "qcontext/graph.hpp"
#include "qcontext/projector.hpp"

namespace qcontext {

// Pentagon C5, labels "0".."4", edges between cyclic neighbours.
Graph pentagon();

// Two triangles sharing the vertex c: c-a1-b1 and c-a2-b2.
Graph bowtie();

// Rank-1 generators on a qubit: the projector onto (1,0) and onto (1,1).
// Their closure is the six-element algebra {0, 1, P0, P1, P+, P-}.
std::vector<Projector> qubit_two_bases();

// Five rank-1 projectors in dimension 3 whose atom graph is the bowtie:
// c=(0,0,1), a1=(1,0,0), b1=(0,1,0), a2=(1,1,0), b2=(1,-1,0).
std::vector<Projector> bowtie_projectors();

/// The 18-vector, 9-basis Kochen-Specker configuration in dimension 4, all
/// components in {0,1,-1}. Verified on construction: the four vectors of
/// every basis are pairwise orthogonal and the 18 rays are pairwise distinct.
struct Cabello18 {
    std::vector<std::string> labels;
    std::vector<RatVec> vectors;
    std::vector<VertexSet> bases;  // nine 4-element index sets
    Graph orthogonality_graph;     // edges = exactly orthogonal pairs
};

const Cabello18& cabello18_fixture();

// name: "kcbs" | "cabello18" | "fig3-bowtie"
Graph builtin_graph(const std::string& name);

}  // namespace qcontext

#endif
