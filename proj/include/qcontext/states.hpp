#ifndef QCONTEXT_STATES_HPP
#define QCONTEXT_STATES_HPP

#include <optional>
#include <vector>

#include "qcontext/graph.hpp"
#include "qcontext/pba.hpp"
#include "qcontext/projector.hpp"
#include "qcontext/rational.hpp"

namespace qcontext {

/// Probability assignment indexed by graph vertices. A state sums to exactly
/// one on every maximal clique; a substate sums to at most one.
using StateVector = RatVec;

/// Probability assignment indexed by algebra elements.
using PbaState = RatVec;

bool is_state(const Graph& g, const StateVector& p);
bool is_substate(const Graph& g, const StateVector& q);

// Some rational state on g, if any exists. Exact LP feasibility.
std::optional<StateVector> find_state(const Graph& g);

struct ZeroOneState {
    StateVector state;
    VertexSet support;  // vertices at value 1: independent, hits every maximal clique once
};

std::optional<ZeroOneState> zero_one_state(const Graph& g);

// Unique extension of a state on atom_graph(b) to all of b: an element's value
// is the sum of p over any atom set joining to it inside one context. Requires
// b exclusive and p a state on the atom graph; throws std::invalid_argument
// otherwise.
PbaState extend_state_to_pba(const Pba& b, const StateVector& p);

// Values at the atoms, in atom order.
StateVector restrict_pba_state(const Pba& b, const PbaState& s);

// Checks s(0) = 0, s(neg x) = 1 - s(x), and the modular law
// s(join) + s(meet) = s(x) + s(y) on every compatible pair, exactly.
bool verify_pba_state(const Pba& b, const PbaState& s);

// State on the context extension of g: original vertex values first, then one
// value 1 - (sum of q over C_k) per maximal clique, in canonical clique order.
// Throws std::invalid_argument when q is not a substate.
StateVector extend_substate(const Graph& g, const StateVector& q);

/// Real symmetric density matrix, row-major.
struct DensityMatrix {
    int dim = 0;
    std::vector<double> data;

    // Rank-1 density of a (not necessarily normalized) nonzero vector.
    static DensityMatrix pure(const std::vector<double>& psi);
};

// Validates shape, symmetry, and unit trace within 1e-12.
DensityMatrix make_density(int dim, std::vector<double> data);

// p_i = tr(rho P_i). Values are clipped to [0,1]; a deviation beyond 1e-12 or
// a dimension mismatch is an error.
std::vector<double> quantum_state_eval(const std::vector<Projector>& projectors,
                                       const DensityMatrix& rho);

// p_i = <v_i, rho v_i> / <v_i, v_i> for rank-1 measurements given as rays.
std::vector<double> quantum_state_eval_rays(const std::vector<std::vector<double>>& rays,
                                            const DensityMatrix& rho);

}  // namespace qcontext

#endif
