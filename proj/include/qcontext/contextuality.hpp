#ifndef QCONTEXT_CONTEXTUALITY_HPP
#define QCONTEXT_CONTEXTUALITY_HPP

#include <array>
#include <optional>
#include <string>

#include "qcontext/graph.hpp"
#include "qcontext/orthorep.hpp"
#include "qcontext/rational.hpp"
#include "qcontext/states.hpp"

namespace qcontext {

struct KsReport {
    int n = 0;
    int m = 0;
    int c_total = 0;  // number of maximal cliques
    Rat alpha;        // independence number weighted by context counts
    VertexSet alpha_witness;
    std::optional<ZeroOneState> zero_one;
    bool contextual = false;  // no 0-1 state on the scenario graph
    // The four equivalent characterizations, each computed by its own route:
    // (1) alpha equals c_total, (2) a 0-1 state exists, (3) a 0-1 state
    // reaching S = alpha exists, (4) any state reaching S = alpha exists.
    std::array<bool, 4> statements{};
    double elapsed_ms = 0;
};

// Scenario-graph certification. Asserts that the four statement flags agree
// and that alpha never exceeds c_total; either failure is an internal error.
KsReport ks_check(const Graph& g);

// "KS-contextual" or "admits 0-1 state".
std::string ks_verdict(const KsReport& report);

// S(p, c_G): the context-count weighted sum of state values. Constant, equal
// to the number of maximal cliques, over all states of g.
Rat evaluate_S(const Graph& g, const StateVector& p);

struct NcInequality {
    Rat alpha;
    int bound = 0;  // c(G), the value every state attains
    Rat gap;        // bound - alpha; positive gap certifies KS contextuality
    VertexSet witness;
};

NcInequality nc_inequality(const Graph& g);

struct KcbsScenario {
    Graph pentagon;
    Rat classical_bound;  // unweighted independence number, 2
    KcbsUmbrella umbrella;
    std::array<double, 5> vertex_values{};  // each 1/sqrt(5)
    double quantum_value = 0;               // sqrt(5)
    bool violated = false;
    Graph extended_atom_graph;  // context extension of the pentagon
};

// The state-dependent pentagon experiment: classical bound 2, quantum value
// sqrt(5) from the umbrella rep and its axis state.
KcbsScenario kcbs_scenario();

// Certification of the 18-vector, 9-basis configuration in dimension 4 via
// its full orthogonality graph: no 0-1 state exists.
KsReport cabello18();

}  // namespace qcontext

#endif
