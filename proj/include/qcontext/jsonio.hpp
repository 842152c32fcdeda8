#ifndef QCONTEXT_JSONIO_HPP
#define QCONTEXT_JSONIO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "qcontext/contextuality.hpp"
#include "qcontext/extension.hpp"
#include "qcontext/graph.hpp"
#include "qcontext/matrix.hpp"
#include "qcontext/orthorep.hpp"
#include "qcontext/pba.hpp"
#include "qcontext/projector.hpp"
#include "qcontext/states.hpp"

namespace qcontext {

using Json = nlohmann::ordered_json;

// Canonical "p/q" text, or a plain double when as_float is set.
Json rat_json(const Rat& x, bool as_float);

Json graph_json(const Graph& g);

Json weights_json(const Graph& g, const WeightVector& w, bool as_float);

// Object keyed by vertex label; values must be exact ("p/q" strings or
// integers). Every vertex needs a value and unknown keys are rejected.
WeightVector weights_from_json_text(const std::string& text, const Graph& g);

Json state_json(const Graph& g, const StateVector& p, bool as_float, bool substate = false);

// Same shape as state_json; an optional boolean "substate" key is tolerated.
StateVector state_from_json_text(const std::string& text, const Graph& g);

Json matrix_json(const Matrix& m, bool as_float);

Json orthorep_json(const OrthoRep& rep, bool as_float);

Json pba_json(const Pba& b, bool as_float);

// {"dimension": d, "generators": [matrix, ...]}, each matrix a list of rows
// of exact entries. Every matrix is validated as a projector.
std::vector<Projector> generators_from_json_text(const std::string& text);

Json ks_report_json(const Graph& g, const KsReport& report, bool as_float);

Json nc_json(const Graph& g, const NcInequality& nc, bool as_float);

Json extension_json(const ExtensionResult& r, bool as_float);

Json kcbs_json(const KcbsScenario& s);

struct QuantumEvalInput {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> rays;
    DensityMatrix rho;
};

// {"dimension": d, "vectors": {label: [numbers]}, and exactly one of
// "rho": [[numbers]] or "psi": [numbers]}.
QuantumEvalInput quantum_eval_from_json_text(const std::string& text);

// dump(2) plus a trailing newline.
std::string emit(const Json& j);

}  // namespace qcontext

#endif
