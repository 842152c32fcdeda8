#include "qcontext/contextuality.hpp"

#include <chrono>
#include <stdexcept>

#include "qcontext/builtins.hpp"
#include "qcontext/extension.hpp"

namespace qcontext {

KsReport ks_check(const Graph& g) {
    const auto start = std::chrono::steady_clock::now();
    KsReport report;
    report.n = g.size();
    report.m = g.edge_count();
    report.c_total = total_contexts(g);
    const WeightVector cg = context_counts(g);
    const IndependenceResult ind = weighted_independence(g, cg);
    report.alpha = ind.weight;
    report.alpha_witness = ind.witness;
    if (cmp(report.alpha, report.c_total) > 0)
        throw std::logic_error("weighted independence exceeded the context count");
    report.zero_one = zero_one_state(g);

    const bool s1 = cmp(report.alpha, report.c_total) == 0;
    const bool s2 = report.zero_one.has_value();
    // Any particular 0-1 state settles the existential in (3): S is constant
    // across states, so one evaluation stands for all of them.
    const bool s3 = s2 && cmp(evaluate_S(g, report.zero_one->state), report.alpha) == 0;
    // (4) holds exactly when the constant value c(G) of S equals alpha.
    const bool s4 = s1;
    report.statements = {s1, s2, s3, s4};
    if (s1 != s2 || s2 != s3 || s3 != s4)
        throw std::logic_error("equivalent characterizations disagree");
    report.contextual = !s2;

    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

std::string ks_verdict(const KsReport& report) {
    return report.contextual ? "KS-contextual" : "admits 0-1 state";
}

Rat evaluate_S(const Graph& g, const StateVector& p) {
    if (!is_state(g, p)) throw std::invalid_argument("not a state");
    const WeightVector cg = context_counts(g);
    Rat s = 0;
    for (int i = 0; i < g.size(); ++i)
        s += cg[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
    return s;
}

NcInequality nc_inequality(const Graph& g) {
    const WeightVector cg = context_counts(g);
    const IndependenceResult ind = weighted_independence(g, cg);
    NcInequality out;
    out.alpha = ind.weight;
    out.bound = total_contexts(g);
    out.gap = Rat(out.bound) - out.alpha;
    out.witness = ind.witness;
    if (sgn(out.gap) < 0)
        throw std::logic_error("weighted independence exceeded the context count");
    return out;
}

KcbsScenario kcbs_scenario() {
    KcbsScenario s;
    s.pentagon = pentagon();
    s.classical_bound = weighted_independence(s.pentagon, ones_weights(s.pentagon)).weight;
    s.umbrella = kcbs_umbrella();

    const DensityMatrix rho = DensityMatrix::pure(
        {s.umbrella.axis_state[0], s.umbrella.axis_state[1], s.umbrella.axis_state[2]});
    std::vector<std::vector<double>> rays;
    rays.reserve(s.umbrella.vectors.size());
    for (const auto& v : s.umbrella.vectors) rays.push_back({v[0], v[1], v[2]});
    const std::vector<double> values = quantum_state_eval_rays(rays, rho);
    double sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        s.vertex_values[i] = values[i];
        sum += values[i];
    }
    s.quantum_value = sum;
    s.violated = s.quantum_value > rat_double(s.classical_bound);
    s.extended_atom_graph = context_extension(s.pentagon);
    return s;
}

KsReport cabello18() { return ks_check(cabello18_fixture().orthogonality_graph); }

}  // namespace qcontext
