// Acceptance gate. Each criterion prints exactly one PASS/FAIL line with its
// wall-clock time; a criterion also fails when it exceeds its runtime budget.
// The exit status is the number of failed criteria. --seed changes the RNG
// stream of the property-based criteria (default 20240817).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcontext/builtins.hpp"
#include "qcontext/cli.hpp"
#include "qcontext/contextuality.hpp"
#include "qcontext/extension.hpp"
#include "qcontext/graph.hpp"
#include "qcontext/orthorep.hpp"
#include "qcontext/pba.hpp"
#include "qcontext/rational.hpp"
#include "qcontext/states.hpp"
#include "testgen.hpp"

namespace {

using namespace qcontext;

// Pinned tolerance for floating-point quantum values; everything else in the
// gate is exact rational arithmetic and compares with ==.
constexpr double kQuantumTol = 1e-9;

struct Failure {
    std::string reason;
};

void require(bool ok, const std::string& reason) {
    if (!ok) throw Failure{reason};
}

std::string at(const std::string& what, int n, int index) {
    std::ostringstream s;
    s << what << " at n=" << n << " #" << index;
    return s.str();
}

// 1. Unit-weight independence number of the pentagon is exactly 2, through
//    the library and through the command line.
void pentagon_classical_bound(std::uint64_t) {
    const Graph g = pentagon();
    const IndependenceResult r = weighted_independence(g, ones_weights(g));
    require(r.weight == 2, "library alpha != 2");
    require(r.witness.size() == 2, "witness size != 2");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli({"alpha", "--builtin", "kcbs", "--weights", "ones"}, out, err);
    require(code == 0, "cli exit code " + std::to_string(code));
    require(out.str().rfind("alpha = 2\n", 0) == 0, "cli reported " + out.str());
}

// 2. The umbrella representation with the symmetry-axis state reaches sqrt(5)
//    within 1e-9 and the scenario flags the violation of the bound 2.
void umbrella_quantum_value(std::uint64_t) {
    const KcbsScenario s = kcbs_scenario();
    require(s.classical_bound == 2, "classical bound != 2");
    const double expected = std::sqrt(5.0);
    double total = 0;
    for (double v : s.vertex_values) {
        require(std::abs(v - 1.0 / expected) < kQuantumTol, "vertex value off 1/sqrt(5)");
        total += v;
    }
    require(std::abs(s.quantum_value - expected) < kQuantumTol, "quantum value off sqrt(5)");
    require(std::abs(total - s.quantum_value) < kQuantumTol, "vertex values do not sum to S");
    require(s.violated, "violation not flagged");
    require(s.quantum_value > 2.0, "no violation of the classical bound");
}

// 3. The four characterizations agree with four independent oracles on every
//    graph up to 6 vertices up to isomorphism, and the context-count alpha
//    never exceeds the clique count on 500 seeded random graphs.
void four_characterizations(std::uint64_t seed) {
    for (int n = 1; n <= 6; ++n) {
        int index = 0;
        for (const Graph& g : testgen::graphs_up_to_iso(n)) {
            const KsReport report = ks_check(g);
            require(report.alpha == testgen::alpha_brute(g, context_counts(g)),
                    at("alpha mismatch", n, index));
            const bool oracle[4] = {
                report.alpha == Rat(report.c_total),
                testgen::zero_one_exists_brute(g),
                testgen::statement3_brute(g),
                testgen::statement4_lp(g),
            };
            for (int k = 0; k < 4; ++k)
                require(report.statements[k] == oracle[k],
                        at("statement " + std::to_string(k + 1) + " mismatch", n, index));
            ++index;
        }
    }
    testgen::Rng rng(seed ^ 0x9E3779B97F4A7C15ULL);
    const double probs[5] = {0.2, 0.35, 0.5, 0.65, 0.8};
    for (int t = 0; t < 500; ++t) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Graph g = testgen::random_graph(rng, n, probs[t % 5]);
        const WeightVector cg = context_counts(g);
        const int c_total = static_cast<int>(maximal_cliques(g).size());
        const IndependenceResult r = weighted_independence(g, cg);
        require(r.weight <= c_total, at("alpha exceeds clique count", n, t));
    }
}

// 4. The inductive construction gives a faithful linearly independent
//    orthogonal representation for every graph up to 7 vertices up to
//    isomorphism and for 100 seeded random graphs up to 10 vertices.
void faithful_representation(std::uint64_t seed) {
    for (int n = 1; n <= 7; ++n) {
        int index = 0;
        for (const Graph& g : testgen::graphs_up_to_iso(n)) {
            const OrthoRep rep = construct_flior(g);
            require(verify_faithful(g, rep), at("not faithful", n, index));
            require(verify_linear_independence(rep), at("dependent vectors", n, index));
            ++index;
        }
    }
    testgen::Rng rng(seed ^ 0xD1B54A32D192ED03ULL);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = testgen::random_graph(rng, n, 0.25 + 0.5 * (t % 3) / 2.0);
        const OrthoRep rep = construct_flior(g);
        require(verify_faithful(g, rep), at("random graph not faithful", n, t));
        require(verify_linear_independence(rep), at("random graph dependent", n, t));
    }
}

// 5. Realizing the context extension of every graph up to 4 vertices and of
//    the pentagon yields an algebra whose atom graph is the extension under
//    the canonical atom-to-vertex bijection; the extended pentagon consists
//    of 10 vertices in five triangles.
void realized_context_extension(std::uint64_t) {
    std::vector<Graph> inputs;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : testgen::graphs_up_to_iso(n)) inputs.push_back(g);
    inputs.push_back(pentagon());
    int index = 0;
    for (const Graph& g : inputs) {
        const ExtensionResult er = realize_extension(g);
        const Graph expected = context_extension(g);
        require(er.base == g, at("base changed", g.size(), index));
        require(er.extended == expected, at("extension mismatch", g.size(), index));
        const Graph ag = atom_graph(er.algebra);
        require(ag.size() == expected.size(), at("atom count", g.size(), index));
        require(graph_isomorphic(ag, expected).has_value(),
                at("atom graph not isomorphic", g.size(), index));
        const VertexSet as = atoms(er.algebra);
        require(static_cast<int>(as.size()) == expected.size(),
                at("atom list size", g.size(), index));
        for (std::size_t t = 0; t < as.size(); ++t)
            for (std::size_t u = t + 1; u < as.size(); ++u)
                require(er.algebra.compatible(as[t], as[u]) ==
                            expected.adjacent(er.iso[t], er.iso[u]),
                        at("canonical correspondence broken", g.size(), index));
        ++index;
    }
    const Graph pent_ext = context_extension(pentagon());
    require(pent_ext.size() == 10, "extended pentagon is not on 10 vertices");
    const auto cliques = maximal_cliques(pent_ext);
    require(cliques.size() == 5, "extended pentagon does not have 5 contexts");
    for (const VertexSet& c : cliques)
        require(c.size() == 3, "extended pentagon context is not a triangle");
}

// 6. Extending an atom-graph state to the whole algebra and restricting back
//    are mutually inverse on three fixture algebras, for 100 seeded random
//    rational states each, and every extension satisfies the state axioms.
void algebra_state_extension(std::uint64_t seed) {
    const Pba fixtures[3] = {
        generate_pba(qubit_two_bases()),
        generate_pba(bowtie_projectors()),
        symbolic_from_atom_graph(context_extension(pentagon())),
    };
    testgen::Rng rng(seed ^ 0xA0761D6478BD642FULL);
    int fi = 0;
    for (const Pba& b : fixtures) {
        const Graph ag = atom_graph(b);
        const std::vector<StateVector> verts = testgen::all_zero_one_states(ag);
        require(!verts.empty(), at("fixture atom graph has no 0-1 state", ag.size(), fi));
        for (int t = 0; t < 100; ++t) {
            const StateVector p = testgen::random_hull_state(rng, verts);
            const PbaState s = extend_state_to_pba(b, p);
            require(verify_pba_state(b, s), at("extension violates state axioms", fi, t));
            require(restrict_pba_state(b, s) == p, at("restrict(extend) != id", fi, t));
            require(extend_state_to_pba(b, restrict_pba_state(b, s)) == s,
                    at("extend(restrict) != id", fi, t));
        }
        ++fi;
    }
}

// 7. Completing a substate with one fresh value per context yields a valid
//    state on the extension whose restriction is the input; distinct inputs
//    stay distinct. 100 seeded trials on the pentagon and on K3.
void substate_completion(std::uint64_t seed) {
    const Graph graphs[2] = {pentagon(),
                             Graph({"0", "1", "2"}, {{0, 1}, {0, 2}, {1, 2}})};
    testgen::Rng rng(seed ^ 0xE7037ED1A0B428DBULL);
    for (const Graph& g : graphs) {
        const Graph ext = context_extension(g);
        std::set<StateVector> inputs;
        std::set<StateVector> outputs;
        for (int t = 0; t < 100; ++t) {
            const StateVector q = testgen::random_substate(rng, g);
            const StateVector full = extend_substate(g, q);
            require(is_state(ext, full), at("completion is not a state", g.size(), t));
            for (int v = 0; v < g.size(); ++v)
                require(full[v] == q[v], at("restriction changed a value", g.size(), t));
            inputs.insert(q);
            outputs.insert(full);
        }
        require(inputs.size() == outputs.size(), "distinct substates collided");
    }
}

// 8. Closing the five bowtie projectors yields the 12-element algebra with 5
//    atoms whose atom graph is the bowtie, and the symbolic algebra built
//    from the bowtie is isomorphic to it.
void bowtie_closure_regression(std::uint64_t) {
    const Pba b = generate_pba(bowtie_projectors());
    require(b.size() == 12, "closure size != 12");
    require(atoms(b).size() == 5, "atom count != 5");
    require(graph_isomorphic(atom_graph(b), bowtie()).has_value(),
            "atom graph is not a bowtie");
    const Pba s = symbolic_from_atom_graph(bowtie());
    require(s.size() == 12, "symbolic size != 12");
    require(pba_isomorphic(b, s), "projector and symbolic algebras differ");
}

// 9. The 18-vector configuration verifies exactly, admits no 0-1 state by
//    exhausted search, and its noncontextuality inequality has a positive gap.
void cabello18_certification(std::uint64_t) {
    const Cabello18& f = cabello18_fixture();
    require(f.labels.size() == 18 && f.vectors.size() == 18, "fixture is not 18 vectors");
    require(f.bases.size() == 9, "fixture is not 9 bases");
    for (const VertexSet& base : f.bases) {
        require(base.size() == 4, "basis is not 4 vectors");
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i + 1; j < base.size(); ++j)
                require(dot(f.vectors[base[i]], f.vectors[base[j]]) == 0,
                        "intra-context pair is not orthogonal");
    }
    require(!zero_one_state(f.orthogonality_graph).has_value(), "library found a 0-1 state");
    require(!testgen::zero_one_exists_brute(f.orthogonality_graph),
            "exhaustion found a 0-1 state");
    const NcInequality nc = nc_inequality(f.orthogonality_graph);
    require(nc.bound == 24, "context count != 24");
    require(nc.alpha == 16, "alpha != 16");
    require(sgn(nc.gap) > 0, "gap is not positive");
}

// 10. The scenario-graph verdicts differ across the context extension: the
//     extended pentagon admits the all-fresh 0-1 state, the pentagon none.
void scenario_vs_extended_verdict(std::uint64_t) {
    const Graph base = pentagon();
    const Graph ext = context_extension(base);
    const KsReport base_report = ks_check(base);
    require(!base_report.zero_one.has_value(), "pentagon admits a 0-1 state");
    require(base_report.contextual, "pentagon not flagged contextual");
    require(ks_verdict(base_report) == "KS-contextual", "pentagon verdict wrong");
    const KsReport ext_report = ks_check(ext);
    require(ext_report.zero_one.has_value(), "extension admits no 0-1 state");
    require(!ext_report.contextual, "extension flagged contextual");
    require(ks_verdict(ext_report) == "admits 0-1 state", "extension verdict wrong");
    StateVector fresh(10, 0);
    for (int k = base.size(); k < ext.size(); ++k) fresh[k] = 1;
    require(is_state(ext, fresh), "all-fresh assignment is not a state");
}

struct Criterion {
    int id;
    const char* name;
    double budget_ms;
    void (*run)(std::uint64_t);
};

const Criterion kCriteria[] = {
    {1, "pentagon-classical-bound", 100, pentagon_classical_bound},
    {2, "umbrella-quantum-value", 100, umbrella_quantum_value},
    {3, "four-characterizations", 120000, four_characterizations},
    {4, "faithful-representation", 120000, faithful_representation},
    {5, "realized-context-extension", 300000, realized_context_extension},
    {6, "algebra-state-extension", 60000, algebra_state_extension},
    {7, "substate-completion", 10000, substate_completion},
    {8, "bowtie-closure-regression", 5000, bowtie_closure_regression},
    {9, "cabello18-certification", 30000, cabello18_certification},
    {10, "scenario-vs-extended-verdict", 1000, scenario_vs_extended_verdict},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance gate for the contextuality toolkit"};
    std::uint64_t seed = 20240817;
    app.add_option("--seed", seed, "seed for the property-based criteria");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::cerr << "# seed = " << seed << "\n";
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            c.run(seed);
        } catch (const Failure& f) {
            reason = f.reason;
        } catch (const std::exception& e) {
            reason = std::string("unexpected exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        if (reason.empty() && ms > c.budget_ms) {
            std::ostringstream s;
            s << "exceeded " << c.budget_ms << " ms budget";
            reason = s.str();
        }
        std::ostringstream line;
        line << (reason.empty() ? "PASS" : "FAIL") << " " << std::setw(2) << c.id << " "
             << c.name;
        if (!reason.empty()) line << ": " << reason;
        line << " (" << std::fixed << std::setprecision(1) << ms << " ms)";
        std::cout << line.str() << "\n" << std::flush;
        if (!reason.empty()) ++failures;
    }
    std::cerr << "# failures = " << failures << "\n";
    return failures;
}
