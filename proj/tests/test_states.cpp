#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "qcontext/builtins.hpp"
#include "qcontext/extension.hpp"
#include "qcontext/pba.hpp"
#include "qcontext/states.hpp"
#include "support/testgen.hpp"

using namespace qcontext;

namespace {

const Rat half = make_rat(1, 2);

// A valid 0-1 support hits every maximal clique exactly once.
bool support_is_exact_cover(const Graph& g, const VertexSet& support) {
    const std::uint64_t mask = vertices_to_mask(support);
    for (const VertexSet& c : maximal_cliques(g))
        if (__builtin_popcountll(vertices_to_mask(c) & mask) != 1) return false;
    return true;
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("state and substate predicates") {
    const Graph g = pentagon();
    CHECK(is_state(g, StateVector(5, half)));
    CHECK(is_substate(g, StateVector(5, half)));
    CHECK(!is_state(g, StateVector(5, make_rat(1, 3))));
    CHECK(is_substate(g, StateVector(5, make_rat(1, 3))));
    CHECK(!is_substate(g, StateVector(5, make_rat(2, 3))));
    StateVector neg(5, half);
    neg[0] = -1;
    CHECK(!is_state(g, neg));
    CHECK(!is_substate(g, neg));
    StateVector big(5, Rat(0));
    big[0] = 2;
    CHECK(!is_substate(g, big));
    CHECK_THROWS_AS(is_state(g, StateVector(4, half)), std::invalid_argument);
    CHECK_THROWS_AS(is_substate(g, StateVector(6, half)), std::invalid_argument);
}

TEST_CASE("the pentagon has exactly one state") {
    // Around an odd cycle the clique equalities force the constant 1/2.
    const auto p = find_state(pentagon());
    REQUIRE(p.has_value());
    CHECK(*p == StateVector(5, half));
}

TEST_CASE("found states are states") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : testgen::graphs_up_to_iso(n)) {
            const auto p = find_state(g);
            if (p.has_value()) {
                CHECK(is_state(g, *p));
            } else {
                // Without any state there is in particular no 0-1 state.
                CHECK(!testgen::zero_one_exists_brute(g));
            }
        }
    }
}

TEST_CASE("zero-one state search agrees with exhaustion") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : testgen::graphs_up_to_iso(n)) {
            const auto zo = zero_one_state(g);
            CHECK(zo.has_value() == testgen::zero_one_exists_brute(g));
            if (zo.has_value()) {
                CHECK(is_state(g, zo->state));
                CHECK(support_is_exact_cover(g, zo->support));
                for (int v = 0; v < g.size(); ++v) {
                    const bool on = std::find(zo->support.begin(), zo->support.end(), v) !=
                                    zo->support.end();
                    CHECK(zo->state[static_cast<std::size_t>(v)] == (on ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("zero-one search on the fixtures") {
    CHECK(!zero_one_state(pentagon()).has_value());
    CHECK(!zero_one_state(cabello18_fixture().orthogonality_graph).has_value());
    const auto bt = zero_one_state(bowtie());
    REQUIRE(bt.has_value());
    // The shared vertex alone covers both triangles, so the support has one
    // or two vertices; either way it must be an exact cover.
    CHECK(support_is_exact_cover(bowtie(), bt->support));
    const auto ext = zero_one_state(context_extension(pentagon()));
    REQUIRE(ext.has_value());
    CHECK(support_is_exact_cover(context_extension(pentagon()), ext->support));
}

TEST_CASE("state extension to the symbolic extended pentagon") {
    // States fed to extend_state_to_pba are indexed by the algebra's own atom
    // graph, whose vertex order is the atom order, not the original one.
    const Pba b = symbolic_from_atom_graph(context_extension(pentagon()));
    const Graph ag = atom_graph(b);
    const auto hull = testgen::all_zero_one_states(ag);
    REQUIRE(!hull.empty());
    testgen::Rng rng(881);
    for (int trial = 0; trial < 40; ++trial) {
        const StateVector p = testgen::random_hull_state(rng, hull);
        REQUIRE(is_state(ag, p));
        const PbaState s = extend_state_to_pba(b, p);
        CHECK(verify_pba_state(b, s));
        CHECK(s[static_cast<std::size_t>(b.zero())] == 0);
        CHECK(s[static_cast<std::size_t>(b.one())] == 1);
        CHECK(restrict_pba_state(b, s) == p);
        // Additivity on one context: the join of two distinct atoms carries
        // the sum of their values.
        const VertexSet at = atoms(b);
        for (int x : at)
            for (int y : at)
                if (x != y && b.compatible(x, y))
                    CHECK(s[static_cast<std::size_t>(b.join(x, y))] ==
                          s[static_cast<std::size_t>(x)] + s[static_cast<std::size_t>(y)]);
    }
}

TEST_CASE("state extension on projector algebras") {
    const Pba b = generate_pba(bowtie_projectors());
    const Graph ag = atom_graph(b);
    const auto hull = testgen::all_zero_one_states(ag);
    REQUIRE(!hull.empty());
    testgen::Rng rng(882);
    for (int trial = 0; trial < 25; ++trial) {
        const StateVector p = testgen::random_hull_state(rng, hull);
        const PbaState s = extend_state_to_pba(b, p);
        CHECK(verify_pba_state(b, s));
        CHECK(restrict_pba_state(b, s) == p);
        for (int x = 0; x < b.size(); ++x)
            CHECK(s[static_cast<std::size_t>(b.neg(x))] == 1 - s[static_cast<std::size_t>(x)]);
    }
}

TEST_CASE("state extension rejects bad input") {
    const Pba glued = testgen::glued_nonexclusive();
    CHECK_THROWS_WITH_AS(extend_state_to_pba(glued, StateVector(4, half)),
                         "algebra is not exclusive", std::invalid_argument);
    const Pba b = generate_pba(qubit_two_bases());
    CHECK_THROWS_WITH_AS(extend_state_to_pba(b, StateVector(4, Rat(1))),
                         "not a state on the atom graph", std::invalid_argument);
    CHECK_THROWS_AS(extend_state_to_pba(b, StateVector(3, half)), std::invalid_argument);
}

TEST_CASE("state verification catches tampering") {
    const Pba b = generate_pba(qubit_two_bases());
    const StateVector p = {half, half, half, half};
    PbaState s = extend_state_to_pba(b, p);
    CHECK(verify_pba_state(b, s));
    s[static_cast<std::size_t>(b.one())] = half;  // breaks s(neg 0) = 1 - s(0)
    CHECK(!verify_pba_state(b, s));
    PbaState t = extend_state_to_pba(b, p);
    t[3] += make_rat(1, 7);
    CHECK(!verify_pba_state(b, t));
    CHECK_THROWS_AS(verify_pba_state(b, PbaState(2, half)), std::invalid_argument);
    CHECK_THROWS_AS(restrict_pba_state(b, PbaState(2, half)), std::invalid_argument);
}

TEST_CASE("substates extend to states of the context extension") {
    const Graph g = pentagon();
    const Graph ge = context_extension(g);

    // The all-1/2 substate is already a state; the fresh vertices get zero.
    const StateVector ext = extend_substate(g, StateVector(5, half));
    REQUIRE(ext.size() == 10);
    CHECK(is_state(ge, ext));
    for (int v = 0; v < 5; ++v) CHECK(ext[static_cast<std::size_t>(v)] == half);
    for (int k = 5; k < 10; ++k) CHECK(ext[static_cast<std::size_t>(k)] == 0);

    // The zero substate pushes everything onto the fresh vertices.
    const StateVector zero_ext = extend_substate(g, StateVector(5, Rat(0)));
    for (int k = 5; k < 10; ++k) CHECK(zero_ext[static_cast<std::size_t>(k)] == 1);
    CHECK(is_state(ge, zero_ext));

    CHECK_THROWS_WITH_AS(extend_substate(g, StateVector(5, make_rat(2, 3))), "not a substate",
                         std::invalid_argument);
    CHECK_THROWS_AS(extend_substate(g, StateVector(4, Rat(0))), std::invalid_argument);
}

TEST_CASE("random substates round trip through the extension") {
    testgen::Rng rng(883);
    for (const Graph& g : {pentagon(), bowtie(), Graph({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}})}) {
        const Graph ge = context_extension(g);
        std::set<StateVector> inputs;
        std::set<StateVector> extensions;
        for (int trial = 0; trial < 30; ++trial) {
            const StateVector q = testgen::random_substate(rng, g);
            REQUIRE(is_substate(g, q));
            const StateVector p = extend_substate(g, q);
            CHECK(is_state(ge, p));
            CHECK(StateVector(p.begin(), p.begin() + g.size()) == q);
            inputs.insert(q);
            extensions.insert(p);
        }
        // Distinct substates extend to distinct states.
        CHECK(inputs.size() == extensions.size());
    }
}

TEST_CASE("density matrices") {
    const DensityMatrix rho = DensityMatrix::pure({3, 4});
    CHECK(rho.dim == 2);
    CHECK(rho.data[0] == doctest::Approx(9.0 / 25).epsilon(1e-12));
    CHECK(rho.data[1] == doctest::Approx(12.0 / 25).epsilon(1e-12));
    CHECK(rho.data[3] == doctest::Approx(16.0 / 25).epsilon(1e-12));
    CHECK_THROWS_AS(DensityMatrix::pure({}), std::invalid_argument);
    CHECK_THROWS_AS(DensityMatrix::pure({0, 0}), std::invalid_argument);

    CHECK_NOTHROW(make_density(2, {0.5, 0, 0, 0.5}));
    CHECK_THROWS_AS(make_density(2, {0.5, 0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(make_density(2, {0.6, 0, 0, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(make_density(2, {0.5, 0.1, 0, 0.5}), std::invalid_argument);
}

TEST_CASE("born evaluation of projectors") {
    const std::vector<Projector> ps = {projector_onto({{1, 0}}, 2), projector_onto({{1, 1}}, 2),
                                       Projector::identity(2), Projector::zero(2)};
    const auto values = quantum_state_eval(ps, DensityMatrix::pure({1, 0}));
    REQUIRE(values.size() == 4);
    CHECK(values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(values[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(values[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(values[3] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(quantum_state_eval({Projector::identity(3)}, DensityMatrix::pure({1, 0})),
                    std::invalid_argument);
}

TEST_CASE("born evaluation of rays matches the projector route") {
    const DensityMatrix rho = make_density(2, {0.5, 0.25, 0.25, 0.5});
    const std::vector<std::vector<double>> rays = {{1, 0}, {0, 1}, {1, 1}, {2, -2}};
    const auto by_rays = quantum_state_eval_rays(rays, rho);
    std::vector<Projector> ps;
    ps.push_back(projector_onto({{1, 0}}, 2));
    ps.push_back(projector_onto({{0, 1}}, 2));
    ps.push_back(projector_onto({{1, 1}}, 2));
    ps.push_back(projector_onto({{1, -1}}, 2));
    const auto by_proj = quantum_state_eval(ps, rho);
    for (std::size_t i = 0; i < rays.size(); ++i)
        CHECK(by_rays[i] == doctest::Approx(by_proj[i]).epsilon(1e-12));
    CHECK_THROWS_AS(quantum_state_eval_rays({{0, 0}}, rho), std::invalid_argument);
    CHECK_THROWS_AS(quantum_state_eval_rays({{1, 0, 0}}, rho), std::invalid_argument);
}

}  // TEST_SUITE
