#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "qcontext/builtins.hpp"
#include "qcontext/graph.hpp"
#include "qcontext/graph_io.hpp"
#include "support/testgen.hpp"

using namespace qcontext;

namespace {

Graph path3() { return Graph({"a", "b", "c"}, {{0, 1}, {1, 2}}); }

bool independent_in(const Graph& g, const VertexSet& s) {
    const std::uint64_t mask = vertices_to_mask(s);
    for (int v : s)
        if (g.neighbor_mask(v) & mask) return false;
    return true;
}

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("construction and accessors") {
    const Graph g = pentagon();
    CHECK(g.size() == 5);
    CHECK(g.label(0) == "0");
    CHECK(g.index_of("3") == 3);
    CHECK(g.has_label("4"));
    CHECK(!g.has_label("5"));
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(4, 0));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.degree(2) == 2);
    CHECK(g.edge_count() == 5);
    const std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
    CHECK(g.edge_list() == edges);
    CHECK(g == pentagon());
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(pentagon().index_of("nope"), std::invalid_argument);
    CHECK_THROWS_AS(Graph(std::vector<std::string>(65, ""), {}), std::invalid_argument);
}

TEST_CASE("mask round trip") {
    const VertexSet s = {0, 3, 5};
    CHECK(vertices_to_mask(s) == 0b101001u);
    CHECK(mask_to_vertices(0b101001u) == s);
    CHECK(mask_to_vertices(0).empty());
}

TEST_CASE("maximal cliques of the fixtures") {
    const std::vector<VertexSet> pent = {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
    CHECK(maximal_cliques(pentagon()) == pent);

    const Graph bt = bowtie();
    const auto bcl = maximal_cliques(bt);
    REQUIRE(bcl.size() == 2);
    CHECK(bcl[0].size() == 3);
    CHECK(bcl[1].size() == 3);

    const Graph k3({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(maximal_cliques(k3) == std::vector<VertexSet>{{0, 1, 2}});

    // Isolated vertices show up as singleton contexts.
    const Graph lonely({"a", "b", "c"}, {{0, 1}});
    CHECK(maximal_cliques(lonely) == std::vector<VertexSet>{{0, 1}, {2}});
}

TEST_CASE("clique enumeration is exhaustive and sound on random graphs") {
    testgen::Rng rng(2024'08'15);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = testgen::random_graph(rng, 3 + static_cast<int>(rng() % 8));
        const auto cliques = maximal_cliques(g);
        std::set<std::uint64_t> seen;
        for (const VertexSet& c : cliques) {
            const std::uint64_t m = vertices_to_mask(c);
            CHECK(!seen.count(m));
            seen.insert(m);
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(g.adjacent(c[i], c[j]));
            for (int v = 0; v < g.size(); ++v)
                if (!(m >> v & 1)) CHECK((g.neighbor_mask(v) & m) != m);  // maximality
        }
        // Every vertex lies in at least one maximal clique.
        const WeightVector counts = context_counts(g);
        for (const Rat& x : counts) CHECK(sgn(x) > 0);
        CHECK(total_contexts(g) == static_cast<int>(cliques.size()));
    }
}

TEST_CASE("context counts on the pentagon") {
    const WeightVector c = context_counts(pentagon());
    REQUIRE(c.size() == 5);
    for (const Rat& x : c) CHECK(x == 2);
    CHECK(total_contexts(pentagon()) == 5);
    const WeightVector ones = ones_weights(pentagon());
    for (const Rat& x : ones) CHECK(x == 1);
}

TEST_CASE("weighted independence on the pentagon") {
    const IndependenceResult ones = weighted_independence(pentagon(), ones_weights(pentagon()));
    CHECK(ones.weight == 2);
    CHECK(ones.witness.size() == 2);
    CHECK(independent_in(pentagon(), ones.witness));

    const IndependenceResult cg = weighted_independence(pentagon(), context_counts(pentagon()));
    CHECK(cg.weight == 4);
    CHECK(independent_in(pentagon(), cg.witness));
}

TEST_CASE("weighted independence rejects bad weights") {
    CHECK_THROWS_AS(weighted_independence(pentagon(), WeightVector{1, 1}), std::invalid_argument);
    WeightVector w(5, Rat(1));
    w[2] = -1;
    CHECK_THROWS_AS(weighted_independence(pentagon(), w), std::invalid_argument);
}

TEST_CASE("weighted independence matches exhaustion") {
    testgen::Rng rng(7);
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : testgen::graphs_up_to_iso(n)) {
            const WeightVector ones = ones_weights(g);
            const IndependenceResult r1 = weighted_independence(g, ones);
            CHECK(r1.weight == testgen::alpha_brute(g, ones));
            WeightVector w;
            for (int v = 0; v < g.size(); ++v) w.push_back(testgen::random_unit_rat(rng));
            const IndependenceResult r2 = weighted_independence(g, w);
            CHECK(r2.weight == testgen::alpha_brute(g, w));
            CHECK(independent_in(g, r2.witness));
            Rat total = 0;
            for (int v : r2.witness) total += w[static_cast<std::size_t>(v)];
            CHECK(total == r2.weight);
        }
    }
}

TEST_CASE("graph isomorphism") {
    const Graph relabeled({"p", "q", "r", "s", "t"}, {{2, 0}, {0, 3}, {3, 1}, {1, 4}, {4, 2}});
    const auto iso = graph_isomorphic(pentagon(), relabeled);
    REQUIRE(iso.has_value());
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            CHECK(pentagon().adjacent(i, j) ==
                  relabeled.adjacent((*iso)[static_cast<std::size_t>(i)],
                                     (*iso)[static_cast<std::size_t>(j)]));

    CHECK(!graph_isomorphic(pentagon(), path3()).has_value());
    const Graph p5({"a", "b", "c", "d", "e"}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(!graph_isomorphic(pentagon(), p5).has_value());
    CHECK(graph_isomorphic(Graph({}, {}), Graph({}, {})).has_value());
}

TEST_CASE("isomorphism agrees with canonical enumeration") {
    // Any two distinct members of an up-to-iso list are non-isomorphic, and a
    // random relabeling of a member maps back to it.
    testgen::Rng rng(99);
    const auto& list = testgen::graphs_up_to_iso(5);
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            CHECK(!graph_isomorphic(list[i], list[j]).has_value());
    for (const Graph& g : list) {
        std::vector<int> perm(5);
        for (int i = 0; i < 5; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = 4; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)],
                                              perm[rng() % static_cast<std::uint64_t>(i + 1)]);
        std::vector<std::pair<int, int>> edges;
        for (const auto& [a, b] : g.edge_list())
            edges.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        const Graph h(g.labels(), edges);
        CHECK(graph_isomorphic(g, h).has_value());
    }
}

TEST_CASE("graph enumeration hits the known class counts") {
    const int expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n)
        CHECK(static_cast<int>(testgen::graphs_up_to_iso(n).size()) == expected[n]);
    CHECK_THROWS_AS(testgen::graphs_up_to_iso(8), std::invalid_argument);
}

TEST_CASE("graph dimension") {
    CHECK(graph_dimension(pentagon()) == 2);
    CHECK(graph_dimension(bowtie()) == 3);
    CHECK(graph_dimension(Graph({"a"}, {})) == 1);
    CHECK_THROWS_AS(graph_dimension(Graph({}, {})), std::invalid_argument);
}

TEST_CASE("independent set enumeration") {
    const auto sets = independent_sets(pentagon(), 100);
    CHECK(sets.size() == 11);  // empty, 5 singletons, 5 non-adjacent pairs
    CHECK(sets.front().empty());
    for (const VertexSet& s : sets) CHECK(independent_in(pentagon(), s));
    CHECK(std::is_sorted(sets.begin(), sets.end()));
    CHECK_THROWS_WITH_AS(independent_sets(pentagon(), 5), "too many independent sets",
                         std::runtime_error);
}

TEST_CASE("vertex packing membership") {
    // Uniform 2/5 is an average of the five pair incidence vectors; uniform
    // 1/2 violates the odd cycle inequality.
    CHECK(vp_membership(pentagon(), RatVec(5, make_rat(2, 5))));
    CHECK(!vp_membership(pentagon(), RatVec(5, make_rat(1, 2))));
    CHECK(vp_membership(pentagon(), RatVec(5, Rat(0))));
    RatVec e0(5, Rat(0));
    e0[0] = 1;
    CHECK(vp_membership(pentagon(), e0));
    CHECK_THROWS_AS(vp_membership(pentagon(), RatVec(4, Rat(0))), std::invalid_argument);
}

TEST_CASE("graph JSON round trip") {
    const std::string text = graph_to_json_text(bowtie());
    const Graph back = graph_from_json_text(text);
    CHECK(back == bowtie());
    CHECK(parse_graph(text) == bowtie());
    CHECK(graph_to_json_text(back) == text);
}

TEST_CASE("graph JSON rejections") {
    CHECK_THROWS_AS(graph_from_json_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json_text("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json_text(R"({"vertices":["a","a"],"edges":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json_text(R"({"vertices":["a"],"edges":[["a","b"]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json_text(R"({"vertices":[1],"edges":[]})"), std::invalid_argument);
}

TEST_CASE("DIMACS round trip") {
    const std::string text = "c pentagon\np edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n";
    const Graph g = graph_from_dimacs(text);
    CHECK(g.size() == 5);
    CHECK(g.label(0) == "1");
    CHECK(graph_isomorphic(g, pentagon()).has_value());
    CHECK(graph_from_dimacs(graph_to_dimacs(g)) == g);
    CHECK(parse_graph(text) == g);
}

TEST_CASE("DIMACS rejections") {
    CHECK_THROWS_AS(graph_from_dimacs("e 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_dimacs("p edge 2 2\ne 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_dimacs("p edge 2 1\ne 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_dimacs("p edge 2 1\nx 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_dimacs("p edge 2 1\np edge 2 1\ne 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("   "), std::invalid_argument);
}

TEST_CASE("random graph generation is seed deterministic") {
    testgen::Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(testgen::random_graph(a, 9) == testgen::random_graph(b, 9));
}

}  // TEST_SUITE
