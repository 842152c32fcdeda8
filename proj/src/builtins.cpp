#include "qcontext/builtins.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcontext {

Graph pentagon() {
    return Graph({"0", "1", "2", "3", "4"}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

Graph bowtie() {
    return Graph({"c", "a1", "b1", "a2", "b2"},
                 {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

std::vector<Projector> qubit_two_bases() {
    return {projector_onto({{Rat(1), Rat(0)}}, 2), projector_onto({{Rat(1), Rat(1)}}, 2)};
}

std::vector<Projector> bowtie_projectors() {
    const std::vector<RatVec> rays = {
        {Rat(0), Rat(0), Rat(1)},   // c
        {Rat(1), Rat(0), Rat(0)},   // a1
        {Rat(0), Rat(1), Rat(0)},   // b1
        {Rat(1), Rat(1), Rat(0)},   // a2
        {Rat(1), Rat(-1), Rat(0)},  // b2
    };
    std::vector<Projector> ps;
    for (const RatVec& r : rays) ps.push_back(projector_onto({r}, 3));
    return ps;
}

namespace {

std::string ray_label(const std::vector<int>& ray) {
    std::string label;
    for (int x : ray) label += (x < 0 ? "-1" : std::to_string(x));
    return label;
}

Cabello18 build_cabello18() {
    // Nine four-element bases over 18 vectors; every vector sits in exactly
    // two bases.
    const std::vector<std::vector<std::vector<int>>> base_vectors = {
        {{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 1, 0, 0}, {1, -1, 0, 0}},
        {{0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, -1, 0}},
        {{1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}},
        {{1, -1, 1, -1}, {1, 1, 1, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}},
        {{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 1}, {1, 0, 0, -1}},
        {{1, -1, -1, 1}, {1, 1, 1, 1}, {1, 0, 0, -1}, {0, 1, -1, 0}},
        {{1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 0, 0}, {0, 0, 1, 1}},
        {{1, 1, -1, 1}, {-1, 1, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, -1}},
        {{1, 1, 1, -1}, {-1, 1, 1, 1}, {1, 0, 0, 1}, {0, 1, -1, 0}},
    };

    Cabello18 fixture;
    std::map<std::string, int> index;
    for (const auto& base : base_vectors) {
        VertexSet members;
        for (const auto& ray : base) {
            const std::string label = ray_label(ray);
            auto it = index.find(label);
            if (it == index.end()) {
                it = index.emplace(label, static_cast<int>(fixture.labels.size())).first;
                fixture.labels.push_back(label);
                RatVec v;
                for (int x : ray) v.emplace_back(x);
                fixture.vectors.push_back(std::move(v));
            }
            members.push_back(it->second);
        }
        std::sort(members.begin(), members.end());
        fixture.bases.push_back(std::move(members));
    }
    if (fixture.labels.size() != 18) throw std::logic_error("fixture must hold 18 vectors");

    for (std::size_t i = 0; i < fixture.vectors.size(); ++i)
        for (std::size_t j = i + 1; j < fixture.vectors.size(); ++j) {
            RatVec negated;
            for (const Rat& x : fixture.vectors[j]) negated.push_back(-x);
            if (fixture.vectors[i] == fixture.vectors[j] || fixture.vectors[i] == negated)
                throw std::logic_error("fixture rays must be pairwise distinct");
        }
    for (const VertexSet& base : fixture.bases)
        for (std::size_t a = 0; a < base.size(); ++a)
            for (std::size_t b = a + 1; b < base.size(); ++b)
                if (dot(fixture.vectors[static_cast<std::size_t>(base[a])],
                        fixture.vectors[static_cast<std::size_t>(base[b])]) != 0)
                    throw std::logic_error("fixture basis vectors must be orthogonal");

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 18; ++i)
        for (int j = i + 1; j < 18; ++j)
            if (dot(fixture.vectors[static_cast<std::size_t>(i)],
                    fixture.vectors[static_cast<std::size_t>(j)]) == 0)
                edges.emplace_back(i, j);
    fixture.orthogonality_graph = Graph(fixture.labels, edges);
    return fixture;
}

}  // namespace

const Cabello18& cabello18_fixture() {
    static const Cabello18 fixture = build_cabello18();
    return fixture;
}

Graph builtin_graph(const std::string& name) {
    if (name == "kcbs") return pentagon();
    if (name == "fig3-bowtie") return bowtie();
    if (name == "cabello18") return cabello18_fixture().orthogonality_graph;
    throw std::invalid_argument("unknown builtin \"" + name + "\"");
}

}  // namespace qcontext
