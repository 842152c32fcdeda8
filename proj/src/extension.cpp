#include "qcontext/extension.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

namespace qcontext {

namespace {

std::string fresh_label(const std::set<std::string>& used, int k) {
    std::string name = "x" + std::to_string(k);
    while (used.count(name)) name += "_";
    return name;
}

}  // namespace

Graph context_extension(const Graph& g) {
    const auto cliques = maximal_cliques(g);
    const int n = g.size();
    std::vector<std::string> labels = g.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    std::vector<std::pair<int, int>> edges = g.edge_list();
    for (std::size_t k = 0; k < cliques.size(); ++k) {
        const std::string name = fresh_label(used, static_cast<int>(k));
        used.insert(name);
        labels.push_back(name);
        const int xv = n + static_cast<int>(k);
        for (int v : cliques[k]) edges.emplace_back(v, xv);
    }
    Graph extended(std::move(labels), edges);

    std::set<std::uint64_t> expected;
    for (std::size_t k = 0; k < cliques.size(); ++k)
        expected.insert(vertices_to_mask(cliques[k]) |
                        (std::uint64_t{1} << static_cast<unsigned>(n + static_cast<int>(k))));
    std::set<std::uint64_t> actual;
    for (const VertexSet& c : maximal_cliques(extended)) actual.insert(vertices_to_mask(c));
    if (expected != actual) throw std::logic_error("context extension produced unexpected cliques");
    return extended;
}

Graph equal_dim_extension(const Graph& g) {
    const auto cliques = maximal_cliques(g);
    std::size_t maximum = 0;
    for (const VertexSet& c : cliques) maximum = std::max(maximum, c.size());
    std::vector<std::string> labels = g.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    std::vector<std::pair<int, int>> edges = g.edge_list();
    int next = g.size();
    for (std::size_t k = 0; k < cliques.size(); ++k) {
        if (cliques[k].size() == maximum) continue;
        const std::string name = fresh_label(used, static_cast<int>(k));
        used.insert(name);
        labels.push_back(name);
        for (int v : cliques[k]) edges.emplace_back(v, next);
        ++next;
    }
    return Graph(std::move(labels), edges);
}

ExtensionResult realize_extension(const Graph& g, std::size_t cap) {
    if (g.size() == 0) throw std::invalid_argument("empty graph has no realization");
    const int n = g.size();
    const auto cliques = maximal_cliques(g);
    const bool complete = g.edge_count() == n * (n - 1) / 2;
    const int d = complete ? n + 1 : n;

    OrthoRep rep = construct_flior(g);
    if (complete) {
        // The single maximal clique spans the whole space, which would make
        // its complement zero; one spare coordinate keeps it a genuine atom.
        std::vector<RatVec> padded = rep.vectors;
        for (RatVec& v : padded) v.push_back(0);
        rep = make_orthorep(rep.graph, std::move(padded));
    }

    std::vector<Projector> generators;
    generators.reserve(static_cast<std::size_t>(n) + cliques.size());
    for (int i = 0; i < n; ++i)
        generators.push_back(projector_onto({rep.vectors[static_cast<std::size_t>(i)]}, d));
    for (const VertexSet& c : cliques) {
        std::vector<RatVec> span;
        for (int v : c) span.push_back(rep.vectors[static_cast<std::size_t>(v)]);
        generators.push_back(complement(projector_onto(span, d)));
    }

    ExtensionResult result{g,  context_extension(g), {}, std::move(rep), generators,
                           generate_pba(generators, cap), {}};
    for (std::size_t k = 0; k < cliques.size(); ++k)
        result.added[static_cast<int>(k)] = result.extended.label(n + static_cast<int>(k));

    const VertexSet atom_ids = atoms(result.algebra);
    std::map<Projector, int> target;
    for (std::size_t i = 0; i < generators.size(); ++i)
        target.emplace(generators[i], static_cast<int>(i));
    if (atom_ids.size() != generators.size() || target.size() != generators.size())
        throw std::logic_error("realized algebra has unexpected atoms");
    result.iso.reserve(atom_ids.size());
    for (int e : atom_ids) {
        const auto it = target.find(result.algebra.projector_at(e));
        if (it == target.end()) throw std::logic_error("realized algebra has unexpected atoms");
        result.iso.push_back(it->second);
    }
    for (std::size_t s = 0; s < atom_ids.size(); ++s)
        for (std::size_t t = s + 1; t < atom_ids.size(); ++t) {
            const bool compat = result.algebra.compatible(atom_ids[s], atom_ids[t]);
            if (compat != result.extended.adjacent(result.iso[s], result.iso[t]))
                throw std::logic_error("atom graph does not match the context extension");
        }
    return result;
}

bool verify_induced_subgraph(const Graph& g, const Graph& h, const std::vector<int>& embed) {
    if (static_cast<int>(embed.size()) != g.size())
        throw std::invalid_argument("embedding must assign one image per vertex");
    std::set<int> images;
    for (int v : embed) {
        if (v < 0 || v >= h.size()) throw std::invalid_argument("embedding image out of range");
        images.insert(v);
    }
    if (static_cast<int>(images.size()) != g.size())
        throw std::invalid_argument("embedding must be injective");
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (g.adjacent(i, j) !=
                h.adjacent(embed[static_cast<std::size_t>(i)], embed[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

}  // namespace qcontext
