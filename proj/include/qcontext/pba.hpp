#ifndef QCONTEXT_PBA_HPP
#define QCONTEXT_PBA_HPP

#include <string>
#include <utility>
#include <vector>

#include "qcontext/graph.hpp"
#include "qcontext/projector.hpp"

namespace qcontext {

/// Element of the symbolic model: the equivalence class of all (maximal
/// clique, subset) representatives denoting one join of atoms. A class holds
/// at most one subset per clique.
struct SymbolicClass {
    std::vector<std::pair<int, VertexSet>> reps;  // sorted by clique id
};

/// Finite partial Boolean algebra over indexed elements. Compatibility is
/// symmetric and reflexive; meet and join are defined exactly on compatible
/// pairs; negation is total and involutive. Elements can be backed by exact
/// projectors, by symbolic classes, or by nothing beyond the tables.
class Pba {
public:
    enum class Model { projector, symbolic, table };

    Pba() = default;
    Pba(Model model, std::vector<std::string> names, std::vector<std::vector<bool>> compat,
        std::vector<int> neg, std::vector<std::vector<int>> meet,
        std::vector<std::vector<int>> join, int zero, int one,
        std::vector<Projector> projectors = {}, std::vector<SymbolicClass> classes = {});

    Model model() const { return model_; }
    int size() const { return static_cast<int>(names_.size()); }
    int zero() const { return zero_; }
    int one() const { return one_; }

    const std::string& name(int x) const { return names_.at(static_cast<std::size_t>(x)); }
    const std::vector<std::string>& names() const { return names_; }

    bool compatible(int x, int y) const;
    int neg(int x) const;
    int meet(int x, int y) const;  // std::invalid_argument("incompatible elements") otherwise
    int join(int x, int y) const;
    bool leq(int x, int y) const;  // compatible and meet(x,y) == x

    const Projector& projector_at(int x) const;
    const SymbolicClass& symbolic_at(int x) const;

private:
    Model model_ = Model::table;
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> compat_;
    std::vector<int> neg_;
    std::vector<std::vector<int>> meet_;
    std::vector<std::vector<int>> join_;
    int zero_ = -1;
    int one_ = -1;
    std::vector<Projector> projectors_;
    std::vector<SymbolicClass> classes_;
};

// Closure of the generators (plus 0 and 1) under negation and under meet and
// join of commuting pairs; compatibility is exact commutation. Raises
// std::runtime_error("closure blowup") past the cap.
Pba generate_pba(const std::vector<Projector>& generators, std::size_t cap = 4096);

// Indices of the minimal nonzero elements, ascending.
VertexSet atoms(const Pba& b);

// Vertices are the atoms (labeled by element name), edges join compatible
// distinct atoms.
Graph atom_graph(const Pba& b);

// Logical exclusivity: a <= c and b <= neg(c) for some c forces a, b compatible.
bool is_exclusive(const Pba& b);

// Largest atom count of a maximal context = max clique size of the atom graph.
int pba_dimension(const Pba& b);

// One element set per maximal clique of the atom graph: every join of a
// subset of the clique's atoms. Each set is verified closed under the
// operations before it is returned.
std::vector<std::vector<int>> maximal_contexts(const Pba& b);

/// A join representative on an atom graph: a maximal clique and a subset of it.
struct CliqueSubset {
    VertexSet clique;
    VertexSet subset;
};

// Exchange test for join equality: both cross unions (clique1 minus subset1)
// with subset2, and subset1 with (clique2 minus subset2), must be vertex sets
// of maximal cliques of g.
bool is_same_join(const Graph& g, const CliqueSubset& a1, const CliqueSubset& a2);

// Reconstruction of the unique algebra with atom graph g: elements are
// is_same_join equivalence classes of clique subsets, negation is set
// complement within a clique, meet and join are intersection and union
// inside a shared clique. Every identification is validated eagerly; raises
// std::runtime_error("graph is not an acepBA atom graph") on any
// inconsistency.
Pba symbolic_from_atom_graph(const Graph& g);

// Atom-graph isomorphism, which settles isomorphism for atomic complete
// exclusive algebras. Raises std::invalid_argument on non-exclusive input.
bool pba_isomorphic(const Pba& b1, const Pba& b2);

}  // namespace qcontext

#endif
