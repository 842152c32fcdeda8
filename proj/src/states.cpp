#include "qcontext/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qcontext/matrix.hpp"
#include "qcontext/simplex.hpp"

namespace qcontext {

namespace {

void check_size(const Graph& g, const RatVec& p, const char* what) {
    if (static_cast<int>(p.size()) != g.size())
        throw std::invalid_argument(std::string(what) + " must assign one value per vertex");
}

bool values_in_unit_interval(const RatVec& p) {
    for (const Rat& v : p)
        if (sgn(v) < 0 || cmp(v, 1) > 0) return false;
    return true;
}

}  // namespace

bool is_state(const Graph& g, const StateVector& p) {
    check_size(g, p, "state");
    if (!values_in_unit_interval(p)) return false;
    for (const VertexSet& c : maximal_cliques(g)) {
        Rat sum = 0;
        for (int v : c) sum += p[static_cast<std::size_t>(v)];
        if (cmp(sum, 1) != 0) return false;
    }
    return true;
}

bool is_substate(const Graph& g, const StateVector& q) {
    check_size(g, q, "substate");
    if (!values_in_unit_interval(q)) return false;
    for (const VertexSet& c : maximal_cliques(g)) {
        Rat sum = 0;
        for (int v : c) sum += q[static_cast<std::size_t>(v)];
        if (cmp(sum, 1) > 0) return false;
    }
    return true;
}

std::optional<StateVector> find_state(const Graph& g) {
    const auto cliques = maximal_cliques(g);
    Matrix a(static_cast<int>(cliques.size()), g.size());
    RatVec b(cliques.size(), Rat(1));
    for (std::size_t k = 0; k < cliques.size(); ++k)
        for (int v : cliques[k]) a.at(static_cast<int>(k), v) = 1;
    // Clique sums pin every value below one, so x >= 0 feasibility suffices.
    return lp_feasible_point(a, b);
}

namespace {

// Exact cover: pick an independent set meeting every maximal clique. Cliques
// are scanned smallest first and branching happens on the clique with the
// fewest remaining candidates, lowest vertex first, so the witness is
// deterministic.
struct ZeroOneSearch {
    const Graph* g = nullptr;
    std::vector<std::uint64_t> clique_masks;
    std::uint64_t chosen = 0;
    std::uint64_t excluded = 0;

    bool solve() {
        std::uint64_t branch = 0;
        int branch_count = -1;
        for (std::uint64_t c : clique_masks) {
            if (c & chosen) continue;
            const std::uint64_t cand = c & ~excluded;
            const int count = std::popcount(cand);
            if (count == 0) return false;
            if (branch_count < 0 || count < branch_count) {
                branch_count = count;
                branch = cand;
            }
        }
        if (branch_count < 0) return true;
        for (std::uint64_t t = branch; t; t &= t - 1) {
            const int v = std::countr_zero(t);
            const std::uint64_t saved_chosen = chosen;
            const std::uint64_t saved_excluded = excluded;
            chosen |= std::uint64_t{1} << v;
            excluded |= g->neighbor_mask(v);
            if (solve()) return true;
            chosen = saved_chosen;
            excluded = saved_excluded;
        }
        return false;
    }
};

}  // namespace

std::optional<ZeroOneState> zero_one_state(const Graph& g) {
    ZeroOneSearch search;
    search.g = &g;
    for (const VertexSet& c : maximal_cliques(g)) search.clique_masks.push_back(vertices_to_mask(c));
    std::stable_sort(search.clique_masks.begin(), search.clique_masks.end(),
                     [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });
    if (!search.solve()) return std::nullopt;
    ZeroOneState result;
    result.support = mask_to_vertices(search.chosen);
    result.state.assign(static_cast<std::size_t>(g.size()), Rat(0));
    for (int v : result.support) result.state[static_cast<std::size_t>(v)] = 1;
    return result;
}

PbaState extend_state_to_pba(const Pba& b, const StateVector& p) {
    if (!is_exclusive(b)) throw std::invalid_argument("algebra is not exclusive");
    const VertexSet a = atoms(b);
    const Graph ag = atom_graph(b);
    if (!is_state(ag, p)) throw std::invalid_argument("not a state on the atom graph");
    const auto cliques = maximal_cliques(ag);
    PbaState s(static_cast<std::size_t>(b.size()), Rat(0));
    for (int x = 0; x < b.size(); ++x) {
        bool resolved = false;
        for (const VertexSet& c : cliques) {
            int acc = b.zero();
            Rat sum = 0;
            for (int t : c) {
                const int atom = a[static_cast<std::size_t>(t)];
                if (!b.leq(atom, x)) continue;
                acc = b.join(acc, atom);
                sum += p[static_cast<std::size_t>(t)];
            }
            if (acc == x) {
                s[static_cast<std::size_t>(x)] = sum;
                resolved = true;
                break;
            }
        }
        if (!resolved)
            throw std::invalid_argument("element is not a join of atoms within one context");
    }
    return s;
}

StateVector restrict_pba_state(const Pba& b, const PbaState& s) {
    if (static_cast<int>(s.size()) != b.size())
        throw std::invalid_argument("state must assign one value per element");
    StateVector p;
    for (int x : atoms(b)) p.push_back(s[static_cast<std::size_t>(x)]);
    return p;
}

bool verify_pba_state(const Pba& b, const PbaState& s) {
    if (static_cast<int>(s.size()) != b.size())
        throw std::invalid_argument("state must assign one value per element");
    if (sgn(s[static_cast<std::size_t>(b.zero())]) != 0) return false;
    const int n = b.size();
    for (int x = 0; x < n; ++x) {
        const Rat& px = s[static_cast<std::size_t>(x)];
        if (sgn(px) < 0 || cmp(px, 1) > 0) return false;
        const Rat comp = s[static_cast<std::size_t>(b.neg(x))] + px;
        if (cmp(comp, 1) != 0) return false;
        for (int y = x; y < n; ++y) {
            if (!b.compatible(x, y)) continue;
            const Rat lhs = s[static_cast<std::size_t>(b.join(x, y))] +
                            s[static_cast<std::size_t>(b.meet(x, y))];
            const Rat rhs = px + s[static_cast<std::size_t>(y)];
            if (cmp(lhs, rhs) != 0) return false;
        }
    }
    return true;
}

StateVector extend_substate(const Graph& g, const StateVector& q) {
    if (!is_substate(g, q)) throw std::invalid_argument("not a substate");
    StateVector out = q;
    for (const VertexSet& c : maximal_cliques(g)) {
        Rat sum = 0;
        for (int v : c) sum += q[static_cast<std::size_t>(v)];
        out.push_back(Rat(1) - sum);
    }
    return out;
}

DensityMatrix DensityMatrix::pure(const std::vector<double>& psi) {
    const int d = static_cast<int>(psi.size());
    if (d == 0) throw std::invalid_argument("empty state vector");
    double norm2 = 0;
    for (double x : psi) norm2 += x * x;
    if (norm2 <= 0) throw std::invalid_argument("zero state vector");
    DensityMatrix rho;
    rho.dim = d;
    rho.data.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            rho.data[static_cast<std::size_t>(i * d + j)] = psi[static_cast<std::size_t>(i)] *
                                                            psi[static_cast<std::size_t>(j)] / norm2;
    return rho;
}

DensityMatrix make_density(int dim, std::vector<double> data) {
    if (dim <= 0 || data.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
        throw std::invalid_argument("density matrix shape mismatch");
    double trace = 0;
    for (int i = 0; i < dim; ++i) trace += data[static_cast<std::size_t>(i * dim + i)];
    if (std::abs(trace - 1.0) > 1e-12) throw std::invalid_argument("density matrix trace is not 1");
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (std::abs(data[static_cast<std::size_t>(i * dim + j)] -
                         data[static_cast<std::size_t>(j * dim + i)]) > 1e-12)
                throw std::invalid_argument("density matrix is not symmetric");
    DensityMatrix rho;
    rho.dim = dim;
    rho.data = std::move(data);
    return rho;
}

namespace {

double clip_unit(double p) {
    if (p < -1e-12 || p > 1.0 + 1e-12) throw std::invalid_argument("evaluation outside [0,1]");
    return std::min(1.0, std::max(0.0, p));
}

}  // namespace

std::vector<double> quantum_state_eval(const std::vector<Projector>& projectors,
                                       const DensityMatrix& rho) {
    std::vector<double> out;
    out.reserve(projectors.size());
    for (const Projector& p : projectors) {
        if (p.dim() != rho.dim) throw std::invalid_argument("dimension mismatch");
        double tr = 0;
        for (int i = 0; i < rho.dim; ++i)
            for (int j = 0; j < rho.dim; ++j)
                tr += rho.data[static_cast<std::size_t>(i * rho.dim + j)] * rat_double(p.matrix().at(j, i));
        out.push_back(clip_unit(tr));
    }
    return out;
}

std::vector<double> quantum_state_eval_rays(const std::vector<std::vector<double>>& rays,
                                            const DensityMatrix& rho) {
    std::vector<double> out;
    out.reserve(rays.size());
    for (const std::vector<double>& v : rays) {
        if (static_cast<int>(v.size()) != rho.dim) throw std::invalid_argument("dimension mismatch");
        double num = 0;
        double den = 0;
        for (int i = 0; i < rho.dim; ++i) {
            den += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
            double row = 0;
            for (int j = 0; j < rho.dim; ++j)
                row += rho.data[static_cast<std::size_t>(i * rho.dim + j)] * v[static_cast<std::size_t>(j)];
            num += v[static_cast<std::size_t>(i)] * row;
        }
        if (den <= 0) throw std::invalid_argument("zero ray");
        out.push_back(clip_unit(num / den));
    }
    return out;
}

}  // namespace qcontext
