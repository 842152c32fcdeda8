#include "qcontext/orthorep.hpp"

#include <cmath>
#include <stdexcept>

#include "qcontext/builtins.hpp"

namespace qcontext {

OrthoRep make_orthorep(Graph graph, std::vector<RatVec> vectors) {
    const int n = graph.size();
    if (static_cast<int>(vectors.size()) != n)
        throw std::invalid_argument("vector count must match vertex count");
    if (n == 0) return OrthoRep{std::move(graph), std::move(vectors), Matrix()};
    const std::size_t d = vectors[0].size();
    if (d == 0) throw std::invalid_argument("vectors must have positive dimension");
    for (const RatVec& v : vectors) {
        if (v.size() != d) throw std::invalid_argument("vectors must share one dimension");
        if (is_zero_vec(v)) throw std::invalid_argument("representation vectors must be nonzero");
    }
    Matrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            gram.at(i, j) = dot(vectors[static_cast<std::size_t>(i)], vectors[static_cast<std::size_t>(j)]);
            gram.at(j, i) = gram.at(i, j);
        }
    return OrthoRep{std::move(graph), std::move(vectors), std::move(gram)};
}

namespace {

// Integer coefficients c over the kernel basis such that every linear form in
// `forms` (rows, one per required non-orthogonality) is nonzero at c. Tries
// the zero tuple, then the cube {-1,0,1}^r in lexicographic order, then the
// moment curve (1, t, t^2, ...) for t = 2, 3, ...; on the curve each form has
// at most r-1 roots, so at most h*(r-1) values of t are excluded and the
// search always terminates.
std::vector<long> avoid_hyperplanes(const std::vector<RatVec>& forms, std::size_t r) {
    const std::size_t h = forms.size();
    std::vector<long> c(r, 0);
    const auto ok = [&](const std::vector<long>& cand) {
        for (const RatVec& f : forms) {
            Rat val = 0;
            for (std::size_t j = 0; j < r; ++j)
                if (cand[j] != 0) val += f[j] * cand[j];
            if (val == 0) return false;
        }
        return true;
    };
    if (ok(c)) return c;
    if (r == 0) throw std::logic_error("empty kernel cannot avoid hyperplanes");
    for (const RatVec& f : forms)
        if (is_zero_vec(f)) throw std::logic_error("hyperplane avoidance impossible: form vanishes on the kernel");

    c.assign(r, -1);
    for (;;) {
        bool on_ring = false;
        for (long x : c)
            if (x == -1 || x == 1) { on_ring = true; break; }
        if (on_ring && ok(c)) return c;
        std::size_t pos = r;
        while (pos > 0 && c[pos - 1] == 1) { c[pos - 1] = -1; --pos; }
        if (pos == 0) break;
        ++c[pos - 1];
    }

    const long limit = static_cast<long>(h) * static_cast<long>(r) + 2;
    for (long t = 2; t <= limit + 2; ++t) {
        c[0] = 1;
        for (std::size_t j = 1; j < r; ++j) c[j] = c[j - 1] * t;
        if (ok(c)) return c;
    }
    throw std::logic_error("hyperplane avoidance exhausted its bound");
}

}  // namespace

OrthoRep construct_flior(const Graph& g) {
    const int n = g.size();
    if (n == 0) throw std::invalid_argument("cannot represent the empty graph");
    std::vector<RatVec> vecs;
    Matrix gram(n, n);
    for (int k = 0; k < n; ++k) {
        RatVec vk(static_cast<std::size_t>(n), Rat(0));
        if (k > 0) {
            // Coefficients x over v_0..v_{k-1}: exact orthogonality to the
            // earlier neighbours, nonzero inner product with the rest. The
            // fresh coordinate e_k is orthogonal to everything built so far.
            std::vector<RatVec> ortho_rows;
            std::vector<int> nonadj;
            for (int i = 0; i < k; ++i) {
                if (g.adjacent(k, i)) {
                    RatVec row(static_cast<std::size_t>(k));
                    for (int j = 0; j < k; ++j) row[static_cast<std::size_t>(j)] = gram.at(j, i);
                    ortho_rows.push_back(std::move(row));
                } else {
                    nonadj.push_back(i);
                }
            }
            const Matrix constraint =
                ortho_rows.empty() ? Matrix(0, k) : Matrix::from_rows(ortho_rows);
            const std::vector<RatVec> kernel = nullspace(constraint);
            std::vector<RatVec> forms(nonadj.size(), RatVec(kernel.size(), Rat(0)));
            for (std::size_t i = 0; i < nonadj.size(); ++i)
                for (std::size_t j = 0; j < kernel.size(); ++j)
                    for (int t = 0; t < k; ++t)
                        forms[i][j] += kernel[j][static_cast<std::size_t>(t)] * gram.at(t, nonadj[i]);
            const std::vector<long> coeff = avoid_hyperplanes(forms, kernel.size());
            RatVec x(static_cast<std::size_t>(k), Rat(0));
            for (std::size_t j = 0; j < kernel.size(); ++j)
                if (coeff[j] != 0)
                    for (int t = 0; t < k; ++t)
                        x[static_cast<std::size_t>(t)] += kernel[j][static_cast<std::size_t>(t)] * coeff[j];
            for (int j = 0; j < k; ++j)
                if (x[static_cast<std::size_t>(j)] != 0)
                    for (int t = 0; t < n; ++t)
                        vk[static_cast<std::size_t>(t)] += x[static_cast<std::size_t>(j)] * vecs[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
        }
        vk[static_cast<std::size_t>(k)] += 1;
        for (int i = 0; i < k; ++i) {
            gram.at(k, i) = dot(vk, vecs[static_cast<std::size_t>(i)]);
            gram.at(i, k) = gram.at(k, i);
        }
        gram.at(k, k) = dot(vk, vk);
        vecs.push_back(std::move(vk));
    }
    return OrthoRep{g, std::move(vecs), std::move(gram)};
}

bool verify_faithful(const Graph& g, const OrthoRep& rep) {
    if (rep.graph.size() != g.size() || static_cast<int>(rep.vectors.size()) != g.size())
        throw std::invalid_argument("representation does not cover the graph's vertices");
    for (int i = 0; i < g.size(); ++i) {
        for (int j = i + 1; j < g.size(); ++j) {
            if (rep.vectors[static_cast<std::size_t>(i)] == rep.vectors[static_cast<std::size_t>(j)]) return false;
            const bool orthogonal = rep.gram.at(i, j) == 0;
            if (g.adjacent(i, j) != orthogonal) return false;
        }
    }
    return true;
}

bool verify_linear_independence(const OrthoRep& rep) {
    if (rep.vectors.empty()) return true;
    return rank(Matrix::from_rows(rep.vectors)) == static_cast<int>(rep.vectors.size());
}

KcbsUmbrella kcbs_umbrella() {
    KcbsUmbrella u;
    u.pentagon = pentagon();
    const double pi = std::acos(-1.0);
    const double c = std::cos(pi / 5.0);
    const double cos_theta = std::sqrt(c / (1.0 + c));
    const double sin_theta = std::sqrt(1.0 - c / (1.0 + c));
    for (int j = 0; j < 5; ++j) {
        const double phi = 4.0 * pi * j / 5.0;
        u.vectors[static_cast<std::size_t>(j)] = {sin_theta * std::cos(phi),
                                                  sin_theta * std::sin(phi), cos_theta};
    }
    u.axis_state = {0.0, 0.0, 1.0};
    return u;
}

}  // namespace qcontext
