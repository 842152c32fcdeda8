#include "qcontext/simplex.hpp"

#include <stdexcept>
#include <vector>

namespace qcontext {

std::optional<RatVec> lp_feasible_point(const Matrix& a, const RatVec& b) {
    const int m = a.rows();
    const int n = a.cols();
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("right-hand side length mismatch");

    // Tableau [A | I | rhs] with rhs >= 0, plus a reduced-cost row for the
    // phase-1 objective (sum of artificials). obj rhs carries minus the
    // current objective value.
    const int cols = n + m + 1;
    std::vector<RatVec> tab(static_cast<std::size_t>(m) + 1, RatVec(static_cast<std::size_t>(cols), Rat(0)));
    for (int i = 0; i < m; ++i) {
        const bool flip = b[static_cast<std::size_t>(i)] < 0;
        for (int j = 0; j < n; ++j)
            tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = flip ? -a.at(i, j) : a.at(i, j);
        tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
        tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)] =
            flip ? -b[static_cast<std::size_t>(i)] : b[static_cast<std::size_t>(i)];
    }
    RatVec& obj = tab[static_cast<std::size_t>(m)];
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) obj[static_cast<std::size_t>(j)] -= tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i)
        obj[static_cast<std::size_t>(cols - 1)] -= tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)];

    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

    for (;;) {
        // Bland: entering column = lowest index with negative reduced cost.
        int enter = -1;
        for (int j = 0; j < cols - 1; ++j) {
            if (obj[static_cast<std::size_t>(j)] < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        int leave = -1;
        Rat best_ratio;
        for (int i = 0; i < m; ++i) {
            const Rat& pivot = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (pivot <= 0) continue;
            const Rat ratio = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)] / pivot;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("phase-1 objective unbounded");

        RatVec& prow = tab[static_cast<std::size_t>(leave)];
        const Rat inv = Rat(1) / prow[static_cast<std::size_t>(enter)];
        for (Rat& x : prow) x *= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            RatVec& row = tab[static_cast<std::size_t>(i)];
            const Rat f = row[static_cast<std::size_t>(enter)];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    if (obj[static_cast<std::size_t>(cols - 1)] != 0) return std::nullopt;

    // Artificials still basic sit at value zero, so the x part already
    // satisfies A x = b.
    RatVec x(static_cast<std::size_t>(n), Rat(0));
    for (int i = 0; i < m; ++i)
        if (basis[static_cast<std::size_t>(i)] < n)
            x[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
                tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols - 1)];
    return x;
}

}  // namespace qcontext
