#ifndef QCONTEXT_SIMPLEX_HPP
#define QCONTEXT_SIMPLEX_HPP

#include <optional>

#include "qcontext/matrix.hpp"

namespace qcontext {

// Some x >= 0 with A x = b, or absent when none exists. Phase-1 simplex over
// exact rationals with Bland's rule, so it terminates on every input.
std::optional<RatVec> lp_feasible_point(const Matrix& a, const RatVec& b);

}  // namespace qcontext

#endif
