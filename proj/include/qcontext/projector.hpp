#ifndef QCONTEXT_PROJECTOR_HPP
#define QCONTEXT_PROJECTOR_HPP

#include <vector>

#include "qcontext/matrix.hpp"

namespace qcontext {

/// Orthogonal projector with exact rational entries: P = P^T = P^2.
class Projector {
public:
    Projector() = default;

    static Projector zero(int dim);
    static Projector identity(int dim);

    // Validates symmetry and idempotence exactly; throws std::invalid_argument.
    static Projector from_matrix(const Matrix& m);

    const Matrix& matrix() const { return mat_; }
    int dim() const { return mat_.rows(); }
    int rank() const;

    // Canonical basis of the range (rref of the row space, primitive rows).
    const std::vector<RatVec>& range_basis() const { return basis_; }

    bool operator==(const Projector& other) const { return mat_ == other.mat_; }
    bool operator<(const Projector& other) const { return mat_ < other.mat_; }

private:
    explicit Projector(Matrix m);

    Matrix mat_;
    std::vector<RatVec> basis_;
};

// Projector onto the span of the given vectors. The vectors must be linearly
// independent; throws std::invalid_argument otherwise.
Projector projector_onto(const std::vector<RatVec>& vectors, int dim);

bool commute(const Projector& p, const Projector& q);

Projector complement(const Projector& p);

// Meet and join are defined only for commuting projectors; both throw
// std::invalid_argument("incompatible elements") when PQ != QP.
Projector meet(const Projector& p, const Projector& q);
Projector join(const Projector& p, const Projector& q);

// Range inclusion, PQ = P. Defined for any pair of equal dimension.
bool leq(const Projector& p, const Projector& q);

}  // namespace qcontext

#endif
