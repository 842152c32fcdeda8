#include "qcontext/projector.hpp"

#include <stdexcept>

namespace qcontext {

Projector::Projector(Matrix m) : mat_(std::move(m)) {
    basis_ = row_space_basis(mat_);
    for (RatVec& v : basis_) normalize_primitive(v);
}

Projector Projector::zero(int dim) { return Projector(Matrix(dim, dim)); }

Projector Projector::identity(int dim) { return Projector(Matrix::identity(dim)); }

Projector Projector::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("projector matrix must be square");
    if (!m.is_symmetric()) throw std::invalid_argument("projector matrix must be symmetric");
    if (m * m != m) throw std::invalid_argument("projector matrix must be idempotent");
    return Projector(m);
}

int Projector::rank() const { return static_cast<int>(basis_.size()); }

Projector projector_onto(const std::vector<RatVec>& vectors, int dim) {
    if (vectors.empty()) return Projector::zero(dim);
    for (const RatVec& v : vectors)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("spanning vector has wrong length");
    const Matrix b = Matrix::from_cols(vectors);
    const Matrix bt = b.transposed();
    const auto gram_inv = inverse(bt * b);
    if (!gram_inv) throw std::invalid_argument("spanning vectors are linearly dependent");
    return Projector::from_matrix(b * (*gram_inv) * bt);
}

bool commute(const Projector& p, const Projector& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("projector dimension mismatch");
    return p.matrix() * q.matrix() == q.matrix() * p.matrix();
}

Projector complement(const Projector& p) {
    return Projector::from_matrix(Matrix::identity(p.dim()) - p.matrix());
}

Projector meet(const Projector& p, const Projector& q) {
    if (!commute(p, q)) throw std::invalid_argument("incompatible elements");
    return Projector::from_matrix(p.matrix() * q.matrix());
}

Projector join(const Projector& p, const Projector& q) {
    if (!commute(p, q)) throw std::invalid_argument("incompatible elements");
    return Projector::from_matrix(p.matrix() + q.matrix() - p.matrix() * q.matrix());
}

bool leq(const Projector& p, const Projector& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("projector dimension mismatch");
    return p.matrix() * q.matrix() == p.matrix();
}

}  // namespace qcontext
