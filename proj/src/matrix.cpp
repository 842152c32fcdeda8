#include "qcontext/matrix.hpp"

#include <stdexcept>

namespace qcontext {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
    data_.assign(static_cast<std::size_t>(rows) * cols, Rat(0));
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return Matrix();
    const int nc = static_cast<int>(rows[0].size());
    Matrix m(static_cast<int>(rows.size()), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != nc)
            throw std::invalid_argument("ragged row list");
        for (int j = 0; j < nc; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<RatVec>& cols) {
    return from_rows(cols).transposed();
}

RatVec Matrix::row(int i) const {
    RatVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RatVec Matrix::col(int j) const {
    RatVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const Rat& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::operator<(const Matrix& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_;
    if (cols_ != other.cols_) return cols_ < other.cols_;
    for (std::size_t k = 0; k < data_.size(); ++k) {
        const int c = cmp(data_[k], other.data_[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) r.at(i, j) += aik * other.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + other.data_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - other.data_[k];
    return r;
}

RatVec Matrix::operator*(const RatVec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix-vector shape mismatch");
    RatVec r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<int> rref_inplace(Matrix& m) {
    std::vector<int> pivots;
    int pr = 0;
    for (int pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
        int sel = -1;
        for (int i = pr; i < m.rows(); ++i)
            if (m.at(i, pc) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pr, j));
        const Rat inv = Rat(1) / m.at(pr, pc);
        for (int j = pc; j < m.cols(); ++j) m.at(pr, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == pr || m.at(i, pc) == 0) continue;
            const Rat f = m.at(i, pc);
            for (int j = pc; j < m.cols(); ++j) m.at(i, j) -= f * m.at(pr, j);
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref_inplace(m).size()); }

std::optional<RatVec> solve_linear(const Matrix& a, const RatVec& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const std::vector<int> pivots = rref_inplace(aug);
    for (int p : pivots)
        if (p == a.cols()) return std::nullopt;  // row [0 ... 0 | 1]: inconsistent
    RatVec x(a.cols(), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
    return x;
}

std::vector<RatVec> nullspace(const Matrix& a) {
    Matrix m = a;
    const std::vector<int> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(a.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), f);
        normalize_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const int n = a.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const std::vector<int> pivots = rref_inplace(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<RatVec> row_space_basis(const Matrix& a) {
    Matrix m = a;
    const std::vector<int> pivots = rref_inplace(m);
    std::vector<RatVec> basis;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.push_back(m.row(static_cast<int>(r)));
    return basis;
}

}  // namespace qcontext
