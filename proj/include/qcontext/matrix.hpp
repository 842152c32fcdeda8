#ifndef QCONTEXT_MATRIX_HPP
#define QCONTEXT_MATRIX_HPP

#include <optional>
#include <vector>

#include "qcontext/rational.hpp"

namespace qcontext {

/// Dense matrix over exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);  // zero-filled

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<RatVec>& rows);
    static Matrix from_cols(const std::vector<RatVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    Rat& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    RatVec row(int i) const;
    RatVec col(int j) const;

    Matrix transposed() const;
    bool is_symmetric() const;
    bool is_zero() const;

    bool operator==(const Matrix& other) const = default;
    bool operator<(const Matrix& other) const;  // lexicographic; for map keys

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    RatVec operator*(const RatVec& v) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    RatVec data_;
};

// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<int> rref_inplace(Matrix& m);

int rank(Matrix m);

// Exact solution of A x = b if consistent (Gaussian elimination). Any one
// solution is returned when the system is underdetermined (free vars = 0).
std::optional<RatVec> solve_linear(const Matrix& a, const RatVec& b);

// Canonical kernel basis from the rref free-variable parametrization, each
// vector scaled primitive-integer. Empty iff full column rank.
std::vector<RatVec> nullspace(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

// Canonical basis of the row space (nonzero rows of the rref).
std::vector<RatVec> row_space_basis(const Matrix& a);

}  // namespace qcontext

#endif
