#pragma once

#include <cstddef>
#include <vector>

#include "qcube/errors.hpp"
#include "qcube/numeric.hpp"

namespace qcube {

/// Dense rectangular matrix over an exact scalar type. Dimensions are
/// fixed at construction.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& init = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
        Matrix d(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) d.data_[i] = data_[i] - o.data_[i];
        return d;
    }

    /// Copy with row r and column c removed.
    Matrix minor_matrix(std::size_t r, std::size_t c) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == c) continue;
                m(mi, mj) = (*this)(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using RatVector = std::vector<Rational>;

RatMatrix to_rational(const IntMatrix& m);
std::vector<BigInt> mat_vec(const IntMatrix& m, const std::vector<BigInt>& v);

/// Exact determinant by fraction-free (Bareiss) elimination. The empty
/// matrix has determinant 1. Deterministic pivoting: first nonzero entry
/// down the current column.
BigInt bareiss_det(const IntMatrix& m);
Rational bareiss_det(const RatMatrix& m);

/// Exact kernel basis from the reduced row echelon form, one vector per
/// free column (entry 1 at the free column, pivot-column entries filled
/// from the echelon rows). Empty when the kernel is trivial.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Exact characteristic polynomial det(xI - m) of an integer matrix,
/// coefficients ascending. Division-free Samuelson-Berkowitz scheme.
std::vector<BigInt> int_charpoly(const IntMatrix& m);

Rational dot(const RatVector& a, const RatVector& b);

}  // namespace qcube
