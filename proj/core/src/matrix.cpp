#include "qcube/matrix.hpp"

#include <utility>

namespace qcube {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

std::vector<BigInt> mat_vec(const IntMatrix& m, const std::vector<BigInt>& v) {
    if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<BigInt> out(m.rows(), BigInt(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out[i] += m(i, j) * v[j];
    return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Fraction-free elimination; Div(a, b) must be exact whenever invoked.
template <typename T, typename Div>
T bareiss_impl(Matrix<T> m, Div div) {
    if (!m.is_square()) throw DimensionError("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == T(0)) ++pivot;
            if (pivot == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : T(-m(n - 1, n - 1));
}

}  // namespace

BigInt bareiss_det(const IntMatrix& m) {
    return bareiss_impl(m, [](const BigInt& a, const BigInt& b) { return exact_div(a, b); });
}

Rational bareiss_det(const RatMatrix& m) {
    return bareiss_impl(m, [](const Rational& a, const Rational& b) { return Rational(a / b); });
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    RatMatrix a = m;

    // RREF with first-nonzero pivoting, ties broken by lowest row index.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
        Rational inv = a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BigInt> int_charpoly(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("characteristic polynomial requires a square matrix");
    const std::size_t n = m.rows();

    // Samuelson-Berkowitz: grow the char poly of the leading principal
    // submatrix by one row/column per step via a Toeplitz product.
    // coeffs holds det(xI - A_r) in descending degree, starting from [1].
    std::vector<BigInt> coeffs{BigInt(1)};
    for (std::size_t s = 1; s <= n; ++s) {
        const std::size_t r = s - 1;  // previous submatrix size
        // t[0..s]: first column of the (s+1) x s Toeplitz matrix.
        std::vector<BigInt> t(s + 1);
        t[0] = 1;
        t[1] = -m(r, r);
        if (s >= 2) {
            std::vector<BigInt> u(r);
            for (std::size_t i = 0; i < r; ++i) u[i] = m(i, r);
            for (std::size_t p = 2; p <= s; ++p) {
                BigInt acc(0);
                for (std::size_t i = 0; i < r; ++i) acc += m(r, i) * u[i];
                t[p] = -acc;
                if (p == s) break;
                std::vector<BigInt> next(r, BigInt(0));
                for (std::size_t i = 0; i < r; ++i) {
                    if (u[i] == 0) continue;
                    for (std::size_t j = 0; j < r; ++j) next[j] += m(j, i) * u[i];
                }
                u = std::move(next);
            }
        }
        std::vector<BigInt> out(s + 1, BigInt(0));
        for (std::size_t i = 0; i <= s; ++i)
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                if (i >= j && i - j <= s) {
                    // Toeplitz entry T(i, j) = t[i - j].
                    out[i] += t[i - j] * coeffs[j];
                }
        coeffs = std::move(out);
    }

    std::vector<BigInt> ascending(coeffs.rbegin(), coeffs.rend());
    return ascending;
}

}  // namespace qcube
