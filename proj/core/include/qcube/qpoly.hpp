#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcube/numeric.hpp"

namespace qcube {

/// Dense univariate polynomial over an exact coefficient ring T.
/// Coefficients are stored in ascending degree with no trailing zeros;
/// the zero polynomial is the empty list. Instantiated as QPoly
/// (coefficients BigInt, indeterminate q) and XPoly (coefficients QPoly,
/// indeterminate x), so "polynomial in x with q-polynomial coefficients"
/// is the same type one level up.
template <typename T>
class DensePoly {
public:
    DensePoly() = default;
    DensePoly(long c) : coeffs_{T(c)} { trim(); }  // NOLINT: implicit by design
    explicit DensePoly(T c) : coeffs_{std::move(c)} { trim(); }
    explicit DensePoly(std::vector<T> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static DensePoly monomial(T c, std::size_t deg) {
        std::vector<T> v(deg + 1, T(0));
        v[deg] = std::move(c);
        return DensePoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of the degree-i term (zero beyond the stored length).
    const T& coeff(std::size_t i) const {
        static const T kZero(0);
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const std::vector<T>& coefficients() const { return coeffs_; }

    bool operator==(const DensePoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const DensePoly& o) const { return !(*this == o); }

    DensePoly operator-() const {
        std::vector<T> v(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
        return DensePoly(std::move(v));
    }

    DensePoly& operator+=(const DensePoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    DensePoly& operator*=(const DensePoly& o) {
        *this = *this * o;
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return DensePoly(std::move(v));
    }

    DensePoly& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }
    friend DensePoly operator*(DensePoly a, const T& s) { return a *= s; }
    friend DensePoly operator*(const T& s, DensePoly a) { return a *= s; }

    /// Horner evaluation; U is the value ring (BigInt for QPoly at a
    /// numeric point, QPoly for XPoly at a q-polynomial point).
    template <typename U>
    U eval(const U& x) const {
        U acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + U(coeffs_[i]);
        }
        return acc;
    }

    DensePoly pow(unsigned long e) const {
        DensePoly result(1);
        DensePoly base = *this;
        while (e != 0) {
            if (e & 1U) result *= base;
            base *= base;
            e >>= 1U;
        }
        return result;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using QPoly = DensePoly<BigInt>;
using XPoly = DensePoly<QPoly>;

std::string to_string(const QPoly& p, const char* var = "q");
std::string to_string(const XPoly& p, const char* outer = "x", const char* inner = "q");

}  // namespace qcube
