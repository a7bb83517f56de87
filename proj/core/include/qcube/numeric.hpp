#pragma once

#include <gmpxx.h>

#include <string>

namespace qcube {

// Arbitrary-precision integers and rationals, backed by GMP. mpq_class
// keeps values canonical (lowest terms, positive denominator) through
// arithmetic, which is exactly the Rational contract we need.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(n, k); zero for k < 0 or k > n.
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Quotient of an exact division (caller guarantees divisibility).
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::size_t decimal_digits(const BigInt& v) {
    return mpz_sizeinbase(v.get_mpz_t(), 10);
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace qcube
