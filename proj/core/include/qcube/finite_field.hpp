#pragma once

#include <cstdint>
#include <vector>

#include "qcube/errors.hpp"

namespace qcube {

bool is_prime_power(int q);

/// F_q for a prime power q <= 16, with full addition/multiplication
/// tables. Prime q is plain arithmetic mod p; prime powers use the
/// polynomial representation modulo a fixed irreducible: the first
/// irreducible monic polynomial of degree m over F_p in ascending order
/// of its base-p coefficient encoding. Elements are encoded as
/// 0..q-1 = sum c_i p^i over the coefficients.
class FiniteField {
public:
    explicit FiniteField(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const;

    /// Base-p coefficients (ascending) of the fixed modulus, including
    /// the leading 1; size m+1. For prime q this is {0, 1} (i.e. x).
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }

private:
    std::size_t idx(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
    }

    int q_ = 0, p_ = 0, m_ = 0;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
    std::vector<std::uint8_t> modulus_;
};

}  // namespace qcube
