#include "qcube/finite_field.hpp"

#include <algorithm>
#include <string>

namespace qcube {

namespace {

struct PrimePower {
    int p = 0, m = 0;
};

PrimePower factor_prime_power(int q) {
    if (q < 2) return {};
    for (int p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        int m = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        return v == 1 ? PrimePower{p, m} : PrimePower{};
    }
    return {};
}

// Polynomials over F_p as ascending coefficient vectors.
using PolyP = std::vector<int>;

PolyP decode(int code, int p) {
    PolyP c;
    while (code > 0) {
        c.push_back(code % p);
        code /= p;
    }
    return c;
}

PolyP mod_poly(PolyP a, const PolyP& m, int p) {
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        int lead = a[da];  // m is monic
        if (lead != 0) {
            for (int i = 0; i <= dm; ++i) {
                int& t = a[da - dm + i];
                t = ((t - lead * m[i]) % p + p) % p;
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

PolyP mul_mod(const PolyP& a, const PolyP& b, const PolyP& m, int p) {
    if (a.empty() || b.empty()) return {};
    PolyP prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    while (!prod.empty() && prod.back() == 0) prod.pop_back();
    return mod_poly(std::move(prod), m, p);
}

bool divides(const PolyP& d, const PolyP& a, int p) {
    return mod_poly(a, d, p).empty();
}

// Brute-force irreducibility for degree <= 4: no monic factor of degree
// 1..deg/2.
bool is_irreducible(const PolyP& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            PolyP g = decode(code, p);
            g.resize(static_cast<std::size_t>(d) + 1, 0);
            g[static_cast<std::size_t>(d)] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

PolyP least_irreducible(int p, int m) {
    int pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    for (int code = 0; code < pm; ++code) {
        PolyP f = decode(code, p);
        f.resize(static_cast<std::size_t>(m) + 1, 0);
        f[static_cast<std::size_t>(m)] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

int encode(const PolyP& c, int p) {
    int v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

}  // namespace

bool is_prime_power(int q) {
    return factor_prime_power(q).p != 0;
}

FiniteField::FiniteField(int q) : q_(q) {
    auto pp = factor_prime_power(q);
    if (pp.p == 0 || q > 16) throw DomainError("finite field order must be a prime power <= 16, got " + std::to_string(q));
    p_ = pp.p;
    m_ = pp.m;

    PolyP mod;
    if (m_ == 1) {
        mod = {0, 1};
    } else {
        mod = least_irreducible(p_, m_);
    }
    modulus_.assign(mod.begin(), mod.end());

    add_.resize(static_cast<std::size_t>(q) * q);
    mul_.resize(static_cast<std::size_t>(q) * q);
    neg_.resize(static_cast<std::size_t>(q));
    inv_.assign(static_cast<std::size_t>(q), 0);

    for (int a = 0; a < q; ++a) {
        PolyP pa = decode(a, p_);
        PolyP na(pa.size());
        for (std::size_t i = 0; i < pa.size(); ++i) na[i] = (p_ - pa[i]) % p_;
        while (!na.empty() && na.back() == 0) na.pop_back();
        neg_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(encode(na, p_));
        for (int b = 0; b < q; ++b) {
            PolyP pb = decode(b, p_);
            PolyP s(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                int va = i < pa.size() ? pa[i] : 0;
                int vb = i < pb.size() ? pb[i] : 0;
                s[i] = (va + vb) % p_;
            }
            while (!s.empty() && s.back() == 0) s.pop_back();
            add_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] =
                static_cast<std::uint8_t>(encode(s, p_));
            PolyP prod = m_ == 1 ? PolyP{(a * b) % p_} : mul_mod(pa, pb, mod, p_);
            while (!prod.empty() && prod.back() == 0) prod.pop_back();
            mul_[idx(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b))] =
                static_cast<std::uint8_t>(encode(prod, p_));
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) == 1)
                inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
}

std::uint8_t FiniteField::inv(std::uint8_t a) const {
    if (a == 0) throw DomainError("finite field: zero has no inverse");
    return inv_[a];
}

}  // namespace qcube
