#include "qcube/qanalog.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace qcube {

QPoly q_int(int k) {
    if (k < 0) throw DomainError("q_int: negative k");
    std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(1));
    return QPoly(std::move(c));
}

QPoly gaussian_binomial(int n, int k) {
    if (n < 0) throw DomainError("gaussian_binomial: negative n");
    if (k < 0 || k > n) return QPoly();
    // Per-call q-Pascal table; row m holds qb(m, j) for j = 0..min(m, k).
    std::vector<QPoly> row{QPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<QPoly> next(static_cast<std::size_t>(std::min(m, k)) + 1);
        next[0] = QPoly(1);
        for (int j = 1; j < static_cast<int>(next.size()); ++j) {
            // qb(m, j) = qb(m-1, j-1) + q^j qb(m-1, j)
            QPoly v = row[static_cast<std::size_t>(j - 1)];
            if (j < static_cast<int>(row.size())) {
                v += QPoly::monomial(BigInt(1), static_cast<std::size_t>(j)) * row[static_cast<std::size_t>(j)];
            }
            next[static_cast<std::size_t>(j)] = std::move(v);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

QPoly galois_number(int n) {
    if (n < 0) throw DomainError("galois_number: negative n");
    QPoly prev(1), cur(2);  // G_0, G_1
    if (n == 0) return prev;
    for (int m = 1; m < n; ++m) {
        QPoly qm_minus_1 = QPoly::monomial(BigInt(1), static_cast<std::size_t>(m)) - QPoly(1);
        QPoly next = QPoly(2) * cur + qm_minus_1 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

int underline_k(int n, int k) {
    if (k < 0 || k > n) throw DomainError("underline_k: requires 0 <= k <= n");
    return std::max(0, 2 * k - n);
}

QPoly ssjc_multiplicity(int n, int k, int l) {
    if (k < 0 || k > n) throw DomainError("ssjc_multiplicity: requires 0 <= k <= n");
    if (l < underline_k(n, k) || l > k)
        throw DomainError("ssjc_multiplicity: offset outside [max(0, 2k-n), k]");
    QPoly q_minus_2 = QPoly::monomial(BigInt(1), 1) - QPoly(2);
    QPoly mult = q_minus_2.pow(static_cast<unsigned long>(l));  // (q-2)^0 = 1
    mult *= binomial(n, l);
    mult *= (binomial(n - l, k - l) - binomial(n - l, k - l - 1));
    return mult;
}

QPoly sjb_multiplicity_vs(int n, int k) {
    if (k < 0 || 2 * k > n) throw DomainError("sjb_multiplicity_vs: requires 0 <= k <= n/2");
    QPoly d = gaussian_binomial(n, k) - gaussian_binomial(n, k - 1);
    for (const BigInt& c : d.coefficients()) {
        if (c < 0)
            throw std::logic_error("sjb_multiplicity_vs: negative coefficient at n=" +
                                   std::to_string(n) + ", k=" + std::to_string(k));
    }
    return d;
}

MultiplicityTable multiplicity_table(MultFamily family, int n) {
    if (n < 0) throw DomainError("multiplicity_table: negative n");
    MultiplicityTable t{family, n, {}};
    if (family == MultFamily::Nonbinary) {
        for (int k = 0; k <= n; ++k)
            for (int l = underline_k(n, k); l <= k; ++l)
                t.entries.emplace(std::make_pair(k, l), ssjc_multiplicity(n, k, l));
    } else {
        for (int k = 0; 2 * k <= n; ++k)
            t.entries.emplace(std::make_pair(k, -1), sjb_multiplicity_vs(n, k));
    }
    return t;
}

}  // namespace qcube
