#pragma once

#include <map>
#include <utility>

#include "qcube/errors.hpp"
#include "qcube/qpoly.hpp"

namespace qcube {

/// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0.
QPoly q_int(int k);

/// Gaussian coefficient, the number of k-dimensional subspaces of F_q^n.
/// Zero for k < 0 or k > n. Computed by the q-Pascal recurrence, so it
/// stays division-free.
QPoly gaussian_binomial(int n, int k);

/// Galois number G_n(q) = total number of subspaces of F_q^n, via
/// G_{n+1} = 2 G_n + (q^n - 1) G_{n-1}, G_0 = 1, G_1 = 2.
QPoly galois_number(int n);

/// max(0, 2k - n); the least legal chain offset for a start rank k.
int underline_k(int n, int k);

/// Number of semisymmetric Jordan chains starting at rank k with offset
/// l: (q-2)^l C(n,l) [C(n-l,k-l) - C(n-l,k-l-1)]. The convention
/// (q-2)^0 = 1 keeps l = 0 terms alive at q = 2.
QPoly ssjc_multiplicity(int n, int k, int l);

/// Symmetric-chain multiplicity for the subspace lattice:
/// gaussian_binomial(n,k) - gaussian_binomial(n,k-1). All coefficients
/// are nonnegative (Butler); violations raise a logic error.
QPoly sjb_multiplicity_vs(int n, int k);

enum class MultFamily { Nonbinary, VectorSpace };

/// Block-index -> multiplicity polynomial map for one of the two
/// q-analog families. Nonbinary keys are the legal (k, l) pairs;
/// vector-space keys are (k, -1) for 0 <= k <= n/2.
struct MultiplicityTable {
    MultFamily family;
    int n;
    std::map<std::pair<int, int>, QPoly> entries;
};

MultiplicityTable multiplicity_table(MultFamily family, int n);

}  // namespace qcube
