#pragma once

#include <vector>

#include "qcube/errors.hpp"
#include "qcube/qpoly.hpp"

namespace qcube {

enum class BlockFamily { M, N };

/// Symmetric tridiagonal block with rows/columns indexed by lo..hi.
/// Off-diagonal entries are square roots of q-quantities, so the block
/// stores their SQUARES; determinants and characteristic polynomials
/// depend only on the products of opposite off-diagonal pairs, which
/// keeps the whole pipeline in exact q-polynomial arithmetic.
struct TridiagBlock {
    BlockFamily family = BlockFamily::M;
    int n = 0, k = 0, l = 0;  // l is meaningful for M blocks only
    int lo = 0, hi = -1;      // empty when hi < lo
    std::vector<QPoly> diag;        // size hi - lo + 1
    std::vector<QPoly> sq_offdiag;  // size hi - lo (between j and j+1)

    int size() const { return hi < lo ? 0 : hi - lo + 1; }

    /// Principal submatrix on rows/columns {j, j+1, ..., hi}.
    TridiagBlock trailing(int j) const;

    /// Entries evaluated at a numeric q.
    struct Numeric {
        int lo = 0, hi = -1;
        std::vector<BigInt> diag;
        std::vector<BigInt> sq_offdiag;
    };
    Numeric eval(const BigInt& q0) const;
};

/// det(xI - b) via the three-term recurrence
/// p_j = (x - d_j) p_{j-1} - sq_j p_{j-2}; exact, empty block -> 1.
XPoly tridiag_charpoly(const TridiagBlock& b);

}  // namespace qcube
