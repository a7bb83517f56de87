#include "qcube/tridiag.hpp"

namespace qcube {

TridiagBlock TridiagBlock::trailing(int j) const {
    if (j < lo || j > hi + 1) throw DomainError("trailing submatrix index out of range");
    TridiagBlock t;
    t.family = family;
    t.n = n;
    t.k = k;
    t.l = l;
    t.lo = j;
    t.hi = hi;
    t.diag.assign(diag.begin() + (j - lo), diag.end());
    if (t.size() > 0) t.sq_offdiag.assign(sq_offdiag.begin() + (j - lo), sq_offdiag.end());
    return t;
}

TridiagBlock::Numeric TridiagBlock::eval(const BigInt& q0) const {
    Numeric out;
    out.lo = lo;
    out.hi = hi;
    out.diag.reserve(diag.size());
    out.sq_offdiag.reserve(sq_offdiag.size());
    for (const auto& d : diag) out.diag.push_back(d.eval(q0));
    for (const auto& s : sq_offdiag) out.sq_offdiag.push_back(s.eval(q0));
    return out;
}

XPoly tridiag_charpoly(const TridiagBlock& b) {
    XPoly prev2(1);  // empty principal submatrix
    if (b.size() == 0) return prev2;
    const XPoly x = XPoly::monomial(QPoly(1), 1);
    XPoly prev = x - XPoly(b.diag[0]);
    for (int i = 1; i < b.size(); ++i) {
        XPoly cur = (x - XPoly(b.diag[i])) * prev - XPoly(b.sq_offdiag[i - 1]) * prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

}  // namespace qcube
