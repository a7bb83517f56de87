#include "qcube/qpoly.hpp"

#include <sstream>

namespace qcube {

namespace {

std::string term(const std::string& c, const char* var, std::size_t deg) {
    std::ostringstream os;
    if (deg == 0) {
        os << c;
    } else {
        if (c != "1") os << c << "*";
        os << var;
        if (deg > 1) os << "^" << deg;
    }
    return os.str();
}

}  // namespace

std::string to_string(const QPoly& p, const char* var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        const BigInt& c = p.coefficients()[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        os << term(abs(c).get_str(), var, i);
    }
    return os.str();
}

std::string to_string(const XPoly& p, const char* outer, const char* inner) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        const QPoly& c = p.coefficients()[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << term("(" + to_string(c, inner) + ")", outer, i);
    }
    return os.str();
}

}  // namespace qcube
