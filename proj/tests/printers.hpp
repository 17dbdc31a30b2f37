#pragma once

// Readable gtest output for the numeric types.
#include "qzeta/qnumbers.hpp"

#include <ostream>

namespace qzeta {

inline void PrintTo(const Real& x, std::ostream* os) { *os << x.str(30); }
inline void PrintTo(const Complex& z, std::ostream* os) { *os << z.real().str(30) << " + i*" << z.imag().str(30); }
inline void PrintTo(const QPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const RF& r, std::ostream* os) { *os << r.str(); }
inline void PrintTo(const XPoly& p, std::ostream* os) {
    *os << "[";
    for (const auto& c : p.coeffs()) *os << " (" << c.str() << ")";
    *os << " ]";
}

}  // namespace qzeta
