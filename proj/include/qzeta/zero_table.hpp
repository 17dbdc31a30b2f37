#pragma once

#include "qzeta/qcore.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qzeta {

// sin: zeros xi_k of Sin_q; cos: zeros eta_k of Cos_q; bessel: zeros of
// J_nu^(2)(x; q^2) for the table's q.
enum class ZeroKind { Sin, Cos, Bessel };

const char* to_string(ZeroKind kind);
ZeroKind parse_zero_kind(const std::string& name);

struct ZeroEntry {
    long k = 0;
    Real value;
    Real residual;  // certified bracket half-width around value
};

struct ZeroTable {
    ZeroKind kind = ZeroKind::Sin;
    Real nu;  // Bessel order (bessel tables only)
    BigRational q;
    long digits = 0;
    // Printed asymptotic constant: q^{-3/2}/(1-q) for sin, q^{-1/2}/(1-q) for cos,
    // 2 q^{-nu-1} for bessel.
    Real asymptotic_constant;
    std::vector<ZeroEntry> entries;

    size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
    // 1-based access matching the usual zero numbering.
    const Real& zero(long k) const { return entries.at(static_cast<size_t>(k - 1)).value; }
    const ZeroEntry& entry(long k) const { return entries.at(static_cast<size_t>(k - 1)); }
};

// CSV columns: kind,q,k,zero,residual,digits
void write_csv(std::ostream& out, const ZeroTable& table);
ZeroTable read_csv(std::istream& in);

}  // namespace qzeta
