#pragma once

#include "qzeta/qnumbers.hpp"
#include "qzeta/spectral.hpp"
#include "qzeta/verify.hpp"
#include "qzeta/zeros.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace qzeta {

using Json = nlohmann::ordered_json;

// Decimal string with `digits` significant digits; never platform floating point.
std::string decimal(const Real& x, long digits);
Json complex_json(const Complex& z, long digits);

// {num_coeffs, den_coeffs, text}; coefficients as "p/q" strings, lowest degree first.
Json rf_json(const RF& rf);
Json xpoly_json(const XPoly& p);

struct EvalRecord {
    std::string function;
    Complex s;
    std::optional<BigRational> a;
    BigRational q;
    Complex value;
    std::optional<Real> tail_bound;
    std::optional<long> K_used;
    long digits = 0;
    std::string route;  // "series", "integral", "contour", ...
};
Json eval_json(const EvalRecord& r);

Json zero_table_json(const ZeroTable& t, long digits);
Json asymptotic_json(const AsymptoticReport& rep, long digits);

Json report_json(const IdentityReport& r, long digits);
Json summary_json(const VerifySummary& s, long digits);

}  // namespace qzeta
