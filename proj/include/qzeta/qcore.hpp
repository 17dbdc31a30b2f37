#pragma once

#include "qzeta/errors.hpp"
#include "qzeta/real.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace qzeta {

using BigRational = mpq_class;
using BigInt = mpz_class;

// "1/2", "-3/4", "0.5", "1e-3", "7" -> exact rational. Decimal input maps to
// the rational with denominator 10^d that it spells.
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& r);

inline constexpr long kGuardDigits = 15;

// Immutable numeric settings shared by every evaluator. q is kept as an
// exact rational; its powers q^n for moderate n are formed exactly.
class PrecisionContext {
public:
    PrecisionContext(const BigRational& q, long digits, std::optional<Real> tol = std::nullopt);
    static PrecisionContext parse(const std::string& q, long digits, const std::string& tol = "");

    const BigRational& q_exact() const { return q_exact_; }
    const Real& q() const { return q_; }
    const Real& one_minus_q() const { return one_minus_q_; }
    const Real& log_q() const { return log_q_; }  // log q < 0
    long digits() const { return digits_; }
    long working_digits() const { return digits_ + kGuardDigits; }
    mpfr_prec_t working_bits() const { return bits_for_digits(working_digits()); }
    const Real& tol() const { return tol_; }
    double q_double() const { return q_double_; }

    // q^n at working precision (exact rational power rounded once for |n| <= 4096).
    Real q_pow(long n) const;

    PrecisionContext with_digits(long digits) const;
    PrecisionContext with_q(const BigRational& q) const;

private:
    BigRational q_exact_;
    long digits_;
    Real q_;
    Real one_minus_q_;
    Real log_q_;
    Real tol_;
    bool tol_explicit_ = false;
    double q_double_;
};

// Enter the context's working precision for the current scope. A caller that
// already raised the precision keeps its higher setting.
class WorkingScope : public PrecisionScope {
public:
    explicit WorkingScope(const PrecisionContext& ctx)
        : PrecisionScope(std::max(working_precision(), ctx.working_bits())) {}
};

// [n] = (1-q^n)/(1-q)
Real q_bracket(long n, const PrecisionContext& ctx);
BigRational q_bracket(long n, const BigRational& q);
// [n]! = [1][2]...[n]
Real q_factorial(long n, const PrecisionContext& ctx);
BigRational q_factorial(long n, const BigRational& q);
Real q_binomial(long n, long k, const PrecisionContext& ctx);

// Gaussian binomial as an integer polynomial in q (ascending coefficients).
std::vector<BigInt> q_binomial_coefficients(long n, long k);

// (a;base)_n, finite.
Complex q_pochhammer(const Complex& a, long n, const Real& base, const PrecisionContext& ctx);
Complex q_pochhammer(const Complex& a, long n, const PrecisionContext& ctx);
// (a;base)_inf.
Complex q_pochhammer_inf(const Complex& a, const Real& base, const PrecisionContext& ctx);
Complex q_pochhammer_inf(const Complex& a, const PrecisionContext& ctx);
// Real-argument specialisation used on hot paths: (a;base)_inf for real a.
Real q_pochhammer_inf(const Real& a, const Real& base, const PrecisionContext& ctx);

// Gamma_q(x) = (q;q)_inf/(q^x;q)_inf (1-q)^(1-x); pole error at x = 0,-1,-2,...
Complex q_gamma(const Complex& x, const Real& base, const PrecisionContext& ctx);
Complex q_gamma(const Complex& x, const PrecisionContext& ctx);

}  // namespace qzeta
