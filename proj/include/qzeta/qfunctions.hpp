#pragma once

#include "qzeta/qcore.hpp"
#include "qzeta/zero_table.hpp"

namespace qzeta {

struct EvalResult {
    Complex value;
    long terms_used = 0;
    // decimal digits lost to cancellation: log10(max partial term / |result|)
    long cancellation_digits = 0;
};

// Jackson exponentials: E_q(z) = (-(1-q)z;q)_inf, e_q(z) = 1/((1-q)z;q)_inf,
// and their symmetric product eps_q(z) = e_q(z/2) E_q(z/2).
EvalResult E_q(const Complex& z, const PrecisionContext& ctx);
EvalResult e_q(const Complex& z, const PrecisionContext& ctx);
EvalResult epsilon_q(const Complex& z, const PrecisionContext& ctx);

// q-trigonometric functions by their power series. Precision is raised per
// call to cover the cancellation between terms.
EvalResult sin_q(const Complex& z, const PrecisionContext& ctx);
EvalResult cos_q(const Complex& z, const PrecisionContext& ctx);
EvalResult sinh_q(const Complex& z, const PrecisionContext& ctx);
EvalResult cosh_q(const Complex& z, const PrecisionContext& ctx);
EvalResult tan_q(const Complex& z, const PrecisionContext& ctx);
EvalResult sin_q_prime(const Complex& z, const PrecisionContext& ctx);
EvalResult cos_q_prime(const Complex& z, const PrecisionContext& ctx);

// On the real line E_q(ix) = |P(x)| e^{i theta(x)} with
//   theta(x) = sum_j atan((1-q) x q^j),  log|P(x)| = (1/2) sum_j log(1 + (1-q)^2 x^2 q^{2j}).
// Both sums are cancellation free, so Sin_q x = |P| sin theta and
// Cos_q x = |P| cos theta hold at any size of x without extra precision.
struct TrigPhase {
    Real theta;
    Real dtheta;
    Real log_modulus;
    Real dlog_modulus;
};
TrigPhase trig_phase(const Real& x, const PrecisionContext& ctx);

struct TrigValues {
    Real sin, cos, sin_prime, cos_prime;
};
TrigValues trig_values(const Real& x, const PrecisionContext& ctx);
// e_q(iy) = e^{i theta(y)} / |P(y)| for real y.
Complex e_q_imag(const Real& y, const PrecisionContext& ctx);

// Hadamard products over a zero table.
EvalResult sin_q_product(const Complex& z, const ZeroTable& zeros, const PrecisionContext& ctx);
EvalResult cos_q_product(const Complex& z, const ZeroTable& zeros, const PrecisionContext& ctx);
// Sin'_q(xi_n) = -2 prod_{k != n} (1 - xi_n^2/xi_k^2)
Real sin_q_prime_at_zero_product(long n, const ZeroTable& zeros, const PrecisionContext& ctx);
// Cos'_q(eta_n) = -(2/eta_n) prod_{k != n} (1 - eta_n^2/eta_k^2)
Real cos_q_prime_at_zero_product(long n, const ZeroTable& zeros, const PrecisionContext& ctx);

// Second Jackson q-Bessel function J_nu^(2)(x; base), nu > -1. The base is
// exact so that heavy cancellation at large x can be absorbed by precision:
//   (base^{nu+1};base)_inf/(base;base)_inf
//     * sum_n (-1)^n base^{n(n+nu)} (x/2)^{2n+nu} / ((base;base)_n (base^{nu+1};base)_n)
EvalResult jackson_bessel2(const Real& nu, const Complex& x, const BigRational& base, const PrecisionContext& ctx);
EvalResult jackson_bessel2_prime(const Real& nu, const Complex& x, const BigRational& base,
                                 const PrecisionContext& ctx);
// Base = the context's q.
EvalResult jackson_bessel2(const Real& nu, const Complex& x, const PrecisionContext& ctx);

}  // namespace qzeta
