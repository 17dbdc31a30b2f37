#pragma once

#include "qzeta/zeros.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qzeta {

struct SeriesValue {
    Complex value;
    Real tail_bound;  // estimated truncation error
    long K_used = 0;  // zeros (or remainder terms) consumed
};

// Quantities at one zero. For a sin zero: value = Cos_q(xi), derivative = Sin'_q(xi);
// for a cos zero: value = Sin_q(eta), derivative = Cos'_q(eta).
struct ZeroData {
    Real x;
    Real dtheta;  // phase derivative at x; Cos/Sin' = 1/dtheta at xi, Sin/Cos' = -1/dtheta at eta
    Real value;
    Real derivative;
};

// Zero tables and per-zero values shared by the spectral evaluators. Tables
// grow on demand, so a sum asks for as many zeros as its tail bound needs.
class SpectralContext {
public:
    explicit SpectralContext(const PrecisionContext& ctx, long initial_K = 10);

    const PrecisionContext& ctx() const { return ctx_; }
    const ZeroData& sin_zero(long k) const;  // 1-based
    const ZeroData& cos_zero(long k) const;
    // Tables holding at least K zeros.
    const ZeroTable& sin_table(long K) const;
    const ZeroTable& cos_table(long K) const;
    const ZeroTable& bessel_table(const Real& nu, long K) const;

    long max_zeros = 4000;

private:
    void grow(ZeroKind kind, long K) const;

    PrecisionContext ctx_;
    mutable std::recursive_mutex mu_;
    mutable ZeroTable sin_;
    mutable ZeroTable cos_;
    mutable std::vector<ZeroData> sin_data_;
    mutable std::vector<ZeroData> cos_data_;
    mutable std::map<std::string, ZeroTable> bessel_;
};

// zeta_q(s) = sum Cos_q(xi_k)/Sin'_q(xi_k) xi_k^{-s}, Re s > 1.
SeriesValue zeta_q(const Complex& s, const SpectralContext& sc);
// zeta*_q(s) = -sum Sin_q(eta_k)/Cos'_q(eta_k) eta_k^{-s}, Re s > 1.
SeriesValue zeta_q_star(const Complex& s, const SpectralContext& sc);
// eta_q(s) = -sum xi_k^{-s}/Sin'_q(xi_k), any s.
SeriesValue eta_q(const Complex& s, const SpectralContext& sc);
// eta*_q(s) = -sum eta_k^{-s}/Cos'_q(eta_k), any s.
SeriesValue eta_q_star(const Complex& s, const SpectralContext& sc);

// Rayleigh function sigma_{2n}(nu; q^2) = -sum J_{nu+1}(j_k)/J'_nu(j_k) j_k^{-2n}
// over the zeros of J_nu^(2)(.; q^2).
SeriesValue rayleigh_sigma(long n, const Real& nu, const SpectralContext& sc);
// The same numbers from the Taylor expansion J_{nu+1}/J_nu = 2 sum_n sigma_{2n} z^{2n-1}.
std::vector<Real> rayleigh_sigma_taylor(long n_max, const Real& nu, const PrecisionContext& ctx);

// H_q(s,a) as the spectral sum over xi_k minus the remainder at 1-s.
SeriesValue H_q_series(const Complex& s, const BigRational& a, const SpectralContext& sc);
// (sin pi s / pi) int_0^inf r^{s-1} e_q(-ar)/(1 - eps_q(-r)) dr, Re s > 1.
Complex H_q_integral(const Complex& s, const BigRational& a, const PrecisionContext& ctx);
// Negatively oriented circle around the origin, integer n; a = 0 allowed.
Complex H_q_contour_integer(long n, const BigRational& a, const SpectralContext& sc);

SeriesValue I_q_series(const Complex& s, const BigRational& a, const SpectralContext& sc);
// (2 sin pi(s-1) / pi) int_0^inf r^{s-1} e_q(-ar)/(eps_q(-r) + 1) dr, Re s > 1.
Complex I_q_integral(const Complex& s, const BigRational& a, const PrecisionContext& ctx);
Complex I_q_contour_integer(long n, const BigRational& a, const SpectralContext& sc);

// F_q(s,a) = sum e_q(2 i a xi_k) xi_k^{-s} Cos_q(xi_k)/Sin'_q(xi_k), a real.
SeriesValue F_q(const Complex& s, const BigRational& a, const SpectralContext& sc);
// R_q(s,a) = 1/(2 (q;q)_inf) sum_k (-1)^k q^{k(k+1)/2}/(q;q)_k z_k^{1-s} E_q(-x_k)/Sinh_q(x_k),
// z_k = q^{-k}/(a(1-q)), x_k = z_k/2. Terms where E_q(-x_k) vanishes are exact zeros.
SeriesValue R_q(const Complex& s, const BigRational& a, const PrecisionContext& ctx);
// Cos-side analog: 1/(q;q)_inf sum_k (-1)^k q^{k(k+1)/2}/(q;q)_k z_k^{1-s} E_q(-x_k)/Cosh_q(x_k).
SeriesValue R_q_cos_side(const Complex& s, const BigRational& a, const PrecisionContext& ctx);

// zeta_q(s,a) = Gamma_q(1-s) H_q(s,a); pole error at s = 1.
Complex hurwitz_zeta_q(const Complex& s, const BigRational& a, const SpectralContext& sc);

// zeta_q and zeta*_q beyond Re s > 1 through the a = 0 contour values:
//   zeta_q(s) = H_q(1-s,0) / (2^{1-s} cos(pi s/2)),  zeta*_q(s) = -I_q(1-s,0) / (2^{2-s} cos(pi s/2)).
// Available for Re s > 1 (series) and integer s; other points raise a Domain error.
Complex continued_zeta_q(const Complex& s, const SpectralContext& sc);
Complex continued_zeta_q_star(const Complex& s, const SpectralContext& sc);

}  // namespace qzeta
