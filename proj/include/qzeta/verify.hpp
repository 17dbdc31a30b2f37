#pragma once

#include "qzeta/qnumbers.hpp"
#include "qzeta/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qzeta {

// One evaluated identity: lhs is the numerically computed side, rhs the
// reference (exact where one exists).
struct IdentityReport {
    std::string id;
    BigRational q;
    std::string param;  // "n=2", "s=5/2,a=3/4", ...
    Complex lhs;
    Complex rhs;
    Real abs_err;
    Real rel_err;
    bool pass = false;
    // Disputed reports compare one of several competing forms of a printed
    // identity; they never gate the exit status.
    bool disputed = false;
    std::string candidate;  // which competing form, for disputed reports
    std::string note;
};

// Outcome for a family of competing forms across the whole grid.
struct Adjudication {
    std::string family;
    std::vector<std::string> candidates;
    std::string winner;     // empty when no candidate passes everywhere
    bool consistent = false;  // exactly one candidate passes on every grid point
    std::string note;
};

struct VerifyConfig {
    std::vector<BigRational> q_grid{BigRational(3, 10), BigRational(1, 2), BigRational(7, 10)};
    long n_max = 3;
    long digits = 50;
    std::optional<Real> tol;  // identity tolerance; default 10^(-digits/2)
    long K = 10;              // initial zero-table size
    long threads = 1;
    // Subset of {"even", "eta", "recurrences", "contour", "bessel", "limits"}; empty = all.
    std::vector<std::string> groups;
};

struct VerifySummary {
    std::vector<IdentityReport> reports;
    std::vector<Adjudication> adjudications;
    Real tol;
    bool undisputed_pass = true;
    long failures = 0;  // undisputed failures
};

// pass iff abs_err < tol * max(1, |rhs|)
IdentityReport make_report(std::string id, const BigRational& q, std::string param, const Complex& lhs,
                           const Complex& rhs, const Real& tol);

Real default_identity_tol(long digits);

// Spectral zeta_q(2n), zeta*_q(2n) against the exact number tables. zeta* is
// reported under both printed power-of-two prefactors.
std::vector<IdentityReport> check_even_values(const SpectralContext& sc, long n_max, const Real& tol);
// eta_q(2n) against b_2n(1/2), eta_q(-2n) = 0, sum 1/Sin'(xi_k) = -1/2,
// b_{2n+1}(1/2) = 0 exactly, and eta*_q(2n+1) under both printed prefactors.
std::vector<IdentityReport> check_eta_values(const SpectralContext& sc, long n_max, const Real& tol);
// zeta/eta recurrences at s = 2n; arguments <= 1 go through the continued values.
std::vector<IdentityReport> check_recurrences(const SpectralContext& sc, long n_max, const Real& tol);
// H_q and I_q at integers by series, contour and exact polynomial values, and
// the two a = 0 sign questions.
std::vector<IdentityReport> check_contour_values(const SpectralContext& sc, const Real& tol);
// Rayleigh sums, zero rescaling and the Cosh/Sinh and Tan expansions.
std::vector<IdentityReport> check_bessel_layer(const SpectralContext& sc, const Real& tol);
// Trend reports along a q ladder from the exact closed forms: error to the
// classical value must strictly decrease.
std::vector<IdentityReport> check_classical_limits(const std::vector<BigRational>& q_ladder, long digits);

// Groups disputed reports by family and picks the candidate that passes everywhere.
std::vector<Adjudication> adjudicate(const std::vector<IdentityReport>& reports);

VerifySummary run_verification(const VerifyConfig& config);

}  // namespace qzeta
