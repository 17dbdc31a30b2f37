#pragma once

#include "qzeta/qfunctions.hpp"
#include "qzeta/zero_table.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace qzeta {

using RealFunction = std::function<Real(const Real&)>;

struct RefineOptions {
    bool newton = true;  // safeguarded Newton when a derivative is supplied
    long max_iterations = 20000;
};

struct RefineResult {
    Real value;
    Real residual;  // the zero lies in [value - residual, value + residual]
    long iterations = 0;
};

// Shrinks a sign-change bracket to half-width < 10^(-digits) * value.
RefineResult refine_zero(const Real& lo, const Real& hi, const RealFunction& f, const PrecisionContext& ctx,
                         const RealFunction& fprime = nullptr, const RefineOptions& opts = {});

struct LocateOptions {
    long burn_in = 3;
    // initial relative half-width of asymptotic brackets; <= 0 means (1-q^2)/2
    double rho = 0;
};

// First K positive zeros of Sin_q, Cos_q, or J_nu^(2)(.; q^2).
ZeroTable locate_zeros(ZeroKind kind, long K, const PrecisionContext& ctx, const Real& nu = Real(0),
                       const LocateOptions& opts = {});
// Appends zeros until the table holds K entries.
void extend_zeros(ZeroTable& table, long K, const PrecisionContext& ctx, const LocateOptions& opts = {});

// The sign-carrying function whose zeros a table holds (Sin_q/|E_q(ix)|,
// Cos_q/|E_q(ix)| or J_nu^(2)).
Real zero_function(ZeroKind kind, const Real& nu, const Real& x, const PrecisionContext& ctx);

struct AsymptoticReport {
    ZeroKind kind = ZeroKind::Sin;
    std::vector<long> k;
    std::vector<Real> scaled;        // x_k q^{2k} / (printed constant)
    std::vector<Real> ratio;         // x_{k+1}/x_k, size n-1
    std::vector<Real> bounded_seq;   // q^{2k} Cos_q/Sin'_q at xi_k (sin) or q^{2k} Sin_q/Cos'_q at eta_k (cos)
    bool within_band = false;        // every scaled value within 25% of 1
    bool deviation_decreasing = false;  // |scaled - 1| decreasing for k >= 4
    bool bounded = false;
    bool quotient_signs_ok = false;  // Cos/Sin' > 0 at xi_k, Sin/Cos' < 0 at eta_k
    std::optional<bool> interlaces;  // against a partner table when supplied
    Real limit_estimate;             // last scaled value (observed limit)
};

AsymptoticReport asymptotic_diagnostics(const ZeroTable& table, const PrecisionContext& ctx,
                                        const ZeroTable* partner = nullptr);

// eta_k < xi_k < eta_{k+1} over the common range.
bool interlaced(const ZeroTable& cos_table, const ZeroTable& sin_table);

}  // namespace qzeta
