#include "qzeta/qfunctions.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace qzeta {

namespace {

struct PassResult {
    Complex sum;
    double max_log10 = -std::numeric_limits<double>::infinity();
    long terms = 0;
};

// Shared driver for entire power series whose terms first grow and then
// decay. `estimate(k)` approximates log10|term k| in double precision;
// `run(digits)` sums the series at the current (raised) precision.
// With `from_peak` the first pass already carries the peak term size as guard
// digits (right for series whose value is O(1) against huge terms); otherwise
// it starts from a small guard and lets the measured cancellation decide.
EvalResult sum_with_raised_precision(const PrecisionContext& ctx, const std::function<double(long)>& estimate,
                                     const std::function<PassResult(long)>& run, bool from_peak = true) {
    long base_digits = std::max<long>(ctx.working_digits(),
                                      static_cast<long>(static_cast<double>(working_precision()) * 0.30103));
    double peak = -std::numeric_limits<double>::infinity();
    for (long k = 0; k < 100000; ++k) {
        double e = estimate(k);
        if (e > peak) peak = e;
        if (k > 4 && e < peak - 40) break;
    }
    long extra = (from_peak ? std::max(0L, static_cast<long>(std::ceil(peak))) : 0L) + 8;
    const long cap = 4 * base_digits + extra + (from_peak ? 0L : std::max(0L, static_cast<long>(std::ceil(peak))));
    PassResult res;
    double canc = 0;
    for (int pass = 0; pass < (from_peak ? 3 : 8); ++pass) {
        long digits = base_digits + extra;
        PrecisionScope scope(bits_for_digits(digits));
        res = run(digits);
        double lr = abs(res.sum).log10_abs();
        canc = std::isfinite(lr) ? std::max(0.0, res.max_log10 - lr) : static_cast<double>(digits);
        // relative accuracy of the sum is digits - canc
        if (static_cast<double>(digits) - canc >= static_cast<double>(base_digits)) break;
        long want = static_cast<long>(std::ceil(res.max_log10 - lr)) + 8;
        if (!from_peak) want = std::max(want, 2 * extra);
        if (!std::isfinite(lr) || want > cap) want = cap;
        if (want <= extra) break;
        extra = want;
    }
    EvalResult out;
    out.value = res.sum;
    out.terms_used = res.terms;
    out.cancellation_digits = static_cast<long>(std::floor(canc));
    return out;
}

double log10_bracket(long n, double q) {
    return std::log10((1.0 - std::pow(q, static_cast<double>(n))) / (1.0 - q));
}

enum class TrigSeries { Sin, Cos, SinPrime, CosPrime };

// Jackson Sin_q/Cos_q series and their derivatives; `hyperbolic` drops the
// alternating sign.
EvalResult trig_series(TrigSeries which, bool hyperbolic, const Complex& z, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    const double q = ctx.q_double();
    const double lq = std::log10(q);
    const double lz = abs(z).log10_abs();
    const bool odd = which == TrigSeries::Sin || which == TrigSeries::SinPrime;
    const bool deriv = which == TrigSeries::SinPrime || which == TrigSeries::CosPrime;

    if (z.is_zero()) {
        EvalResult r;
        r.value = Complex((which == TrigSeries::Cos || which == TrigSeries::SinPrime) ? 1 : 0);
        r.terms_used = 1;
        return r;
    }

    // term k has power m = 2k+odd of z, q exponent k(2k+1) (odd) or k(2k-1) (even)
    auto estimate = [&](long k) {
        long m = 2 * k + (odd ? 1 : 0);
        double qe = odd ? static_cast<double>(k * (2 * k + 1)) : static_cast<double>(k * (2 * k - 1));
        double s = qe * lq + static_cast<double>(m) * lz;
        for (long j = 2; j <= m; ++j) s -= log10_bracket(j, q);
        if (deriv && m > 0) s += std::log10(static_cast<double>(m)) - lz;
        return s;
    };

    auto run = [&](long digits) {
        PassResult pr;
        Real qq = Real(ctx.q_exact());
        Real one(1);
        Real omq = one - qq;
        Complex z2 = z * z;
        Real sign(hyperbolic ? 1 : -1);
        // [j] for the running indices, produced from q^j
        Real qj = qq;  // q^1
        auto next_bracket = [&]() {
            qj *= qq;
            return (one - qj) / omq;
        };
        Complex t;
        long k = 0;
        if (which == TrigSeries::Sin) t = z;
        else if (which == TrigSeries::Cos) t = Complex(1);
        else if (which == TrigSeries::SinPrime) t = Complex(1);
        else {
            // first nonzero term of Cos'_q: -q * 2z/[2] (sign +1 for Cosh')
            Real b2 = next_bracket();  // [2]
            t = z * (sign * qq * Real(2) / b2);
            k = 1;
        }
        Real q4 = qq * qq * qq * qq;
        // q^{4k+3} (odd) or q^{4k+1} (even), advanced by q^4 each step
        Real qstep = odd ? qq * qq * qq : qq;
        if (which == TrigSeries::CosPrime) qstep = pow(qq, 5L);
        Real thresh = pow10(-digits);
        Complex sum(0);
        Real maxabs(0);
        long kpeak = 0;
        {
            double best = -1e300;
            for (long j = 0; j < 100000; ++j) {
                double e = estimate(j);
                if (e > best) {
                    best = e;
                    kpeak = j;
                }
                if (j > kpeak + 4 && e < best - 40) break;
            }
        }
        for (;; ++k) {
            sum += t;
            Real at = abs(t);
            if (at > maxabs) maxabs = at;
            ++pr.terms;
            if (k >= kpeak && at <= thresh * maxabs) break;
            if (pr.terms > 200000) break;
            // ratio term_{k+1}/term_k
            Real num = sign * qstep;
            Real den;
            if (which == TrigSeries::Sin) {
                Real b1 = next_bracket();  // [2k+2]
                Real b2 = next_bracket();  // [2k+3]
                den = b1 * b2;
            } else if (which == TrigSeries::Cos) {
                Real b1 = (k == 0) ? Real(1) : next_bracket();  // [2k+1]
                Real b2 = next_bracket();                       // [2k+2]
                den = b1 * b2;
            } else if (which == TrigSeries::SinPrime) {
                Real b1 = next_bracket();
                Real b2 = next_bracket();
                den = b1 * b2 * Real(2 * k + 1);
                num = num * Real(2 * k + 3);
            } else {
                Real b1 = next_bracket();  // [2k+1]
                Real b2 = next_bracket();  // [2k+2]
                den = b1 * b2 * Real(2 * k);
                num = num * Real(2 * k + 2);
            }
            t = t * z2 * (num / den);
            qstep *= q4;
        }
        pr.sum = sum;
        pr.max_log10 = maxabs.log10_abs();
        return pr;
    };
    return sum_with_raised_precision(ctx, estimate, run);
}

bool is_e_q_pole(const Complex& a, const PrecisionContext& ctx) {
    // pole when a q^j = 1 for some j >= 0, i.e. a = q^{-j}
    WorkingScope ws(ctx);
    Real tiny = pow10(-ctx.digits());
    if (abs(a.imag()) > tiny * abs(a)) return false;
    const Real& ar = a.real();
    if (ar < Real(1) - tiny) return false;
    Real j = round(log(ar) / (-ctx.log_q()));
    Real back = ar * pow(ctx.q(), j);
    return abs(back - Real(1)) < tiny;
}

}  // namespace

EvalResult E_q(const Complex& z, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    EvalResult r;
    r.value = q_pochhammer_inf(-(z * ctx.one_minus_q()), ctx);
    r.terms_used = 1;
    return r;
}

EvalResult e_q(const Complex& z, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    Complex a = z * ctx.one_minus_q();
    if (is_e_q_pole(a, ctx)) throw Error(ErrorKind::Pole, "e_q has a pole at this argument");
    EvalResult r;
    r.value = Complex(1) / q_pochhammer_inf(a, ctx);
    r.terms_used = 1;
    return r;
}

EvalResult epsilon_q(const Complex& z, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    Complex h = z / Real(2);
    EvalResult a = e_q(h, ctx);
    EvalResult b = E_q(h, ctx);
    EvalResult r;
    r.value = a.value * b.value;
    r.terms_used = a.terms_used + b.terms_used;
    return r;
}

EvalResult sin_q(const Complex& z, const PrecisionContext& ctx) { return trig_series(TrigSeries::Sin, false, z, ctx); }
EvalResult cos_q(const Complex& z, const PrecisionContext& ctx) { return trig_series(TrigSeries::Cos, false, z, ctx); }
EvalResult sinh_q(const Complex& z, const PrecisionContext& ctx) { return trig_series(TrigSeries::Sin, true, z, ctx); }
EvalResult cosh_q(const Complex& z, const PrecisionContext& ctx) { return trig_series(TrigSeries::Cos, true, z, ctx); }
EvalResult sin_q_prime(const Complex& z, const PrecisionContext& ctx) {
    return trig_series(TrigSeries::SinPrime, false, z, ctx);
}
EvalResult cos_q_prime(const Complex& z, const PrecisionContext& ctx) {
    return trig_series(TrigSeries::CosPrime, false, z, ctx);
}

EvalResult tan_q(const Complex& z, const PrecisionContext& ctx) {
    EvalResult s = sin_q(z, ctx);
    EvalResult c = cos_q(z, ctx);
    WorkingScope ws(ctx);
    // a cosine that cancelled down to rounding noise is a zero of Cos_q
    if (c.value.is_zero() || c.cancellation_digits >= ctx.working_digits() - 3)
        throw Error(ErrorKind::Pole, "Tan_q evaluated at a zero of Cos_q");
    EvalResult r;
    r.value = s.value / c.value;
    r.terms_used = s.terms_used + c.terms_used;
    r.cancellation_digits = std::max(s.cancellation_digits, c.cancellation_digits);
    return r;
}

TrigPhase trig_phase(const Real& x_in, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    const bool neg = x_in.sign() < 0;
    Real x = abs(x_in);
    const Real& q = ctx.q();
    const Real& omq = ctx.one_minus_q();
    Real one(1);
    Real half("0.5");
    TrigPhase ph{Real(0), Real(0), Real(0), Real(0)};

    Real y = omq * x;  // (1-q) x q^j
    Real qj(1);        // q^j
    while (y > half) {
        Real y2 = y * y;
        Real d = one + y2;
        ph.theta += atan(y);
        ph.dtheta += omq * qj / d;
        ph.log_modulus += log1p(y2) / Real(2);
        ph.dlog_modulus += omq * qj * y / d;
        y *= q;
        qj *= q;
    }
    if (!y.is_zero()) {
        // tails in closed form: with b = y_J, Q = q^J,
        //   sum_j atan(b q^j)             = sum_m (-1)^m b^{2m+1} / ((2m+1)(1-q^{2m+1}))
        //   sum_j q^j/(1+b^2 q^{2j})      = sum_m (-1)^m b^{2m} / (1-q^{2m+1})
        //   sum_j log(1+b^2 q^{2j})/2     = sum_m (-1)^{m+1} b^{2m} / (2m (1-q^{2m}))
        //   sum_j b q^{2j}/(1+b^2 q^{2j}) = b sum_m (-1)^m b^{2m} / (1-q^{2m+2})
        Real b2 = y * y;
        Real eps = ldexp(one, -static_cast<long>(working_precision()) - 4);
        Real bp(1);      // b^{2m}
        Real q1 = q;     // q^{2m+1}
        Real q2 = q * q; // q^{2m+2}
        Real th(0), dth(0), lm(0), dlm(0);
        for (long m = 0; m < 100000; ++m) {
            Real sgn(m % 2 == 0 ? 1 : -1);
            Real t_dth = sgn * bp / (one - q1);
            th += t_dth * y / Real(2 * m + 1);
            dth += t_dth;
            dlm += sgn * bp / (one - q2);
            if (m >= 1) lm -= sgn * bp / (Real(2 * m) * (one - q1 / q));
            if (abs(t_dth) < eps * abs(dth) && m > 0) break;
            bp *= b2;
            q1 *= q * q;
            q2 *= q * q;
        }
        ph.theta += th;
        ph.dtheta += omq * qj * dth;
        ph.log_modulus += lm;
        ph.dlog_modulus += omq * qj * y * dlm;
    }
    if (neg) {
        ph.theta = -ph.theta;
        ph.dlog_modulus = -ph.dlog_modulus;
    }
    return ph;
}

TrigValues trig_values(const Real& x, const PrecisionContext& ctx) {
    TrigPhase ph = trig_phase(x, ctx);
    WorkingScope ws(ctx);
    Real m = exp(ph.log_modulus);
    Real s = sin(ph.theta), c = cos(ph.theta);
    // d/dx |P| e^{i theta} = |P| (lambda' + i theta') e^{i theta}
    TrigValues v;
    v.sin = m * s;
    v.cos = m * c;
    v.sin_prime = m * (ph.dlog_modulus * s + ph.dtheta * c);
    v.cos_prime = m * (ph.dlog_modulus * c - ph.dtheta * s);
    return v;
}

Complex e_q_imag(const Real& y, const PrecisionContext& ctx) {
    TrigPhase ph = trig_phase(y, ctx);
    WorkingScope ws(ctx);
    return polar(exp(-ph.log_modulus), ph.theta);
}

namespace {

void require_coverage(const Real& tail, const PrecisionContext& ctx, const char* what) {
    if (!(tail < ctx.tol())) throw Error(ErrorKind::Coverage, std::string("zero table too short for ") + what);
}

// sum_{k>K} 1/x_k^2 <= (1/x_K^2) r/(1-r), r = (x_{K-1}/x_K)^2
Real inverse_square_tail(const ZeroTable& zeros) {
    size_t n = zeros.size();
    if (n < 2) return Real(1);
    const Real& a = zeros.entries[n - 2].value;
    const Real& b = zeros.entries[n - 1].value;
    Real r = (a / b) * (a / b);
    return r / ((Real(1) - r) * b * b);
}

}  // namespace

EvalResult sin_q_product(const Complex& z, const ZeroTable& zeros, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    Complex z2 = z * z;
    require_coverage(abs(z2) * inverse_square_tail(zeros), ctx, "Sin_q product");
    Complex p = z;
    for (const auto& e : zeros.entries) p = p * (Complex(1) - z2 / (e.value * e.value));
    return {p, static_cast<long>(zeros.size()), 0};
}

EvalResult cos_q_product(const Complex& z, const ZeroTable& zeros, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    Complex z2 = z * z;
    require_coverage(abs(z2) * inverse_square_tail(zeros), ctx, "Cos_q product");
    Complex p(1);
    for (const auto& e : zeros.entries) p = p * (Complex(1) - z2 / (e.value * e.value));
    return {p, static_cast<long>(zeros.size()), 0};
}

namespace {
Real product_except(long n, const ZeroTable& zeros, const PrecisionContext& ctx) {
    if (n < 1 || static_cast<size_t>(n) > zeros.size()) throw Error(ErrorKind::Coverage, "zero index outside table");
    const Real& x = zeros.zero(n);
    Real x2 = x * x;
    require_coverage(x2 * inverse_square_tail(zeros), ctx, "derivative product");
    Real p(1);
    for (const auto& e : zeros.entries)
        if (e.k != n) p *= Real(1) - x2 / (e.value * e.value);
    return p;
}
}  // namespace

Real sin_q_prime_at_zero_product(long n, const ZeroTable& zeros, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    return Real(-2) * product_except(n, zeros, ctx);
}

Real cos_q_prime_at_zero_product(long n, const ZeroTable& zeros, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    return Real(-2) / zeros.zero(n) * product_except(n, zeros, ctx);
}

namespace {

EvalResult bessel_series(const Real& nu, const Complex& x, const BigRational& base_q, bool derivative,
                         const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    if (!(nu > Real(-1))) throw Error(ErrorKind::Domain, "jackson_bessel2 needs nu > -1");
    if (x.is_zero()) {
        if (nu.sign() < 0) throw Error(ErrorKind::Domain, "jackson_bessel2 at x = 0 needs nu >= 0");
        EvalResult r;
        // J ~ c (x/2)^nu: value 0 unless nu = 0; derivative finite only for nu = 0 or nu >= 1
        Real base(base_q);
        if (!derivative) r.value = Complex(nu.is_zero() ? 1 : 0);
        else if (nu == Real(1)) r.value = Complex(q_pochhammer_inf(base * base, base, ctx) /
                                                  q_pochhammer_inf(base, base, ctx) / Real(2));
        else r.value = Complex(0);
        return r;
    }
    const double p = base_q.get_d();
    const double lp = std::log10(p);
    const double v = nu.to_double();
    const double lx = (abs(x) / Real(2)).log10_abs();
    // log10 |(p^{nu+1};p)_n| and |(p;p)_n| accumulate in the estimate
    auto estimate = [&](long n) {
        double s = static_cast<double>(n) * (static_cast<double>(n) + v) * lp + (2.0 * n + v) * lx;
        for (long j = 1; j <= n; ++j) {
            s -= std::log10(1.0 - std::pow(p, static_cast<double>(j)));
            s -= std::log10(std::fabs(1.0 - std::pow(p, v + static_cast<double>(j))));
        }
        if (derivative) s += std::log10(std::fabs(2.0 * n + v) + 1e-300) - lx - std::log10(2.0);
        return s;
    };
    auto run = [&](long digits) {
        PassResult pr;
        Real pb(base_q);
        Real one(1);
        Real pnu1 = pow(pb, nu + one);  // p^{nu+1}
        Complex half_x = x / Real(2);
        Complex w = half_x * half_x;
        Complex t = pow(half_x, Complex(nu)) *
                    (q_pochhammer_inf(pnu1, pb, ctx) / q_pochhammer_inf(pb, pb, ctx));
        Real pn(1);          // p^n
        Real pnu_n = pnu1;   // p^{nu+1+n}
        Real p2n1nu = pow(pb, nu + one);  // p^{2n+1+nu}
        Real pp = pb * pb;
        Real thresh = pow10(-digits);
        Complex sum(0);
        Real maxabs(0);
        long kpeak = 0;
        {
            double best = -1e300;
            for (long j = 0; j < 100000; ++j) {
                double e = estimate(j);
                if (e > best) {
                    best = e;
                    kpeak = j;
                }
                if (j > kpeak + 4 && e < best - 40) break;
            }
        }
        for (long n = 0;; ++n) {
            Complex term = derivative ? t * (Real(2 * n) + nu) / x : t;
            sum += term;
            Real at = abs(term);
            if (at > maxabs) maxabs = at;
            ++pr.terms;
            if (n >= kpeak && at <= thresh * maxabs && n > 0) break;
            if (pr.terms > 200000) break;
            pn *= pb;  // p^{n+1}
            Real den = (one - pn) * (one - pnu_n);
            t = t * w * (-p2n1nu / den);
            pnu_n *= pb;
            p2n1nu *= pp;
        }
        pr.sum = sum;
        pr.max_log10 = maxabs.log10_abs();
        return pr;
    };
    return sum_with_raised_precision(ctx, estimate, run, false);
}

}  // namespace

EvalResult jackson_bessel2(const Real& nu, const Complex& x, const BigRational& base, const PrecisionContext& ctx) {
    return bessel_series(nu, x, base, false, ctx);
}

EvalResult jackson_bessel2_prime(const Real& nu, const Complex& x, const BigRational& base,
                                 const PrecisionContext& ctx) {
    return bessel_series(nu, x, base, true, ctx);
}

EvalResult jackson_bessel2(const Real& nu, const Complex& x, const PrecisionContext& ctx) {
    return bessel_series(nu, x, ctx.q_exact(), false, ctx);
}

}  // namespace qzeta
