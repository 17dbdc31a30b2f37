#include "qzeta/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

namespace qzeta {

namespace {

RF pow2_rf(long e) {
    BigRational v(1);
    if (e >= 0) v = BigRational(BigInt(1) << static_cast<mp_bitcnt_t>(e));
    else v = BigRational(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(-e));
    return RF(v);
}

RF sign_rf(long e) { return RF(e % 2 == 0 ? 1L : -1L); }

std::string nparam(long n) { return "n=" + std::to_string(n); }

IdentityReport disputed(IdentityReport r, std::string candidate, std::string note = "") {
    r.disputed = true;
    r.candidate = std::move(candidate);
    r.note = std::move(note);
    return r;
}

Complex value_of(const RF& rf, const PrecisionContext& ctx) { return Complex(eval_rf(rf, ctx)); }

// Largest even order needed by the number tables for n <= n_max.
struct Tables {
    std::vector<RF> beta;
    EulerFamily euler;
    std::vector<XPoly> b;
    explicit Tables(long N) : beta(q_bernoulli_numbers(N)), euler(q_euler_polys_and_numbers(N)),
                              b(q_bernoulli_polys(N, BernoulliKind::Little)) {}
};

// Exact zeta_q(2n)
RF zeta_even_exact(const Tables& t, long n) {
    return sign_rf(n - 1) * pow2_rf(2 * n - 1) * t.beta[static_cast<size_t>(2 * n)] / RF::factorial(2 * n);
}

// Exact zeta*_q(2n) with power-of-two exponent 2n + shift
RF zeta_star_even_exact(const Tables& t, long n, long shift) {
    return sign_rf(n) * pow2_rf(2 * n + shift) * t.euler.tilde[static_cast<size_t>(2 * n - 1)] /
           RF::factorial(2 * n - 1);
}

// Exact eta_q(2n) = 2^{2n-1} (-1)^n b_2n(1/2)/[2n]!
RF eta_even_exact(const Tables& t, long n) {
    RF b = t.b[static_cast<size_t>(2 * n)].eval(BigRational(1, 2));
    return sign_rf(n) * pow2_rf(2 * n - 1) * b / RF::factorial(2 * n);
}

// Exact eta*_q(2n+1) with power-of-two exponent 2n + shift
RF eta_star_odd_exact(const Tables& t, long n, long shift) {
    RF e = t.euler.e[static_cast<size_t>(2 * n)].eval(BigRational(1, 2));
    return sign_rf(n) * pow2_rf(2 * n + shift) * e / RF::factorial(2 * n);
}

}  // namespace

Real default_identity_tol(long digits) {
    PrecisionScope ps(bits_for_digits(digits + kGuardDigits));
    return pow10(-(digits / 2));
}

IdentityReport make_report(std::string id, const BigRational& q, std::string param, const Complex& lhs,
                           const Complex& rhs, const Real& tol) {
    IdentityReport r;
    r.id = std::move(id);
    r.q = q;
    r.param = std::move(param);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = abs(lhs - rhs);
    Real scale = abs(rhs);
    r.rel_err = scale.is_zero() ? r.abs_err : r.abs_err / scale;
    r.pass = r.abs_err < tol * max(Real(1), scale);
    return r;
}

std::vector<IdentityReport> check_even_values(const SpectralContext& sc, long n_max, const Real& tol) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    const BigRational& q = ctx.q_exact();
    Tables t(2 * n_max);
    std::vector<IdentityReport> out;
    for (long n = 1; n <= n_max; ++n) {
        Complex z = zeta_q(Complex(2 * n), sc).value;
        out.push_back(make_report("zeta_even_bernoulli", q, nparam(n), z, value_of(zeta_even_exact(t, n), ctx), tol));
        Complex zs = zeta_q_star(Complex(2 * n), sc).value;
        out.push_back(disputed(
            make_report("zeta_star_even_euler", q, nparam(n), zs, value_of(zeta_star_even_exact(t, n, -2), ctx), tol),
            "2^(2n-2)"));
        out.push_back(disputed(
            make_report("zeta_star_even_euler", q, nparam(n), zs, value_of(zeta_star_even_exact(t, n, -1), ctx), tol),
            "2^(2n-1)"));
    }
    return out;
}

std::vector<IdentityReport> check_eta_values(const SpectralContext& sc, long n_max, const Real& tol) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    const BigRational& q = ctx.q_exact();
    Tables t(2 * n_max + 1);
    std::vector<IdentityReport> out;
    for (long n = 0; n <= n_max; ++n) {
        Complex e = eta_q(Complex(2 * n), sc).value;
        out.push_back(make_report("eta_even_bernoulli_half", q, nparam(n), e, value_of(eta_even_exact(t, n), ctx), tol));
        if (n >= 2) {
            IdentityReport pos = make_report("eta_even_positive", q, nparam(n), e, Complex(0), tol);
            pos.pass = e.real() > Real(0);
            out.push_back(pos);
        }
    }
    {
        // eta_q(2) = q^3/(2[3]!)
        RF closed = RF::q_power(3) / (RF(2) * RF::factorial(3));
        out.push_back(make_report("eta_2_closed_form", q, "", eta_q(Complex(2), sc).value, value_of(closed, ctx), tol));
    }
    for (long n = 1; n <= std::min(n_max, 2L); ++n)
        out.push_back(make_report("eta_negative_even_zero", q, nparam(n), eta_q(Complex(-2 * n), sc).value, Complex(0),
                                  tol));
    {
        Complex sum = -eta_q(Complex(0), sc).value;  // sum_k 1/Sin'(xi_k)
        out.push_back(make_report("inverse_derivative_sum", q, "", sum, Complex(Real(BigRational(-1, 2))), tol));
    }
    for (long n = 1; n <= n_max; ++n) {
        RF b = t.b[static_cast<size_t>(2 * n + 1)].eval(BigRational(1, 2));
        IdentityReport r = make_report("bernoulli_odd_half_zero", q, nparam(n), value_of(b, ctx), Complex(0), tol);
        r.pass = b.is_zero();
        r.note = "exact";
        out.push_back(r);
    }
    for (long n = 0; n < n_max; ++n) {
        Complex e = eta_q_star(Complex(2 * n + 1), sc).value;
        out.push_back(disputed(
            make_report("eta_star_odd_euler_half", q, nparam(n), e, value_of(eta_star_odd_exact(t, n, 1), ctx), tol),
            "2^(2n+1)"));
        out.push_back(disputed(
            make_report("eta_star_odd_euler_half", q, nparam(n), e, value_of(eta_star_odd_exact(t, n, -1), ctx), tol),
            "2^(2n-1)"));
    }
    return out;
}

std::vector<IdentityReport> check_recurrences(const SpectralContext& sc, long n_max, const Real& tol) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    const BigRational& q = ctx.q_exact();
    std::vector<IdentityReport> out;
    auto inv_fact = [&](long m) { return eval_rf(RF::factorial(m).inverse(), ctx); };
    for (long n = 1; n <= n_max; ++n) {
        // zeta_q(2n) = sum_{j<=n} (-1)^{j+1} q^{j(2j-1)}/[2j]! eta_q(2n-2j)
        Complex z = zeta_q(Complex(2 * n), sc).value;
        Complex rhs(0);
        for (long j = 0; j <= n; ++j) {
            Real c = (j % 2 ? Real(1) : Real(-1)) * ctx.q_pow(j * (2 * j - 1)) * inv_fact(2 * j);
            rhs += c * eta_q(Complex(2 * n - 2 * j), sc).value;
        }
        out.push_back(make_report("zeta_eta_recurrence", q, nparam(n), z, rhs, tol));

        // zeta*_q(2n) = (1/2?) sum_{j<n} (-1)^j q^{j(2j+1)}/[2j+1]! eta*_q(2n-2j-1)
        Complex zs = zeta_q_star(Complex(2 * n), sc).value;
        Complex sum(0);
        for (long j = 0; j < n; ++j) {
            Real c = (j % 2 ? Real(-1) : Real(1)) * ctx.q_pow(j * (2 * j + 1)) * inv_fact(2 * j + 1);
            sum += c * eta_q_star(Complex(2 * n - 2 * j - 1), sc).value;
        }
        out.push_back(disputed(make_report("zeta_star_eta_star_recurrence", q, nparam(n), zs, sum / Real(2), tol),
                               "with factor 1/2"));
        out.push_back(
            disputed(make_report("zeta_star_eta_star_recurrence", q, nparam(n), zs, sum, tol), "without factor 1/2"));

        // eta_q(2n) = (-1)^{n+1}/(2[2n-1]!) + sum_{k<=n} (-1)^{k+1}/[2k]! zeta_q(2n-2k)
        Complex e = eta_q(Complex(2 * n), sc).value;
        Complex r1(Real(n % 2 ? 1 : -1) * inv_fact(2 * n - 1) / Real(2));
        for (long k = 0; k <= n; ++k) {
            Real c = (k % 2 ? Real(1) : Real(-1)) * inv_fact(2 * k);
            r1 += c * continued_zeta_q(Complex(2 * n - 2 * k), sc);
        }
        out.push_back(make_report("eta_zeta_recurrence", q, nparam(n), e, r1, tol));

        // eta*_q(2n+1) = +-1/(2[2n]!) + sum_{k<n} (-1)^k/[2k+1]! zeta*_q(2n-2k)
        Complex es = eta_q_star(Complex(2 * n + 1), sc).value;
        Complex body(0);
        for (long k = 0; k < n; ++k) {
            Real c = (k % 2 ? Real(-1) : Real(1)) * inv_fact(2 * k + 1);
            body += c * zeta_q_star(Complex(2 * n - 2 * k), sc).value;
        }
        Real constant = inv_fact(2 * n) / Real(2);
        Real printed_sign = (n - 1) % 2 ? Real(-1) : Real(1);
        out.push_back(disputed(make_report("eta_star_zeta_star_recurrence", q, nparam(n), es,
                                           body + Complex(printed_sign * constant), tol),
                               "(-1)^(n-1)"));
        out.push_back(disputed(make_report("eta_star_zeta_star_recurrence", q, nparam(n), es,
                                           body - Complex(printed_sign * constant), tol),
                               "(-1)^n"));
    }
    return out;
}

std::vector<IdentityReport> check_contour_values(const SpectralContext& sc, const Real& tol) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    const BigRational& q = ctx.q_exact();
    std::vector<IdentityReport> out;
    auto little_b = q_bernoulli_polys(3, BernoulliKind::Little);
    auto euler = q_euler_polys_and_numbers(2);
    for (const BigRational& a : {BigRational(1, 4), BigRational(3, 4)}) {
        std::string as = "a=" + to_string(a);
        for (long n = -2; n <= 1; ++n) {
            // H_q(n,a) = -b_{1-n}(a)/[1-n]!
            RF exact = -(little_b[static_cast<size_t>(1 - n)].eval(a) / RF::factorial(1 - n));
            Complex ex = value_of(exact, ctx);
            Complex hs = H_q_series(Complex(n), a, sc).value;
            Complex hc = H_q_contour_integer(n, a, sc);
            std::string p = "n=" + std::to_string(n) + "," + as;
            out.push_back(make_report("H_integer_series_exact", q, p, hs, ex, tol));
            out.push_back(make_report("H_integer_contour_exact", q, p, hc, ex, tol));
            out.push_back(make_report("H_integer_series_contour", q, p, hs, hc, tol));
        }
        for (const char* s : {"5/2", "7/2"}) {
            Complex sv(Real(parse_rational(s)));
            std::string p = std::string("s=") + s + "," + as;
            out.push_back(make_report("H_series_integral", q, p, H_q_series(sv, a, sc).value, H_q_integral(sv, a, ctx),
                                      tol));
        }
    }
    {
        BigRational a(3, 4);
        for (long n = -1; n <= 1; ++n) {
            // I_q(n,a) = -e_{-n}(a)/[-n]! for n <= 0, 0 for n >= 1
            RF exact = n <= 0 ? -(euler.e[static_cast<size_t>(-n)].eval(a) / RF::factorial(-n)) : RF(0);
            Complex ex = value_of(exact, ctx);
            std::string p = "n=" + std::to_string(n) + ",a=3/4";
            out.push_back(make_report("I_integer_series_exact", q, p, I_q_series(Complex(n), a, sc).value, ex, tol));
            out.push_back(make_report("I_integer_contour_exact", q, p, I_q_contour_integer(n, a, sc), ex, tol));
        }
        Complex s(Real(BigRational(3, 2)));
        out.push_back(make_report("I_series_integral", q, "s=3/2,a=3/4", I_q_series(s, a, sc).value,
                                  I_q_integral(s, a, ctx), tol));

        // H_q(1-s,a) = (2i)^{-s} F_q(s,a) + (-2i)^{-s} F_q(s,-a) - R_q(s,a) at s = 3
        Complex s3(3);
        Complex two_i(Real(0), Real(2));
        Complex rhs = pow(two_i, -s3) * F_q(s3, a, sc).value + pow(-two_i, -s3) * F_q(s3, -a, sc).value -
                      R_q(s3, a, ctx).value;
        out.push_back(make_report("H_dirichlet_remainder_relation", q, "s=3,a=3/4", H_q_series(Complex(-2), a, sc).value,
                                  rhs, tol));

        // F_q(s,qa) = F_q(s,a) - 2ia(1-q) F_q(s-1,a)
        Complex f_qa = F_q(s3, a * q, sc).value;
        Complex shift = Complex(Real(0), Real(2) * Real(a) * ctx.one_minus_q()) * F_q(Complex(2), a, sc).value;
        out.push_back(
            make_report("dirichlet_scaling_m1", q, "s=3,a=3/4", f_qa, F_q(s3, a, sc).value - shift, tol));
    }
    {
        Complex h = H_q_contour_integer(1, BigRational(0), sc);
        out.push_back(disputed(make_report("H_1_at_a0", q, "", h, Complex(-1), tol), "-1"));
        out.push_back(disputed(make_report("H_1_at_a0", q, "", h, Complex(1), tol), "+1"));
        Complex i = I_q_contour_integer(0, BigRational(0), sc);
        out.push_back(disputed(make_report("I_0_at_a0", q, "", i, Complex(-1), tol), "-1"));
        out.push_back(disputed(make_report("I_0_at_a0", q, "", i, Complex(2), tol), "2"));
        out.push_back(make_report("continued_zeta_0", q, "", continued_zeta_q(Complex(0), sc),
                                  Complex(Real(BigRational(-1, 2))), tol));
        out.push_back(make_report("continued_zeta_2", q, "", continued_zeta_q(Complex(2), sc),
                                  zeta_q(Complex(2), sc).value, tol));
        // zeta_q(1-s,1/2) = -2^{1-s} cos(pi s/2) Gamma_q(s) eta_q(s) at s = 2
        Complex lhs = hurwitz_zeta_q(Complex(-1), BigRational(1, 2), sc);
        Complex rhs = eta_q(Complex(2), sc).value / Real(2);
        out.push_back(make_report("hurwitz_eta_relation", q, "s=2", lhs, rhs, tol));
    }
    return out;
}

std::vector<IdentityReport> check_bessel_layer(const SpectralContext& sc, const Real& tol) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    const BigRational& q = ctx.q_exact();
    std::vector<IdentityReport> out;
    Tables t(4);
    const Real half("0.5");
    RF one_minus_q = RF(1) - RF::q();
    const long taylor_terms = 30;
    std::vector<Real> sig_half = rayleigh_sigma_taylor(taylor_terms, half, ctx);
    std::vector<Real> sig_mhalf = rayleigh_sigma_taylor(taylor_terms, -half, ctx);
    for (long n = 1; n <= 2; ++n) {
        std::string p = "nu=1/2," + nparam(n);
        Complex zs = rayleigh_sigma(n, half, sc).value;
        out.push_back(make_report("rayleigh_zero_sum_taylor", q, p, zs, Complex(sig_half[static_cast<size_t>(n - 1)]),
                                  tol));
        // (-1)^{n-1} q^{-1} (1-q)^{1-2n} beta_2n/[2n]!, printed with an extra factor 2
        RF base = sign_rf(n - 1) * RF::q().inverse() * t.beta[static_cast<size_t>(2 * n)] / RF::factorial(2 * n);
        for (long i = 0; i < 2 * n - 1; ++i) base /= one_minus_q;
        out.push_back(disputed(make_report("rayleigh_half_closed_form", q, p, zs, value_of(RF(2) * base, ctx), tol),
                               "2 q^-1 (1-q)^(1-2n) beta"));
        out.push_back(disputed(make_report("rayleigh_half_closed_form", q, p, zs, value_of(base, ctx), tol),
                               "q^-1 (1-q)^(1-2n) beta"));

        p = "nu=-1/2," + nparam(n);
        Complex zm = rayleigh_sigma(n, -half, sc).value;
        out.push_back(make_report("rayleigh_zero_sum_taylor", q, p, zm, Complex(sig_mhalf[static_cast<size_t>(n - 1)]),
                                  tol));
        // (-1)^n (1-q)^{1-2n} G_2n/[2n]!, halved in the corrected form
        RF g = sign_rf(n) * t.euler.genocchi[static_cast<size_t>(2 * n)] / RF::factorial(2 * n);
        for (long i = 0; i < 2 * n - 1; ++i) g /= one_minus_q;
        out.push_back(disputed(make_report("rayleigh_minus_half_closed_form", q, p, zm, value_of(g, ctx), tol),
                               "(1-q)^(1-2n) G"));
        out.push_back(disputed(make_report("rayleigh_minus_half_closed_form", q, p, zm, value_of(g / RF(2), ctx), tol),
                               "(1-q)^(1-2n) G / 2"));
    }
    // Bessel zeros against the trig zeros: j_{k,1/2} = 2(1-q) xi_k, j_{k,-1/2} = 2(1-q) eta_k
    for (long k = 1; k <= 3; ++k) {
        for (int side = 0; side < 2; ++side) {
            Real nu = side == 0 ? half : -half;
            Real x = side == 0 ? sc.sin_zero(k).x : sc.cos_zero(k).x;
            Complex j(sc.bessel_table(nu, k).zero(k));
            std::string p = std::string(side == 0 ? "nu=1/2" : "nu=-1/2") + ",k=" + std::to_string(k);
            out.push_back(disputed(
                make_report("bessel_trig_zero_scaling", q, p, j, Complex(Real(2) * ctx.one_minus_q() * x), tol),
                "j = 2(1-q) x"));
            out.push_back(disputed(
                make_report("bessel_trig_zero_scaling", q, p, j, Complex(Real(2) * x / ctx.one_minus_q()), tol),
                "x = j(1-q)/2"));
        }
    }
    // Cosh/Sinh and Tan expansions at x = 1/10
    Real x(BigRational(1, 10));
    Real y = x / (Real(2) * ctx.one_minus_q());
    Complex coth = cosh_q(Complex(y), ctx).value / sinh_q(Complex(y), ctx).value;
    Complex lhs = coth * (x / ctx.one_minus_q());
    Real series(0);
    for (long n = 1; n <= taylor_terms; ++n)
        series += (n % 2 ? Real(-1) : Real(1)) * pow(x, 2 * n) * sig_half[static_cast<size_t>(n - 1)];
    Real c = ctx.q() / ctx.one_minus_q();
    out.push_back(disputed(make_report("coth_rayleigh_expansion", q, "x=1/10", lhs, Complex(Real(2) - c * series), tol),
                           "q/(1-q)"));
    out.push_back(disputed(
        make_report("coth_rayleigh_expansion", q, "x=1/10", lhs, Complex(Real(2) - Real(2) * c * series), tol),
        "2q/(1-q)"));

    Complex tan = tan_q(Complex(y), ctx).value;
    Real tan_series(0);
    for (long n = 1; n <= taylor_terms; ++n) tan_series += pow(x, 2 * n - 1) * sig_mhalf[static_cast<size_t>(n - 1)];
    out.push_back(disputed(make_report("tan_rayleigh_expansion", q, "x=1/10", tan, Complex(tan_series), tol), "1"));
    out.push_back(
        disputed(make_report("tan_rayleigh_expansion", q, "x=1/10", tan, Complex(Real(2) * tan_series), tol), "2"));
    {
        // the corrected expansion cut after three terms, judged against its own tail
        Real partial(0);
        for (long n = 1; n <= 3; ++n) partial += pow(x, 2 * n - 1) * sig_mhalf[static_cast<size_t>(n - 1)];
        Real tail = Real(4) * abs(pow(x, 7) * sig_mhalf[3]);
        IdentityReport r = make_report("tan_rayleigh_truncated_3", q, "x=1/10", tan, Complex(Real(2) * partial), tail);
        r.note = "tolerance = twice the first omitted term";
        out.push_back(r);
    }
    return out;
}

std::vector<IdentityReport> check_classical_limits(const std::vector<BigRational>& q_ladder, long digits) {
    std::vector<IdentityReport> out;
    if (q_ladder.empty()) return out;
    PrecisionContext base(q_ladder.front(), digits);
    WorkingScope ws(base);
    Tables t(4);
    Real p2 = pi() * pi();
    // pi^{2n} times the q-value against the classical value, from the exact tables
    struct Target {
        std::string id;
        RF value;
        Real scale;
        Real classical;
    };
    Real p4 = p2 * p2;
    std::vector<Target> targets{
        {"limit_pi2_zeta_2", zeta_even_exact(t, 1), p2, p2 / Real(6)},
        {"limit_pi4_zeta_4", zeta_even_exact(t, 2), p4, p4 / Real(90)},
        {"limit_pi2_eta_2", eta_even_exact(t, 1), p2, p2 / Real(12)},
        {"limit_pi4_eta_4", eta_even_exact(t, 2), p4, Real(7) * p4 / Real(720)},
    };
    for (const auto& tg : targets) {
        Real prev_err;
        BigRational prev_q;
        for (size_t i = 0; i < q_ladder.size(); ++i) {
            Real v = eval_rf(tg.value, q_ladder[i], base) * tg.scale;
            Real err = abs(v - tg.classical);
            if (i > 0) {
                IdentityReport r;
                r.id = tg.id;
                r.q = q_ladder[i];
                r.param = "previous q=" + to_string(prev_q);
                r.lhs = Complex(err);
                r.rhs = Complex(prev_err);
                r.abs_err = err;
                r.rel_err = prev_err.is_zero() ? err : err / prev_err;
                r.pass = err < prev_err;
                r.note = "trend: error must strictly decrease up the ladder";
                out.push_back(r);
            }
            prev_err = err;
            prev_q = q_ladder[i];
        }
    }
    // zeta*_q(2) = 1/2 at every q equals (2^2 - 1) zeta(2)/pi^2
    for (const auto& qv : q_ladder) {
        Real v = eval_rf(zeta_star_even_exact(t, 1, -2), qv, base);
        out.push_back(make_report("limit_zeta_star_2", qv, "", Complex(v), Complex(Real(3) * p2 / Real(6) / p2),
                                  pow10(-(digits / 2))));
    }
    // eta*_q(1) at the top of the ladder: the identities force 1/2, the limit
    // heuristic suggests log 2/pi. Reported, not asserted.
    {
        const BigRational& qv = q_ladder.back();
        Real v = eval_rf(eta_star_odd_exact(t, 0, -1), qv, base);
        Real tol = pow10(-(digits / 2));
        out.push_back(disputed(make_report("limit_eta_star_1", qv, "", Complex(v), Complex(Real(BigRational(1, 2))), tol),
                               "1/2"));
        out.push_back(disputed(make_report("limit_eta_star_1", qv, "", Complex(v), Complex(log(Real(2)) / pi()), tol),
                               "log 2/pi"));
    }
    return out;
}

std::vector<Adjudication> adjudicate(const std::vector<IdentityReport>& reports) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<const IdentityReport*>> fam;
    for (const auto& r : reports) {
        if (!r.disputed) continue;
        if (!fam.count(r.id)) order.push_back(r.id);
        fam[r.id].push_back(&r);
    }
    std::vector<Adjudication> out;
    for (const auto& id : order) {
        Adjudication adj;
        adj.family = id;
        std::map<std::string, bool> all_pass;
        // grid point -> candidates passing there
        std::map<std::string, std::vector<std::string>> passing;
        for (const auto* r : fam[id]) {
            if (std::find(adj.candidates.begin(), adj.candidates.end(), r->candidate) == adj.candidates.end())
                adj.candidates.push_back(r->candidate);
            auto it = all_pass.emplace(r->candidate, true).first;
            it->second = it->second && r->pass;
            std::string point = to_string(r->q) + "|" + r->param;
            auto& v = passing[point];
            if (r->pass) v.push_back(r->candidate);
        }
        std::vector<std::string> winners;
        for (const auto& c : adj.candidates)
            if (all_pass[c]) winners.push_back(c);
        if (winners.size() == 1) adj.winner = winners.front();
        adj.consistent = winners.size() == 1;
        for (const auto& [point, v] : passing)
            if (v.size() != 1) adj.consistent = false;
        if (adj.winner.empty()) adj.note = "no candidate passes on every grid point";
        else if (!adj.consistent) adj.note = "winner passes everywhere but another candidate also passes somewhere";
        out.push_back(adj);
    }
    return out;
}

namespace {

bool wants(const VerifyConfig& c, const std::string& g) {
    return c.groups.empty() || std::find(c.groups.begin(), c.groups.end(), g) != c.groups.end();
}

std::vector<IdentityReport> run_one_q(const VerifyConfig& config, const BigRational& q, const Real& tol) {
    PrecisionContext ctx(q, config.digits);
    WorkingScope ws(ctx);
    Real t = tol;  // re-rounded on this thread
    SpectralContext sc(ctx, config.K);
    std::vector<IdentityReport> out;
    auto add = [&](std::vector<IdentityReport> v) { out.insert(out.end(), v.begin(), v.end()); };
    if (wants(config, "even")) add(check_even_values(sc, config.n_max, t));
    if (wants(config, "eta")) add(check_eta_values(sc, config.n_max, t));
    if (wants(config, "recurrences")) add(check_recurrences(sc, config.n_max, t));
    if (wants(config, "contour")) add(check_contour_values(sc, t));
    if (wants(config, "bessel")) add(check_bessel_layer(sc, t));
    return out;
}

}  // namespace

VerifySummary run_verification(const VerifyConfig& config) {
    for (const auto& g : config.groups) {
        static const std::set<std::string> known{"even", "eta", "recurrences", "contour", "bessel", "limits"};
        if (!known.count(g)) throw Error(ErrorKind::Config, "unknown verify group: " + g);
    }
    if (config.n_max < 1 || config.n_max > 4) throw Error(ErrorKind::Config, "verify n_max must be in 1..4");
    if (config.digits < 10) throw Error(ErrorKind::Config, "verify needs digits >= 10");
    VerifySummary summary;
    PrecisionScope ps(bits_for_digits(config.digits + kGuardDigits));
    summary.tol = config.tol ? *config.tol : default_identity_tol(config.digits);

    std::vector<std::vector<IdentityReport>> per_q(config.q_grid.size());
    if (config.threads > 1 && config.q_grid.size() > 1) {
        // one task per grid point, at most `threads` in flight; results keep grid order
        size_t next = 0;
        while (next < config.q_grid.size()) {
            std::vector<std::future<std::vector<IdentityReport>>> batch;
            std::vector<size_t> idx;
            for (long t = 0; t < config.threads && next < config.q_grid.size(); ++t, ++next) {
                idx.push_back(next);
                batch.push_back(std::async(std::launch::async, run_one_q, std::cref(config),
                                           std::cref(config.q_grid[next]), std::cref(summary.tol)));
            }
            for (size_t i = 0; i < batch.size(); ++i) per_q[idx[i]] = batch[i].get();
        }
    } else {
        for (size_t i = 0; i < config.q_grid.size(); ++i) per_q[i] = run_one_q(config, config.q_grid[i], summary.tol);
    }
    for (auto& v : per_q) summary.reports.insert(summary.reports.end(), v.begin(), v.end());
    if (wants(config, "limits")) {
        auto lim = check_classical_limits({BigRational(9, 10), BigRational(99, 100), BigRational(999, 1000)},
                                          config.digits);
        summary.reports.insert(summary.reports.end(), lim.begin(), lim.end());
    }
    summary.adjudications = adjudicate(summary.reports);
    for (const auto& r : summary.reports) {
        if (!r.disputed && !r.pass) {
            summary.undisputed_pass = false;
            ++summary.failures;
        }
    }
    return summary;
}

}  // namespace qzeta
