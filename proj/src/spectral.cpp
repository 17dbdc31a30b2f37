#include "qzeta/spectral.hpp"

#include <cmath>

namespace qzeta {

// ---------------------------------------------------------------- context

SpectralContext::SpectralContext(const PrecisionContext& ctx, long initial_K) : ctx_(ctx) {
    grow(ZeroKind::Sin, initial_K);
    grow(ZeroKind::Cos, initial_K);
}

void SpectralContext::grow(ZeroKind kind, long K) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (K > max_zeros) throw Error(ErrorKind::Coverage, "spectral sum needs more than " + std::to_string(max_zeros) + " zeros");
    ZeroTable& t = kind == ZeroKind::Sin ? sin_ : cos_;
    auto& data = kind == ZeroKind::Sin ? sin_data_ : cos_data_;
    if (static_cast<long>(t.size()) >= K) return;
    if (t.empty()) t = locate_zeros(kind, K, ctx_);
    else extend_zeros(t, K, ctx_);
    WorkingScope ws(ctx_);
    for (size_t i = data.size(); i < t.size(); ++i) {
        const Real& x = t.entries[i].value;
        TrigPhase ph = trig_phase(x, ctx_);
        TrigValues v = trig_values(x, ctx_);
        ZeroData d;
        d.x = x;
        d.dtheta = ph.dtheta;
        d.value = kind == ZeroKind::Sin ? v.cos : v.sin;
        d.derivative = kind == ZeroKind::Sin ? v.sin_prime : v.cos_prime;
        data.push_back(d);
    }
}

const ZeroData& SpectralContext::sin_zero(long k) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    grow(ZeroKind::Sin, k);
    return sin_data_.at(static_cast<size_t>(k - 1));
}

const ZeroData& SpectralContext::cos_zero(long k) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    grow(ZeroKind::Cos, k);
    return cos_data_.at(static_cast<size_t>(k - 1));
}

const ZeroTable& SpectralContext::sin_table(long K) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    grow(ZeroKind::Sin, K);
    return sin_;
}

const ZeroTable& SpectralContext::cos_table(long K) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    grow(ZeroKind::Cos, K);
    return cos_;
}

const ZeroTable& SpectralContext::bessel_table(const Real& nu, long K) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (K > max_zeros) throw Error(ErrorKind::Coverage, "Rayleigh sum needs too many zeros");
    std::string key = nu.str(30);
    auto it = bessel_.find(key);
    if (it == bessel_.end()) {
        it = bessel_.emplace(key, locate_zeros(ZeroKind::Bessel, K, ctx_, nu)).first;
    } else if (static_cast<long>(it->second.size()) < K) {
        extend_zeros(it->second, K, ctx_);
    }
    return it->second;
}

// ---------------------------------------------------------------- helpers

namespace {

// x^s for x > 0
Complex real_pow(const Real& x, const Complex& s) {
    Real l = log(x);
    return exp(Complex(s.real() * l, s.imag() * l));
}

Complex pow2(const Complex& s) { return real_pow(Real(2), s); }

// Adds terms until the geometric tail estimate |t_k| rho/(1-rho) falls below
// tol twice in a row. rho is the larger of the hinted rate and the observed
// ratio of consecutive term sizes.
template <class Term>
SeriesValue accumulate(Term term, const Real& rate_hint, const PrecisionContext& ctx, long first = 1,
                       long max_terms = 100000) {
    WorkingScope ws(ctx);
    SeriesValue out;
    out.value = Complex(0);
    Real prev(-1);
    int small = 0;
    for (long k = first; k < first + max_terms; ++k) {
        Complex t = term(k);
        out.value += t;
        Real at = abs(t);
        out.K_used = k - first + 1;
        if (prev.sign() >= 0 && k >= first + 2) {
            Real rho = rate_hint;
            if (prev.sign() > 0) rho = max(rho, at / prev);
            if (rho < Real(1)) {
                out.tail_bound = at * rho / (Real(1) - rho);
                small = out.tail_bound < ctx.tol() ? small + 1 : 0;
                if (small >= 2) return out;
            } else {
                small = 0;
            }
        }
        prev = at;
    }
    throw Error(ErrorKind::Coverage, "series did not reach its tolerance");
}

bool is_exact_nonpositive_power(BigRational v, const BigRational& q) {
    // v = q^{-j} for some integer j >= 0
    for (int guard = 0; guard < 100000; ++guard) {
        if (v == 1) return true;
        if (v < 1) return false;
        v *= q;
    }
    return false;
}

enum class Side { Sin, Cos };

SeriesValue remainder(const Complex& expo, const BigRational& a, const PrecisionContext& ctx, Side side) {
    if (a == 0) throw Error(ErrorKind::Domain, "remainder needs a != 0");
    WorkingScope ws(ctx);
    const Real& q = ctx.q();
    Real qq_inf = q_pochhammer_inf(q, q, ctx);
    Real prefactor = side == Side::Sin ? Real(1) / (Real(2) * qq_inf) : Real(1) / qq_inf;
    BigRational one_minus_q = 1 - ctx.q_exact();
    Real qk(1);       // q^k
    Real tri(1);      // q^{k(k+1)/2}
    Real qq_k(1);     // (q;q)_k
    BigRational c_exact = 1 / (2 * a);  // (1-q) x_k = q^{-k}/(2a)
    BigRational q_inv = 1 / ctx.q_exact();
    long k_peak = std::max(2L, static_cast<long>(std::ceil(std::fabs(expo.real().to_double()))) + 2);
    auto term = [&](long k) -> Complex {
        if (k > 0) {
            qk *= q;
            tri *= qk;
            qq_k *= Real(1) - qk;
            c_exact *= q_inv;
        }
        BigRational z_exact = c_exact * 2 / one_minus_q;  // z_k = q^{-k}/(a(1-q))
        bool num_zero = a > 0 && is_exact_nonpositive_power(c_exact, ctx.q_exact());
        bool den_zero = a < 0 && is_exact_nonpositive_power(-c_exact, ctx.q_exact());
        if (num_zero) return Complex(0);
        Real c(c_exact);
        long extra = 0;
        if (abs(c) < Real(1)) extra = static_cast<long>(-std::log2(std::fabs(c.to_double()))) + 8;
        Real ratio;
        {
            PrecisionScope ps(working_precision() + extra);
            Real N = q_pochhammer_inf(c, q, ctx);                             // E_q(-x_k)
            Real D = den_zero ? Real(0) : q_pochhammer_inf(-c, q, ctx);       // E_q(x_k)
            ratio = side == Side::Sin ? Real(2) * N / (D - N) : Real(2) * N / (D + N);
        }
        Complex zpow = a > 0 ? real_pow(Real(z_exact), expo) : pow(Complex(Real(z_exact)), expo);
        Real w = tri / qq_k * ratio;
        if (k % 2 == 1) w = -w;
        return zpow * (w * prefactor);
    };
    // past the peak the terms fall super-geometrically; the hint keeps early stops out
    SeriesValue sv;
    sv.value = Complex(0);
    Real prev(-1);
    int small = 0;
    for (long k = 0; k < 20000; ++k) {
        Complex t = term(k);
        sv.value += t;
        sv.K_used = k + 1;
        Real at = abs(t);
        if (k >= k_peak && prev.sign() > 0 && at < prev) {
            Real rho = at / prev;
            sv.tail_bound = at * rho / (Real(1) - rho);
            small = sv.tail_bound < ctx.tol() ? small + 1 : 0;
            if (small >= 2) return sv;
        } else if (k >= k_peak && at.is_zero()) {
            if (++small >= 3) {
                sv.tail_bound = Real(0);
                return sv;
            }
        }
        if (!at.is_zero()) prev = at;
    }
    throw Error(ErrorKind::Coverage, "remainder series did not converge");
}

// 2^{s} sum_k x_k^{s-1} sin(pi s/2 + theta(2 a x_k)) / (|P(2 a x_k)| theta'(x_k))
SeriesValue trig_weighted_sum(const Complex& s, const BigRational& a, const SpectralContext& sc, ZeroKind kind) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    Real two_a(BigRational(2 * a));
    Complex half_pi_s = s * (pi() / Real(2));
    Complex sm1 = s - Complex(1);
    auto term = [&](long k) -> Complex {
        const ZeroData& d = kind == ZeroKind::Sin ? sc.sin_zero(k) : sc.cos_zero(k);
        TrigPhase ph = trig_phase(two_a * d.x, ctx);
        Complex w = sin(half_pi_s + Complex(ph.theta)) / (exp(ph.log_modulus) * d.dtheta);
        return real_pow(d.x, sm1) * w;
    };
    SeriesValue sv = accumulate(term, Real(0), ctx);
    Complex p = pow2(s);
    sv.value = sv.value * p;
    sv.tail_bound = sv.tail_bound * abs(p);
    return sv;
}

// Gauss-Legendre nodes and weights on [-1,1] at the current precision.
struct GaussRule {
    std::vector<Real> x, w;
};

GaussRule gauss_legendre(int m) {
    GaussRule g;
    Real p = pi();
    for (int i = 1; i <= m; ++i) {
        Real x(std::cos(M_PI * (i - 0.25) / (m + 0.5)));
        Real dp;
        for (int it = 0; it < 200; ++it) {
            Real p0(1), p1 = x;
            for (int n = 2; n <= m; ++n) {
                Real p2 = (Real(2 * n - 1) * x * p1 - Real(n - 1) * p0) / Real(n);
                p0 = p1;
                p1 = p2;
            }
            dp = Real(m) * (x * p1 - p0) / (x * x - Real(1));
            Real dx = p1 / dp;
            x -= dx;
            if (dx.is_zero() || abs(dx) < ldexp(Real(1), -static_cast<long>(working_precision()) + 4)) break;
        }
        // recompute the derivative at the polished node
        Real p0(1), p1 = x;
        for (int n = 2; n <= m; ++n) {
            Real p2 = (Real(2 * n - 1) * x * p1 - Real(n - 1) * p0) / Real(n);
            p0 = p1;
            p1 = p2;
        }
        dp = Real(m) * (x * p1 - p0) / (x * x - Real(1));
        g.x.push_back(x);
        g.w.push_back(Real(2) / ((Real(1) - x * x) * dp * dp));
    }
    (void)p;
    return g;
}

// int_0^inf r^{s-1} g(r) dr on dyadic panels [2^j, 2^{j+1}]; g must be smooth
// on (0, inf) with r^{s-1} g(r) integrable at both ends.
template <class G>
Complex half_line_integral(const Complex& s, G g, const Real& r_far, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    int m = static_cast<int>(std::max(20L, ctx.working_digits() * 3 / 4));
    GaussRule rule = gauss_legendre(m);
    Complex sm1 = s - Complex(1);
    auto panel = [&](long j) {
        Real lo = ldexp(Real(1), j), hi = ldexp(Real(1), j + 1);
        Real half = (hi - lo) / Real(2), mid = (hi + lo) / Real(2);
        Complex acc(0);
        for (int i = 0; i < m; ++i) {
            Real r = mid + half * rule.x[static_cast<size_t>(i)];
            acc += real_pow(r, sm1) * (g(r) * rule.w[static_cast<size_t>(i)]);
        }
        return acc * half;
    };
    Complex total(0);
    Real goal = ctx.tol() / Real(100);
    int small = 0;
    for (long j = 0; j < 2000; ++j) {
        Complex c = panel(j);
        total += c;
        bool far = ldexp(Real(1), j) > r_far;
        small = (far && abs(c) < goal) ? small + 1 : 0;
        if (small >= 3) break;
        if (j == 1999) throw Error(ErrorKind::Quadrature, "integral did not decay at infinity");
    }
    small = 0;
    for (long j = -1; j > -20000; --j) {
        Complex c = panel(j);
        total += c;
        small = (j < -3 && abs(c) < goal) ? small + 1 : 0;
        if (small >= 2) return total;
    }
    throw Error(ErrorKind::Quadrature, "integral did not converge at the origin");
}

// Raise precision when u is small so that 1 -+ eps_q(-r) keeps its digits.
long cancellation_bits(const Real& u) {
    double d = u.to_double();
    if (d >= 0.5 || d <= 0) return 0;
    return static_cast<long>(-std::log2(d)) + 8;
}

template <class F>
Complex circle_trapezoid(const Real& radius, F f, const PrecisionContext& ctx) {
    // f(conj z) = conj f(z); sum over the closed upper half and double the interior
    WorkingScope ws(ctx);
    Real two_pi = Real(2) * pi();
    long N = 32;
    auto point = [&](long j, long n) { return polar(radius, two_pi * Real(j) / Real(n)); };
    Complex T = f(point(0, N)) + f(point(N / 2, N));
    for (long j = 1; j < N / 2; ++j) T += Real(2) * Complex(f(point(j, N)).real());
    Complex prev = T / Real(N);
    for (; N <= (1L << 16);) {
        long N2 = 2 * N;
        Complex add(0);
        for (long j = 1; j < N; j += 2) add += Complex(f(point(j, N2)).real());
        T += Real(2) * add;
        N = N2;
        Complex cur = T / Real(N);
        if (abs(cur - prev) < ctx.tol() / Real(10)) return cur;
        prev = cur;
    }
    throw Error(ErrorKind::Quadrature, "circle quadrature did not converge");
}

Real contour_radius(const Real& first_zero, const BigRational& a, const PrecisionContext& ctx) {
    Real c = Real(2) * first_zero;
    if (a != 0) {
        if (a < 0) throw Error(ErrorKind::Domain, "contour route needs a >= 0");
        Real pole = Real(1) / (Real(a) * ctx.one_minus_q());
        c = min(c, pole);
    }
    return Real("0.9") * c;
}

void require_positive(const BigRational& a) {
    if (!(a > 0)) throw Error(ErrorKind::Domain, "a must be positive");
}

}  // namespace

// ---------------------------------------------------------------- spectral sums

SeriesValue zeta_q(const Complex& s, const SpectralContext& sc) {
    if (!(s.real() > Real(1)))
        throw Error(ErrorKind::Domain, "zeta_q series needs Re s > 1; use continued_zeta_q");
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    Real rate = pow(ctx.q(), Real(2) * (s.real() - Real(1)));
    Complex ms = -s;
    return accumulate(
        [&](long k) {
            const ZeroData& d = sc.sin_zero(k);
            return real_pow(d.x, ms) * (d.value / d.derivative);
        },
        rate, ctx);
}

SeriesValue zeta_q_star(const Complex& s, const SpectralContext& sc) {
    if (!(s.real() > Real(1)))
        throw Error(ErrorKind::Domain, "zeta_q_star series needs Re s > 1; use continued_zeta_q_star");
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    Real rate = pow(ctx.q(), Real(2) * (s.real() - Real(1)));
    Complex ms = -s;
    return accumulate(
        [&](long k) {
            const ZeroData& d = sc.cos_zero(k);
            return real_pow(d.x, ms) * (-(d.value / d.derivative));
        },
        rate, ctx);
}

SeriesValue eta_q(const Complex& s, const SpectralContext& sc) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    Complex ms = -s;
    return accumulate(
        [&](long k) {
            const ZeroData& d = sc.sin_zero(k);
            return real_pow(d.x, ms) * (-(Real(1) / d.derivative));
        },
        Real(0), ctx);
}

SeriesValue eta_q_star(const Complex& s, const SpectralContext& sc) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    Complex ms = -s;
    return accumulate(
        [&](long k) {
            const ZeroData& d = sc.cos_zero(k);
            return real_pow(d.x, ms) * (-(Real(1) / d.derivative));
        },
        Real(0), ctx);
}

// ---------------------------------------------------------------- Rayleigh

SeriesValue rayleigh_sigma(long n, const Real& nu, const SpectralContext& sc) {
    if (n < 1) throw Error(ErrorKind::Domain, "Rayleigh index must be >= 1");
    if (!(nu > Real(-1))) throw Error(ErrorKind::Domain, "Rayleigh functions need nu > -1");
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    BigRational p = ctx.q_exact() * ctx.q_exact();
    Real nu1 = nu + Real(1);
    return accumulate(
        [&](long k) {
            Real j = sc.bessel_table(nu, k).zero(k);
            Complex num = jackson_bessel2(nu1, Complex(j), p, ctx).value;
            Complex den = jackson_bessel2_prime(nu, Complex(j), p, ctx).value;
            WorkingScope inner(ctx);
            return -(num / den) * pow(Complex(Real(1) / j), 2 * n);
        },
        Real(0), ctx);
}

std::vector<Real> rayleigh_sigma_taylor(long n_max, const Real& nu, const PrecisionContext& ctx) {
    if (n_max < 1) throw Error(ErrorKind::Domain, "n_max must be >= 1");
    if (!(nu > Real(-1))) throw Error(ErrorKind::Domain, "Rayleigh functions need nu > -1");
    WorkingScope ws(ctx);
    Real p(BigRational(ctx.q_exact() * ctx.q_exact()));
    Real p_nu = pow(p, nu);
    // J_nu = C_nu (x/2)^nu sum a_n w^n with w = x^2/4; likewise J_{nu+1} with b_n
    std::vector<Real> a, b;
    Real pp(1), pa(1), pb(1);  // (p;p)_n, (p^{nu+1};p)_n, (p^{nu+2};p)_n
    Real pn(1);                // p^n
    for (long n = 0; n < n_max; ++n) {
        if (n > 0) {
            pp *= Real(1) - pn * p;
            pa *= Real(1) - p_nu * p * pn;
            pb *= Real(1) - p_nu * p * p * pn;
            pn *= p;
        }
        Real sign = n % 2 ? Real(-1) : Real(1);
        Real base_a = pow(p, Real(n * n)) * pow(p_nu, n);
        a.push_back(sign * base_a / (pp * pa));
        b.push_back(sign * base_a * pow(p, n) / (pp * pb));
    }
    std::vector<Real> c;
    for (long n = 0; n < n_max; ++n) {
        Real acc = b[static_cast<size_t>(n)];
        for (long k = 0; k < n; ++k) acc -= c[static_cast<size_t>(k)] * a[static_cast<size_t>(n - k)];
        c.push_back(acc / a[0]);
    }
    // C_{nu+1}/C_nu = 1/(1 - p^{nu+1});  J_{nu+1}/J_nu = (C ratio) sum c_n x^{2n+1}/2^{2n+1}
    Real cr = Real(1) / (Real(1) - p_nu * p);
    std::vector<Real> sigma;
    for (long n = 1; n <= n_max; ++n) sigma.push_back(cr * c[static_cast<size_t>(n - 1)] / ldexp(Real(1), 2 * n));
    return sigma;
}

// ---------------------------------------------------------------- H_q and I_q

SeriesValue R_q(const Complex& s, const BigRational& a, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    return remainder(Complex(1) - s, a, ctx, Side::Sin);
}

SeriesValue R_q_cos_side(const Complex& s, const BigRational& a, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    return remainder(Complex(1) - s, a, ctx, Side::Cos);
}

SeriesValue H_q_series(const Complex& s, const BigRational& a, const SpectralContext& sc) {
    require_positive(a);
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    SeriesValue spec = trig_weighted_sum(s, a, sc, ZeroKind::Sin);
    SeriesValue rem = R_q(Complex(1) - s, a, ctx);
    spec.value -= rem.value;
    spec.tail_bound += rem.tail_bound;
    return spec;
}

SeriesValue I_q_series(const Complex& s, const BigRational& a, const SpectralContext& sc) {
    require_positive(a);
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    SeriesValue spec = trig_weighted_sum(s, a, sc, ZeroKind::Cos);
    SeriesValue rem = R_q_cos_side(Complex(1) - s, a, ctx);
    spec.value = -(Real(2) * spec.value) - rem.value;
    spec.tail_bound = Real(2) * spec.tail_bound + rem.tail_bound;
    return spec;
}

namespace {

Complex integral_route(const Complex& s, const BigRational& a, const PrecisionContext& ctx, Side side) {
    require_positive(a);
    if (!(s.real() > Real(1))) throw Error(ErrorKind::Domain, "integral route needs Re s > 1");
    WorkingScope ws(ctx);
    const Real& q = ctx.q();
    Real a_real(a);
    Real half_omq = ctx.one_minus_q() / Real(2);
    Real ea = a_real * ctx.one_minus_q();
    auto g = [&](const Real& r) {
        Real u = half_omq * r;
        PrecisionScope ps(working_precision() + cancellation_bits(u));
        Real N = q_pochhammer_inf(u, q, ctx);   // E_q(-r/2)
        Real D = q_pochhammer_inf(-u, q, ctx);  // 1/e_q(-r/2)
        Real e = Real(1) / q_pochhammer_inf(-ea * r, q, ctx);
        // eps_q(-r) = N/D
        Real v = side == Side::Sin ? e * D / (D - N) : e * D / (D + N);
        return v;
    };
    Real r_far = Real(4) / ea;
    Complex integral = half_line_integral(s, g, r_far, ctx);
    Complex pis = s * pi();
    if (side == Side::Sin) return sin(pis) / pi() * integral;
    Complex pis1 = (s - Complex(1)) * pi();
    return Real(2) * sin(pis1) / pi() * integral;
}

}  // namespace

Complex H_q_integral(const Complex& s, const BigRational& a, const PrecisionContext& ctx) {
    return integral_route(s, a, ctx, Side::Sin);
}

Complex I_q_integral(const Complex& s, const BigRational& a, const PrecisionContext& ctx) {
    return integral_route(s, a, ctx, Side::Cos);
}

Complex H_q_contour_integer(long n, const BigRational& a, const SpectralContext& sc) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    Real radius = contour_radius(sc.sin_zero(1).x, a, ctx);
    Complex ac{Real(a)};
    auto f = [&](const Complex& z) {
        Complex eps = epsilon_q(z, ctx).value;
        Complex e = a == 0 ? Complex(1) : e_q(ac * z, ctx).value;
        return pow(z, n) * e / (eps - Complex(1));
    };
    return -circle_trapezoid(radius, f, ctx);
}

Complex I_q_contour_integer(long n, const BigRational& a, const SpectralContext& sc) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    Real radius = contour_radius(sc.cos_zero(1).x, a, ctx);
    Complex ac{Real(a)};
    auto f = [&](const Complex& z) {
        Complex eps = epsilon_q(z, ctx).value;
        Complex e = a == 0 ? Complex(1) : e_q(ac * z, ctx).value;
        return pow(z, n) * (Real(2) * e) / (eps + Complex(1));
    };
    return -circle_trapezoid(radius, f, ctx);
}

// ---------------------------------------------------------------- F_q, Hurwitz, continuation

SeriesValue F_q(const Complex& s, const BigRational& a, const SpectralContext& sc) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    Real two_a(BigRational(2 * a));
    Complex ms = -s;
    Real rate = a == 0 ? pow(ctx.q(), Real(2) * (s.real() - Real(1))) : Real(0);
    if (a == 0 && !(s.real() > Real(1))) throw Error(ErrorKind::Domain, "F_q(s,0) needs Re s > 1");
    return accumulate(
        [&](long k) {
            const ZeroData& d = sc.sin_zero(k);
            Complex eq = a == 0 ? Complex(1) : e_q_imag(two_a * d.x, ctx);
            return eq * real_pow(d.x, ms) * (d.value / d.derivative);
        },
        rate, ctx);
}

Complex hurwitz_zeta_q(const Complex& s, const BigRational& a, const SpectralContext& sc) {
    const auto& ctx = sc.ctx();
    WorkingScope ws(ctx);
    if (s.imag().is_zero() && s.real() == Real(1)) throw Error(ErrorKind::Pole, "hurwitz_zeta_q has a pole at s = 1");
    Complex g = q_gamma(Complex(1) - s, ctx);
    return g * H_q_series(s, a, sc).value;
}

namespace {

bool integer_value(const Complex& s, long& n) {
    if (!s.imag().is_zero()) return false;
    Real f = floor(s.real());
    if (f != s.real()) return false;
    n = f.to_long();
    return true;
}

}  // namespace

Complex continued_zeta_q(const Complex& s, const SpectralContext& sc) {
    if (s.real() > Real(1)) return zeta_q(s, sc).value;
    long n = 0;
    if (!integer_value(s, n))
        throw Error(ErrorKind::Domain, "continued_zeta_q is available for Re s > 1 and integer s only");
    if (n == 1) throw Error(ErrorKind::Pole, "zeta_q has a pole at s = 1");
    if (n % 2 != 0) throw Error(ErrorKind::Domain, "odd negative s: cos(pi s/2) and H_q(1-s,0) both vanish");
    WorkingScope ws(sc.ctx());
    Complex h = H_q_contour_integer(1 - n, BigRational(0), sc);
    Real c = (n / 2) % 2 == 0 ? Real(1) : Real(-1);  // cos(pi n/2)
    return h / (ldexp(Real(1), 1 - n) * c);
}

Complex continued_zeta_q_star(const Complex& s, const SpectralContext& sc) {
    if (s.real() > Real(1)) return zeta_q_star(s, sc).value;
    long n = 0;
    if (!integer_value(s, n))
        throw Error(ErrorKind::Domain, "continued_zeta_q_star is available for Re s > 1 and integer s only");
    if (n == 1) throw Error(ErrorKind::Pole, "zeta*_q has a pole at s = 1");
    if (n % 2 != 0) throw Error(ErrorKind::Domain, "odd negative s: cos(pi s/2) and I_q(1-s,0) both vanish");
    WorkingScope ws(sc.ctx());
    Complex i = I_q_contour_integer(1 - n, BigRational(0), sc);
    Real c = (n / 2) % 2 == 0 ? Real(1) : Real(-1);
    return -(i / (ldexp(Real(1), 2 - n) * c));
}

}  // namespace qzeta
