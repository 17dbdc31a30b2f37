#include "qzeta/zeros.hpp"

#include <algorithm>

namespace qzeta {

namespace {

bool is_trig(ZeroKind kind) { return kind != ZeroKind::Bessel; }

// theta value at the k-th zero: k pi (sin) or (k - 1/2) pi (cos)
Real phase_target(ZeroKind kind, long k) {
    Real p = pi();
    if (kind == ZeroKind::Sin) return Real(k) * p;
    return (Real(k) - Real("0.5")) * p;
}

}  // namespace

RefineResult refine_zero(const Real& lo_in, const Real& hi_in, const RealFunction& f, const PrecisionContext& ctx,
                         const RealFunction& fprime, const RefineOptions& opts) {
    WorkingScope ws(ctx);
    Real a = min(lo_in, hi_in), b = max(lo_in, hi_in);
    Real fa = f(a), fb = f(b);
    RefineResult r;
    if (fa.is_zero()) return {a, Real(0), 0};
    if (fb.is_zero()) return {b, Real(0), 0};
    if (fa.sign() == fb.sign()) throw Error(ErrorKind::Bracket, "refine_zero: no sign change on the bracket");
    const Real rel = pow10(-ctx.digits());
    const bool use_newton = opts.newton && static_cast<bool>(fprime);
    Real x = (a + b) / Real(2);
    long it = 0;
    for (; it < opts.max_iterations; ++it) {
        Real width_goal = rel * max(abs(a), abs(b));
        if ((b - a) / Real(2) < width_goal) break;
        if (!use_newton) {
            x = (a + b) / Real(2);
            Real fx = f(x);
            if (fx.is_zero()) {
                a = x;
                b = x;
                break;
            }
            if (fx.sign() == fa.sign()) {
                a = x;
                fa = fx;
            } else {
                b = x;
            }
            continue;
        }
        Real fx = f(x);
        if (fx.is_zero()) {
            a = x;
            b = x;
            break;
        }
        if (fx.sign() == fa.sign()) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        Real d = fprime(x);
        bool stepped = false;
        if (!d.is_zero()) {
            Real xn = x - fx / d;
            if (xn > a && xn < b) {
                Real step = abs(xn - x);
                x = xn;
                stepped = true;
                if (step < width_goal / Real(4)) {
                    // certify a tight bracket around the Newton iterate
                    Real w = width_goal / Real(2);
                    Real l = x - w, h = x + w;
                    Real fl = f(l), fh = f(h);
                    if (fl.sign() != fh.sign()) {
                        a = l;
                        b = h;
                        ++it;
                        break;
                    }
                }
            }
        }
        if (!stepped) x = (a + b) / Real(2);
    }
    r.value = (a + b) / Real(2);
    r.residual = (b - a) / Real(2);
    r.iterations = it;
    return r;
}

Real zero_function(ZeroKind kind, const Real& nu, const Real& x, const PrecisionContext& ctx) {
    if (kind == ZeroKind::Bessel) {
        BigRational p = ctx.q_exact() * ctx.q_exact();
        EvalResult j = jackson_bessel2(nu, Complex(x), p, ctx);
        WorkingScope ws(ctx);
        return j.value.real();
    }
    TrigPhase ph = trig_phase(x, ctx);
    WorkingScope ws(ctx);
    return kind == ZeroKind::Sin ? sin(ph.theta) : cos(ph.theta);
}

namespace {

struct Bracket {
    Real lo, hi;
};

// Geometric sign scan from x0 collecting the first `count` brackets.
std::vector<Bracket> scan_brackets(const ZeroTable& t, long count, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    std::vector<Bracket> out;
    Real x = is_trig(t.kind) ? Real(1) : Real("0.01");
    Real step("1.01");
    Real fx = zero_function(t.kind, t.nu, x, ctx);
    for (long i = 0; i < 400000 && static_cast<long>(out.size()) < count; ++i) {
        Real xn = x * step;
        Real fn = zero_function(t.kind, t.nu, xn, ctx);
        if (is_trig(t.kind)) {
            // the phase counts zeros exactly: one bracket per crossing of a target
            TrigPhase pa = trig_phase(x, ctx), pb = trig_phase(xn, ctx);
            long k0 = static_cast<long>(out.size()) + 1;
            while (static_cast<long>(out.size()) < count) {
                Real target = phase_target(t.kind, k0);
                if (!(pa.theta < target && target < pb.theta)) break;
                out.push_back({x, xn});
                ++k0;
            }
        } else if (fx.sign() != fn.sign() && !fn.is_zero()) {
            out.push_back({x, xn});
        }
        x = xn;
        fx = fn;
    }
    if (static_cast<long>(out.size()) < count) throw Error(ErrorKind::Localization, "sign scan found too few zeros");
    return out;
}

// Phase-certified bracket for the trig kinds: theta(lo) < target < theta(hi).
bool trig_bracket_ok(const ZeroTable& t, long k, const Real& lo, const Real& hi, const PrecisionContext& ctx) {
    Real target = phase_target(t.kind, k);
    return trig_phase(lo, ctx).theta < target && target < trig_phase(hi, ctx).theta;
}

ZeroEntry refine_entry(const ZeroTable& t, long k, const Bracket& br, const PrecisionContext& ctx) {
    RefineResult rr;
    if (is_trig(t.kind)) {
        Real target = phase_target(t.kind, k);
        RealFunction g = [&](const Real& x) { return trig_phase(x, ctx).theta - target; };
        RealFunction dg = [&](const Real& x) { return trig_phase(x, ctx).dtheta; };
        rr = refine_zero(br.lo, br.hi, g, ctx, dg);
    } else {
        BigRational p = ctx.q_exact() * ctx.q_exact();
        RealFunction g = [&](const Real& x) { return jackson_bessel2(t.nu, Complex(x), p, ctx).value.real(); };
        RealFunction dg = [&](const Real& x) {
            return jackson_bessel2_prime(t.nu, Complex(x), p, ctx).value.real();
        };
        rr = refine_zero(br.lo, br.hi, g, ctx, dg);
    }
    return {k, rr.value, rr.residual};
}

}  // namespace

ZeroTable locate_zeros(ZeroKind kind, long K, const PrecisionContext& ctx, const Real& nu, const LocateOptions& opts) {
    if (K < 1) throw Error(ErrorKind::Domain, "locate_zeros needs K >= 1");
    WorkingScope ws(ctx);
    ZeroTable t;
    t.kind = kind;
    t.nu = nu;
    t.q = ctx.q_exact();
    t.digits = ctx.digits();
    const Real& q = ctx.q();
    if (kind == ZeroKind::Sin) t.asymptotic_constant = pow(q, Real("-1.5")) / ctx.one_minus_q();
    else if (kind == ZeroKind::Cos) t.asymptotic_constant = pow(q, Real("-0.5")) / ctx.one_minus_q();
    else {
        if (!(nu > Real(-1))) throw Error(ErrorKind::Domain, "Bessel zeros need nu > -1");
        t.asymptotic_constant = Real(2) * pow(q, -nu - Real(1));
    }
    extend_zeros(t, K, ctx, opts);
    return t;
}

void extend_zeros(ZeroTable& t, long K, const PrecisionContext& ctx, const LocateOptions& opts) {
    if (t.q != ctx.q_exact()) throw Error(ErrorKind::Domain, "zero table and context disagree on q");
    WorkingScope ws(ctx);
    const long have = static_cast<long>(t.size());
    if (K <= have) return;
    const Real& q = ctx.q();
    const Real q2 = q * q;
    const double rho0 = opts.rho > 0 ? opts.rho : (1.0 - ctx.q_double() * ctx.q_double()) / 2.0;

    // burn-in zeros come from the sign scan
    long burn = std::min(K, std::max(opts.burn_in, 2L));
    if (have < burn) {
        auto brackets = scan_brackets(t, burn, ctx);
        for (long k = have + 1; k <= burn; ++k)
            t.entries.push_back(refine_entry(t, k, brackets[static_cast<size_t>(k - 1)], ctx));
    }

    for (long k = static_cast<long>(t.size()) + 1; k <= K; ++k) {
        const Real& prev = t.zero(k - 1);
        // fitted constant from the latest zero: prediction prev * q^{-2}
        Real pred = prev / q2;
        Real rho(rho0);
        bool found = false;
        Bracket br{Real(0), Real(0)};
        for (int attempt = 0; attempt < 14 && !found; ++attempt) {
            Real lo = pred * (Real(1) - min(rho, Real("0.9")));
            Real hi = pred * (Real(1) + rho);
            if (lo <= prev) lo = prev * (Real(1) + pow10(-ctx.digits() / 2));
            if (is_trig(t.kind)) {
                found = trig_bracket_ok(t, k, lo, hi, ctx);
            } else {
                Real fl = zero_function(t.kind, t.nu, lo, ctx);
                Real fh = zero_function(t.kind, t.nu, hi, ctx);
                found = fl.sign() != fh.sign() && !fl.is_zero() && !fh.is_zero();
            }
            if (found) br = {lo, hi};
            rho *= Real(2);
        }
        if (!found) {
            // fall back to a fine scan upward from the previous zero
            Real x = prev * (Real(1) + pow10(-ctx.digits() / 2));
            Real step("1.002");
            Real fx = zero_function(t.kind, t.nu, x, ctx);
            for (long i = 0; i < 2000000 && !found; ++i) {
                Real xn = x * step;
                if (is_trig(t.kind)) {
                    found = trig_bracket_ok(t, k, x, xn, ctx);
                } else {
                    Real fn = zero_function(t.kind, t.nu, xn, ctx);
                    found = fx.sign() != fn.sign();
                    fx = fn;
                }
                if (found) br = {x, xn};
                x = xn;
            }
        }
        if (!found) throw Error(ErrorKind::Localization, "could not bracket zero " + std::to_string(k));
        t.entries.push_back(refine_entry(t, k, br, ctx));
    }
}

bool interlaced(const ZeroTable& cos_table, const ZeroTable& sin_table) {
    size_t n = std::min(cos_table.size(), sin_table.size());
    for (size_t i = 0; i < n; ++i) {
        if (!(cos_table.entries[i].value < sin_table.entries[i].value)) return false;
        if (i + 1 < cos_table.size() && !(sin_table.entries[i].value < cos_table.entries[i + 1].value)) return false;
    }
    return true;
}

AsymptoticReport asymptotic_diagnostics(const ZeroTable& t, const PrecisionContext& ctx, const ZeroTable* partner) {
    if (t.size() < 4) throw Error(ErrorKind::Domain, "asymptotic_diagnostics needs at least 4 zeros");
    WorkingScope ws(ctx);
    AsymptoticReport rep;
    rep.kind = t.kind;
    const Real& q = ctx.q();
    Real q2 = q * q;
    Real q2k(1);
    Real one(1);
    rep.within_band = true;
    rep.quotient_signs_ok = true;
    for (const auto& e : t.entries) {
        q2k *= q2;
        rep.k.push_back(e.k);
        Real s = e.value * q2k / t.asymptotic_constant;
        rep.scaled.push_back(s);
        if (abs(s - one) > Real("0.25")) rep.within_band = false;
        if (is_trig(t.kind)) {
            TrigValues v = trig_values(e.value, ctx);
            Real quotient = t.kind == ZeroKind::Sin ? v.cos / v.sin_prime : v.sin / v.cos_prime;
            rep.bounded_seq.push_back(q2k * quotient);
            if (t.kind == ZeroKind::Sin && !(quotient.sign() > 0)) rep.quotient_signs_ok = false;
            if (t.kind == ZeroKind::Cos && !(quotient.sign() < 0)) rep.quotient_signs_ok = false;
        }
    }
    for (size_t i = 0; i + 1 < t.size(); ++i) rep.ratio.push_back(t.entries[i + 1].value / t.entries[i].value);

    rep.deviation_decreasing = true;
    for (size_t i = 0; i + 1 < rep.scaled.size(); ++i) {
        if (rep.k[i] < 4) continue;
        if (!(abs(rep.scaled[i + 1] - one) < abs(rep.scaled[i] - one))) rep.deviation_decreasing = false;
    }
    if (!rep.bounded_seq.empty()) {
        // bounded: the later half never exceeds twice the largest early value
        size_t half = rep.bounded_seq.size() / 2;
        Real early(0), late(0);
        for (size_t i = 0; i < rep.bounded_seq.size(); ++i) {
            Real a = abs(rep.bounded_seq[i]);
            if (i < half) early = max(early, a);
            else late = max(late, a);
        }
        rep.bounded = late <= Real(2) * early;
    } else {
        rep.bounded = true;
    }
    rep.limit_estimate = rep.scaled.back();
    if (partner) {
        if (t.kind == ZeroKind::Sin && partner->kind == ZeroKind::Cos) rep.interlaces = interlaced(*partner, t);
        else if (t.kind == ZeroKind::Cos && partner->kind == ZeroKind::Sin) rep.interlaces = interlaced(t, *partner);
    }
    return rep;
}

}  // namespace qzeta
