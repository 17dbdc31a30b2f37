#include "qzeta/qnumbers.hpp"
#include "qzeta/spectral.hpp"

#include "printers.hpp"

#include <gtest/gtest.h>

using namespace qzeta;

namespace {

struct Env {
    PrecisionContext ctx;
    SpectralContext sc;
    explicit Env(const char* q, long digits = 40) : ctx(PrecisionContext::parse(q, digits)), sc(ctx) {}
};

// One shared context per q keeps the zero tables warm across tests.
Env& env(const char* q) {
    static std::map<std::string, std::unique_ptr<Env>> cache;
    auto& slot = cache[q];
    if (!slot) slot = std::make_unique<Env>(q);
    return *slot;
}

Real rational(long p, long q) { return Real(BigRational(p, q)); }

template <class F>
ErrorKind error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Division;  // sentinel: nothing thrown
}

}  // namespace

class SpectralGrid : public ::testing::TestWithParam<const char*> {};

TEST_P(SpectralGrid, ZetaAtTwoMatchesClosedForm) {
    Env& e = env(GetParam());
    WorkingScope ws(e.ctx);
    // zeta_q(2) = q/(2[3]), zeta*_q(2) = 1/2, eta_q(2) = q^3/(2[3]!)
    RF z2 = RF::q() / (RF(2) * RF::bracket(3));
    RF e2 = RF::q_power(3) / (RF(2) * RF::factorial(3));
    SeriesValue z = zeta_q(Complex(2), e.sc);
    EXPECT_LT(abs(z.value.real() - eval_rf(z2, e.ctx)), e.ctx.tol() * Real(10));
    EXPECT_LT(z.tail_bound, e.ctx.tol());
    EXPECT_LT(abs(zeta_q_star(Complex(2), e.sc).value.real() - rational(1, 2)), e.ctx.tol() * Real(10));
    EXPECT_LT(abs(eta_q(Complex(2), e.sc).value.real() - eval_rf(e2, e.ctx)), e.ctx.tol());
}

TEST_P(SpectralGrid, TermSignsAndInterlacing) {
    Env& e = env(GetParam());
    WorkingScope ws(e.ctx);
    EXPECT_TRUE(interlaced(e.sc.cos_table(10), e.sc.sin_table(10)));
    for (long k = 1; k <= 10; ++k) {
        const ZeroData& s = e.sc.sin_zero(k);
        const ZeroData& c = e.sc.cos_zero(k);
        EXPECT_GT(s.value / s.derivative, Real(0));       // every zeta_q term positive
        EXPECT_GT(-(c.value / c.derivative), Real(0));    // every zeta*_q term positive
        int expected = k % 2 ? 1 : -1;                     // eta terms alternate
        EXPECT_EQ((-(Real(1) / s.derivative)).sign(), expected) << k;
        EXPECT_EQ((-(Real(1) / c.derivative)).sign(), expected) << k;
    }
}

TEST_P(SpectralGrid, TailBoundIsHonest) {
    Env& e = env(GetParam());
    WorkingScope ws(e.ctx);
    // a run at tighter tolerance differs from the default run by less than its tail bound
    PrecisionContext tight(e.ctx.q_exact(), 40, pow10(-38));
    SpectralContext sc2(tight);
    Complex s(Real("2.5"), Real("0.75"));
    SeriesValue loose = zeta_q(s, e.sc);
    SeriesValue fine = zeta_q(s, sc2);
    EXPECT_GE(fine.K_used, loose.K_used);
    EXPECT_LT(abs(loose.value - fine.value), loose.tail_bound + fine.tail_bound + pow10(-39));
}

TEST_P(SpectralGrid, HSeriesAgreesWithIntegral) {
    Env& e = env(GetParam());
    WorkingScope ws(e.ctx);
    for (const BigRational& a : {BigRational(1, 4), BigRational(3, 4)}) {
        Complex s(Real(3));
        Complex series = H_q_series(s, a, e.sc).value;
        Complex integral = H_q_integral(s, a, e.ctx);
        EXPECT_LT(abs(series - integral), pow10(-20) * max(Real(1), abs(integral))) << to_string(a);
    }
}

INSTANTIATE_TEST_SUITE_P(Q, SpectralGrid, ::testing::Values("3/10", "1/2", "7/10"));

TEST(Spectral, EtaVanishesAtNegativeEvenIntegers) {
    Env& e = env("1/2");
    WorkingScope ws(e.ctx);
    for (long n = 1; n <= 2; ++n) EXPECT_LT(abs(eta_q(Complex(-2 * n), e.sc).value), e.ctx.tol());
    EXPECT_LT(abs(eta_q(Complex(0), e.sc).value.real() - rational(1, 2)), e.ctx.tol());
    EXPECT_LT(abs(eta_q_star(Complex(1), e.sc).value.real() - rational(1, 2)), e.ctx.tol());
}

TEST(Spectral, DomainErrors) {
    Env& e = env("1/2");
    EXPECT_EQ(error_kind([&] { zeta_q(Complex(Real("0.5")), e.sc); }), ErrorKind::Domain);
    EXPECT_EQ(error_kind([&] { zeta_q_star(Complex(1), e.sc); }), ErrorKind::Domain);
    EXPECT_EQ(error_kind([&] { hurwitz_zeta_q(Complex(1), BigRational(3, 4), e.sc); }), ErrorKind::Pole);
    EXPECT_EQ(error_kind([&] { continued_zeta_q(Complex(Real("0.5")), e.sc); }), ErrorKind::Domain);
    EXPECT_EQ(error_kind([&] { continued_zeta_q(Complex(1), e.sc); }), ErrorKind::Pole);
    EXPECT_EQ(error_kind([&] { continued_zeta_q(Complex(-1), e.sc); }), ErrorKind::Domain);
    EXPECT_EQ(error_kind([&] { H_q_series(Complex(2), BigRational(-1, 4), e.sc); }), ErrorKind::Domain);
    EXPECT_EQ(error_kind([&] { rayleigh_sigma(0, Real("0.5"), e.sc); }), ErrorKind::Domain);
}

TEST(Spectral, ContinuedZetaAgreesWithSeriesAndClassicalZero) {
    Env& e = env("1/2");
    WorkingScope ws(e.ctx);
    EXPECT_LT(abs(continued_zeta_q(Complex(0), e.sc).real() + rational(1, 2)), e.ctx.tol());
    EXPECT_LT(abs(continued_zeta_q(Complex(2), e.sc) - zeta_q(Complex(2), e.sc).value), e.ctx.tol());
    // zeta*_q(0) from I_q(1,0) = 0
    EXPECT_LT(abs(continued_zeta_q_star(Complex(0), e.sc)), e.ctx.tol());
}

TEST(Spectral, IntegerValuesOfIThreeWays) {
    Env& e = env("1/2");
    WorkingScope ws(e.ctx);
    EulerFamily f = q_euler_polys_and_numbers(3);
    BigRational a(1, 4);
    for (long n = -2; n <= 0; ++n) {
        Real exact = eval_rf(-(f.e[static_cast<size_t>(-n)].eval(a) / RF::factorial(-n)), e.ctx);
        EXPECT_LT(abs(I_q_series(Complex(n), a, e.sc).value.real() - exact), pow10(-30)) << n;
        EXPECT_LT(abs(I_q_contour_integer(n, a, e.sc).real() - exact), pow10(-30)) << n;
    }
}

TEST(Spectral, RemainderVanishesTermwiseOnExactGrid) {
    Env& e = env("1/2");
    WorkingScope ws(e.ctx);
    // a = 1/2: every remainder term hits a zero of E_q exactly
    SeriesValue r = R_q(Complex(2), BigRational(1, 2), e.ctx);
    EXPECT_TRUE(r.value.is_zero());
}

TEST(Spectral, HurwitzPoleResidue) {
    Env& e = env("1/2");
    WorkingScope ws(e.ctx);
    BigRational a(3, 4);
    Real target = -e.ctx.one_minus_q() / e.ctx.log_q();
    for (int side : {-1, 1}) {
        Real eps = pow10(-6) * Real(side);
        Complex s(Real(1) + eps);
        Real probe = (eps * hurwitz_zeta_q(s, a, e.sc)).real();
        EXPECT_LT(abs(probe / target - Real(1)), Real("1e-4")) << side;
    }
}

TEST(Spectral, RayleighRoutesAgreeAtOrderOne) {
    Env& e = env("1/2");
    WorkingScope ws(e.ctx);
    auto taylor = rayleigh_sigma_taylor(3, Real(1), e.ctx);
    SeriesValue zs = rayleigh_sigma(1, Real(1), e.sc);
    EXPECT_LT(abs(zs.value.real() / taylor[0] - Real(1)), pow10(-25));
}

TEST(Spectral, DirichletSeriesScalingAtOneStep) {
    Env& e = env("1/2");
    WorkingScope ws(e.ctx);
    BigRational a(3, 8);
    Complex s(Real("2.5"));
    Complex lhs = F_q(s, a * e.ctx.q_exact(), e.sc).value;
    Complex shift = Complex(Real(0), Real(2) * Real(a) * e.ctx.one_minus_q()) * F_q(s - Complex(1), a, e.sc).value;
    EXPECT_LT(abs(lhs - (F_q(s, a, e.sc).value - shift)), pow10(-30));
}
