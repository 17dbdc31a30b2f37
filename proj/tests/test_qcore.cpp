#include "qzeta/qcore.hpp"

#include "printers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qzeta;

namespace {

PrecisionContext half_ctx(long digits = 50) { return PrecisionContext(BigRational(1, 2), digits); }

}  // namespace

TEST(ParseRational, DecimalAndFractionForms) {
    EXPECT_EQ(parse_rational("1/2"), BigRational(1, 2));
    EXPECT_EQ(parse_rational("0.5"), BigRational(1, 2));
    EXPECT_EQ(parse_rational("-3/4"), BigRational(-3, 4));
    EXPECT_EQ(parse_rational("1e-3"), BigRational(1, 1000));
    EXPECT_EQ(parse_rational("7"), BigRational(7));
    EXPECT_EQ(parse_rational("0.999"), BigRational(999, 1000));
}

TEST(ParseRational, RejectsGarbage) {
    for (const char* bad : {"", "abc", "1/0", "1e", "0.5x"}) {
        try {
            parse_rational(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Config) << bad;
        }
    }
}

TEST(PrecisionContext, RejectsBadSettings) {
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Division;  // sentinel: nothing thrown
    };
    EXPECT_EQ(kind_of([] { PrecisionContext(BigRational(3, 2), 50); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { PrecisionContext(BigRational(0), 50); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { PrecisionContext(BigRational(1), 50); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { PrecisionContext(BigRational(1, 2), 5); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { PrecisionContext::parse("1/2", 50, "-1e-3"); }), ErrorKind::Config);
}

TEST(PrecisionContext, DefaultToleranceTracksDigits) {
    auto ctx = half_ctx(60);
    WorkingScope ws(ctx);
    EXPECT_EQ(ctx.tol(), pow10(-50));
    EXPECT_EQ(ctx.q_pow(10), Real(BigRational(1, 1024)));
    EXPECT_EQ(ctx.q_pow(-3), Real(8));
}

TEST(QBracket, ExactValues) {
    BigRational q(1, 2);
    EXPECT_EQ(q_bracket(3, q), BigRational(7, 4));
    EXPECT_EQ(q_factorial(3, q), BigRational(1) * BigRational(3, 2) * BigRational(7, 4));
    EXPECT_EQ(q_bracket(0, q), BigRational(0));
}

TEST(QBinomial, CoefficientsAreSymmetricAndSumToBinomial) {
    for (long n = 0; n <= 9; ++n) {
        for (long k = 0; k <= n; ++k) {
            auto c = q_binomial_coefficients(n, k);
            auto r = c;
            std::reverse(r.begin(), r.end());
            EXPECT_EQ(c, r);
            BigInt sum = 0;
            for (const auto& x : c) sum += x;
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            EXPECT_EQ(sum, binom);
        }
    }
}

TEST(QBinomial, PascalRule) {
    auto ctx = PrecisionContext(BigRational(3, 10), 40);
    WorkingScope ws(ctx);
    for (long n = 1; n <= 8; ++n)
        for (long k = 1; k < n; ++k) {
            Real lhs = q_binomial(n, k, ctx);
            Real rhs = q_binomial(n - 1, k - 1, ctx) + ctx.q_pow(k) * q_binomial(n - 1, k, ctx);
            EXPECT_LT(abs(lhs - rhs), pow10(-45));
        }
}

TEST(QPochhammer, InfiniteProductMatchesLongFiniteProduct) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (const char* qs : {"3/10", "1/2", "9/10"}) {
        auto ctx = PrecisionContext::parse(qs, 30);
        WorkingScope ws(ctx);
        for (int trial = 0; trial < 5; ++trial) {
            Real a(u(rng));
            Real inf = q_pochhammer_inf(a, ctx.q(), ctx);
            Real fin = q_pochhammer(Complex(a), 4000, ctx).real();
            EXPECT_LT(abs(inf - fin), pow10(-30) * max(Real(1), abs(fin))) << qs;
        }
    }
}

TEST(QPochhammer, ComplexAndRealRoutesAgree) {
    auto ctx = half_ctx();
    WorkingScope ws(ctx);
    Real a("-2.75");
    Complex c = q_pochhammer_inf(Complex(a), ctx);
    EXPECT_LT(abs(c.real() - q_pochhammer_inf(a, ctx.q(), ctx)), pow10(-55));
    EXPECT_TRUE(c.imag().is_zero() || abs(c.imag()) < pow10(-60));
}

TEST(QGamma, FactorialAtIntegers) {
    auto ctx = PrecisionContext(BigRational(7, 10), 40);
    WorkingScope ws(ctx);
    for (long n = 0; n <= 6; ++n) {
        Complex g = q_gamma(Complex(n + 1), ctx);
        EXPECT_LT(abs(g.real() - q_factorial(n, ctx)), pow10(-40)) << n;
    }
}

TEST(QGamma, FunctionalEquation) {
    auto ctx = half_ctx();
    WorkingScope ws(ctx);
    Complex x(Real("0.3"), Real("1.7"));
    Complex lhs = q_gamma(x + Complex(1), ctx);
    Complex bracket = (Complex(1) - pow(Complex(ctx.q()), x)) / ctx.one_minus_q();
    Complex rhs = bracket * q_gamma(x, ctx);
    EXPECT_LT(abs(lhs - rhs), pow10(-50));
}

TEST(QGamma, PolesRaise) {
    auto ctx = half_ctx();
    for (long n : {0L, -1L, -4L}) {
        try {
            q_gamma(Complex(n), ctx);
            FAIL() << n;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Pole);
        }
    }
}

TEST(Real, StringFormIsDeterministic) {
    PrecisionScope ps(bits_for_digits(40));
    Real x(BigRational(1, 7));
    EXPECT_EQ(x.str(10), "1.428571429e-1");
    EXPECT_EQ(Real(-1250).str(3), "-1.25e3");
    EXPECT_EQ(Real(0).str(5), "0");
}
