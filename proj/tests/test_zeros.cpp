#include "qzeta/zeros.hpp"

#include "printers.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace qzeta;

TEST(RefineZero, FindsSqrtTwoWithAndWithoutNewton) {
    auto ctx = PrecisionContext::parse("1/2", 40);
    WorkingScope ws(ctx);
    RealFunction f = [](const Real& x) { return x * x - Real(2); };
    RealFunction df = [](const Real& x) { return Real(2) * x; };
    Real target = sqrt(Real(2));
    RefineResult bis = refine_zero(Real(1), Real(2), f, ctx);
    RefineResult nwt = refine_zero(Real(1), Real(2), f, ctx, df);
    EXPECT_LE(abs(bis.value - target), bis.residual);
    EXPECT_LE(abs(nwt.value - target), nwt.residual + pow10(-50));
    EXPECT_LT(bis.residual, pow10(-40) * target);
    EXPECT_LT(nwt.residual, pow10(-40) * target);
    EXPECT_LT(nwt.iterations, bis.iterations);
}

TEST(RefineZero, NoSignChangeIsABracketError) {
    auto ctx = PrecisionContext::parse("1/2", 30);
    RealFunction f = [](const Real& x) { return x * x + Real(1); };
    try {
        refine_zero(Real(-1), Real(1), f, ctx);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Bracket);
    }
}

class ZeroGrid : public ::testing::TestWithParam<const char*> {};

TEST_P(ZeroGrid, TablesIncreaseInterlaceAndCertify) {
    auto ctx = PrecisionContext::parse(GetParam(), 40);
    WorkingScope ws(ctx);
    ZeroTable s = locate_zeros(ZeroKind::Sin, 12, ctx);
    ZeroTable c = locate_zeros(ZeroKind::Cos, 12, ctx);
    ASSERT_EQ(s.size(), 12u);
    EXPECT_TRUE(interlaced(c, s));
    for (const ZeroTable* t : {&s, &c}) {
        for (long k = 1; k <= 12; ++k) {
            const auto& e = t->entry(k);
            EXPECT_EQ(e.k, k);
            if (k > 1) EXPECT_GT(e.value, t->zero(k - 1));
            EXPECT_LE(e.residual, pow10(-40) * e.value);
            // the certified interval really holds a sign change
            Real lo = e.value - e.residual - pow10(-45) * e.value;
            Real hi = e.value + e.residual + pow10(-45) * e.value;
            EXPECT_NE(zero_function(t->kind, Real(0), lo, ctx).sign(), zero_function(t->kind, Real(0), hi, ctx).sign())
                << to_string(t->kind) << " k=" << k;
        }
    }
}

TEST_P(ZeroGrid, AsymptoticDiagnostics) {
    auto ctx = PrecisionContext::parse(GetParam(), 40);
    WorkingScope ws(ctx);
    ZeroTable s = locate_zeros(ZeroKind::Sin, 12, ctx);
    ZeroTable c = locate_zeros(ZeroKind::Cos, 12, ctx);
    AsymptoticReport rs = asymptotic_diagnostics(s, ctx, &c);
    AsymptoticReport rc = asymptotic_diagnostics(c, ctx);
    EXPECT_TRUE(rs.deviation_decreasing);
    EXPECT_TRUE(rc.deviation_decreasing);
    EXPECT_TRUE(rs.quotient_signs_ok);
    EXPECT_TRUE(rc.quotient_signs_ok);
    EXPECT_TRUE(rs.bounded);
    EXPECT_TRUE(rc.bounded);
    ASSERT_TRUE(rs.interlaces.has_value());
    EXPECT_TRUE(*rs.interlaces);
    // x_k q^{2k} / A tends to q^2 (the printed constant is off by that factor),
    // with error of order q^{2k}
    Real q2 = ctx.q() * ctx.q();
    Real rate = pow(q2, 12);
    EXPECT_LT(abs(rs.limit_estimate - q2), rate);
    EXPECT_LT(abs(rc.limit_estimate - q2), rate);
    // consecutive ratios approach q^-2
    EXPECT_LT(abs(s.zero(12) / s.zero(11) * q2 - Real(1)), rate / q2);
}

INSTANTIATE_TEST_SUITE_P(Q, ZeroGrid, ::testing::Values("3/10", "1/2", "7/10"));

TEST(Zeros, ExtendingKeepsEarlierEntries) {
    auto ctx = PrecisionContext::parse("1/2", 40);
    WorkingScope ws(ctx);
    ZeroTable t = locate_zeros(ZeroKind::Sin, 4, ctx);
    ZeroTable full = locate_zeros(ZeroKind::Sin, 9, ctx);
    extend_zeros(t, 9, ctx);
    ASSERT_EQ(t.size(), 9u);
    for (long k = 1; k <= 9; ++k) EXPECT_LT(abs(t.zero(k) - full.zero(k)), pow10(-40) * t.zero(k));
}

TEST(Zeros, BesselZerosAreRescaledTrigZeros) {
    auto ctx = PrecisionContext::parse("1/2", 40);
    WorkingScope ws(ctx);
    ZeroTable jb = locate_zeros(ZeroKind::Bessel, 6, ctx, Real("0.5"));
    ZeroTable s = locate_zeros(ZeroKind::Sin, 6, ctx);
    for (long k = 1; k <= 6; ++k) {
        Real expect = Real(2) * ctx.one_minus_q() * s.zero(k);
        EXPECT_LT(abs(jb.zero(k) - expect), pow10(-38) * expect) << k;
    }
}

TEST(Zeros, BadRequestsRaise) {
    auto ctx = PrecisionContext::parse("1/2", 30);
    EXPECT_THROW(locate_zeros(ZeroKind::Sin, 0, ctx), Error);
    EXPECT_THROW(locate_zeros(ZeroKind::Bessel, 3, ctx, Real(-2)), Error);
    ZeroTable t = locate_zeros(ZeroKind::Sin, 2, ctx);
    auto other = PrecisionContext::parse("3/10", 30);
    EXPECT_THROW(extend_zeros(t, 4, other), Error);
}

TEST(ZeroTableCsv, RoundTrip) {
    auto ctx = PrecisionContext::parse("7/10", 30);
    WorkingScope ws(ctx);
    ZeroTable t = locate_zeros(ZeroKind::Cos, 5, ctx);
    std::stringstream ss;
    write_csv(ss, t);
    std::string text = ss.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "kind,q,k,zero,residual,digits");
    ZeroTable back = read_csv(ss);
    EXPECT_EQ(back.kind, ZeroKind::Cos);
    EXPECT_EQ(back.q, BigRational(7, 10));
    ASSERT_EQ(back.size(), 5u);
    for (long k = 1; k <= 5; ++k) EXPECT_LT(abs(back.zero(k) - t.zero(k)), pow10(-29) * t.zero(k));
    std::stringstream again;
    write_csv(again, back);
    EXPECT_EQ(again.str(), text);
}
