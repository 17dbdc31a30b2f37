#include "qzeta/qnumbers.hpp"

#include "printers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qzeta;

namespace {

RF br(long n) { return RF::bracket(n); }
RF qp(long n) { return RF::q_power(n); }
// (-q;q)_n
RF neg_q_poch(long n) {
    RF r(1);
    for (long j = 1; j <= n; ++j) r *= RF(1) + qp(j);
    return r;
}

RF random_rf(std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-4, 4), idx(1, 6);
    RF r(BigRational(small(rng), 1 + std::abs(small(rng))));
    r += RF(BigRational(small(rng))) * qp(idx(rng) - 1);
    r /= br(idx(rng));
    if (idx(rng) % 2) r /= RF(1) + qp(idx(rng));
    return r;
}

}  // namespace

TEST(QPoly, CyclotomicFactorisation) {
    for (long n = 1; n <= 24; ++n) {
        QPoly prod(1);
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        EXPECT_EQ(prod, QPoly::monomial(BigRational(1), n) - QPoly(1)) << n;
    }
}

TEST(QPoly, DivmodAndGcd) {
    QPoly a = cyclotomic(3) * cyclotomic(4) * QPoly::variable();
    QPoly b = cyclotomic(4) * cyclotomic(6);
    EXPECT_EQ(gcd(a, b), cyclotomic(4));
    QPoly quo, rem;
    a.divmod(b, quo, rem);
    EXPECT_EQ(quo * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
}

TEST(RationalFunction, FieldPropertiesOnRandomElements) {
    std::mt19937 rng(2024);
    for (int i = 0; i < 60; ++i) {
        RF a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!b.is_zero()) {
            EXPECT_EQ((a * b) / b, a);
            EXPECT_EQ(b * b.inverse(), RF(1));
        }
        // evaluation is a ring homomorphism away from poles
        BigRational q(2, 7);
        EXPECT_EQ((a * b).eval(q), a.eval(q) * b.eval(q));
        EXPECT_EQ((a + c).eval(q), a.eval(q) + c.eval(q));
    }
}

TEST(RationalFunction, DenominatorStaysMonicAndFactored) {
    RF x = br(3) / (br(5) * br(2)) + qp(2) / br(6);
    EXPECT_EQ(x.den().leading(), BigRational(1));
    EXPECT_TRUE(x.den_factored());
    EXPECT_THROW(RF(1) / RF(0), Error);
    EXPECT_THROW((RF(1) / (RF(1) - RF::q())).eval(BigRational(1)), Error);
}

TEST(QBernoulli, ClosedFormsUpToSix) {
    auto beta = q_bernoulli_numbers(7);
    EXPECT_EQ(beta[0], RF(1));
    EXPECT_EQ(beta[1], RF(BigRational(-1, 2)));
    EXPECT_EQ(beta[2], qp(1) / RF(4) * neg_q_poch(1) / br(3));
    EXPECT_EQ(beta[4], -(qp(4) / RF(16) * neg_q_poch(2) * br(2) / (br(3) * br(5))));
    EXPECT_EQ(beta[6], qp(7) / RF(64) * neg_q_poch(3) * br(4) / (br(3) * br(7)));
    EXPECT_TRUE(beta[3].is_zero());
    EXPECT_TRUE(beta[5].is_zero());
    EXPECT_TRUE(beta[7].is_zero());
    EXPECT_EQ(beta[2].str(), "q*(1 + q)/(4*(1 + q + q^2))");
    EXPECT_EQ(beta[2].eval(BigRational(1, 2)), BigRational(3, 28));
}

TEST(QBernoulli, ClassicalValuesAtQEqualOne) {
    auto beta = q_bernoulli_numbers(10);
    auto classical = classical_bernoulli(10);
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(beta[static_cast<size_t>(n)].eval(BigRational(1)), classical[static_cast<size_t>(n)]) << n;
}

TEST(QBernoulli, PolynomialsFromNumbersMatchGeneratingFunction) {
    const long N = 10;
    // t e_q(xt) = sum_n [n] x^{n-1} t^n/[n]!
    XSeries numer;
    numer.c.push_back(XPoly());
    for (long n = 1; n <= N + 1; ++n) numer.c.push_back(XPoly::monomial(br(n), n - 1));
    XSeries direct = series_divide(numer, series_for_eps_minus_one(N + 1));
    auto beta = q_bernoulli_numbers(N);
    for (long n = 0; n <= N; ++n) {
        EXPECT_EQ(direct.c[static_cast<size_t>(n)], q_bernoulli_poly_from_numbers(n, beta)) << n;
        EXPECT_EQ(q_bernoulli_poly(n, BernoulliKind::Little), direct.c[static_cast<size_t>(n)]) << n;
    }
}

TEST(QBernoulli, BigAndLittleShareTheConstantTerm) {
    auto little = q_bernoulli_polys(8, BernoulliKind::Little);
    auto big = q_bernoulli_polys(8, BernoulliKind::Big);
    auto beta = q_bernoulli_numbers(8);
    for (size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(little[n].coeff(0), beta[n]);
        EXPECT_EQ(big[n].coeff(0), beta[n]);
    }
    EXPECT_EQ(little[2].eval(BigRational(1, 2)), -(qp(3) / (RF(4) * br(3))));
}

TEST(QBernoulli, OddIndexVanishesAtOneHalf) {
    auto little = q_bernoulli_polys(9, BernoulliKind::Little);
    for (long n = 1; n <= 4; ++n) EXPECT_TRUE(little[static_cast<size_t>(2 * n + 1)].eval(BigRational(1, 2)).is_zero()) << n;
}

TEST(QEuler, FirstValuesAndRelations) {
    EulerFamily f = q_euler_polys_and_numbers(10);
    EXPECT_EQ(f.tilde[0], RF(1));
    EXPECT_EQ(f.tilde[1], RF(BigRational(-1, 2)));
    EXPECT_TRUE(f.tilde[2].is_zero());
    EXPECT_EQ(f.tilde[3], qp(1) * (RF(1) + qp(1)) / RF(8));
    for (long n = 0; n <= 10; ++n) {
        size_t i = static_cast<size_t>(n);
        EXPECT_EQ(f.e[i].coeff(0), f.tilde[i]) << n;
        EXPECT_EQ(f.E[i].coeff(0), f.tilde[i]) << n;
        if (n >= 1) EXPECT_EQ(f.genocchi[i], br(n) * f.tilde[i - 1]) << n;
    }
    EXPECT_TRUE(f.genocchi[0].is_zero());
    EXPECT_EQ(f.genocchi[2], -(RF(1) + qp(1)) / RF(2));
}

TEST(QEuler, ClassicalLimits) {
    // E_n(0) = -2 (2^{n+1} - 1) B_{n+1}/(n+1), G_n = 2 (1 - 2^n) B_n
    EulerFamily f = q_euler_polys_and_numbers(10);
    auto B = classical_bernoulli(11);
    for (long n = 0; n <= 10; ++n) {
        BigRational two_pow(BigInt(1) << static_cast<mp_bitcnt_t>(n + 1));
        BigRational e0 = -2 * (two_pow - 1) * B[static_cast<size_t>(n + 1)] / BigRational(n + 1);
        EXPECT_EQ(f.tilde[static_cast<size_t>(n)].eval(BigRational(1)), e0) << n;
        BigRational g = 2 * (1 - two_pow / 2) * B[static_cast<size_t>(n)];
        if (n == 1) g = BigRational(1);  // G_1 = 1 with B_1 = -1/2
        EXPECT_EQ(f.genocchi[static_cast<size_t>(n)].eval(BigRational(1)), g) << n;
    }
}

TEST(Series, MultiplyThenDivideRoundTrips) {
    std::mt19937 rng(11);
    RFSeries a, b;
    for (int i = 0; i <= 8; ++i) {
        a.c.push_back(random_rf(rng));
        b.c.push_back(random_rf(rng));
    }
    b.c[0] = RF(3);  // invertible constant term
    RFSeries back = series_divide(series_multiply(a, b), b);
    for (size_t i = 0; i < a.c.size(); ++i) EXPECT_EQ(back.c[i], a.c[i]) << i;
}

TEST(Series, SymmetricExponentialSeries) {
    RFSeries m = series_for_eps_minus_one(4);
    RFSeries p = series_for_eps_plus_one(4);
    EXPECT_TRUE(m.c[0].is_zero());
    EXPECT_EQ(p.c[0], RF(2));
    EXPECT_EQ(m.c[1], RF(1));
    for (size_t n = 1; n < m.c.size(); ++n) EXPECT_EQ(m.c[n], p.c[n]);
}

TEST(Evaluation, HighPrecisionMatchesExact) {
    auto ctx = PrecisionContext::parse("1/2", 40);
    WorkingScope ws(ctx);
    auto beta = q_bernoulli_numbers(6);
    for (size_t n = 0; n <= 6; ++n) {
        Real v = eval_rf(beta[n], ctx);
        EXPECT_LT(abs(v - Real(beta[n].eval(ctx.q_exact()))), pow10(-50));
    }
    Real at = eval_rf(beta[2], Real("0.999"), ctx);
    EXPECT_LT(abs(at - Real(beta[2].eval(BigRational(999, 1000)))), pow10(-50));
}
