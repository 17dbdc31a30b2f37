#include "qzeta/verify.hpp"

#include "printers.hpp"

#include <gtest/gtest.h>

using namespace qzeta;

namespace {

IdentityReport synthetic(std::string id, std::string candidate, bool pass, long q_den) {
    IdentityReport r;
    r.id = std::move(id);
    r.q = BigRational(1, q_den);
    r.disputed = true;
    r.candidate = std::move(candidate);
    r.pass = pass;
    return r;
}

}  // namespace

TEST(MakeReport, PassRuleScalesWithReference) {
    auto ctx = PrecisionContext::parse("1/2", 30);
    WorkingScope ws(ctx);
    Real tol("1e-10");
    EXPECT_TRUE(make_report("a", BigRational(1, 2), "", Complex(Real("1e-11")), Complex(0), tol).pass);
    EXPECT_FALSE(make_report("a", BigRational(1, 2), "", Complex(Real("1e-9")), Complex(0), tol).pass);
    // relative once |rhs| > 1
    EXPECT_TRUE(make_report("a", BigRational(1, 2), "", Complex(Real("1000.00000001")), Complex(1000), tol).pass);
    EXPECT_FALSE(make_report("a", BigRational(1, 2), "", Complex(Real("1000.01")), Complex(1000), tol).pass);
    IdentityReport r = make_report("a", BigRational(1, 2), "", Complex(Real(3)), Complex(Real(4)), tol);
    EXPECT_EQ(r.abs_err, Real(1));
    EXPECT_EQ(r.rel_err, Real("0.25"));
}

TEST(MakeReport, DefaultTolIsHalfTheDigits) {
    auto ctx = PrecisionContext::parse("1/2", 60);
    WorkingScope ws(ctx);
    EXPECT_EQ(default_identity_tol(60), pow10(-30));
}

TEST(Adjudicate, PicksTheCandidatePassingEverywhere) {
    std::vector<IdentityReport> reports;
    for (long d : {2, 3, 4}) {
        reports.push_back(synthetic("fam", "A", true, d));
        reports.push_back(synthetic("fam", "B", false, d));
    }
    auto adj = adjudicate(reports);
    ASSERT_EQ(adj.size(), 1u);
    EXPECT_EQ(adj[0].family, "fam");
    EXPECT_EQ(adj[0].winner, "A");
    EXPECT_TRUE(adj[0].consistent);
    // a loser that passes somewhere leaves the winner but flags the family
    reports[3].pass = true;
    adj = adjudicate(reports);
    EXPECT_EQ(adj[0].winner, "A");
    EXPECT_FALSE(adj[0].consistent);
}

TEST(Adjudicate, NoWinnerWhenBothFailSomewhere) {
    std::vector<IdentityReport> reports{synthetic("fam", "A", false, 2), synthetic("fam", "A", true, 3),
                                        synthetic("fam", "B", true, 2), synthetic("fam", "B", false, 3)};
    auto adj = adjudicate(reports);
    ASSERT_EQ(adj.size(), 1u);
    EXPECT_TRUE(adj[0].winner.empty());
    EXPECT_FALSE(adj[0].consistent);
}

TEST(RunVerification, SmallEvenRunIsClean) {
    VerifyConfig cfg;
    cfg.q_grid = {BigRational(1, 2)};
    cfg.n_max = 2;
    cfg.digits = 40;
    cfg.groups = {"even", "eta"};
    VerifySummary s = run_verification(cfg);
    EXPECT_TRUE(s.undisputed_pass);
    EXPECT_EQ(s.failures, 0);
    EXPECT_FALSE(s.reports.empty());
    bool saw_star = false;
    for (const auto& a : s.adjudications)
        if (a.family == "zeta_star_even_euler") {
            saw_star = true;
            EXPECT_EQ(a.winner, "2^(2n-2)");
        }
    EXPECT_TRUE(saw_star);
}

TEST(RunVerification, RejectsBadConfig) {
    VerifyConfig cfg;
    cfg.groups = {"nonsense"};
    EXPECT_THROW(run_verification(cfg), Error);
    cfg.groups = {};
    cfg.n_max = 0;
    EXPECT_THROW(run_verification(cfg), Error);
}
