#pragma once

#include "qzeta/qcore.hpp"

#include <map>
#include <string>
#include <vector>

namespace qzeta {

// Dense univariate polynomial in q over the rationals, lowest degree first.
class QPoly {
public:
    QPoly() = default;
    QPoly(const BigRational& c);  // NOLINT: constants convert implicitly
    QPoly(long c) : QPoly(BigRational(c)) {}
    explicit QPoly(std::vector<BigRational> coeffs);

    static QPoly monomial(const BigRational& c, long degree);
    static QPoly variable() { return monomial(BigRational(1), 1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational coeff(long i) const;
    const BigRational& leading() const { return c_.back(); }
    long low_degree() const;  // lowest power with nonzero coefficient

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const BigRational& c);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const BigRational& c) { return a *= c; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    // Euclidean division; throws on a zero divisor.
    void divmod(const QPoly& d, QPoly& quotient, QPoly& remainder) const;
    // Quotient if d divides exactly, otherwise false.
    bool divides_by(const QPoly& d, QPoly* quotient) const;
    QPoly monic() const;

    BigRational eval(const BigRational& q) const;
    Real eval(const Real& q) const;

    // "1 + q + q^2"
    std::string str(const std::string& var = "q") const;

private:
    void trim();
    std::vector<BigRational> c_;
};

QPoly gcd(QPoly a, QPoly b);  // monic, gcd(0,0) = 0

// d-th cyclotomic polynomial (cached).
const QPoly& cyclotomic(long d);

// Element of Q(q) in lowest terms with a monic denominator. Denominators that
// are products of cyclotomic polynomials (every q-bracket is) are tracked in
// factored form, which keeps sums and products cheap and exact.
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_(1) {}
    RationalFunctionQ(const BigRational& c);  // NOLINT
    RationalFunctionQ(long c) : RationalFunctionQ(BigRational(c)) {}
    RationalFunctionQ(const QPoly& p);  // NOLINT
    RationalFunctionQ(const QPoly& num, const QPoly& den);

    static RationalFunctionQ q() { return RationalFunctionQ(QPoly::variable()); }
    // [n] = 1 + q + ... + q^{n-1}
    static RationalFunctionQ bracket(long n);
    static RationalFunctionQ factorial(long n);
    static RationalFunctionQ binomial(long n, long k);
    static RationalFunctionQ q_power(long n);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // cyclotomic factorization of the denominator, empty if not tracked
    const std::map<long, long>& den_cyclotomic() const { return cyc_; }
    bool den_factored() const { return factored_; }

    RationalFunctionQ operator-() const;
    RationalFunctionQ& operator+=(const RationalFunctionQ& o);
    RationalFunctionQ& operator-=(const RationalFunctionQ& o);
    RationalFunctionQ& operator*=(const RationalFunctionQ& o);
    RationalFunctionQ& operator/=(const RationalFunctionQ& o);
    friend RationalFunctionQ operator+(RationalFunctionQ a, const RationalFunctionQ& b) { return a += b; }
    friend RationalFunctionQ operator-(RationalFunctionQ a, const RationalFunctionQ& b) { return a -= b; }
    friend RationalFunctionQ operator*(RationalFunctionQ a, const RationalFunctionQ& b) { return a *= b; }
    friend RationalFunctionQ operator/(RationalFunctionQ a, const RationalFunctionQ& b) { return a /= b; }
    // canonical form makes structural equality exact
    friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    RationalFunctionQ inverse() const;

    // Exact value; throws a Division error where the denominator vanishes.
    BigRational eval(const BigRational& q) const;

    // Readable factored form, e.g. "q*(1 + q)/(4*(1 + q + q^2))".
    std::string str() const;

private:
    void normalize();
    void cancel_factored();
    void rebuild_den();

    QPoly num_;
    QPoly den_;
    std::map<long, long> cyc_;
    bool factored_ = true;
};

using RF = RationalFunctionQ;

// Polynomial in x with coefficients in Q(q), lowest degree first.
class XPoly {
public:
    XPoly() = default;
    XPoly(const RF& c);  // NOLINT
    explicit XPoly(std::vector<RF> coeffs);
    static XPoly monomial(const RF& c, long degree);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RF>& coeffs() const { return c_; }
    RF coeff(long i) const;

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly& operator*=(const RF& c);
    XPoly& operator/=(const RF& c);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(XPoly a, const RF& c) { return a *= c; }
    friend XPoly operator/(XPoly a, const RF& c) { return a /= c; }
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }

    RF eval(const BigRational& x) const;
    BigRational eval(const BigRational& x, const BigRational& q) const;

private:
    void trim();
    std::vector<RF> c_;
};

// Truncated series sum_n c_n t^n/[n]!. The q-exponential normalization makes
// the Cauchy product a q-binomial convolution.
template <class T>
struct QPowerSeries {
    std::vector<T> c;
    long order() const { return static_cast<long>(c.size()) - 1; }
};

using RFSeries = QPowerSeries<RF>;
using XSeries = QPowerSeries<XPoly>;

// eps_q(t) -+ 1 with eps_q(t) = e_q(t/2) E_q(t/2):
// c_n = 2^{-n} sum_k qbinom(n,k) q^{k(k-1)/2}, adjusted by -+1 at n = 0.
RFSeries series_for_eps_minus_one(long N);
RFSeries series_for_eps_plus_one(long N);

template <class T>
QPowerSeries<T> series_multiply(const QPowerSeries<T>& a, const RFSeries& b);

// Quotient of two series to the numerator's order. A shared leading power of t
// is factored out first; throws a Division error when the remaining leading
// coefficient of the denominator vanishes or the numerator lacks that power.
template <class T>
QPowerSeries<T> series_divide(const QPowerSeries<T>& numer, const RFSeries& denom);

// Exact numbers and polynomials from the generating functions
//   t e_q(xt)/(eps_q(t) - 1) = sum b_n(x) t^n/[n]!,   t E_q(xt)/(eps_q(t) - 1) = sum B_n(x) t^n/[n]!,
//   2 e_q(xt)/(eps_q(t) + 1) = sum e_n(x) t^n/[n]!,   2 E_q(xt)/(eps_q(t) + 1) = sum E_n(x) t^n/[n]!,
//   2t/(eps_q(t) + 1) = sum G_n t^n/[n]!.
std::vector<RF> q_bernoulli_numbers(long N);
enum class BernoulliKind { Little, Big };  // b_n and B_n
XPoly q_bernoulli_poly(long n, BernoulliKind kind);
// b_n(x) = sum_k qbinom(n,k) beta_{n-k} x^k
XPoly q_bernoulli_poly_from_numbers(long n, const std::vector<RF>& beta);
std::vector<XPoly> q_bernoulli_polys(long N, BernoulliKind kind);

struct EulerFamily {
    std::vector<XPoly> e;          // e_n(x;q)
    std::vector<XPoly> E;          // E_n(x;q)
    std::vector<RF> tilde;         // first-kind numbers E~_n = e_n(0) = E_n(0)
    std::vector<RF> genocchi;      // G_n
    std::vector<RF> second_E;      // 2^n E_n(1/2;q)
    std::vector<RF> second_e;      // 2^n e_n(1/2;q)
};
EulerFamily q_euler_polys_and_numbers(long N);

// Default truncation order for the exact tables.
inline constexpr long kDefaultSeriesOrder = 16;

Real eval_rf(const RF& rf, const PrecisionContext& ctx);  // at the context's exact q
Real eval_rf(const RF& rf, const BigRational& q, const PrecisionContext& ctx);
Real eval_rf(const RF& rf, const Real& q, const PrecisionContext& ctx);

// Plain classical Bernoulli numbers B_0..B_N (B_1 = -1/2) from
// sum_{k<=n} C(n+1,k) B_k = 0.
std::vector<BigRational> classical_bernoulli(long N);

}  // namespace qzeta
