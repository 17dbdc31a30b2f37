#include "qzeta/qnumbers.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace qzeta {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(const BigRational& c) {
    if (c != 0) {
        c_.push_back(c);
        c_.back().canonicalize();  // gmpxx does not reduce BigRational(p, q)
    }
}

QPoly::QPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

QPoly QPoly::monomial(const BigRational& c, long degree) {
    QPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<size_t>(degree) + 1, BigRational(0));
    p.c_.back() = c;
    p.c_.back().canonicalize();
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational QPoly::coeff(long i) const {
    if (i < 0 || i > degree()) return BigRational(0);
    return c_[static_cast<size_t>(i)];
}

long QPoly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return -1;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRational(0));
    BigRational t;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            t = a.c_[i] * b.c_[j];
            r.c_[i + j] += t;
        }
    }
    r.trim();
    return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const BigRational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

void QPoly::divmod(const QPoly& d, QPoly& quotient, QPoly& remainder) const {
    if (d.is_zero()) throw Error(ErrorKind::Division, "polynomial division by zero");
    remainder = *this;
    quotient = QPoly();
    if (degree() < d.degree()) return;
    std::vector<BigRational> qc(static_cast<size_t>(degree() - d.degree() + 1), BigRational(0));
    const BigRational& lead = d.leading();
    auto& r = remainder.c_;
    for (long k = degree() - d.degree(); k >= 0; --k) {
        size_t top = static_cast<size_t>(k + d.degree());
        if (top >= r.size() || r[top] == 0) continue;
        BigRational f = r[top] / lead;
        qc[static_cast<size_t>(k)] = f;
        for (size_t j = 0; j < d.c_.size(); ++j) r[static_cast<size_t>(k) + j] -= f * d.c_[j];
    }
    remainder.trim();
    quotient = QPoly(std::move(qc));
}

bool QPoly::divides_by(const QPoly& d, QPoly* quotient) const {
    if (d.degree() > degree()) return is_zero();
    QPoly qq, rr;
    divmod(d, qq, rr);
    if (!rr.is_zero()) return false;
    if (quotient) *quotient = std::move(qq);
    return true;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    BigRational inv = 1 / leading();
    QPoly r = *this;
    r *= inv;
    return r;
}

BigRational QPoly::eval(const BigRational& q) const {
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

Real QPoly::eval(const Real& q) const {
    Real acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Real(*it);
    return acc;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const BigRational& c = c_[i];
        if (c == 0) continue;
        BigRational a = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << to_string(a);
            continue;
        }
        if (a != 1) out << to_string(a) << '*';
        out << var;
        if (i > 1) out << '^' << i;
    }
    return out.str();
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly qq, r;
        a.divmod(b, qq, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

namespace {

long totient(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::recursive_mutex g_cyclo_mutex;
std::map<long, QPoly> g_cyclo;

QPoly pow(const QPoly& p, long e) {
    QPoly r(1);
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

// Strips every cyclotomic factor it can find from p (assumed monic when a
// full factorization is wanted). Returns the leftover cofactor.
QPoly strip_cyclotomic(QPoly p, std::map<long, long>& found) {
    long bound = 4 * std::max(p.degree(), 1L) + 8;
    for (long d = 1; d <= bound && p.degree() > 0; ++d) {
        if (totient(d) > p.degree()) continue;
        const QPoly& phi = cyclotomic(d);
        QPoly quo;
        while (p.degree() >= phi.degree() && p.divides_by(phi, &quo)) {
            p = std::move(quo);
            ++found[d];
        }
    }
    return p;
}

}  // namespace

const QPoly& cyclotomic(long d) {
    if (d < 1) throw Error(ErrorKind::Domain, "cyclotomic index must be positive");
    std::lock_guard<std::recursive_mutex> lock(g_cyclo_mutex);
    auto it = g_cyclo.find(d);
    if (it != g_cyclo.end()) return it->second;
    // q^d - 1 over the product of Phi_e for proper divisors e
    QPoly p = QPoly::monomial(BigRational(1), d) - QPoly(1);
    for (long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        QPoly quo, rem;
        p.divmod(cyclotomic(e), quo, rem);
        p = std::move(quo);
    }
    return g_cyclo.emplace(d, std::move(p)).first->second;
}

namespace {

// Fill the cache in increasing order so that every divisor is present.
void ensure_cyclotomic_upto(long n) {
    for (long d = 1; d <= n; ++d) (void)cyclotomic(d);
}

}  // namespace

// ---------------------------------------------------------------- RationalFunctionQ

RationalFunctionQ::RationalFunctionQ(const BigRational& c) : num_(c), den_(1) {}

RationalFunctionQ::RationalFunctionQ(const QPoly& p) : num_(p), den_(1) {}

RationalFunctionQ::RationalFunctionQ(const QPoly& num, const QPoly& den) : num_(num), den_(den) {
    factored_ = false;
    normalize();
}

void RationalFunctionQ::rebuild_den() {
    QPoly d(1);
    for (const auto& [k, e] : cyc_) d *= pow(cyclotomic(k), e);
    den_ = std::move(d);
}

void RationalFunctionQ::cancel_factored() {
    for (auto it = cyc_.begin(); it != cyc_.end();) {
        const QPoly& phi = cyclotomic(it->first);
        QPoly quo;
        while (it->second > 0 && num_.degree() >= phi.degree() && num_.divides_by(phi, &quo)) {
            num_ = std::move(quo);
            --it->second;
        }
        if (it->second == 0) it = cyc_.erase(it);
        else ++it;
    }
}

void RationalFunctionQ::normalize() {
    if (den_.is_zero()) throw Error(ErrorKind::Division, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(1);
        cyc_.clear();
        factored_ = true;
        return;
    }
    BigRational inv = 1 / den_.leading();
    num_ *= inv;
    den_ *= inv;
    ensure_cyclotomic_upto(4 * std::max(den_.degree(), 1L) + 8);
    std::map<long, long> found;
    QPoly rest = strip_cyclotomic(den_, found);
    if (rest.degree() == 0) {
        // rest is the constant 1 because den_ and every Phi_d are monic
        cyc_ = std::move(found);
        factored_ = true;
        cancel_factored();
        rebuild_den();
        return;
    }
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        QPoly a, b, r;
        num_.divmod(g, a, r);
        den_.divmod(g, b, r);
        num_ = std::move(a);
        den_ = std::move(b);
    }
    inv = 1 / den_.leading();
    num_ *= inv;
    den_ *= inv;
    cyc_.clear();
    factored_ = false;
}

RationalFunctionQ RationalFunctionQ::bracket(long n) {
    if (n < 0) throw Error(ErrorKind::Domain, "q-bracket index must be >= 0");
    std::vector<BigRational> c(static_cast<size_t>(n), BigRational(1));
    return RationalFunctionQ(QPoly(std::move(c)));
}

RationalFunctionQ RationalFunctionQ::factorial(long n) {
    RationalFunctionQ r(1);
    for (long k = 2; k <= n; ++k) r *= bracket(k);
    return r;
}

RationalFunctionQ RationalFunctionQ::binomial(long n, long k) {
    if (k < 0 || k > n) return RationalFunctionQ(0);
    auto ints = q_binomial_coefficients(n, k);
    std::vector<BigRational> c;
    c.reserve(ints.size());
    for (auto& z : ints) c.emplace_back(z);
    return RationalFunctionQ(QPoly(std::move(c)));
}

RationalFunctionQ RationalFunctionQ::q_power(long n) {
    if (n >= 0) return RationalFunctionQ(QPoly::monomial(BigRational(1), n));
    return RationalFunctionQ(QPoly(1), QPoly::monomial(BigRational(1), -n));
}

RationalFunctionQ RationalFunctionQ::operator-() const {
    RationalFunctionQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunctionQ& RationalFunctionQ::operator+=(const RationalFunctionQ& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (factored_ && o.factored_) {
        std::map<long, long> lcm = cyc_;
        for (const auto& [k, e] : o.cyc_) lcm[k] = std::max(lcm[k], e);
        QPoly a = num_, b = o.num_;
        for (const auto& [k, e] : lcm) {
            auto mine = cyc_.find(k);
            long em = mine == cyc_.end() ? 0 : mine->second;
            auto theirs = o.cyc_.find(k);
            long et = theirs == o.cyc_.end() ? 0 : theirs->second;
            if (e > em) a *= pow(cyclotomic(k), e - em);
            if (e > et) b *= pow(cyclotomic(k), e - et);
        }
        num_ = a + b;
        if (num_.is_zero()) return *this = RationalFunctionQ();
        cyc_ = std::move(lcm);
        cancel_factored();
        rebuild_den();
        return *this;
    }
    QPoly n = num_ * o.den_ + o.num_ * den_;
    QPoly d = den_ * o.den_;
    return *this = RationalFunctionQ(n, d);
}

RationalFunctionQ& RationalFunctionQ::operator-=(const RationalFunctionQ& o) { return *this += -o; }

RationalFunctionQ& RationalFunctionQ::operator*=(const RationalFunctionQ& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunctionQ();
    if (factored_ && o.factored_) {
        num_ *= o.num_;
        for (const auto& [k, e] : o.cyc_) cyc_[k] += e;
        cancel_factored();
        rebuild_den();
        return *this;
    }
    return *this = RationalFunctionQ(num_ * o.num_, den_ * o.den_);
}

RationalFunctionQ RationalFunctionQ::inverse() const {
    if (is_zero()) throw Error(ErrorKind::Division, "inverse of the zero rational function");
    if (num_.is_constant()) {
        RationalFunctionQ r(den_);
        r *= RationalFunctionQ(1 / num_.leading());
        return r;
    }
    return RationalFunctionQ(den_, num_);
}

RationalFunctionQ& RationalFunctionQ::operator/=(const RationalFunctionQ& o) { return *this *= o.inverse(); }

BigRational RationalFunctionQ::eval(const BigRational& q) const {
    BigRational d = den_.eval(q);
    if (d == 0) throw Error(ErrorKind::Division, "rational function denominator vanishes at q = " + to_string(q));
    return num_.eval(q) / d;
}

namespace {

std::string factor_str(const QPoly& p, long e) {
    std::string s = p.str();
    bool compound = p.coeffs().size() > 1 && (p.low_degree() != p.degree());
    if (compound || (e > 1 && s.find('*') != std::string::npos)) s = "(" + s + ")";
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

// Content as a positive rational plus the integer primitive part.
BigRational content(const QPoly& p) {
    BigInt g(0), l(1);
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        BigInt n = abs(c.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    BigRational r(g, l);
    r.canonicalize();
    return r;
}

}  // namespace

std::string RationalFunctionQ::str() const {
    if (is_zero()) return "0";
    BigRational c = content(num_);
    if (num_.leading() < 0) c = -c;
    long m = num_.low_degree();
    QPoly prim = num_;
    prim *= 1 / c;
    {
        std::vector<BigRational> shifted(prim.coeffs().begin() + m, prim.coeffs().end());
        prim = QPoly(std::move(shifted));
    }
    std::map<long, long> nf;
    ensure_cyclotomic_upto(4 * std::max(prim.degree(), 1L) + 8);
    QPoly rest = strip_cyclotomic(prim, nf);
    // rest may carry a sign once the monic cyclotomic factors are removed
    if (rest.is_constant() && rest.leading() != 1) {
        c *= rest.leading();
        rest = QPoly(1);
    }

    std::vector<std::string> top;
    if (m == 1) top.push_back("q");
    else if (m > 1) top.push_back("q^" + std::to_string(m));
    for (const auto& [k, e] : nf) top.push_back(factor_str(cyclotomic(k), e));
    if (!rest.is_constant()) top.push_back(factor_str(rest, 1));

    std::vector<std::string> bottom;
    BigInt cn = c.get_num(), cd = c.get_den();
    if (cd != 1) bottom.push_back(cd.get_str());
    if (factored_) {
        for (const auto& [k, e] : cyc_) bottom.push_back(factor_str(cyclotomic(k), e));
    } else if (!den_.is_constant()) {
        bottom.push_back(factor_str(den_, 1));
    }

    std::string out = cn < 0 ? "-" : "";
    BigInt an = abs(cn);
    if (an != 1 || top.empty()) top.insert(top.begin(), an.get_str());
    for (size_t i = 0; i < top.size(); ++i) out += (i ? "*" : "") + top[i];
    if (!bottom.empty()) {
        std::string b;
        for (size_t i = 0; i < bottom.size(); ++i) b += (i ? "*" : "") + bottom[i];
        bool wrap = bottom.size() > 1;
        out += "/" + (wrap ? "(" + b + ")" : b);
    }
    return out;
}

// ---------------------------------------------------------------- XPoly

XPoly::XPoly(const RF& c) {
    if (!c.is_zero()) c_.push_back(c);
}

XPoly::XPoly(std::vector<RF> coeffs) : c_(std::move(coeffs)) { trim(); }

XPoly XPoly::monomial(const RF& c, long degree) {
    XPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(degree) + 1, RF());
    p.c_.back() = c;
    return p;
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RF XPoly::coeff(long i) const {
    if (i < 0 || i > degree()) return RF();
    return c_[static_cast<size_t>(i)];
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) { return *this += -o; }

XPoly& XPoly::operator*=(const RF& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

XPoly& XPoly::operator/=(const RF& c) { return *this *= c.inverse(); }

RF XPoly::eval(const BigRational& x) const {
    RF acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * RF(x) + *it;
    return acc;
}

BigRational XPoly::eval(const BigRational& x, const BigRational& q) const {
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->eval(q);
    return acc;
}

// ---------------------------------------------------------------- series

namespace {

// Gaussian binomials as rational functions, cached by row.
const std::vector<RF>& binomial_row(long n) {
    static std::mutex mu;
    static std::vector<std::vector<RF>> rows;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(rows.size()) <= n) {
        long r = static_cast<long>(rows.size());
        std::vector<RF> row;
        for (long k = 0; k <= r; ++k) row.push_back(RF::binomial(r, k));
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(n)];
}

// [n]!/[n+m]! = 1/([n+1]...[n+m])
RF falling_ratio(long n, long m) {
    RF r(1);
    for (long j = n + 1; j <= n + m; ++j) {
        r *= RF(QPoly(1), RF::bracket(j).num());
    }
    return r;
}

bool is_zero_coeff(const RF& x) { return x.is_zero(); }
bool is_zero_coeff(const XPoly& x) { return x.is_zero(); }

RFSeries eps_series(long N, long shift) {
    if (N < 1) throw Error(ErrorKind::Domain, "series order must be >= 1");
    RFSeries s;
    for (long n = 0; n <= N; ++n) {
        QPoly sum;
        const auto& row = binomial_row(n);
        for (long k = 0; k <= n; ++k) {
            long e = k * (k - 1) / 2;
            QPoly shifted = row[static_cast<size_t>(k)].num() * QPoly::monomial(BigRational(1), e);
            sum += shifted;
        }
        BigRational scale(1, 1);
        mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), static_cast<mp_bitcnt_t>(n));
        scale.canonicalize();
        sum *= scale;
        RF c(sum);
        if (n == 0) c += RF(shift);
        s.c.push_back(c);
    }
    return s;
}

}  // namespace

RFSeries series_for_eps_minus_one(long N) { return eps_series(N, -1); }
RFSeries series_for_eps_plus_one(long N) { return eps_series(N, 1); }

template <class T>
QPowerSeries<T> series_multiply(const QPowerSeries<T>& a, const RFSeries& b) {
    QPowerSeries<T> r;
    long N = std::min(a.order(), b.order());
    for (long n = 0; n <= N; ++n) {
        const auto& row = binomial_row(n);
        T acc{};
        for (long k = 0; k <= n; ++k) {
            const T& ak = a.c[static_cast<size_t>(k)];
            const RF& bk = b.c[static_cast<size_t>(n - k)];
            if (is_zero_coeff(ak) || bk.is_zero()) continue;
            acc += ak * (row[static_cast<size_t>(k)] * bk);
        }
        r.c.push_back(acc);
    }
    return r;
}

template <class T>
QPowerSeries<T> series_divide(const QPowerSeries<T>& numer, const RFSeries& denom) {
    long m = 0;
    while (m <= denom.order() && denom.c[static_cast<size_t>(m)].is_zero()) ++m;
    if (m > denom.order()) throw Error(ErrorKind::Division, "series division by zero series");
    for (long i = 0; i < m && i <= numer.order(); ++i)
        if (!is_zero_coeff(numer.c[static_cast<size_t>(i)]))
            throw Error(ErrorKind::Division, "numerator lacks the denominator's leading power of t");
    long N = std::min(numer.order(), denom.order()) - m;
    if (N < 0) throw Error(ErrorKind::Division, "series too short for division");
    // strip t^m: c'_n = c_{n+m} [n]!/[n+m]!
    std::vector<RF> d(static_cast<size_t>(N) + 1);
    std::vector<T> u(static_cast<size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) {
        RF scale = falling_ratio(n, m);
        d[static_cast<size_t>(n)] = denom.c[static_cast<size_t>(n + m)] * scale;
        u[static_cast<size_t>(n)] = numer.c[static_cast<size_t>(n + m)] * scale;
    }
    RF lead_inv = d[0].inverse();
    QPowerSeries<T> r;
    for (long n = 0; n <= N; ++n) {
        const auto& row = binomial_row(n);
        T acc = u[static_cast<size_t>(n)];
        for (long k = 0; k < n; ++k) {
            const RF& dk = d[static_cast<size_t>(n - k)];
            const T& rk = r.c[static_cast<size_t>(k)];
            if (dk.is_zero() || is_zero_coeff(rk)) continue;
            acc -= rk * (row[static_cast<size_t>(k)] * dk);
        }
        r.c.push_back(acc * lead_inv);
    }
    return r;
}

template RFSeries series_multiply<RF>(const RFSeries&, const RFSeries&);
template XSeries series_multiply<XPoly>(const XSeries&, const RFSeries&);
template RFSeries series_divide<RF>(const RFSeries&, const RFSeries&);
template XSeries series_divide<XPoly>(const XSeries&, const RFSeries&);

// ---------------------------------------------------------------- numbers

namespace {

RF pow2(long n) {
    BigRational r(1);
    if (n >= 0) mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(n));
    else mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-n));
    return RF(r);
}

// t * exp-type numerator: coefficient of t^n/[n]! is [n] w_{n-1} x^{n-1}
XSeries shifted_numerator(long N, bool big) {
    XSeries s;
    s.c.emplace_back();
    for (long n = 1; n <= N; ++n) {
        long j = n - 1;
        RF w = big ? RF::q_power(j * (j - 1) / 2) : RF(1);
        s.c.push_back(XPoly::monomial(RF::bracket(n) * w, j));
    }
    return s;
}

XSeries plain_numerator(long N, bool big, long scale) {
    XSeries s;
    for (long n = 0; n <= N; ++n) {
        RF w = big ? RF::q_power(n * (n - 1) / 2) : RF(1);
        s.c.push_back(XPoly::monomial(w * RF(scale), n));
    }
    return s;
}

}  // namespace

std::vector<RF> q_bernoulli_numbers(long N) {
    if (N < 0) throw Error(ErrorKind::Domain, "N must be >= 0");
    RFSeries t;
    t.c.assign(static_cast<size_t>(N) + 2, RF());
    t.c[1] = RF(1);
    return series_divide(t, series_for_eps_minus_one(N + 1)).c;
}

std::vector<XPoly> q_bernoulli_polys(long N, BernoulliKind kind) {
    if (N < 0) throw Error(ErrorKind::Domain, "N must be >= 0");
    if (kind == BernoulliKind::Little) {
        auto beta = q_bernoulli_numbers(N);
        std::vector<XPoly> out;
        for (long n = 0; n <= N; ++n) out.push_back(q_bernoulli_poly_from_numbers(n, beta));
        return out;
    }
    return series_divide(shifted_numerator(N + 1, true), series_for_eps_minus_one(N + 1)).c;
}

XPoly q_bernoulli_poly(long n, BernoulliKind kind) { return q_bernoulli_polys(n, kind).back(); }

XPoly q_bernoulli_poly_from_numbers(long n, const std::vector<RF>& beta) {
    if (static_cast<long>(beta.size()) <= n) throw Error(ErrorKind::Domain, "not enough Bernoulli numbers");
    const auto& row = binomial_row(n);
    std::vector<RF> c;
    for (long k = 0; k <= n; ++k) c.push_back(row[static_cast<size_t>(k)] * beta[static_cast<size_t>(n - k)]);
    return XPoly(std::move(c));
}

EulerFamily q_euler_polys_and_numbers(long N) {
    if (N < 0) throw Error(ErrorKind::Domain, "N must be >= 0");
    long order = std::max(N, 1L);
    RFSeries plus = series_for_eps_plus_one(order + 1);
    EulerFamily f;
    f.e = series_divide(plain_numerator(order, false, 2), plus).c;
    f.E = series_divide(plain_numerator(order, true, 2), plus).c;
    f.e.resize(static_cast<size_t>(N) + 1);
    f.E.resize(static_cast<size_t>(N) + 1);
    RFSeries two_t;
    two_t.c.assign(static_cast<size_t>(order) + 2, RF());
    two_t.c[1] = RF(2);
    // the generating function 2t/(eps+1) keeps its t: no leading power to strip
    auto g = series_divide(two_t, plus).c;
    g.resize(static_cast<size_t>(N) + 1);
    f.genocchi = g;
    BigRational half(1, 2);
    for (long n = 0; n <= N; ++n) {
        f.tilde.push_back(f.E[static_cast<size_t>(n)].coeff(0));
        f.second_E.push_back(f.E[static_cast<size_t>(n)].eval(half) * pow2(n));
        f.second_e.push_back(f.e[static_cast<size_t>(n)].eval(half) * pow2(n));
    }
    return f;
}

Real eval_rf(const RF& rf, const BigRational& q, const PrecisionContext& ctx) {
    BigRational v = rf.eval(q);
    WorkingScope ws(ctx);
    return Real(v);
}

Real eval_rf(const RF& rf, const PrecisionContext& ctx) { return eval_rf(rf, ctx.q_exact(), ctx); }

Real eval_rf(const RF& rf, const Real& q, const PrecisionContext& ctx) {
    WorkingScope ws(ctx);
    Real d = rf.den().eval(q);
    if (d.is_zero()) throw Error(ErrorKind::Division, "rational function denominator vanishes");
    return rf.num().eval(q) / d;
}

std::vector<BigRational> classical_bernoulli(long N) {
    std::vector<BigRational> B;
    for (long n = 0; n <= N; ++n) {
        if (n == 0) {
            B.emplace_back(1);
            continue;
        }
        BigRational acc(0);
        BigInt binom(1);  // C(n+1, k)
        for (long k = 0; k < n; ++k) {
            acc += BigRational(binom) * B[static_cast<size_t>(k)];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        BigRational v = -acc / BigRational(n + 1);
        v.canonicalize();
        B.push_back(v);
    }
    return B;
}

}  // namespace qzeta
