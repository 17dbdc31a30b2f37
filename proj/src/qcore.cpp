#include "qzeta/qcore.hpp"

#include <cctype>
#include <cmath>

namespace qzeta {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config: return "config";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Pole: return "pole";
        case ErrorKind::Coverage: return "coverage";
        case ErrorKind::Localization: return "localization";
        case ErrorKind::Bracket: return "bracket";
        case ErrorKind::Quadrature: return "quadrature";
        case ErrorKind::Division: return "division";
    }
    return "unknown";
}

BigRational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw Error(ErrorKind::Config, "empty number");

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigRational num = parse_rational(text.substr(0, slash));
        BigRational den = parse_rational(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::Config, "zero denominator in " + raw);
        BigRational r = num / den;
        r.canonicalize();
        return r;
    }

    size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    bool any = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            any = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!any) throw Error(ErrorKind::Config, "not a number: " + raw);
    long exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') throw Error(ErrorKind::Config, "not a number: " + raw);
        std::string e = text.substr(i + 1);
        if (e.empty()) throw Error(ErrorKind::Config, "not a number: " + raw);
        size_t used = 0;
        try {
            exponent = std::stol(e, &used);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Config, "not a number: " + raw);
        }
        if (used != e.size()) throw Error(ErrorKind::Config, "not a number: " + raw);
    }
    BigInt mant(digits, 10);
    long shift = exponent - frac_digits;
    BigInt ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    BigRational r = shift >= 0 ? BigRational(mant * ten_pow) : BigRational(mant, ten_pow);
    r.canonicalize();
    return neg ? BigRational(-r) : r;
}

std::string to_string(const BigRational& r) { return r.get_str(10); }

PrecisionContext::PrecisionContext(const BigRational& q, long digits, std::optional<Real> tol)
    : q_exact_(q), digits_(digits) {
    if (q <= 0 || q >= 1) throw Error(ErrorKind::Config, "q must lie strictly between 0 and 1, got " + to_string(q));
    if (digits < 20) throw Error(ErrorKind::Config, "digits must be at least 20");
    PrecisionScope scope(working_bits());
    q_ = Real(q_exact_);
    one_minus_q_ = Real(BigRational(1 - q_exact_));
    log_q_ = log(q_);
    q_double_ = q_exact_.get_d();
    if (tol) {
        tol_ = *tol;
        tol_explicit_ = true;
        if (tol_.sign() <= 0) throw Error(ErrorKind::Config, "tol must be positive");
        if (tol_ < pow10(-digits)) throw Error(ErrorKind::Config, "tol must be at least 10^(-digits)");
    } else {
        tol_ = pow10(-(digits - 10));
    }
}

PrecisionContext PrecisionContext::parse(const std::string& q, long digits, const std::string& tol) {
    BigRational qr = parse_rational(q);
    if (tol.empty()) return PrecisionContext(qr, digits);
    BigRational t = parse_rational(tol);
    PrecisionScope scope(bits_for_digits(digits + kGuardDigits));
    return PrecisionContext(qr, digits, Real(t));
}

Real PrecisionContext::q_pow(long n) const {
    WorkingScope scope(*this);
    if (n == 0) return Real(1);
    if (n >= -4096 && n <= 4096) {
        unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
        BigInt num, den;
        mpz_pow_ui(num.get_mpz_t(), q_exact_.get_num_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), q_exact_.get_den_mpz_t(), e);
        return n > 0 ? Real(BigRational(num, den)) : Real(BigRational(den, num));
    }
    return pow(q_, n);
}

PrecisionContext PrecisionContext::with_digits(long digits) const {
    if (digits == digits_) return *this;
    // an explicit tolerance survives unless it is finer than the new resolution
    PrecisionScope scope(bits_for_digits(digits + kGuardDigits));
    std::optional<Real> t;
    if (tol_explicit_ && tol_ >= pow10(-digits)) t = tol_;
    return PrecisionContext(q_exact_, digits, t);
}

PrecisionContext PrecisionContext::with_q(const BigRational& q) const {
    std::optional<Real> t;
    if (tol_explicit_) t = tol_;
    return PrecisionContext(q, digits_, t);
}

Real q_bracket(long n, const PrecisionContext& ctx) {
    WorkingScope scope(ctx);
    if (n < 0) throw Error(ErrorKind::Domain, "q_bracket needs n >= 0");
    if (n <= 4096) return Real(q_bracket(n, ctx.q_exact()));
    return (Real(1) - ctx.q_pow(n)) / ctx.one_minus_q();
}

BigRational q_bracket(long n, const BigRational& q) {
    if (n < 0) throw Error(ErrorKind::Domain, "q_bracket needs n >= 0");
    BigRational s = 0, p = 1;
    for (long i = 0; i < n; ++i) {
        s += p;
        p *= q;
    }
    return s;
}

Real q_factorial(long n, const PrecisionContext& ctx) {
    WorkingScope scope(ctx);
    if (n < 0) throw Error(ErrorKind::Domain, "q_factorial needs n >= 0");
    Real r(1);
    for (long j = 2; j <= n; ++j) r *= q_bracket(j, ctx);
    return r;
}

BigRational q_factorial(long n, const BigRational& q) {
    if (n < 0) throw Error(ErrorKind::Domain, "q_factorial needs n >= 0");
    BigRational r = 1;
    for (long j = 2; j <= n; ++j) r *= q_bracket(j, q);
    return r;
}

Real q_binomial(long n, long k, const PrecisionContext& ctx) {
    if (k < 0 || n < 0 || k > n) throw Error(ErrorKind::Domain, "q_binomial needs 0 <= k <= n");
    WorkingScope scope(ctx);
    if (k > n - k) k = n - k;
    Real r(1);
    for (long i = 0; i < k; ++i) r = r * (Real(1) - ctx.q_pow(n - i)) / (Real(1) - ctx.q_pow(i + 1));
    return r;
}

std::vector<BigInt> q_binomial_coefficients(long n, long k) {
    if (k < 0 || n < 0 || k > n) throw Error(ErrorKind::Domain, "q_binomial needs 0 <= k <= n");
    // rows of [i choose j] for j <= k, via [i,j] = [i-1,j-1] + q^j [i-1,j]
    std::vector<std::vector<BigInt>> row(static_cast<size_t>(k + 1));
    row[0] = {1};
    for (long i = 1; i <= n; ++i) {
        for (long j = std::min(i, k); j >= 1; --j) {
            const auto& left = row[static_cast<size_t>(j - 1)];
            auto& cur = row[static_cast<size_t>(j)];
            std::vector<BigInt> next(std::max(left.size(), cur.size() + static_cast<size_t>(j)));
            for (size_t d = 0; d < left.size(); ++d) next[d] += left[d];
            for (size_t d = 0; d < cur.size(); ++d) next[d + static_cast<size_t>(j)] += cur[d];
            cur = std::move(next);
        }
    }
    auto out = row[static_cast<size_t>(k)];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

Complex q_pochhammer(const Complex& a, long n, const Real& base, const PrecisionContext& ctx) {
    if (n < 0) throw Error(ErrorKind::Domain, "q_pochhammer needs n >= 0");
    WorkingScope scope(ctx);
    Complex r(1);
    Complex b = a;
    for (long j = 0; j < n; ++j) {
        r = r * (Complex(1) - b);
        b = b * base;
    }
    return r;
}

Complex q_pochhammer(const Complex& a, long n, const PrecisionContext& ctx) {
    return q_pochhammer(a, n, ctx.q(), ctx);
}

namespace {

// log (b;base)_inf = -sum_m b^m / (m (1 - base^m)), valid and fast for |b| <= 1/2.
template <class T>
T log_pochhammer_tail(const T& b, const Real& base) {
    T sum(0);
    T bm = b;
    Real basem = base;
    Real eps = ldexp(Real(1), -static_cast<long>(working_precision()) - 4);
    double lb = abs(b).log10_abs();
    for (long m = 1;; ++m) {
        Real denom = Real(m) * (Real(1) - basem);
        T term = bm / denom;
        sum -= term;
        if (abs(term) < eps * (Real(1) + abs(sum)) && (m > 1 || lb < -1.0)) break;
        bm = bm * b;
        basem *= base;
        if (m > 100000) break;
    }
    return sum;
}

}  // namespace

Complex q_pochhammer_inf(const Complex& a, const Real& base, const PrecisionContext& ctx) {
    WorkingScope scope(ctx);
    if (a.is_zero()) return Complex(1);
    Complex r(1);
    Complex b = a;
    Real half("0.5");
    while (abs(b) > half) {
        r = r * (Complex(1) - b);
        b = b * base;
    }
    if (r.is_zero()) return r;
    return r * exp(log_pochhammer_tail(b, base));
}

Complex q_pochhammer_inf(const Complex& a, const PrecisionContext& ctx) { return q_pochhammer_inf(a, ctx.q(), ctx); }

Real q_pochhammer_inf(const Real& a, const Real& base, const PrecisionContext& ctx) {
    WorkingScope scope(ctx);
    if (a.is_zero()) return Real(1);
    Real r(1);
    Real b = a;
    Real half("0.5");
    while (abs(b) > half) {
        r *= Real(1) - b;
        b *= base;
    }
    if (r.is_zero()) return r;
    return r * exp(log_pochhammer_tail(b, base));
}

Complex q_gamma(const Complex& x, const Real& base, const PrecisionContext& ctx) {
    WorkingScope scope(ctx);
    if (x.is_real()) {
        const Real& xr = x.real();
        if (xr.sign() <= 0 && floor(xr) == xr) throw Error(ErrorKind::Pole, "Gamma_q has a pole at " + xr.str(10));
    }
    Complex qx = exp(x * log(base));
    Complex num = q_pochhammer_inf(Complex(base), base, ctx);
    Complex den = q_pochhammer_inf(qx, base, ctx);
    Complex scale = exp((Complex(1) - x) * log(Real(1) - base));
    return num / den * scale;
}

Complex q_gamma(const Complex& x, const PrecisionContext& ctx) { return q_gamma(x, ctx.q(), ctx); }

}  // namespace qzeta
