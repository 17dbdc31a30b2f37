#include "qzeta/real.hpp"

#include <cmath>
#include <stdexcept>

namespace qzeta {

namespace {
thread_local mpfr_prec_t g_bits = 64;

// Result slot at the current working precision.
struct Fresh {
    Real r;
};
}  // namespace

mpfr_prec_t working_precision() { return g_bits; }

void set_working_precision(mpfr_prec_t bits) {
    if (bits < MPFR_PREC_MIN) bits = MPFR_PREC_MIN;
    g_bits = bits;
}

mpfr_prec_t bits_for_digits(long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.321928094887362)) + 8;
}

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(g_bits) { set_working_precision(bits); }
PrecisionScope::~PrecisionScope() { g_bits = saved_; }

Real::Real() { mpfr_init2(v_, g_bits); mpfr_set_zero(v_, 1); }
Real::Real(int v) { mpfr_init2(v_, g_bits); mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(long v) { mpfr_init2(v_, g_bits); mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(unsigned long v) { mpfr_init2(v_, g_bits); mpfr_set_ui(v_, v, MPFR_RNDN); }
Real::Real(double v) { mpfr_init2(v_, g_bits); mpfr_set_d(v_, v, MPFR_RNDN); }
Real::Real(const mpq_class& v) { mpfr_init2(v_, g_bits); mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }
Real::Real(const mpz_class& v) { mpfr_init2(v_, g_bits); mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }

Real::Real(const std::string& decimal) {
    mpfr_init2(v_, g_bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a decimal number: " + decimal);
}

Real::Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real::~Real() { mpfr_clear(v_); }

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

#define QZ_COMPOUND(op, fn)                          \
    Real& Real::operator op(const Real& o) {         \
        if (mpfr_get_prec(v_) == g_bits) {           \
            fn(v_, v_, o.v_, MPFR_RNDN);             \
        } else {                                     \
            Fresh f;                                 \
            fn(f.r.get(), v_, o.v_, MPFR_RNDN);      \
            swap(f.r);                               \
        }                                            \
        return *this;                                \
    }
QZ_COMPOUND(+=, mpfr_add)
QZ_COMPOUND(-=, mpfr_sub)
QZ_COMPOUND(*=, mpfr_mul)
QZ_COMPOUND(/=, mpfr_div)
#undef QZ_COMPOUND

double Real::log10_abs() const {
    if (mpfr_zero_p(v_)) return -INFINITY;
    // x = m * 2^e with 0.5 <= |m| < 1
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

mpq_class Real::to_rational() const {
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    mpq_class r(m);
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

std::string Real::str(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    if (digits < 1) digits = 1;
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    // mantissa is 0.ddd * 10^e
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    long exp10 = static_cast<long>(e) - 1;
    if (exp10 != 0) out += "e" + std::to_string(exp10);
    return out;
}

Real operator-(const Real& a) { Fresh f; mpfr_neg(f.r.get(), a.get(), MPFR_RNDN); return std::move(f.r); }

#define QZ_BINARY(op, fn)                                   \
    Real operator op(const Real& a, const Real& b) {        \
        Fresh f;                                            \
        fn(f.r.get(), a.get(), b.get(), MPFR_RNDN);         \
        return std::move(f.r);                              \
    }
QZ_BINARY(+, mpfr_add)
QZ_BINARY(-, mpfr_sub)
QZ_BINARY(*, mpfr_mul)
QZ_BINARY(/, mpfr_div)
#undef QZ_BINARY

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }

#define QZ_UNARY(name, fn)                                  \
    Real name(const Real& x) {                              \
        Fresh f;                                            \
        fn(f.r.get(), x.get(), MPFR_RNDN);                  \
        return std::move(f.r);                              \
    }
QZ_UNARY(abs, mpfr_abs)
QZ_UNARY(sqrt, mpfr_sqrt)
QZ_UNARY(exp, mpfr_exp)
QZ_UNARY(log, mpfr_log)
QZ_UNARY(log1p, mpfr_log1p)
QZ_UNARY(log10, mpfr_log10)
QZ_UNARY(sin, mpfr_sin)
QZ_UNARY(cos, mpfr_cos)
QZ_UNARY(atan, mpfr_atan)
#undef QZ_UNARY

Real floor(const Real& x) { Fresh f; mpfr_floor(f.r.get(), x.get()); return std::move(f.r); }
Real round(const Real& x) { Fresh f; mpfr_round(f.r.get(), x.get()); return std::move(f.r); }

Real atan2(const Real& y, const Real& x) {
    Fresh f;
    mpfr_atan2(f.r.get(), y.get(), x.get(), MPFR_RNDN);
    return std::move(f.r);
}

Real pow(const Real& x, const Real& y) {
    Fresh f;
    mpfr_pow(f.r.get(), x.get(), y.get(), MPFR_RNDN);
    return std::move(f.r);
}

Real pow(const Real& x, long n) {
    Fresh f;
    mpfr_pow_si(f.r.get(), x.get(), n, MPFR_RNDN);
    return std::move(f.r);
}

Real ldexp(const Real& x, long e) {
    Fresh f;
    mpfr_mul_2si(f.r.get(), x.get(), e, MPFR_RNDN);
    return std::move(f.r);
}

Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi() { Fresh f; mpfr_const_pi(f.r.get(), MPFR_RNDN); return std::move(f.r); }

Real pow10(long e) {
    Fresh f;
    mpfr_ui_pow_ui(f.r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(f.r.get(), 1, f.r.get(), MPFR_RNDN);
    return std::move(f.r);
}

// complex

Complex& Complex::operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
Complex& Complex::operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
Complex& Complex::operator*=(const Complex& o) { *this = *this * o; return *this; }
Complex& Complex::operator/=(const Complex& o) { *this = *this / o; return *this; }

Complex operator-(const Complex& a) { return {-a.real(), -a.imag()}; }
Complex operator+(const Complex& a, const Complex& b) { return {a.real() + b.real(), a.imag() + b.imag()}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.real() - b.real(), a.imag() - b.imag()}; }

Complex operator*(const Complex& a, const Complex& b) {
    if (b.is_real()) return a * b.real();
    if (a.is_real()) return a.real() * b;
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Complex operator/(const Complex& a, const Complex& b) {
    if (b.is_real()) return a / b.real();
    // scale-free form (Smith's algorithm)
    if (abs(b.real()) >= abs(b.imag())) {
        Real r = b.imag() / b.real();
        Real d = b.real() + b.imag() * r;
        return {(a.real() + a.imag() * r) / d, (a.imag() - a.real() * r) / d};
    }
    Real r = b.real() / b.imag();
    Real d = b.real() * r + b.imag();
    return {(a.real() * r + a.imag()) / d, (a.imag() * r - a.real()) / d};
}

Complex operator*(const Complex& a, const Real& b) { return {a.real() * b, a.imag() * b}; }
Complex operator*(const Real& a, const Complex& b) { return {a * b.real(), a * b.imag()}; }
Complex operator/(const Complex& a, const Real& b) { return {a.real() / b, a.imag() / b}; }

Complex conj(const Complex& z) { return {z.real(), -z.imag()}; }

Real abs(const Complex& z) {
    if (z.is_real()) return abs(z.real());
    Fresh f;
    mpfr_hypot(f.r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
    return std::move(f.r);
}

Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }

Complex exp(const Complex& z) {
    if (z.is_real()) return Complex(exp(z.real()));
    Real m = exp(z.real());
    return {m * cos(z.imag()), m * sin(z.imag())};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
    if (z.is_real() && z.real().sign() >= 0) return Complex(sqrt(z.real()));
    Real r = abs(z);
    Real re = sqrt((r + z.real()) / Real(2));
    Real im = sqrt((r - z.real()) / Real(2));
    if (z.imag().sign() < 0) im = -im;
    return {re, im};
}

Complex sin(const Complex& z) {
    if (z.is_real()) return Complex(sin(z.real()));
    Real e = exp(z.imag());
    Real ei = Real(1) / e;
    Real ch = (e + ei) / Real(2);
    Real sh = (e - ei) / Real(2);
    return {sin(z.real()) * ch, cos(z.real()) * sh};
}

Complex cos(const Complex& z) {
    if (z.is_real()) return Complex(cos(z.real()));
    Real e = exp(z.imag());
    Real ei = Real(1) / e;
    Real ch = (e + ei) / Real(2);
    Real sh = (e - ei) / Real(2);
    return {cos(z.real()) * ch, -(sin(z.real()) * sh)};
}

Complex pow(const Complex& z, const Complex& w) {
    if (z.is_zero()) {
        if (w.is_zero()) return Complex(1);
        return Complex(0);
    }
    if (z.is_real() && z.real().sign() > 0 && w.is_real()) return Complex(pow(z.real(), w.real()));
    return exp(w * log(z));
}

Complex pow(const Complex& z, long n) {
    if (z.is_real()) return Complex(pow(z.real(), n));
    Complex base = n < 0 ? Complex(1) / z : z;
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    Complex acc(1);
    while (e) {
        if (e & 1UL) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

Complex imag_unit() { return {Real(0), Real(1)}; }

}  // namespace qzeta
