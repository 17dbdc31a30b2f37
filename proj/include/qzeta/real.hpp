#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace qzeta {

// Precision (bits) used for every newly produced value on this thread.
mpfr_prec_t working_precision();
void set_working_precision(mpfr_prec_t bits);
mpfr_prec_t bits_for_digits(long digits);

// RAII guard: raises (or sets) the working precision for a block.
class PrecisionScope {
public:
    explicit PrecisionScope(mpfr_prec_t bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

// Arbitrary precision real. A copy keeps the source precision; every
// arithmetic result is rounded to the current working precision.
class Real {
public:
    Real();
    Real(int v);
    Real(long v);
    Real(unsigned long v);
    Real(double v);
    Real(const mpq_class& v);
    Real(const mpz_class& v);
    explicit Real(const std::string& decimal);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    ~Real();

    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // log10|x| as a double; -inf for zero.
    double log10_abs() const;
    mpq_class to_rational() const;

    // Scientific notation with exactly `digits` significant digits.
    std::string str(int digits) const;

    void swap(Real& o) noexcept { mpfr_swap(v_, o.v_); }

private:
    mpfr_t v_;
};

Real operator-(const Real& a);
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real pi();
// 10^e at working precision.
Real pow10(long e);

class Complex {
public:
    Complex() = default;
    Complex(const Real& re) : re_(re), im_(0) {}
    Complex(int re) : re_(re), im_(0) {}
    Complex(long re) : re_(re), im_(0) {}
    Complex(double re) : re_(re), im_(0) {}
    Complex(const Real& re, const Real& im) : re_(re), im_(im) {}

    const Real& real() const { return re_; }
    const Real& imag() const { return im_; }
    Real& real() { return re_; }
    Real& imag() { return im_; }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

private:
    Real re_{0};
    Real im_{0};
};

Complex operator-(const Complex& a);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
// Principal branch z^w.
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, long n);
Complex polar(const Real& r, const Real& theta);
Complex imag_unit();

}  // namespace qzeta
