// Complex numbers over Real.  Principal branches throughout: log and all
// fractional powers cut along the negative real axis.
#pragma once

#include <algorithm>
#include <string>

#include "real.hpp"

namespace qknot {

class Complex {
public:
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(long r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}
  Complex(const Rat& r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}
  explicit Complex(const Real& r) : re(r), im(0L, r.prec()) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

  static Complex i(mpfr_prec_t prec) { return Complex(Real(0L, prec), Real(1L, prec)); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw std::domain_error("Complex: division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
  Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend Complex conj(const Complex& a) { return {a.re, -a.im}; }
  friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
  friend Real arg(const Complex& a) { return atan2(a.im, a.re); }
  friend Real norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }

  friend Complex inv(const Complex& a) { return Complex(1L, a.prec()) / a; }

  friend Complex exp(const Complex& a) {
    Real m = exp(a.re);
    Real s(a.prec()), c(a.prec());
    mpfr_sin_cos(s.raw(), c.raw(), a.im.raw(), MPFR_RNDN);
    return {m * c, m * s};
  }
  friend Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }
  friend Complex sqrt(const Complex& a) {
    if (a.im.is_zero() && a.re.sign() >= 0) return Complex(sqrt(a.re), Real(0L, a.prec()));
    // Principal square root via half-argument.
    Real r = abs(a);
    Real u = sqrt((r + a.re) / Real(2L, a.prec()));
    Real v = sqrt((r - a.re) / Real(2L, a.prec()));
    if (a.im.sign() < 0) v = -v;
    return {u, v};
  }
  friend Complex pow(const Complex& a, const Complex& b) { return exp(b * log(a)); }
  friend Complex pow(const Complex& a, const Real& b) { return exp(Complex(b * log(abs(a)), b * arg(a))); }
  friend Complex pow_si(const Complex& a, long e) {
    if (e == 0) return Complex(1L, a.prec());
    Complex base = e > 0 ? a : inv(a);
    unsigned long n = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    Complex r(1L, a.prec());
    while (n) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  // log2 of magnitude (crude, from the larger component).
  long exp2() const { return std::max(re.exp2(), im.exp2()); }

  Complex round_to(mpfr_prec_t p) const { return {re.round_to(p), im.round_to(p)}; }

  std::string str(size_t digits = 30) const {
    return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + abs(im).str(digits) + "i";
  }
};

// e(x) = exp(2*pi*i*x)
inline Complex e_of(const Complex& x) {
  mpfr_prec_t p = x.prec();
  Real two_pi = Real(2L, p) * Real::pi(p);
  return exp(Complex(-two_pi * x.im, two_pi * x.re));
}

inline Complex e_of(const Rat& x, mpfr_prec_t prec) {
  Real two_pi = Real(2L, prec) * Real::pi(prec);
  Real t = Real(x, prec) * two_pi;
  Real s(prec), c(prec);
  mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
  return {c, s};
}

// Magnitude of the difference in ulps of 2^-bits: returns the number of
// agreeing bits between a and b, relative to |a|.
inline long agree_bits(const Complex& a, const Complex& b) {
  Complex d = a - b;
  if (d.is_zero()) return a.prec();
  long ea = a.exp2(), ed = d.exp2();
  return ea - ed;
}

inline long agree_digits(const Complex& a, const Complex& b) {
  long bits = agree_bits(a, b);
  return (long)(bits * 0.30102999566398119521);
}

}  // namespace qknot
