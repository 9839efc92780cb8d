// Arbitrary-precision real numbers over MPFR with value semantics.
//
// Every Real carries its own precision in bits.  Binary operations round to
// the larger of the two operand precisions, so precision never silently
// degrades below what the inputs carry.
#pragma once

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace qknot {

class Real {
  mpfr_t x_;

public:
  explicit Real(mpfr_prec_t prec = 128) {
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
  }
  Real(long v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_si(x_, v, MPFR_RNDN);
  }
  Real(double v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_d(x_, v, MPFR_RNDN);
  }
  Real(const Rat& v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_q(x_, v.raw(), MPFR_RNDN);
  }
  Real(const Int& v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_z(x_, v.raw(), MPFR_RNDN);
  }
  Real(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    if (mpfr_set_str(x_, s.c_str(), 10, MPFR_RNDN) != 0 && s != "0") {
      // mpfr_set_str returns 0 on exact, nonzero on inexact OR failure; check parse.
      mpfr_t probe;
      mpfr_init2(probe, 32);
      int bad = mpfr_set_str(probe, s.c_str(), 10, MPFR_RNDN) == -1;
      mpfr_clear(probe);
      if (bad) {
        mpfr_clear(x_);
        throw std::invalid_argument("Real: bad decimal literal: " + s);
      }
    }
  }
  Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

  static mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

#define QKNOT_REAL_BINOP(op, fn)                              \
  friend Real operator op(const Real& a, const Real& b) {     \
    Real r(join(a, b));                                       \
    fn(r.x_, a.x_, b.x_, MPFR_RNDN);                          \
    return r;                                                 \
  }
  QKNOT_REAL_BINOP(+, mpfr_add)
  QKNOT_REAL_BINOP(-, mpfr_sub)
  QKNOT_REAL_BINOP(*, mpfr_mul)
  QKNOT_REAL_BINOP(/, mpfr_div)
#undef QKNOT_REAL_BINOP

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.x_, a.x_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) { *this = *this + o; return *this; }
  Real& operator-=(const Real& o) { *this = *this - o; return *this; }
  Real& operator*=(const Real& o) { *this = *this * o; return *this; }
  Real& operator/=(const Real& o) { *this = *this / o; return *this; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_); }
  bool is_finite() const { return mpfr_number_p(x_) != 0; }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }

  // log2 of magnitude; very negative for zero.
  long exp2() const { return is_zero() ? -1000000000L : (long)mpfr_get_exp(x_); }

#define QKNOT_REAL_UNFN(name, fn)      \
  friend Real name(const Real& a) {    \
    Real r(a.prec());                  \
    fn(r.x_, a.x_, MPFR_RNDN);         \
    return r;                          \
  }
  QKNOT_REAL_UNFN(abs, mpfr_abs)
  QKNOT_REAL_UNFN(sqrt, mpfr_sqrt)
  QKNOT_REAL_UNFN(exp, mpfr_exp)
  QKNOT_REAL_UNFN(log, mpfr_log)
  QKNOT_REAL_UNFN(sin, mpfr_sin)
  QKNOT_REAL_UNFN(cos, mpfr_cos)
  QKNOT_REAL_UNFN(tan, mpfr_tan)
  QKNOT_REAL_UNFN(atan, mpfr_atan)
  QKNOT_REAL_UNFN(log2, mpfr_log2)
#undef QKNOT_REAL_UNFN

  friend Real atan2(const Real& y, const Real& x) {
    Real r(join(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
  }
  friend Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
  }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
  }

  Real round_to(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.raw(), x_, MPFR_RNDN);
    return r;
  }

  // Decimal string with the given number of significant digits.
  std::string str(size_t digits = 30) const {
    if (!is_finite()) return "nan";
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = mant.size() && mant[0] == '-';
    std::string dig = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "");
    out += dig.substr(0, 1) + "." + dig.substr(1) + "e" + std::to_string((long)e - 1);
    return out;
  }
};

inline Real rat_to_real(const Rat& q, mpfr_prec_t prec) { return Real(q, prec); }

}  // namespace qknot
