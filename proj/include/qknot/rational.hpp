// Exact integer / rational arithmetic on top of GMP.
#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qknot {

class Int {
  mpz_t z_;

public:
  Int() { mpz_init(z_); }
  Int(long v) { mpz_init_set_si(z_, v); }
  explicit Int(const std::string& s) {
    if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
      mpz_clear(z_);
      throw std::invalid_argument("Int: bad integer literal: " + s);
    }
  }
  Int(const Int& o) { mpz_init_set(z_, o.z_); }
  Int(Int&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Int& operator=(const Int& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Int() { mpz_clear(z_); }

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

  friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.z_, a.z_, b.z_); return r; }
  friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.z_, a.z_, b.z_); return r; }
  friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.z_, a.z_, b.z_); return r; }
  friend Int operator-(const Int& a) { Int r; mpz_neg(r.z_, a.z_); return r; }
  Int& operator+=(const Int& o) { mpz_add(z_, z_, o.z_); return *this; }
  Int& operator-=(const Int& o) { mpz_sub(z_, z_, o.z_); return *this; }
  Int& operator*=(const Int& o) { mpz_mul(z_, z_, o.z_); return *this; }

  friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
  friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }

  int sign() const { return mpz_sgn(z_); }
  bool fits_long() const { return mpz_fits_slong_p(z_); }
  long to_long() const { return mpz_get_si(z_); }

  static Int pow(const Int& a, unsigned long e) { Int r; mpz_pow_ui(r.raw(), a.raw(), e); return r; }
  static Int gcd(const Int& a, const Int& b) { Int r; mpz_gcd(r.raw(), a.raw(), b.raw()); return r; }
  static Int binom(unsigned long n, unsigned long k) { Int r; mpz_bin_uiui(r.raw(), n, k); return r; }
  static Int factorial(unsigned long n) { Int r; mpz_fac_ui(r.raw(), n); return r; }

  std::string str() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freef)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freef);
    freef(s, out.size() + 1);
    return out;
  }
};

// Rational in lowest terms, denominator > 0 (mpq canonical form).
class Rat {
  mpq_t q_;

public:
  Rat() { mpq_init(q_); }
  Rat(long v) { mpq_init(q_); mpq_set_si(q_, v, 1); }
  Rat(long num, long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, den);
    mpq_canonicalize(q_);
  }
  Rat(const Int& num, const Int& den) {
    if (den.sign() == 0) throw std::domain_error("Rat: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
  }
  explicit Rat(const Int& num) {
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
  }
  // Accepts "p", "-p/q".
  explicit Rat(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
      mpq_clear(q_);
      throw std::invalid_argument("Rat: bad rational literal: " + s);
    }
    mpq_canonicalize(q_);
  }
  Rat(const Rat& o) { mpq_init(q_); mpq_set(q_, o.q_); }
  Rat(Rat&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
  Rat& operator=(const Rat& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rat() { mpq_clear(q_); }

  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

  Int num() const { Int r; mpz_set(r.raw(), mpq_numref(q_)); return r; }
  Int den() const { Int r; mpz_set(r.raw(), mpq_denref(q_)); return r; }

  friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.q_, a.q_, b.q_); return r; }
  friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.q_, a.q_, b.q_); return r; }
  friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.q_, a.q_, b.q_); return r; }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.sign() == 0) throw std::domain_error("Rat: division by zero");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rat operator-(const Rat& a) { Rat r; mpq_neg(r.q_, a.q_); return r; }
  Rat& operator+=(const Rat& o) { mpq_add(q_, q_, o.q_); return *this; }
  Rat& operator-=(const Rat& o) { mpq_sub(q_, q_, o.q_); return *this; }
  Rat& operator*=(const Rat& o) { mpq_mul(q_, q_, o.q_); return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Rat inv() const {
    if (sign() == 0) throw std::domain_error("Rat: inverse of zero");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
  }

  static Rat pow(const Rat& a, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? a : a.inv();
    unsigned long n = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
    return r;
  }

  double to_double() const { return mpq_get_d(q_); }

  // "p/q" with no denominator printed when q == 1.
  std::string str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freef)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freef);
    freef(s, out.size() + 1);
    return out;
  }
};

inline long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace qknot
