// Numeric dilogarithm (principal branch, cut along [1,oo)), Rogers form,
// and the volume constants of the three knots.
//
// Region scheme: invert once to reach |z| <= 1, reflect once to reach
// Re z <= 1/2, then either the power series (|z| <= 1/2) or the Bernoulli
// expansion of Li2(e^w) in w = log z (the lune near the unit circle, where
// the Moebius orbit never leaves the circle).
#pragma once

#include <cmath>
#include <mutex>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace qknot {

namespace detail {

inline Rat bernoulli(long n) {
  static std::vector<Rat> cache = {Rat(1), Rat(-1, 2)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while ((long)cache.size() <= n) {
    long m = (long)cache.size();
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rat s(0);
    for (long j2 = 0; j2 < m; ++j2) s += Rat(Int::binom(m + 1, j2)) * cache[j2];
    cache.push_back(-s / Rat(Int::binom(m + 1, m)));
  }
  return cache[n];
}

inline Complex dilog_series(const Complex& z, mpfr_prec_t wp) {
  Complex sum(wp), zk = z;
  Real tol(wp);
  mpfr_set_ui_2exp(tol.raw(), 1, -(long)wp, MPFR_RNDN);
  for (long k = 1;; ++k) {
    Complex term = zk / Real((double)k * (double)k, wp);
    sum += term;
    if (abs(term) < tol) break;
    zk *= z;
    if (k > 64 * (long)wp) throw error("dilog_series: no convergence");
  }
  return sum;
}

// Li2(e^w) = pi^2/6 - w log(-w) + w - w^2/4 - sum_k B_{2k} w^{2k+1}/((2k+1) 2k (2k)!)
// convergent for |w| < 2 pi; used for |w| <= ~1.05 pi.
inline Complex dilog_log_series(const Complex& w, mpfr_prec_t wp) {
  Real pi = Real::pi(wp);
  Complex acc = Complex(pi * pi / Real(6L, wp)) - w * log(-w) + w -
                w * w / Real(4L, wp);
  Complex w2 = w * w;
  Complex pw = w * w2;  // w^{2k+1}, k = 1
  Real fact(2L, wp);    // (2k)!
  Real tol(wp);
  mpfr_set_ui_2exp(tol.raw(), 1, -(long)wp, MPFR_RNDN);
  for (long k = 1;; ++k) {
    Real denom = fact * Real((double)(2 * k * (2 * k + 1)), wp);
    Complex term = Complex(Rat(bernoulli(2 * k)), wp) * pw / denom;
    acc -= term;
    if (abs(term) < tol) break;
    pw *= w2;
    fact *= Real((double)((2 * k + 1) * (2 * k + 2)), wp);
    if (k > 4 * (long)wp) throw error("dilog_log_series: no convergence");
  }
  return acc;
}

inline Complex dilog_impl(const Complex& z, mpfr_prec_t wp) {
  Real pi = Real::pi(wp);
  Complex pi2_6 = Complex(pi * pi / Real(6L, wp));
  Complex one(1L, wp);
  if (z.is_zero()) return Complex(wp);
  if ((z - one).is_zero()) return pi2_6;
  if (norm2(z) > Real(1L, wp)) {
    Complex L = log(-z);
    return -dilog_impl(inv(z), wp) - pi2_6 - Complex(Rat(1, 2), wp) * L * L;
  }
  if (z.re > Real(1L, wp) / Real(2L, wp))
    return pi2_6 - log(z) * log(one - z) - dilog_impl(one - z, wp);
  if (norm2(z) <= Real(0.25, wp)) return dilog_series(z, wp);
  return dilog_log_series(log(z), wp);
}

}  // namespace detail

inline Complex dilog(const Complex& z, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 48;
  return detail::dilog_impl(z.round_to(wp), wp).round_to(prec);
}

// Rogers dilogarithm R(z) = Li2(z) + log(z) log(1-z)/2.
inline Complex rogers_dilog(const Complex& z, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 16;
  Complex zz = z.round_to(wp);
  return (dilog(zz, wp) +
          Complex(Rat(1, 2), wp) * log(zz) * log(Complex(1L, wp) - zz))
      .round_to(prec);
}

// V(4_1) = 2 Im Li2(e^{i pi/3}) and C = V / 2 pi, at twice working precision.
inline Real volume_41(mpfr_prec_t prec) {
  mpfr_prec_t wp = 2 * prec;
  Real pi = Real::pi(wp);
  Complex z(cos(pi / Real(3L, wp)), sin(pi / Real(3L, wp)));
  return (Real(2L, wp) * dilog(z, wp).im).round_to(prec);
}

inline Real vol_const_C(mpfr_prec_t prec) {
  mpfr_prec_t wp = 2 * prec;
  return (volume_41(wp) / (Real(2L, wp) * Real::pi(wp))).round_to(prec);
}

// Brute-force oracle for V: 2 sum_k sin(k pi/3)/k^2 summed directly.
inline double volume_41_direct_sum(long K) {
  double s = std::sqrt(3.0) / 2.0;
  double pat[6] = {s, s, 0.0, -s, -s, 0.0};
  double sum = 0;
  for (long k = K; k >= 1; --k) sum += 2.0 * pat[(k - 1) % 6] / ((double)k * k);
  return sum;
}

}  // namespace qknot
