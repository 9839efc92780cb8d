// Term-wise arbitrary-precision evaluation of the knot q-series as convergent
// Nahm sums at |q| != 1.  Terms are generated by their first-order recursions
// in exact-to-precision arithmetic and summed until a certified geometric
// tail; this tracks the true term profile (grow, peak, decay) instead of
// truncating coefficient series.
#pragma once

#include "complex.hpp"
#include "dilog.hpp"
#include "errors.hpp"
#include "knots.hpp"

namespace qknot {

struct EvalResult {
  Complex value;
  Real tail_bound;   // upper bound on the omitted tail under the decay condition
  long terms_used = 0;
};

namespace detail {

// Lambert sums accelerated by the hyperbola trick (q^{a^2} term count).
//   sum_{n>=1} q^n/(1-q^n)   = sum_a [ q^{a^2} + 2 q^{a(a+1)}/(1-q^a) ]
inline Complex lambert_sum(const Complex& q, mpfr_prec_t wp) {
  Complex qa(1L, wp), acc(wp), one(1L, wp);
  Real tol(wp);
  mpfr_set_ui_2exp(tol.raw(), 1, -(long)wp, MPFR_RNDN);
  for (long a = 1;; ++a) {
    qa *= q;
    Complex qa2 = pow_si(qa, a);
    if (abs(qa2) < tol) break;
    acc += qa2 + Complex(Real(2L, wp)) * qa2 * qa / (one - qa);
    if (a > 8 * (long)wp) throw slow_convergence("lambert_sum");
  }
  return acc;
}

//   sum_{n>=1} q^n/(1-q^n)^2 = sum_{a,b>=1} b q^{ab}
//   = sum_a [ a q^{a^2} + q^{a(a+1)} ( a/(1-q^a) + (a+1 - a q^a)/(1-q^a)^2 ) ]
inline Complex lambert_sum_weighted(const Complex& q, mpfr_prec_t wp) {
  Complex qa(1L, wp), acc(wp), one(1L, wp);
  Real tol(wp);
  mpfr_set_ui_2exp(tol.raw(), 1, -(long)wp, MPFR_RNDN);
  for (long a = 1;; ++a) {
    qa *= q;
    Complex qa2 = pow_si(qa, a);
    if (abs(qa2) < tol) break;
    Complex d = one - qa;
    Complex A(Rat(a), wp), A1(Rat(a + 1), wp);
    acc += A * qa2 + qa2 * qa * (A / d + (A1 - A * qa) / (d * d));
    if (a > 8 * (long)wp) throw slow_convergence("lambert_sum_weighted");
  }
  return acc;
}

inline Complex eis1_num(const Complex& q, mpfr_prec_t wp) {
  return Complex(1L, wp) - Complex(Real(4L, wp)) * lambert_sum(q, wp);
}

inline Complex eis2_num(const Complex& q, mpfr_prec_t wp) {
  return Complex(1L, wp) - Complex(Real(24L, wp)) * lambert_sum_weighted(q, wp);
}

// stopping rule: three consecutive decreases, last ratio < 1/2, term below
// 2^{-prec} * |partial sum|
struct TailRule {
  long decreasing = 0;
  Real last_mag, last_ratio;
  mpfr_prec_t target;
  explicit TailRule(mpfr_prec_t p) : last_mag(0L, p), last_ratio(1L, p), target(p) {}
  bool done(const Real& mag, const Real& partial_mag) {
    bool dec = !last_mag.is_zero() && mag < last_mag;
    if (!last_mag.is_zero()) last_ratio = mag / last_mag;
    last_mag = mag;
    decreasing = dec ? decreasing + 1 : 0;
    if (decreasing < 3) return false;
    if (!(last_ratio < Real(0.5, mag.prec()))) return false;
    Real thresh = partial_mag;
    mpfr_mul_2si(thresh.raw(), thresh.raw(), -(long)target, MPFR_RNDN);
    return mag < thresh;
  }
  // tail <= |t| r/(1-r) <= |t| for r <= 1/2
  Real tail() const { return last_mag; }
};

// infinite product prod_{k>=0} (1 - s x q^k), truncated when negligible
inline Complex qprod(const Complex& x, const Complex& q, int s, mpfr_prec_t wp) {
  Complex acc(1L, wp), xq = x, one(1L, wp);
  Real tol(wp);
  mpfr_set_ui_2exp(tol.raw(), 1, -(long)wp - 8, MPFR_RNDN);
  for (long k = 0;; ++k) {
    acc *= (s > 0 ? one - xq : one + xq);
    xq *= q;
    if (abs(xq) < tol) break;
    if (k > 64 * (long)wp) throw slow_convergence("qprod");
  }
  return acc;
}

}  // namespace detail

// Working precision: requested + guard bits covering the dynamic range of the
// leading exponential e^{C_max |1/tau|} before summation.
inline mpfr_prec_t eval_guard_prec(const Complex& tau, mpfr_prec_t prec) {
  Complex it = inv(tau.round_to(64));
  double range = std::abs(it.re.to_double()) + std::abs(it.im.to_double());
  double guard = 0.47 * range * 1.4426950408889634 * 1.15 + 64;
  if (guard > 2e9) throw eval_domain_error("eval_guard_prec: tau too close to 0");
  return prec + (mpfr_prec_t)guard;
}

// Value of the function named by `spec` at q = e(tau).  The side is chosen by
// sign(Im tau); spec.side is ignored for 4_1/5_2 (the descendant functions are
// single functions on |q| != 1), and for the (-2,3,7) pair the upper
// half-plane gives H^+, the lower H^-.
inline EvalResult eval_series(const SeriesSpec& spec, const Complex& tau, mpfr_prec_t prec,
                              long cap = 10000000) {
  spec.validate();
  if (tau.im.is_zero()) throw on_unit_circle("eval_series: Im(tau) = 0");
  const bool inside = tau.im.sign() > 0;
  const mpfr_prec_t wp = eval_guard_prec(tau, prec);

  Complex x = inside ? tau.round_to(wp) : -tau.round_to(wp);  // contracting variable exponent
  Complex q = e_of(x);
  bool near_one;
  {
    Real gap = abs(abs(q) - Real(1L, wp));
    Real lim(wp);
    mpfr_set_ui_2exp(lim.raw(), 1, -8, MPFR_RNDN);
    near_one = gap < lim;
  }
  auto too_many = [&](long n) -> bool { return n > cap; };

  Complex one(1L, wp);
  const int j = spec.family;
  detail::TailRule rule(prec);
  Complex acc(wp);
  long n = 0;

  auto make_result = [&](Complex val, Real scale) {
    EvalResult r;
    r.value = val.round_to(prec);
    r.tail_bound = (rule.tail() * scale).round_to(prec);
    r.terms_used = n + 1;
    return r;
  };

  if (spec.knot == KnotId::FourOne) {
    // inside: sum (-1)^n q^{n(n+1)/2 + mm n} / (q)_n^2 (* bracket for j=1)
    // outside value: (-1)^j times the same with mm = -m
    long mm = inside ? spec.descendant : -spec.descendant;
    Complex T = one, qn = one, qpow = pow_si(q, mm);
    Complex bracket = j == 1 ? detail::eis1_num(q, wp) + Complex(Rat(2 * mm), wp) : Complex(wp);
    while (true) {
      Complex term = (j == 1) ? T * bracket : T;
      acc += term;
      if (rule.done(abs(term), abs(acc))) break;
      if (too_many(++n)) {
        if (near_one) throw slow_convergence("eval_series 4_1: cap near |q|=1");
        throw non_convergent("eval_series 4_1: cap");
      }
      qn *= q;
      qpow *= q;  // q^{n+mm}
      Complex d = one - qn;
      T = T * (-qpow) / (d * d);
      if (j == 1) bracket += Complex(Real(2L, wp)) + Complex(Real(4L, wp)) * qn / d;
    }
    Complex val = (!inside && j == 1) ? -acc : acc;
    return make_result(val, Real(1L, wp));
  }

  if (spec.knot == KnotId::FiveTwo) {
    // inside: H_j^{(m)} = sum q^{n(n+1)+mm n}/(q)_n^3 * bracket_j
    // outside: the printed outside sums, with the weight q^{+mn} pairing with
    // descendant m (fixed against the descendant state integrals, 60 digits)
    long mm = spec.descendant;
    Complex T = one, qn = one, qpow = pow_si(q, mm);
    Complex E1n = detail::lambert_sum(q, wp);
    Complex E2n = detail::lambert_sum_weighted(q, wp);
    Complex E2 = one - Complex(Real(24L, wp)) * E2n;
    while (true) {
      Complex term;
      if (j == 0) {
        term = T;
      } else {
        Complex lin = inside ? Complex(Rat(1 + 2 * n + mm), wp)
                             : Complex(Rat(1 + 2 * (n + mm), 2), wp);
        lin = lin - Complex(Real(3L, wp)) * E1n;
        term = (j == 1) ? T * lin
                        : T * (lin * lin - Complex(Real(3L, wp)) * E2n -
                               E2 * Complex(Rat(1, inside ? 6 : 12), wp));
      }
      acc += term;
      if (rule.done(abs(term), abs(acc))) break;
      if (too_many(++n)) {
        if (near_one) throw slow_convergence("eval_series 5_2: cap near |q|=1");
        throw non_convergent("eval_series 5_2: cap");
      }
      qn *= q;
      Complex d = one - qn;
      if (inside) {
        qpow *= q * q;  // q^{2n+mm}
        T = T * qpow / (d * d * d);
      } else {
        qpow *= q;  // q^{n+mm}
        T = T * (-qpow) / (d * d * d);
      }
      E1n = E1n - qn / d;
      E2n = E2n - qn / (d * d);
    }
    return make_result(acc, Real(1L, wp));
  }

  // (-2,3,7): H_j^{+-}, m = 0 only; exponents live on the q^{1/2} lattice
  Complex qh;  // q^{1/2} via the tau-branch
  {
    Real pi = Real::pi(wp);
    Complex ex(-pi * x.im, pi * x.re);
    qh = exp(ex);
  }
  const bool plus = inside;
  if (j <= 2) {
    Complex T = one, qn = one, q2n = one;
    Complex E1a = detail::lambert_sum(q, wp), E1b = E1a;
    Complex E2a = detail::lambert_sum_weighted(q, wp), E2b = E2a;
    Complex E2zero = E2a;
    Complex E2 = one - Complex(Real(24L, wp)) * E2a;
    Complex qpow = one;
    while (true) {
      Complex term;
      if (j == 0) {
        term = T;
      } else {
        Complex lin = Complex(Rat(plus ? 4 * n + 1 : 2 * n + 1), wp) -
                      Complex(Real(2L, wp)) * (E1a + E1b);
        if (j == 1) {
          term = T * lin;
        } else {
          Complex quad = lin * lin - Complex(Real(2L, wp)) * E2a -
                         Complex(Real(4L, wp)) * E2b;
          quad = plus ? quad - E2 * Complex(Rat(1, 3), wp)
                      : quad + E2 * Complex(Rat(1, 3), wp) +
                            Complex(Real(12L, wp)) * E2zero - Complex(Rat(1, 2), wp);
          term = T * quad;
        }
      }
      acc += term;
      if (rule.done(abs(term), abs(acc))) break;
      if (too_many(++n)) throw slow_convergence("eval_series 237: cap");
      qn *= q;
      Complex q2nm1 = q2n * q;  // q^{2n-1}
      q2n = q2nm1 * q;          // q^{2n}
      Complex d1 = one - qn, d2 = one - q2nm1, d3 = one - q2n;
      qpow = plus ? pow_si(q, 4 * n - 1) : pow_si(q, 2 * n);
      T = T * qpow / (d1 * d1 * d2 * d3);
      E1a = E1a - qn / d1;
      E1b = E1b - q2nm1 / d2 - q2n / d3;
      E2a = E2a - qn / (d1 * d1);
      E2b = E2b - q2nm1 / (d2 * d2) - q2n / (d3 * d3);
    }
    return make_result(acc, Real(1L, wp));
  }

  // j in {3,4,5}: prefactor * q-hypergeometric sum
  Complex pref;
  {
    Complex qq = detail::qprod(q, q, +1, wp);  // (q;q)_inf
    if (plus) {
      Complex top = (j == 3)   ? detail::qprod(qh * q, q, +1, wp)     // (q^{3/2};q)
                    : (j == 4) ? detail::qprod(q, q, -1, wp)          // (-q;q)
                               : detail::qprod(qh * q, q, -1, wp);    // (-q^{3/2};q)
      pref = top * top / (qq * qq);
    } else {
      Complex bot = (j == 3)   ? detail::qprod(inv(qh), q, +1, wp)    // (q^{-1/2};q)
                    : (j == 4) ? detail::qprod(one, q, -1, wp)        // (-1;q)
                               : detail::qprod(inv(qh), q, -1, wp);   // (-q^{-1/2};q)
      pref = qq * qq / (bot * bot);
    }
  }
  {
    Complex T = one, qn = one, q2n = one;
    // j in {3,5}: the n = 0 term carries 1/(q;q)_1, and the plus sums start at q^1
    if (j != 4) T = (plus ? q : one) / (one - q);
    while (true) {
      acc += T;
      if (rule.done(abs(T), abs(acc))) break;
      if (too_many(++n)) throw slow_convergence("eval_series 237: cap");
      qn *= q;
      Complex q2nm1 = q2n * q;
      q2n = q2nm1 * q;
      int s = (j == 5) ? -1 : 1;  // sign inside the half-shifted Pochhammers
      if (j == 4) {
        Complex d1 = one + qn, d2 = one - q2nm1, d3 = one - q2n;
        Complex ratio = (plus ? pow_si(q, 4 * n - 1) : pow_si(q, 2 * n)) / (d1 * d1 * d2 * d3);
        T = T * ratio;
      } else {
        Complex dh = one - Complex(Rat(s), wp) * qh * qn;  // 1 -+ q^{n+1/2}
        Complex d2 = one - q2n, d3 = one - q2n * q;
        Complex ratio =
            (plus ? pow_si(q, 4 * n + 1) : pow_si(q, 2 * n + 1)) / (dh * dh * d2 * d3);
        T = T * ratio;
      }
    }
  }
  return make_result(pref * acc, abs(pref));
}

}  // namespace qknot
