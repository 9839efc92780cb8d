// Composite Gauss-Legendre quadrature at arbitrary precision.  Nodes are
// found by Newton iteration on P_n starting from the Chebyshev-angle guesses
// and cached per (n, precision).
#pragma once

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"

namespace qknot {

struct GLRule {
  std::vector<Real> nodes, weights;  // on (-1, 1)
};

namespace detail {

inline GLRule make_gl_rule(int n, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 32;
  GLRule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  Real pi = Real::pi(wp);
  for (int i = 1; i <= n; ++i) {
    Real x = cos(pi * Real((double)(i - 0.25), wp) / Real((double)(n + 0.5), wp));
    // Newton; quadratic convergence doubles correct bits each pass
    Real dp(0L, wp);
    for (int it = 0; it < 128; ++it) {
      Real p0(1L, wp), p1(0L, wp);
      for (int k = 0; k < n; ++k) {  // ascending recurrence for P_{k+1}(x)
        Real p2 = (Real((double)(2 * k + 1), wp) * x * p0 - Real((double)k, wp) * p1) /
                  Real((double)(k + 1), wp);
        p1 = p0;
        p0 = p2;
      }
      // p0 = P_n, p1 = P_{n-1}; P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
      dp = Real((double)n, wp) * (x * p0 - p1) / (x * x - Real(1L, wp));
      Real dx = p0 / dp;
      x -= dx;
      if (dx.is_zero() || dx.exp2() < -(long)wp + 8) break;
    }
    // recompute derivative at the converged node for the weight
    Real p0(1L, wp), p1(0L, wp);
    for (int k = 0; k < n; ++k) {
      Real p2 = (Real((double)(2 * k + 1), wp) * x * p0 - Real((double)k, wp) * p1) /
                Real((double)(k + 1), wp);
      p1 = p0;
      p0 = p2;
    }
    dp = Real((double)n, wp) * (x * p0 - p1) / (x * x - Real(1L, wp));
    rule.nodes.push_back(x.round_to(prec + 16));
    rule.weights.push_back((Real(2L, wp) / ((Real(1L, wp) - x * x) * dp * dp)).round_to(prec + 16));
  }
  return rule;
}

inline const GLRule& gl_rule(int n, mpfr_prec_t prec) {
  static std::map<std::pair<int, mpfr_prec_t>, GLRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, prec);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_gl_rule(n, prec)).first;
  return it->second;
}

}  // namespace detail

// integral of f over the real parameter t in [lo, hi] (f maps the parameter to
// a complex value; contour geometry lives inside f), with `panels` composite
// GL-64 panels.
inline Complex integrate_panels(const std::function<Complex(const Real&)>& f, const Real& lo,
                                const Real& hi, long panels, mpfr_prec_t prec, int order = 64) {
  const GLRule& rule = detail::gl_rule(order, prec);
  mpfr_prec_t wp = prec + 32;
  Complex acc(wp);
  Real width = (hi - lo) / Real((double)panels, wp);
  for (long pnl = 0; pnl < panels; ++pnl) {
    Real a = lo + width * Real((double)pnl, wp);
    Real half = width / Real(2L, wp);
    Real mid = a + half;
    Complex panel_acc(wp);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      Real t = mid + half * rule.nodes[i];
      panel_acc += Complex(rule.weights[i]) * f(t);
    }
    acc += Complex(half) * panel_acc;
  }
  return acc;
}

// Adaptive driver: double the panel count until two consecutive refinements
// agree to 2^-prec relative, or to the given absolute tolerance when one is
// supplied (needed when several contour pieces cancel against each other).
inline Complex integrate_adaptive(const std::function<Complex(const Real&)>& f, const Real& lo,
                                  const Real& hi, mpfr_prec_t prec, long initial_panels = 8,
                                  long max_panels = 16384, const Real* abs_tol = nullptr) {
  Complex prev = integrate_panels(f, lo, hi, initial_panels, prec);
  for (long p = initial_panels * 2; p <= max_panels; p *= 2) {
    Complex cur = integrate_panels(f, lo, hi, p, prec);
    Real err = abs(cur - prev);
    Real tol = abs_tol ? *abs_tol : abs(cur);
    if (!abs_tol) mpfr_mul_2si(tol.raw(), tol.raw(), -(long)prec, MPFR_RNDN);
    if (getenv("QKNOT_QUAD_DEBUG"))
      std::fprintf(stderr, "  [quad] panels %ld err 2^%ld tol 2^%ld range [%f, %f]\n", p,
                   err.exp2(), tol.exp2(), lo.to_double(), hi.to_double());
    if (err < tol || err.is_zero()) return cur;
    prev = cur;
  }
  throw quadrature_not_converged("integrate_adaptive: panel refinement stalled");
}

}  // namespace qknot
