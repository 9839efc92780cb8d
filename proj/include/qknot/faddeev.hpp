// Faddeev's quantum dilogarithm via its product formula,
//   Phi_b(x) = (-q^{1/2} e^{2 pi b x}; q)_inf / (-qt^{1/2} e^{2 pi x / b}; qt)_inf,
// q = e^{2 pi i b^2}, qt = e^{-2 pi i / b^2}, valid for Im(b^2) > 0.
#pragma once

#include "complex.hpp"
#include "errors.hpp"
#include "nahm_eval.hpp"

namespace qknot {

namespace detail {

// (w; q)_inf-type product with argument u: prod_{k>=0} (1 + u q^k); the first
// factors may be large, the tail is certified once |u q^k| is negligible.
inline Complex raising_product(const Complex& u0, const Complex& q, mpfr_prec_t wp) {
  Complex acc(1L, wp), u = u0, one(1L, wp);
  Real tol(wp);
  mpfr_set_ui_2exp(tol.raw(), 1, -(long)wp - 10, MPFR_RNDN);
  for (long k = 0;; ++k) {
    acc *= one + u;
    u *= q;
    if (abs(u) < tol) break;
    if (k > 64 * (long)wp) throw slow_convergence("raising_product");
  }
  return acc;
}

}  // namespace detail

struct FaddeevParams {
  Complex b, tau, q, qt, qh, qth, cb;
  mpfr_prec_t wp;
};

inline FaddeevParams faddeev_params(const Complex& b, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 48;
  FaddeevParams P{b.round_to(wp), Complex(wp), Complex(wp), Complex(wp), Complex(wp),
                  Complex(wp), Complex(wp), wp};
  P.tau = P.b * P.b;
  if (!(P.tau.im.sign() > 0)) throw eval_domain_error("faddeev: Im(b^2) must be positive");
  Real pi = Real::pi(wp);
  auto e_pi = [&](const Complex& z) {  // e^{pi i z}
    return exp(Complex(-pi * z.im, pi * z.re));
  };
  P.qh = e_pi(P.tau);            // q^{1/2}
  P.q = P.qh * P.qh;
  P.qth = e_pi(-inv(P.tau));     // qt^{1/2}
  P.qt = P.qth * P.qth;
  P.cb = Complex(Real(0L, wp), Real(1L, wp) / Real(2L, wp)) * (P.b + inv(P.b));
  return P;
}

inline Complex faddeev(const Complex& x, const Complex& b, mpfr_prec_t prec) {
  FaddeevParams P = faddeev_params(b, prec);
  mpfr_prec_t wp = P.wp;
  Real two_pi = Real(2L, wp) * Real::pi(wp);
  Complex xx = x.round_to(wp);
  Complex num_arg = P.qh * exp(Complex(two_pi) * P.b * xx);
  Complex den_arg = P.qth * exp(Complex(two_pi) * inv(P.b) * xx);
  Complex num = detail::raising_product(num_arg, P.q, wp);
  Complex den = detail::raising_product(den_arg, P.qt, wp);
  return (num / den).round_to(prec);
}

// Phi at b' with Im(b'^2) < 0 through the |q| > 1 continuation of the two
// products ((a;Q)_inf := 1/(a/Q; 1/Q)_inf).  Used to exercise the b <-> 1/b
// symmetry through an independent evaluation route.
inline Complex faddeev_lower(const Complex& x, const Complex& b, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 48;
  Complex bb = b.round_to(wp);
  Complex tau = bb * bb;
  if (!(tau.im.sign() < 0)) throw eval_domain_error("faddeev_lower: Im(b^2) must be negative");
  Real pi = Real::pi(wp), two_pi = Real(2L, wp) * Real::pi(wp);
  auto e_pi = [&](const Complex& z) { return exp(Complex(-pi * z.im, pi * z.re)); };
  Complex qh = e_pi(tau), q = qh * qh;          // |q| > 1
  Complex qth = e_pi(-inv(tau)), qt = qth * qth;  // |qt| > 1
  Complex xx = x.round_to(wp);
  Complex num_arg = qh * exp(Complex(two_pi) * bb * xx);
  Complex den_arg = qth * exp(Complex(two_pi) * inv(bb) * xx);
  // (-u; q)_inf with |q|>1  ->  1 / prod_{k>=1} (1 + u q^{-k})
  Complex num = inv(detail::raising_product(num_arg / q, inv(q), wp));
  Complex den = inv(detail::raising_product(den_arg / qt, inv(qt), wp));
  return (num / den).round_to(prec);
}

}  // namespace qknot
