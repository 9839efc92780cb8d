#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qknot/dilog.hpp>
#include <qknot/faddeev.hpp>
#include <qknot/knot_series.hpp>
#include <qknot/nahm_eval.hpp>
#include <qknot/state_integral.hpp>

using namespace qknot;

namespace {

// brute-force partial-sum oracle: evaluate a truncated coefficient series at q
Complex eval_truncated(const QSeries& s, const Complex& q, mpfr_prec_t prec) {
  Complex qh = sqrt(q.round_to(prec));
  Complex acc(prec);
  for (long e = s.is_zero() ? 0 : s.min_exp; e <= s.order; ++e) {
    Rat c = s.coeff(e);
    if (c.is_zero()) continue;
    acc += Complex(c, prec) * pow_si(qh, s.lattice_den == 2 ? e : 2 * e);
  }
  return acc;
}

Complex ctau(double re, double im, mpfr_prec_t p) { return Complex(Real(re, p), Real(im, p)); }

}  // namespace

TEST_CASE("dilog basics") {
  mpfr_prec_t p = 256;
  // Li2(1) = pi^2/6
  Complex l1 = dilog(Complex(1L, p), p);
  Real pi = Real::pi(p);
  CHECK(abs(l1.re - pi * pi / Real(6L, p)).exp2() < -240);
  CHECK(abs(l1.im).exp2() < -240);
  // Li2(-1) = -pi^2/12
  Complex lm1 = dilog(Complex(-1L, p), p);
  CHECK(abs(lm1.re + pi * pi / Real(12L, p)).exp2() < -240);
  // Li2(1/2) = pi^2/12 - log(2)^2/2
  Complex lh = dilog(Complex(Rat(1, 2), p), p);
  Real l2 = log(Real(2L, p));
  CHECK(abs(lh.re - (pi * pi / Real(12L, p) - l2 * l2 / Real(2L, p))).exp2() < -240);
  // inversion reachability: a point with |z| > 1
  Complex z(Real(3L, p), Real(2L, p));
  Complex a = dilog(z, p);
  CHECK(a.re.is_finite());
}

TEST_CASE("volume constants") {
  mpfr_prec_t p = 256;
  Real V = volume_41(p);
  // printed prefix 2.0298829
  CHECK(std::abs(V.to_double() - 2.0298829) < 5e-7);
  CHECK(std::abs(V.to_double() - 2.029883212819307) < 1e-14);
  Real C = vol_const_C(p);
  CHECK(std::abs(C.to_double() - 0.3230659) < 2e-7);
  // direct-sum oracle
  CHECK(std::abs(volume_41_direct_sum(2000000) - V.to_double()) < 1e-9);
  // phase transition angle arctan(V/2pi^2)
  double ang = std::atan(V.to_double() / (2 * M_PI * M_PI));
  CHECK(std::abs(ang - 0.10247) < 1e-5);
}

TEST_CASE("eval_series against truncated-series oracle") {
  mpfr_prec_t p = 200;
  Complex tau = ctau(0.0, 1.0, p);  // q = e^{-2pi}
  Complex q = e_of(tau);

  SeriesSpec s0{KnotId::FourOne, 0, 0, Side::Inside};
  EvalResult r0 = eval_series(s0, tau, p);
  Complex oracle = eval_truncated(g41(0, 0, Side::Inside, 60), q, p);
  CHECK(agree_bits(r0.value, oracle) >= 190);

  SeriesSpec s1{KnotId::FourOne, 1, 2, Side::Inside};
  EvalResult r1 = eval_series(s1, tau, p);
  CHECK(agree_bits(r1.value, eval_truncated(g41(2, 1, Side::Inside, 60), q, p)) >= 185);

  // doubled precision moves the value by less than the reported tail bound
  EvalResult r0b = eval_series(s0, tau.round_to(2 * p), 2 * p);
  CHECK(abs(r0.value - r0b.value) <= r0.tail_bound + abs(r0.value) * Real(1e-55, p));

  // outside side: G0(q) = G0(1/q) symmetry through the independent outside sum
  Complex taum = ctau(0.0, -1.0, p);
  EvalResult rout = eval_series(s0, taum, p);
  CHECK(agree_bits(rout.value, r0.value) >= 190);
  // j = 1 flips sign
  SeriesSpec s1z{KnotId::FourOne, 1, 0, Side::Inside};
  EvalResult rin1 = eval_series(s1z, tau, p);
  EvalResult rout1 = eval_series(s1z, taum, p);
  CHECK(agree_bits(rout1.value, -rin1.value) >= 190);
}

TEST_CASE("eval_series 5_2 and 237 against truncated oracle") {
  mpfr_prec_t p = 180;
  Complex tau = ctau(0.1, 0.9, p);
  Complex q = e_of(tau);
  for (int j = 0; j < 3; ++j) {
    SeriesSpec s{KnotId::FiveTwo, j, 0, Side::Inside};
    EvalResult r = eval_series(s, tau, p);
    CHECK(agree_bits(r.value, eval_truncated(h52(0, j, Side::Inside, 70), q, p)) >= 150);
  }
  for (int j = 0; j < 6; ++j) {
    SeriesSpec s{KnotId::Pretzel237, j, 0, Side::Inside};
    EvalResult r = eval_series(s, tau, p);
    CHECK(agree_bits(r.value, eval_truncated(h237(j, Side::Inside, 140), q, p)) >= 150);
  }
  // lower half-plane: the outside families at the contracting variable
  Complex taum = ctau(0.1, -0.9, p);
  Complex qm = e_of(-taum);
  for (int j = 0; j < 3; ++j) {
    SeriesSpec s{KnotId::FiveTwo, j, 1, Side::Inside};
    EvalResult r = eval_series(s, taum, p);
    CHECK(agree_bits(r.value, eval_truncated(h52(1, j, Side::Outside, 70), qm, p)) >= 150);
  }
  for (int j = 0; j < 6; ++j) {
    SeriesSpec s{KnotId::Pretzel237, j, 0, Side::Outside};
    EvalResult r = eval_series(s, taum, p);
    CHECK(agree_bits(r.value, eval_truncated(h237(j, Side::Outside, 140), qm, p)) >= 150);
  }
}

TEST_CASE("faddeev symmetries") {
  mpfr_prec_t p = 200;
  Real pi = Real::pi(p);
  Complex b = exp(Complex(Real(0L, p), pi / Real(6L, p)));
  Complex x(Real(0.3, p), Real(0.1, p));
  // b <-> 1/b through the independent lower-half product route
  Complex lhs = faddeev(x, b, p);
  Complex rhs = faddeev_lower(x, inv(b), p);
  CHECK(agree_bits(lhs, rhs) >= (long)p - 16);

  // quasi-periodicity pair at a random-ish point
  FaddeevParams P = faddeev_params(b, p);
  Complex num = faddeev(x + P.cb + Complex(Real(0L, p), Real(1L, p)) * P.b, b, p);
  Complex den = faddeev(x + P.cb, b, p);
  Real two_pi = Real(2L, p) * pi;
  Complex expected = inv(Complex(1L, p) - P.q * exp(Complex(two_pi) * P.b * x));
  CHECK(agree_bits(num / den, expected) >= (long)p - 24);

  Complex num2 = faddeev(x + P.cb + Complex(Real(0L, p), Real(1L, p)) * inv(P.b), b, p);
  Complex arg2 = exp(Complex(two_pi) * inv(P.b) * x);
  Complex expected2 = -P.qt * inv(arg2) / (Complex(1L, p) - P.qt * inv(arg2));
  CHECK(agree_bits(num2 / den, expected2) >= (long)p - 24);

  // Phi_b -> 1 for x far along the contour direction where both arguments vanish
  Complex far(Real(-40L, p), Real(0.2, p));
  Complex v = faddeev(far, b, p);
  CHECK(abs(v - Complex(1L, p)).exp2() < -60);

  CHECK_THROWS_AS(faddeev(x, Complex(Real(0.5, p), Real(-0.5, p)), p), eval_domain_error);
}

TEST_CASE("4_1 state integral factorization at tau = i") {
  mpfr_prec_t p = 220;
  Complex tau = ctau(0.0, 1.0, p);
  NumVerify v = check_factorization(KnotId::FourOne, 0, 0, tau, p);
  INFO("digits ", v.digits);
  CHECK(v.digits >= 40);
  // symmetry Z(tau) = Z(1/tau) at tau = 1 + i; the 1/tau side lives in the
  // lower half-plane and goes through the outside sums of the factorization
  Complex t2 = ctau(1.0, 1.0, p);
  Complex z1 = state_integral(KnotId::FourOne, 0, 0, t2, p);
  Complex z2 = state_integral_bilinear(KnotId::FourOne, 0, 0, inv(t2), p);
  CHECK(agree_digits(z1, z2) >= 40);
}
