#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qknot/state_integral.hpp>

using namespace qknot;

namespace {
Complex ctau(double re, double im, mpfr_prec_t p) { return Complex(Real(re, p), Real(im, p)); }
}

TEST_CASE("factorization 4_1 at tau = (1+2i)/3 and descendants") {
  mpfr_prec_t p = 200;
  Complex tau = ctau(1.0 / 3, 2.0 / 3, p);
  NumVerify v = check_factorization(KnotId::FourOne, 0, 0, tau, p);
  INFO("digits ", v.digits);
  CHECK(v.digits >= 40);

  for (auto [m, m2] : {std::pair<long, long>{1, 0}, {0, 1}, {-1, 2}}) {
    NumVerify d = check_factorization(KnotId::FourOne, m, m2, ctau(0, 1, 150), 150);
    INFO("m=", m, " m2=", m2, " digits ", d.digits);
    CHECK(d.digits >= 30);
  }
}

TEST_CASE("factorization 5_2 with descendants") {
  mpfr_prec_t p = 200;
  Complex tau = ctau(0.5, 1.0, p);  // (1+2i)/2
  NumVerify v = check_factorization(KnotId::FiveTwo, 0, 0, tau, p);
  INFO("digits ", v.digits);
  CHECK(v.digits >= 25);

  for (auto [m, m2] : {std::pair<long, long>{1, 0}, {0, 1}, {-1, 2}}) {
    NumVerify d = check_factorization(KnotId::FiveTwo, m, m2, ctau(0, 1, 150), 150);
    INFO("m=", m, " m2=", m2, " digits ", d.digits);
    CHECK(d.digits >= 25);
  }
}

TEST_CASE("factorization 237 at tau = 2i") {
  mpfr_prec_t p = 200;
  NumVerify v = check_factorization(KnotId::Pretzel237, 0, 0, ctau(0, 2, p), p);
  INFO("digits ", v.digits);
  CHECK(v.digits >= 20);
}

TEST_CASE("contour independence") {
  mpfr_prec_t p = 160;
  Complex tau = ctau(0, 1, p);
  Complex a = state_integral(KnotId::FourOne, 0, 0, tau, p, ContourSpec{0.05, 0, 8});
  Complex b = state_integral(KnotId::FourOne, 0, 0, tau, p, ContourSpec{0.12, 5.5, 16});
  CHECK(agree_bits(a, b) >= (long)p / 2);
}

TEST_CASE("4_1 w-vector reconstruction") {
  mpfr_prec_t p = 160;
  Complex tau = ctau(0.1, 0.7, p);
  auto w = w_vector(KnotId::FourOne, tau, p);
  SeriesSpec s0{KnotId::FourOne, 0, 0, Side::Inside}, s1{KnotId::FourOne, 1, 0, Side::Inside};
  Complex g0 = eval_series(s0, tau, p).value;
  Complex g1 = eval_series(s1, tau, p).value;
  Complex rt = sqrt(tau);
  CHECK(agree_bits(w[0] + w[1], g0 / rt) >= (long)p - 20);
  CHECK(agree_bits(w[0] - w[1], rt * g1) >= (long)p - 20);
}

TEST_CASE("5_2 quadratic relation and index identity at tau = i/3") {
  mpfr_prec_t p = 200;
  Complex tau = ctau(0, 1.0 / 3, p);
  auto wu = w_vector(KnotId::FiveTwo, tau, p, true);   // upper: N_+ branch
  auto wl = w_vector(KnotId::FiveTwo, -tau, p, true);  // lower: N_- branch
  // sum_j w^{sigma_j}(tau) w^{sigma_j}(-tau) = 0
  Complex quad = wu[0] * wl[0] + wu[1] * wl[1] + wu[2] * wl[2];
  Real scale = abs(wu[0] * wl[0]);
  INFO("quad defect ", (quad / scale).str(8));
  CHECK((abs(quad) / scale).exp2() < -25 * 3);

  // index identity in these w-coordinates: 4 Ind = (w1 + w2)(3 wt0 - wt1 - wt2)
  // (this is 8 h_1(tau) h_1(-tau) written through the sector matrices)
  Complex ind4 = (wu[1] + wu[2]) * (Complex(Real(3L, p)) * wl[0] - wl[1] - wl[2]);
  SeriesSpec sp{KnotId::FiveTwo, 1, 0, Side::Inside};
  // Ind_{5_2}(q) = 2 H^+_1(q) H^-_1(q): evaluate both factors at e(tau)
  Complex hp = eval_series(sp, tau, p).value;
  Complex hm = eval_series(sp, -tau, p).value;  // outside family at same |q|
  Complex ind = Complex(Real(2L, p)) * hp * hm;
  CHECK(agree_digits(ind4, Complex(Real(4L, p)) * ind) >= 25);

  CHECK_THROWS_AS(w_vector(KnotId::FiveTwo, ctau(-0.5, 0.5, p), p), sector_unsupported);
}

TEST_CASE("descendant W matrix") {
  mpfr_prec_t p = 170;
  Complex tau = ctau(0, 1, p);
  // entries match descendant state integrals up to the stated prefactors:
  // spot-check the full matrix identity via W = (w_{m'}(qt)^T)^{-1} D w_m(q)^T
  CMatrix W = w_matrix(KnotId::FourOne, 0, 0, tau, p);
  // reconstruct: w_{m'}(qt)^T W = D w_m(q)^T entry-wise
  // and the (2,1)-style entry carries Z_{4_1}: check against quadrature via
  // the bilinear prefactor identity instead (done in the cocycle tests).
  CHECK(W.rows == 2);
  // T-triviality surrogate: the series-value matrices are 1-periodic in tau
  {
    CMatrix A(2, 2, p), B(2, 2, p);
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < 2; ++j) {
        SeriesSpec s{KnotId::FourOne, j, r, Side::Inside};
        A.at(r, j) = eval_series(s, tau, p).value;
        B.at(r, j) = eval_series(s, tau + Complex(1L, p), p).value;
      }
    CHECK(A.max_abs_diff(B).exp2() < -(long)p + 40);
  }

  // continuity across R_+: W(x + i d) vs W(x - i d) at x = 3/2
  for (double d : {1e-2, 1e-3}) {
    CMatrix Wp = w_matrix(KnotId::FourOne, 0, 0, ctau(1.5, d, p), p);
    CMatrix Wm = w_matrix(KnotId::FourOne, 0, 0, ctau(1.5, -d, p), p);
    double jump = Wp.max_abs_diff(Wm).to_double();
    INFO("delta ", d, " jump ", jump);
    CHECK(jump < 3 * d);
  }
}
