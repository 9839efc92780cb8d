#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qknot/qseries.hpp>

#include <random>

using namespace qknot;

namespace {

// Brute-force oracle: (q;q)_inf as a literal product of (1-q^j), j <= order.
QSeries poch_inf_by_product(long order) {
  std::vector<Rat> c(order + 1, Rat(0));
  c[0] = Rat(1);
  for (long j = 1; j <= order; ++j) mul_one_minus_inplace(c, j, Rat(1));
  QSeries s = QSeries::zero(order);
  s.coeffs = std::move(c);
  s.canonicalize();
  return s;
}

// Brute-force partition count by restricted recursion p(n, max part k).
long partitions_of(int n) {
  std::vector<std::vector<long>> p(n + 1, std::vector<long>(n + 1, 0));
  for (int k = 0; k <= n; ++k) p[0][k] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k)
      p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
  return p[n][n];
}

QSeries random_series(std::mt19937& rng, long order, bool unit) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  QSeries s = QSeries::zero(order);
  s.coeffs.assign(order + 1, Rat(0));
  for (long k = 0; k <= order; ++k) s.coeffs[k] = Rat(num(rng), den(rng));
  if (unit && s.coeffs[0].is_zero()) s.coeffs[0] = Rat(1);
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("multiplication basics") {
  // (1-q) * (1+q+q^2+...) telescopes to 1
  QSeries one_minus_q = QSeries::one(5) - QSeries::monomial(Rat(1), 1, 5);
  QSeries geo = QSeries::one(5) + geometric_tail(1, 5);
  QSeries prod = one_minus_q * geo;
  CHECK(agree(prod, QSeries::one(prod.order)));
  CHECK(prod.order == 5);

  // a * 1 == a
  std::mt19937 rng(7);
  QSeries a = random_series(rng, 12, false);
  CHECK(agree(a * QSeries::one(12), a));
}

TEST_CASE("inverse") {
  CHECK(agree(QSeries::one(8).inverse(), QSeries::one(8)));

  // inv(1-q) = geometric series
  QSeries g = (QSeries::one(10) - QSeries::monomial(Rat(1), 1, 10)).inverse();
  for (long k = 0; k <= 10; ++k) CHECK(g.coeff(k) == Rat(1));

  // inv((q;q)_inf) = partition generating function; p(10) = 42 by brute force
  QSeries pgen = pochhammer(kInfinity, 30).inverse();
  CHECK(partitions_of(10) == 42);
  CHECK(pgen.coeff(10) == Rat(42));
  for (int n = 0; n <= 20; ++n) CHECK(pgen.coeff(n) == Rat(partitions_of(n)));

  CHECK_THROWS_AS(QSeries::monomial(Rat(1), 1, 5).inverse(), zero_constant_term);
}

TEST_CASE("pochhammer") {
  CHECK(agree(pochhammer(0, 6), QSeries::one(6)));

  QSeries p2 = pochhammer(2, 6);  // 1 - q - q^2 + q^3
  CHECK(p2.coeff(0) == Rat(1));
  CHECK(p2.coeff(1) == Rat(-1));
  CHECK(p2.coeff(2) == Rat(-1));
  CHECK(p2.coeff(3) == Rat(1));
  CHECK(p2.coeff(4) == Rat(0));

  QSeries pinf = pochhammer(kInfinity, 12);  // 1 - q - q^2 + q^5 + q^7 - q^12
  CHECK(pinf.coeff(0) == Rat(1));
  CHECK(pinf.coeff(1) == Rat(-1));
  CHECK(pinf.coeff(2) == Rat(-1));
  CHECK(pinf.coeff(5) == Rat(1));
  CHECK(pinf.coeff(7) == Rat(1));
  CHECK(pinf.coeff(12) == Rat(-1));
  CHECK(pinf.coeff(3) == Rat(0));

  for (long N : {20L, 60L, 100L}) CHECK(agree(pochhammer(kInfinity, N), poch_inf_by_product(N)));

  // (q;q)_2 * 1/(q;q)_2 == 1 to order 20
  QSeries p = pochhammer(2, 20);
  CHECK(agree(p * p.inverse(), QSeries::one(20)));

  CHECK_THROWS_AS(pochhammer(-3, 5), negative_n);
}

TEST_CASE("eisenstein") {
  QSeries e1 = eisenstein(1, 50);
  CHECK(e1.coeff(0) == Rat(1));
  CHECK(e1.coeff(1) == Rat(-4));
  CHECK(e1.coeff(4) == Rat(-12));  // d(4) = 3

  QSeries e2 = eisenstein(2, 10);
  CHECK(e2.coeff(2) == Rat(-72));  // sigma_1(2) = 3

  CHECK_THROWS_AS(eisenstein(3, 5), unsupported_weight);

  // E_1 = 1 - 4 E^{(0)}_1 to order 50
  QSeries rel = QSeries::one(50) - eisenstein_partial(1, 0, 50) * Rat(4);
  CHECK(agree(rel, e1));

  // ell=2, m=1: coefficient of q^2 is 1 (only d = 1 passes s/d > 1)
  CHECK(eisenstein_partial(2, 1, 10).coeff(2) == Rat(1));

  // m >= order: zero series
  CHECK(eisenstein_partial(1, 30, 20).is_zero());
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(42);
  for (int rep = 0; rep < 12; ++rep) {
    QSeries a = random_series(rng, 40, false);
    QSeries b = random_series(rng, 40, false);
    QSeries c = random_series(rng, 40, false);
    CHECK(agree((a * b) * c, a * (b * c)));
    CHECK(agree(a * (b + c), a * b + a * c));
    CHECK(agree(a * b, b * a));
  }
}

TEST_CASE("random units invert exactly") {
  std::mt19937 rng(1234);
  for (int rep = 0; rep < 50; ++rep) {
    QSeries a = random_series(rng, 25, true);
    QSeries prod = a * a.inverse();
    CHECK(agree(prod, QSeries::one(prod.order)));
  }
}

TEST_CASE("lattice unification") {
  QSeries half = QSeries::monomial(Rat(1), 1, 10, 2);  // q^{1/2} exact to q^5
  QSeries whole = QSeries::monomial(Rat(1), 1, 5, 1);  // q
  QSeries s = half * whole;                            // q^{3/2}
  CHECK(s.lattice_den == 2);
  CHECK(s.coeff(3) == Rat(1));
  QSeries sum = half + whole;
  CHECK(sum.coeff(1) == Rat(1));
  CHECK(sum.coeff(2) == Rat(1));
}

TEST_CASE("order bookkeeping through shifts") {
  // product order = min(order_a + min_exp_b, order_b + min_exp_a)
  QSeries a = QSeries::monomial(Rat(1), 3, 10);
  QSeries b = QSeries::monomial(Rat(2), 2, 7);
  QSeries p = a * b;
  CHECK(p.order == std::min(10 + 2, 7 + 3));
  CHECK(p.coeff(5) == Rat(2));
}

TEST_CASE("laurent window") {
  QSeries a = QSeries::monomial(Rat(1), -3, 5);  // q^{-3}
  QSeries b = QSeries::monomial(Rat(1), 3, 5);
  QSeries p = a * b;
  CHECK(p.coeff(0) == Rat(1));
  CHECK(p.min_exp == 0);
}
