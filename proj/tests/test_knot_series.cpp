#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qknot/knot_series.hpp>

using namespace qknot;

TEST_CASE("G_0 and G_1 match the printed listings") {
  QSeries g0 = g41(0, 0, Side::Inside, 6);
  long expect0[] = {1, -1, -2, -2, -2, 0, 1};
  for (long k = 0; k <= 6; ++k) CHECK(g0.coeff(k) == Rat(expect0[k]));

  QSeries g1 = g41(0, 1, Side::Inside, 20);
  long expect1[] = {1,   -7,  -14, -8,   -2,   30,   43,   95,   109,  137, 133,
                    118, 20,  -64, -232, -468, -714, -1010, -1324, -1632, -1878};
  for (long k = 0; k <= 20; ++k) CHECK(g1.coeff(k) == Rat(expect1[k]));
}

TEST_CASE("G_1 constant terms of descendants (m >= 0)") {
  for (long m = 0; m <= 4; ++m) CHECK(g41(m, 1, Side::Inside, 3).coeff(0) == Rat(2 * m + 1));
}

TEST_CASE("G_1 coefficient of q^1500") {
  QSeries g1 = g41(0, 1, Side::Inside, 1500);
  CHECK(g1.coeff(1500) == Rat(Int("-207821606967484464484714504354799")));
}

TEST_CASE("5_2 series listings") {
  QSeries hp0 = h52(0, 0, Side::Inside, 5);
  long e0[] = {1, 0, 1, 3, 6, 10};
  for (long k = 0; k <= 5; ++k) CHECK(hp0.coeff(k) == Rat(e0[k]));

  QSeries hm0 = h52(0, 0, Side::Outside, 5);
  long e1[] = {1, -1, -3, -5, -7, -6};
  for (long k = 0; k <= 5; ++k) CHECK(hm0.coeff(k) == Rat(e1[k]));

  QSeries hp1 = h52(0, 1, Side::Inside, 5);
  long e2[] = {1, -3, -3, 3, 6, 12};
  for (long k = 0; k <= 5; ++k) CHECK(hp1.coeff(k) == Rat(e2[k]));

  QSeries hm1 = h52(0, 1, Side::Outside, 5);
  long e3n[] = {1, -9, -21, -19, -9, 54};
  for (long k = 0; k <= 5; ++k) CHECK(hm1.coeff(k) == Rat(e3n[k], 2));

  QSeries hp2 = h52(0, 2, Side::Inside, 5);
  Rat e4[] = {Rat(5, 6), Rat(-5), Rat(53, 6), Rat(117, 2), Rat(117), Rat(601, 3)};
  for (long k = 0; k <= 5; ++k) CHECK(hp2.coeff(k) == e4[k]);

  QSeries hm2 = h52(0, 2, Side::Outside, 4);
  Rat e5[] = {Rat(1, 6), Rat(-37, 6), Rat(-17, 2), Rat(115, 6), Rat(389, 6)};
  for (long k = 0; k <= 4; ++k) CHECK(hm2.coeff(k) == e5[k]);
}

TEST_CASE("5_2 A.4 recursion agrees with the defining sums at m = 0") {
  for (int j = 0; j < 3; ++j) {
    CHECK(agree(h52_a4(j, Side::Inside, 40), h52(0, j, Side::Inside, 40)));
    CHECK(agree(h52_a4(j, Side::Outside, 40), h52(0, j, Side::Outside, 40)));
  }
}

TEST_CASE("(-2,3,7) series listings") {
  // coefficients are indexed on the q^{1/2} lattice: coeff(2k) is q^k
  QSeries hp0 = h237(0, Side::Inside, 13);
  long p0[] = {1, 0, 0, 1, 3, 7};  // 1 + q^3 + 3q^4 + 7q^5
  for (long k = 0; k <= 5; ++k) CHECK(hp0.coeff(2 * k) == Rat(p0[k]));
  CHECK(hp0.coeff(2 * 6) == Rat(13));

  QSeries hm0 = h237(0, Side::Outside, 11);
  long m0[] = {1, 0, 1, 3, 7, 13};
  for (long k = 0; k <= 5; ++k) CHECK(hm0.coeff(2 * k) == Rat(m0[k]));

  QSeries hp1 = h237(1, Side::Inside, 9);
  long p1[] = {1, -4, -8, -3, 3};
  for (long k = 0; k <= 4; ++k) CHECK(hp1.coeff(2 * k) == Rat(p1[k]));

  QSeries hm1 = h237(1, Side::Outside, 9);
  long m1[] = {1, -4, -5, 1, 7};
  for (long k = 0; k <= 4; ++k) CHECK(hm1.coeff(2 * k) == Rat(m1[k]));

  QSeries hp2 = h237(2, Side::Inside, 9);
  Rat p2[] = {Rat(2, 3), Rat(-6), Rat(6), Rat(242, 3), Rat(200)};
  for (long k = 0; k <= 4; ++k) CHECK(hp2.coeff(2 * k) == p2[k]);

  QSeries hm2 = h237(2, Side::Outside, 9);
  Rat m2[] = {Rat(5, 6), Rat(-10), Rat(17, 6), Rat(141, 2), Rat(971, 6)};
  for (long k = 0; k <= 4; ++k) CHECK(hm2.coeff(2 * k) == m2[k]);

  QSeries hp3 = h237(3, Side::Inside, 8);
  CHECK(hp3.coeff(2) == Rat(1));    // q
  CHECK(hp3.coeff(4) == Rat(3));    // 3q^2
  CHECK(hp3.coeff(5) == Rat(-2));   // -2 q^{5/2}
  CHECK(hp3.coeff(6) == Rat(8));    // 8q^3
  CHECK(hp3.coeff(7) == Rat(-8));   // -8 q^{7/2}

  QSeries hm3 = h237(3, Side::Outside, 7);
  CHECK(hm3.coeff(2) == Rat(1));
  CHECK(hm3.coeff(3) == Rat(4));
  CHECK(hm3.coeff(4) == Rat(9));
  CHECK(hm3.coeff(5) == Rat(18));
  CHECK(hm3.coeff(6) == Rat(31));

  QSeries hp4 = h237(4, Side::Inside, 9);
  long p4[] = {1, 4, 12, 33, 79};
  for (long k = 0; k <= 4; ++k) CHECK(hp4.coeff(2 * k) == Rat(p4[k]));

  QSeries hm4 = h237(4, Side::Outside, 9);
  Rat m4[] = {Rat(1, 4), Rat(-1), Rat(5, 4), Rat(-5, 4), Rat(15, 4)};
  for (long k = 0; k <= 4; ++k) CHECK(hm4.coeff(2 * k) == m4[k]);

  QSeries hp5 = h237(5, Side::Inside, 8);
  CHECK(hp5.coeff(2) == Rat(1));
  CHECK(hp5.coeff(4) == Rat(3));
  CHECK(hp5.coeff(5) == Rat(2));
  CHECK(hp5.coeff(6) == Rat(8));
  CHECK(hp5.coeff(7) == Rat(8));

  QSeries hm5 = h237(5, Side::Outside, 7);
  CHECK(hm5.coeff(2) == Rat(1));
  CHECK(hm5.coeff(3) == Rat(-4));
  CHECK(hm5.coeff(4) == Rat(9));
  CHECK(hm5.coeff(5) == Rat(-18));
  CHECK(hm5.coeff(6) == Rat(31));
}

TEST_CASE("tetrahedron index") {
  // e < 0 starts the sum at n = -e; brute force and triality agree
  for (long m = -3; m <= 3; ++m)
    for (long e = -3; e <= 3; ++e)
      CHECK(agree(tetra_index(m, e, 8), tetra_index_bruteforce(m, e, 8, 40)));

  // stability of the brute-force cap
  CHECK(agree(tetra_index_bruteforce(0, 0, 10, 22), tetra_index_bruteforce(0, 0, 10, 44)));

  QSeries i00 = tetra_index(0, 0, 6);
  QSeries i00b = tetra_index_bruteforce(0, 0, 6, 30);
  CHECK(agree(i00, i00b));
  CHECK(i00.coeff(0) == Rat(1));

  QSeries i10 = tetra_index(1, 0, 6);
  CHECK(i10.coeff(0) == tetra_index_bruteforce(1, 0, 6, 40).coeff(0));
}

TEST_CASE("total 3D-indices match the printed listings") {
  QSeries i41 = total_index(KnotId::FourOne, 5);
  long e41[] = {1, -8, -9, 18, 46, 90};
  for (long k = 0; k <= 5; ++k) CHECK(i41.coeff(k) == Rat(e41[k]));

  QSeries i52 = total_index(KnotId::FiveTwo, 7);
  long e52[] = {1, -12, 3, 74, 90, 33, -288, -684};
  for (long k = 0; k <= 7; ++k) CHECK(i52.coeff(k) == Rat(e52[k]));

  QSeries i237 = total_index(KnotId::Pretzel237, 7);
  long e237[] = {1, -8, 3, 50, 58, 13, -196, -456};
  for (long k = 0; k <= 7; ++k) CHECK(i237.coeff(k) == Rat(e237[k]));
}

TEST_CASE("descendant matrices") {
  SeriesMatrix w0 = w_matrix_series(KnotId::FourOne, 0, 30);
  CHECK(w0.at(0, 0).coeff(0) == Rat(1));
  CHECK(w0.at(0, 1).coeff(0) == Rat(1));
  CHECK(w0.at(1, 0).coeff(0) == Rat(1));
  CHECK(w0.at(1, 1).coeff(0) == Rat(3));
  CHECK(agree(w0.det(), QSeries::constant(Rat(2), 30)));

  for (long m : {-3L, -1L, 1L, 2L}) {
    SeriesMatrix wm = w_matrix_series(KnotId::FourOne, m, 25);
    CHECK(agree(wm.det(), QSeries::constant(Rat(2), 20)));
  }

  SeriesMatrix v0 = w_matrix_series(KnotId::FiveTwo, 0, 20);
  CHECK(agree(v0.det(), QSeries::constant(Rat(2), 18)));

  CHECK_THROWS_AS(w_matrix_series(KnotId::Pretzel237, 0, 5), unsupported_knot);
}

TEST_CASE("Q matrix") {
  SeriesMatrix Q = q41_matrix_series(40);
  CHECK(Q.at(0, 0).coeff(0) == Rat(1));
  CHECK(Q.at(0, 1).coeff(0) == Rat(1, 2));
  CHECK(Q.at(1, 0).coeff(0) == Rat(1));
  CHECK(Q.at(1, 1).coeff(0) == Rat(5, 2));
  CHECK(agree(Q.det(), QSeries::constant(Rat(2), 35)));

  // second-column identity: G^{(1)} - G^{(0)}/2 = (G^{(1)} - G^{(-1)})/2
  for (int j = 0; j < 2; ++j) {
    QSeries lhs = g41(1, j, Side::Inside, 40) - g41(0, j, Side::Inside, 40) * Rat(1, 2);
    CHECK(agree(lhs, Q.at(j, 1)));
  }
}
