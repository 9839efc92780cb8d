#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qknot/identities.hpp>

using namespace qknot;

static void expect_pass(const VerifyReport& r) {
  INFO(r.id, " order ", r.order, " detail: ", r.detail, " defect at ",
       r.first_defect_exponent.value_or(-999999));
  CHECK(r.pass);
}

TEST_CASE("exact identities at moderate order") {
  expect_pass(verify_identity("zwegers3g", 50));
  expect_pass(verify_identity("qnqm", 40));
  expect_pass(verify_identity("g1_alt", 60));
  expect_pass(verify_identity("quad_52", 50));
  expect_pass(verify_identity("quad_237", 40));
  expect_pass(verify_identity("qdiff_41", 40));
  expect_pass(verify_identity("qdiff_52", 30));
  expect_pass(verify_identity("det_w_41", 30));
  expect_pass(verify_identity("det_w_52", 24));
  expect_pass(verify_identity("orth_41", 30));
  expect_pass(verify_identity("orth_52", 20));
  expect_pass(verify_identity("side_symmetry", 30));
  expect_pass(verify_identity("nahm_rank3_237", 30));
  expect_pass(verify_identity("q41_column", 50));
}

TEST_CASE("index factorizations at small order") {
  expect_pass(verify_identity("index_fact_41", 20));
  expect_pass(verify_identity("index_fact_52", 14));
  expect_pass(verify_identity("index_fact_237", 12));
}

TEST_CASE("unknown identity errors") {
  CHECK_THROWS_AS(verify_identity("nope", 10), unknown_identity);
}

TEST_CASE("degenerate q-difference case at m=0") {
  // G^{(1)} + G^{(-1)} = G^{(0)}
  for (int j = 0; j < 2; ++j) {
    QSeries lhs = g41(1, j, Side::Inside, 40) + g41(-1, j, Side::Inside, 40);
    CHECK(agree(lhs, g41(0, j, Side::Inside, 40)));
  }
}
