// Exact identity-verification suite for the knot q-series.  Every check is a
// coefficient-level comparison of independently constructed series; a pass
// means zero defect through the stated order.
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "knot_series.hpp"

namespace qknot {

struct VerifyReport {
  std::string id;
  long order = 0;
  bool pass = false;
  std::optional<long> first_defect_exponent;  // lattice steps of the comparison lattice
  std::string detail;
};

namespace detail {

inline VerifyReport report_from(const std::string& id, long order, const QSeries& lhs,
                                const QSeries& rhs, const std::string& detail = "") {
  VerifyReport r;
  r.id = id;
  r.order = order;
  auto d = first_defect(lhs, rhs);
  r.pass = !d.has_value();
  r.first_defect_exponent = d;
  r.detail = detail;
  return r;
}

inline VerifyReport merge(const std::string& id, long order, std::vector<VerifyReport> parts) {
  VerifyReport r;
  r.id = id;
  r.order = order;
  r.pass = true;
  for (auto& p : parts) {
    if (!p.pass && r.pass) {
      r.pass = false;
      r.first_defect_exponent = p.first_defect_exponent;
      r.detail = p.detail;
    }
  }
  return r;
}

// 1/(q;q)_k for k = 0..K, each exact to `order`
inline std::vector<QSeries> inv_poch_table(long K, long order) {
  std::vector<QSeries> t(K + 1);
  std::vector<Rat> c(order + 1, Rat(0));
  c[0] = Rat(1);
  t[0] = QSeries::zero(order);
  t[0].coeffs = c;
  for (long k = 1; k <= K; ++k) {
    div_one_minus_inplace(c, k, Rat(1));
    t[k] = QSeries::zero(order);
    t[k].coeffs = c;
  }
  return t;
}

}  // namespace detail

// --- individual identities --------------------------------------------------

// eq.3g: (q;q)_inf sum (-1)^n q^{n(3n+1)/2}/(q)_n^3  ==  double-sum form  ==
// sum (-1)^n q^{n(n+1)/2}/(q)_n^2  (all equal G_0).
inline VerifyReport verify_zwegers3g(long order) {
  long K = 1;
  while (K * (K + 1) / 2 <= order) ++K;
  auto ip = detail::inv_poch_table(2 * K + 2, order);

  QSeries defg = QSeries::zero(order);
  for (long n = 0; n * (3 * n + 1) / 2 <= order; ++n) {
    QSeries t = (ip[n] * ip[n] * ip[n]).shifted(n * (3 * n + 1) / 2).truncated(order);
    defg = defg + (n % 2 ? -t : t);
  }
  defg = defg * pochhammer(kInfinity, order);

  QSeries dbl = QSeries::zero(order);
  for (long n = 0; n * (n + 1) / 2 <= order; ++n)
    for (long m = 0; (n + m) * (n + m + 1) / 2 <= order; ++m) {
      long s = n + m;
      QSeries t = (ip[n] * ip[m]).shifted(s * (s + 1) / 2).truncated(order);
      dbl = dbl + (s % 2 ? -t : t);
    }
  dbl = dbl * pochhammer(kInfinity, order).inverse();

  QSeries single = g41(0, 0, Side::Inside, order);

  auto r1 = detail::report_from("zwegers3g", order, defg, single, "Defg vs single-sum");
  auto r2 = detail::report_from("zwegers3g", order, dbl, single, "double-sum vs single-sum");
  return detail::merge("zwegers3g", order, {r1, r2});
}

// eq.qnqm: 1/((q)_m (q)_n) = sum_{r+s=m, s+t=n} q^{rt}/((q)_r (q)_s (q)_t),
// checked as truncated series for all slots m, n <= slots.
inline VerifyReport verify_qnqm(long order, long slots = 8) {
  auto ip = detail::inv_poch_table(slots, order);
  std::vector<VerifyReport> parts;
  for (long m = 0; m <= slots; ++m)
    for (long n = 0; n <= slots; ++n) {
      QSeries rhs = QSeries::zero(order);
      for (long s = 0; s <= std::min(m, n); ++s) {
        long r = m - s, t = n - s;
        rhs = rhs + (ip[r] * ip[s] * ip[t]).shifted(r * t).truncated(order);
      }
      parts.push_back(detail::report_from("qnqm", order, ip[m] * ip[n], rhs,
                                          "m=" + std::to_string(m) + " n=" + std::to_string(n)));
    }
  return detail::merge("qnqm", order, parts);
}

// eq.Gsimple: G_1 = sum (-1)^n (6n+1) q^{n(n+1)/2} / (q)_n^2
inline VerifyReport verify_g1_alt(long order) {
  long K = 1;
  while (K * (K + 1) / 2 <= order) ++K;
  auto ip = detail::inv_poch_table(K + 1, order);
  QSeries alt = QSeries::zero(order);
  for (long n = 0; n * (n + 1) / 2 <= order; ++n) {
    QSeries t = (ip[n] * ip[n] * Rat(6 * n + 1)).shifted(n * (n + 1) / 2).truncated(order);
    alt = alt + (n % 2 ? -t : t);
  }
  return detail::report_from("g1_alt", order, alt, g41(0, 1, Side::Inside, order));
}

inline VerifyReport verify_index_fact(KnotId knot, long order) {
  QSeries ind = total_index(knot, order);
  QSeries prod;
  std::string id;
  switch (knot) {
    case KnotId::FourOne:
      id = "index_fact_41";
      prod = g41(0, 0, Side::Inside, order) * g41(0, 1, Side::Inside, order);
      break;
    case KnotId::FiveTwo:
      id = "index_fact_52";
      prod = h52(0, 1, Side::Inside, order) * h52(0, 1, Side::Outside, order) * Rat(2);
      break;
    case KnotId::Pretzel237:
      id = "index_fact_237";
      prod = h237(1, Side::Inside, 2 * order) * h237(1, Side::Outside, 2 * order);
      break;
  }
  return detail::report_from(id, order, ind, prod.truncated(prod.lattice_den * order));
}

inline VerifyReport verify_quad_52(long order) {
  QSeries lhs = h52(0, 0, Side::Inside, order) * h52(0, 2, Side::Outside, order) -
                h52(0, 1, Side::Inside, order) * h52(0, 1, Side::Outside, order) * Rat(2) +
                h52(0, 2, Side::Inside, order) * h52(0, 0, Side::Outside, order);
  return detail::report_from("quad_52", order, lhs, QSeries::zero(order));
}

inline VerifyReport verify_quad_237(long order) {
  long W = 2 * order;
  auto P = [&](int j) { return h237(j, Side::Inside, W); };
  auto M = [&](int j) { return h237(j, Side::Outside, W); };
  QSeries lhs = (P(0) * M(2) + P(2) * M(0)) * Rat(1, 2) - P(1) * M(1) - P(3) * M(3) +
                P(4) * M(4) - P(5) * M(5);
  return detail::report_from("quad_237", order, lhs, QSeries::zero(W, 2));
}

// 41qdiff: G^{(m+1)} - (2-q^m) G^{(m)} + G^{(m-1)} = 0
inline VerifyReport verify_qdiff_41(long order, long mlo = -5, long mhi = 5) {
  std::vector<VerifyReport> parts;
  for (long m = mlo; m <= mhi; ++m)
    for (int j = 0; j < 2; ++j) {
      QSeries two_minus = QSeries::constant(Rat(2), order) -
                          QSeries::monomial(Rat(1), m, order + std::abs(m) + 1);
      QSeries lhs = g41(m + 1, j, Side::Inside, order + std::abs(m) + 1) -
                    g41(m, j, Side::Inside, order + std::abs(m) + 1) * two_minus +
                    g41(m - 1, j, Side::Inside, order + std::abs(m) + 1);
      parts.push_back(detail::report_from("qdiff_41", order, lhs.truncated(order),
                                          QSeries::zero(order),
                                          "m=" + std::to_string(m) + " j=" + std::to_string(j)));
    }
  return detail::merge("qdiff_41", order, parts);
}

// 52qdiffp: y_m - 3 y_{m+1} + (3-q^{2+m}) y_{m+2} - y_{m+3} = 0
inline VerifyReport verify_qdiff_52(long order, long mlo = -5, long mhi = 5) {
  std::vector<VerifyReport> parts;
  for (long m = mlo; m <= mhi; ++m)
    for (int j = 0; j < 3; ++j) {
      long pad = std::abs(m) + 3;
      QSeries mon = QSeries::monomial(Rat(1), 2 + m, order + pad);
      QSeries lhs = h52(m, j, Side::Inside, order + pad) -
                    h52(m + 1, j, Side::Inside, order + pad) * Rat(3) +
                    h52(m + 2, j, Side::Inside, order + pad) *
                        (QSeries::constant(Rat(3), order + pad) - mon) -
                    h52(m + 3, j, Side::Inside, order + pad);
      parts.push_back(detail::report_from("qdiff_52", order, lhs.truncated(order),
                                          QSeries::zero(order),
                                          "m=" + std::to_string(m) + " j=" + std::to_string(j)));
    }
  return detail::merge("qdiff_52", order, parts);
}

inline VerifyReport verify_det_w(KnotId knot, long order, long mlo = -5, long mhi = 5) {
  std::vector<VerifyReport> parts;
  std::string id = knot == KnotId::FourOne ? "det_w_41" : "det_w_52";
  for (long m = mlo; m <= mhi; ++m) {
    QSeries d = w_matrix_series(knot, m, order).det();
    parts.push_back(detail::report_from(id, order, d.truncated(order - 6),
                                        QSeries::constant(Rat(2), order - 6),
                                        "m=" + std::to_string(m)));
  }
  return detail::merge(id, order, parts);
}

// 4_1 orthogonality (frozen empirical form; see repo docs):
//   w_m(q) [[0,1],[1,0]] w_{-m}(1/q)^T = [[0,2],[2,2(2-q^m)]]
inline VerifyReport verify_orth_41(long order, long mlo = -5, long mhi = 5) {
  std::vector<VerifyReport> parts;
  for (long m = mlo; m <= mhi; ++m) {
    long pad = std::abs(m) + 2;
    SeriesMatrix A = w_matrix_series(KnotId::FourOne, m, order + pad);
    SeriesMatrix B = w_matrix_series(KnotId::FourOne, -m, order + pad, Side::Outside);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        QSeries lhs = A.at(r, 0) * B.at(c, 1) + A.at(r, 1) * B.at(c, 0);
        QSeries rhs = QSeries::zero(order);
        if (r == 0 && c == 1) rhs = QSeries::constant(Rat(2), order);
        if (r == 1 && c == 0) rhs = QSeries::constant(Rat(2), order);
        if (r == 1 && c == 1)
          rhs = QSeries::constant(Rat(4), order) -
                QSeries::monomial(Rat(2), m, order + pad).truncated(order);
        parts.push_back(detail::report_from(
            "orth_41", order, lhs.truncated(order), rhs,
            "m=" + std::to_string(m) + " entry " + std::to_string(r) + std::to_string(c)));
      }
  }
  return detail::merge("orth_41", order, parts);
}

// 5_2 orthogonality (frozen empirical form; see repo docs):
//   w_{m-1}(q) [[1,0,0],[0,q^m-3,1],[0,1,0]] w_{-m-1}(1/q)^T = [[0,0,2],[0,-1,0],[2,0,0]]
inline VerifyReport verify_orth_52(long order, long mlo = -4, long mhi = 4) {
  std::vector<VerifyReport> parts;
  for (long m = mlo; m <= mhi; ++m) {
    long pad = std::abs(m) + 4;
    SeriesMatrix A = w_matrix_series(KnotId::FiveTwo, m - 1, order + pad);
    SeriesMatrix B;
    B.rows = B.cols = 3;
    B.a.resize(9);
    for (int j = 0; j < 3; ++j)
      for (int c = 0; c < 3; ++c) B.at(j, c) = h52(m + 1 - c, j, Side::Outside, order + pad);
    QSeries qm = QSeries::monomial(Rat(1), m, order + pad);
    QSeries mid = qm - QSeries::constant(Rat(3), order + pad);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        QSeries lhs = A.at(r, 0) * B.at(c, 0) + A.at(r, 1) * (B.at(c, 2) + B.at(c, 1) * mid) +
                      A.at(r, 2) * B.at(c, 1);
        long rv = (r == 0 && c == 2) ? 2 : (r == 2 && c == 0) ? 2 : (r == 1 && c == 1) ? -1 : 0;
        parts.push_back(detail::report_from(
            "orth_52", order, lhs.truncated(order), QSeries::constant(Rat(rv), order),
            "m=" + std::to_string(m) + " entry " + std::to_string(r) + std::to_string(c)));
      }
  }
  return detail::merge("orth_52", order, parts);
}

// Side symmetries: the outside families against the mechanical q -> 1/q
// rewrite of the inside sums (E_k(1/q) = -E_k(q) convention; finite Pochhammer
// inversion exact).  For 4_1 this is the m <-> -m relation; for 5_2 and the
// (-2,3,7) j<=2 families it relates the +/- sums.
inline VerifyReport verify_side_symmetry(long order) {
  std::vector<VerifyReport> parts;

  // 4_1: rewrite of G_j^{(m)} at 1/q == (-1)^j G_j^{(-m)}(q) == g41(m, j, Outside)
  for (long m = -3; m <= 3; ++m)
    for (int j = 0; j < 2; ++j) {
      long pad = 2 * std::abs(m) + 2;
      long W = order + pad;
      QSeries T = QSeries::one(W);
      QSeries acc = QSeries::zero(W);
      // bracket rewrite: 2m + E1(1/q) + 2 sum (1+q^{-t})/(1-q^{-t})
      //                = 2m - E1(q) - 2 sum (1+q^t)/(1-q^t)
      QSeries bracket = QSeries::constant(Rat(2 * m), W) - eisenstein(1, W);
      for (long n = 0;; ++n) {
        if (n > 0) {
          T = T.shifted(n - m) * Rat(-1);
          T = T.truncated(W);
          if (T.is_zero() || T.min_exp > order) break;
          div_one_minus_inplace(T.coeffs, n, Rat(1));
          div_one_minus_inplace(T.coeffs, n, Rat(1));
          bracket = bracket - QSeries::constant(Rat(2), W) - geometric_tail(n, W) * Rat(4);
        }
        acc = acc + (j == 0 ? T : T * bracket);
        if (n > 0 && n * (n + 1) / 2 - m * n > order && n + 1 - m > 0) break;
      }
      parts.push_back(detail::report_from(
          "side_symmetry", order, acc.truncated(order),
          g41(m, j, Side::Outside, order),
          "4_1 m=" + std::to_string(m) + " j=" + std::to_string(j)));
    }

  // 5_2 (m=0): H^-_j == (-1)^j * [A.4 plus-sum rewritten at 1/q]
  // t_m(1/q) = T_m(q); p-weights rewrite with the Eisenstein convention.
  {
    long W = order;
    QSeries E1 = eisenstein(1, W), E2 = eisenstein(2, W);
    QSeries T = QSeries::one(W);
    QSeries acc0 = QSeries::zero(W), acc1 = QSeries::zero(W), acc2 = QSeries::zero(W);
    // p^{(1)} = (1+3E1)/4 + sum (2+q^t)/(1-q^t); at 1/q:
    //   (1-3E1)/4 + sum -(1+2q^t)/(1-q^t)
    QSeries lin = (QSeries::one(W) - E1 * Rat(3)) * Rat(1, 4);
    // p^{(2)} = p^{(1)}^2 - (3+E2)/24 + sum 3q^t/(1-q^t)^2; at 1/q the square
    // keeps (-lin)^2, E2 -> -E2, and the weighted tails are invariant.
    QSeries sq = QSeries::zero(W);
    for (long n = 0;; ++n) {
      if (n > 0) {
        T = T.shifted(n) * Rat(-1);
        T = T.truncated(W);
        if (T.is_zero() || T.min_exp > order) break;
        for (int rep = 0; rep < 3; ++rep) div_one_minus_inplace(T.coeffs, n, Rat(1));
        lin = lin - QSeries::constant(Rat(1), W) - geometric_tail(n, W) * Rat(3);
        sq = sq + geometric_tail_weighted(n, W) * Rat(3);
      }
      acc0 = acc0 + T;
      acc1 = acc1 + T * lin;
      acc2 = acc2 + T * (lin * lin - (E2 * Rat(-1) + QSeries::constant(Rat(3), W)) * Rat(1, 24) + sq);
      if (n > 0 && n * (n + 1) / 2 > order) break;
    }
    parts.push_back(detail::report_from("side_symmetry", order, acc0,
                                        h52_a4(0, Side::Outside, order), "5_2 j=0"));
    parts.push_back(detail::report_from("side_symmetry", order, -acc1,
                                        h52_a4(1, Side::Outside, order), "5_2 j=1"));
    parts.push_back(detail::report_from("side_symmetry", order, acc2,
                                        h52_a4(2, Side::Outside, order), "5_2 j=2"));
  }

  // (-2,3,7), j <= 2: H^+_j rewritten at 1/q == (-1)^j H^-_j(q).
  {
    long No = order;
    QSeries E1 = eisenstein(1, No), E2 = eisenstein(2, No);
    QSeries T = QSeries::one(No);
    QSeries acc0 = QSeries::zero(No), acc1 = QSeries::zero(No), acc2 = QSeries::zero(No);
    // p^{(1)} = 4m+1-2E_1^{(m)}-2E_1^{(2m)}; with E^{(m)}_1 = E^{(0)}_1 - B_m and
    // E^{(0)}_1(1/q) = 1/2 - E^{(0)}_1, B_m(1/q) = -m - B_m:
    //   p^{(1)}(1/q) = -(2m+1-2E_1^{(m)}-2E_1^{(2m)}) = -P^{(1)}
    QSeries E1t = eisenstein_partial(1, 0, No);
    QSeries E2t = eisenstein_partial(2, 0, No);
    QSeries lin, quad;
    QSeries Bm = QSeries::zero(No), B2m = QSeries::zero(No);
    QSeries Cm = QSeries::zero(No), C2m = QSeries::zero(No);
    for (long n = 0;; ++n) {
      if (n > 0) {
        T = T.shifted(2 * n).truncated(No);  // t_m(1/q) = T_m(q), degree steps q^{m(m+1)}
        if (T.is_zero() || T.min_exp > No) break;
        div_one_minus_inplace(T.coeffs, n, Rat(1));
        div_one_minus_inplace(T.coeffs, n, Rat(1));
        div_one_minus_inplace(T.coeffs, 2 * n - 1, Rat(1));
        div_one_minus_inplace(T.coeffs, 2 * n, Rat(1));
        Bm = Bm + geometric_tail(n, No);
        B2m = B2m + geometric_tail(2 * n - 1, No) + geometric_tail(2 * n, No);
        Cm = Cm + geometric_tail_weighted(n, No);
        C2m = C2m + geometric_tail_weighted(2 * n - 1, No) + geometric_tail_weighted(2 * n, No);
      }
      // rewrite of p at 1/q, expressed in series at q:
      // E^{(m)}_1(1/q) = 1/2 - E1t + m + B_m, etc.
      QSeries E1m_inv = QSeries::constant(Rat(1, 2), No) - E1t + QSeries::constant(Rat(n), No) + Bm;
      QSeries E12m_inv =
          QSeries::constant(Rat(1, 2), No) - E1t + QSeries::constant(Rat(2 * n), No) + B2m;
      lin = QSeries::constant(Rat(4 * n + 1), No) - E1m_inv * Rat(2) - E12m_inv * Rat(2);
      // E^{(m)}_2(1/q) = -(E2t - 1/12·bookkeeping) ... use E_2(1/q) = -E_2 and the
      // invariance of the weighted tails:  E^{(m)}_2 = E2t - C_m with
      // E2t(1/q) = 1/12 - E2t and C_m(1/q) = C_m.
      QSeries E2m_inv = QSeries::constant(Rat(1, 12), No) - E2t - Cm;
      QSeries E22m_inv = QSeries::constant(Rat(1, 12), No) - E2t - C2m;
      quad = lin * lin - E2m_inv * Rat(2) - E22m_inv * Rat(4) + E2 * Rat(1, 3);
      acc0 = acc0 + T;
      acc1 = acc1 + T * lin;
      acc2 = acc2 + T * quad;
      if (n > 0 && n * (n + 1) > No) break;
    }
    auto HM = [&](int j) { return h237(j, Side::Outside, 2 * No); };
    parts.push_back(
        detail::report_from("side_symmetry", order, acc0.with_lattice(2), HM(0), "237 j=0"));
    parts.push_back(
        detail::report_from("side_symmetry", order, -acc1.with_lattice(2), HM(1), "237 j=1"));
    parts.push_back(
        detail::report_from("side_symmetry", order, acc2.with_lattice(2), HM(2), "237 j=2"));
  }

  return detail::merge("side_symmetry", order, parts);
}

// A.6 remark: (q;q)_inf^2 H^+_0 is a rank-3 Nahm sum.
inline VerifyReport verify_nahm_rank3_237(long order) {
  long No = order;
  auto ip = detail::inv_poch_table((long)std::sqrt((double)(2 * No)) + 3, No);
  QSeries rhs = QSeries::zero(No);
  auto expo2 = [&](long k, long l, long m) {  // twice the exponent (integer)
    return k * k + l * l + 4 * m * m + 2 * k * m + 4 * l * m + k + l + 2 * m;
  };
  for (long k = 0; expo2(k, 0, 0) <= 2 * No; ++k)
    for (long l = 0; expo2(k, l, 0) <= 2 * No; ++l)
      for (long m = 0; expo2(k, l, m) <= 2 * No; ++m) {
        long e2 = expo2(k, l, m);
        if (e2 % 2 != 0) return detail::report_from("nahm_rank3_237", order, QSeries::one(1),
                                                    QSeries::zero(1), "half-integer exponent");
        QSeries t = (ip[k] * ip[l] * ip[m]).shifted(e2 / 2).truncated(No);
        rhs = rhs + ((k + l) % 2 ? -t : t);
      }
  QSeries pinf = pochhammer(kInfinity, No);
  QSeries lhs = (pinf * pinf * h237(0, Side::Inside, 2 * No)).truncated(2 * No);
  return detail::report_from("nahm_rank3_237", order, lhs, rhs.with_lattice(2).truncated(2 * No));
}

// Q-matrix second-column identity: G^{(1)} - G^{(0)}/2 == (G^{(1)} - G^{(-1)})/2
inline VerifyReport verify_q41_column(long order) {
  SeriesMatrix Q = q41_matrix_series(order);
  std::vector<VerifyReport> parts;
  for (int j = 0; j < 2; ++j) {
    QSeries lhs = g41(1, j, Side::Inside, order) - g41(0, j, Side::Inside, order) * Rat(1, 2);
    parts.push_back(
        detail::report_from("q41_column", order, lhs, Q.at(j, 1), "j=" + std::to_string(j)));
  }
  parts.push_back(detail::report_from("q41_column", order, Q.det().truncated(order - 2),
                                      QSeries::constant(Rat(2), order - 2), "det Q = 2"));
  return detail::merge("q41_column", order, parts);
}

// --- dispatcher ---------------------------------------------------------------

inline VerifyReport verify_identity(const std::string& id, long order) {
  if (id == "zwegers3g") return verify_zwegers3g(order);
  if (id == "qnqm") return verify_qnqm(order);
  if (id == "g1_alt") return verify_g1_alt(order);
  if (id == "index_fact_41") return verify_index_fact(KnotId::FourOne, order);
  if (id == "index_fact_52") return verify_index_fact(KnotId::FiveTwo, order);
  if (id == "index_fact_237") return verify_index_fact(KnotId::Pretzel237, order);
  if (id == "quad_52") return verify_quad_52(order);
  if (id == "quad_237") return verify_quad_237(order);
  if (id == "qdiff_41") return verify_qdiff_41(order);
  if (id == "qdiff_52") return verify_qdiff_52(order);
  if (id == "det_w_41") return verify_det_w(KnotId::FourOne, order);
  if (id == "det_w_52") return verify_det_w(KnotId::FiveTwo, order);
  if (id == "orth_41") return verify_orth_41(order);
  if (id == "orth_52") return verify_orth_52(order);
  if (id == "side_symmetry") return verify_side_symmetry(order);
  if (id == "nahm_rank3_237") return verify_nahm_rank3_237(order);
  if (id == "q41_column") return verify_q41_column(order);
  throw unknown_identity("verify_identity: unknown id " + id);
}

inline const std::vector<std::string>& all_identity_ids() {
  static const std::vector<std::string> ids = {
      "zwegers3g",      "qnqm",          "g1_alt",   "index_fact_41", "index_fact_52",
      "index_fact_237", "quad_52",       "quad_237", "qdiff_41",      "qdiff_52",
      "det_w_41",       "det_w_52",      "orth_41",  "orth_52",       "side_symmetry",
      "nahm_rank3_237", "q41_column"};
  return ids;
}

}  // namespace qknot
