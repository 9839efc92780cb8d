// Exact q-series attached to the knots 4_1, 5_2 and (-2,3,7): descendant
// families, tetrahedron index, total 3D-indices and the descendant matrices.
#pragma once

#include <map>
#include <vector>

#include "knots.hpp"
#include "qseries.hpp"

namespace qknot {

// ---------------------------------------------------------------------------
// 4_1 family: G_0^{(m)} = sum (-1)^n q^{n(n+1)/2 + mn} / (q;q)_n^2,
//             G_1^{(m)} = same sum weighted by 2m + E_1 + 2*sum_{j<=n}(1+q^j)/(1-q^j).
// Outside |q|>1 the family extends by G_j^{(m)}(1/q) = (-1)^j G_j^{(-m)}(q),
// which is what the Outside series returns (expansion in the contracting variable).

namespace detail {

// lowest exponent of q^{n(n+1)/2 + mn} over n >= 0
inline long g41_min_deg(long m) {
  if (m >= 0) return 0;
  auto f = [&](long n) { return n * (n + 1) / 2 + m * n; };
  return std::min(f(-m - 1), f(-m));
}

}  // namespace detail

inline QSeries g41(long m, int j, Side side, long order) {
  if (j != 0 && j != 1) throw error("g41: j in {0,1}");
  if (side == Side::Outside) {
    QSeries s = g41(-m, j, Side::Inside, order);
    return j == 1 ? -s : s;
  }
  long dip = -detail::g41_min_deg(m);
  long W = order + dip;  // working order so every T_n is exact through `order`
  QSeries T = QSeries::one(W);
  QSeries acc = QSeries::zero(W);
  QSeries bracket;
  if (j == 1) bracket = eisenstein(1, W) + QSeries::constant(Rat(2 * m), W);
  for (long n = 0;; ++n) {
    if (n > 0) {
      T = T.shifted(n + m) * Rat(-1);
      T = T.truncated(W);
      if (T.is_zero() || T.min_exp > order) break;
      div_one_minus_inplace(T.coeffs, n, Rat(1));
      div_one_minus_inplace(T.coeffs, n, Rat(1));
      if (j == 1) bracket = bracket + QSeries::constant(Rat(2), W) + geometric_tail(n, W) * Rat(4);
    }
    acc = acc + (j == 0 ? T : T * bracket);
    if (n > 0 && n * (n + 1) / 2 + m * n > order && n + 1 + m > 0) break;
  }
  return acc.truncated(order);
}

// ---------------------------------------------------------------------------
// 5_2 family H_j^{(m)}.  Inside (|q|<1):
//   H_0 = sum q^{n(n+1)+mn}/(q;q)_n^3
//   H_1 = sum ... (1+2n+m - 3 E_1^{(n)})
//   H_2 = sum ... ((1+2n+m-3E_1^{(n)})^2 - 3 E_2^{(n)} - E_2/6)
// Outside, the defining sums are
//   H_j^{(-m)}(1/q) = sum (-1)^n q^{n(n+1)/2+mn}/(q;q)_n^3 * (1; 1/2+n+m-3E_1^{(n)}; (...)^2 - 3E_2^{(n)} - E_2/12)
// so h52(mu, j, Outside) uses these with m = -mu.

inline QSeries h52(long m, int j, Side side, long order) {
  if (j < 0 || j > 2) throw error("h52: j in {0,1,2}");
  bool inside = side == Side::Inside;
  // the outside sums pair q^{+mn} weights with descendant m (the labeling the
  // descendant state integrals fix; see repo docs)
  long mm = m;
  auto degree = [&](long n) { return inside ? n * (n + 1) + mm * n : n * (n + 1) / 2 + mm * n; };
  long dip = 0;
  for (long n = 0; n < 4 * (std::abs(mm) + 1); ++n) dip = std::min(dip, degree(n));
  long W = order - dip;
  QSeries T = QSeries::one(W);
  QSeries acc = QSeries::zero(W);
  // running Eisenstein pieces: E_1^{(n)} = E1t - B_n, E_2^{(n)} = E2t - C_n
  QSeries E1n = eisenstein_partial(1, 0, W);
  QSeries E2n = eisenstein_partial(2, 0, W);
  QSeries E2 = eisenstein(2, W);
  for (long n = 0;; ++n) {
    if (n > 0) {
      long shift = degree(n) - degree(n - 1);
      T = T.shifted(shift) * Rat(inside ? 1 : -1);
      T = T.truncated(W);
      if (T.is_zero() || T.min_exp > order) break;
      for (int rep = 0; rep < 3; ++rep) div_one_minus_inplace(T.coeffs, n, Rat(1));
      E1n = E1n - geometric_tail(n, W);
      E2n = E2n - geometric_tail_weighted(n, W);
    }
    if (j == 0) {
      acc = acc + T;
    } else {
      Rat c0 = inside ? Rat(1 + 2 * n + mm) : Rat(1 + 2 * (n + mm), 2);
      QSeries lin = QSeries::constant(c0, W) - E1n * Rat(3);
      if (j == 1) {
        acc = acc + T * lin;
      } else {
        QSeries quad = lin * lin - E2n * Rat(3) - E2 * Rat(1, inside ? 6 : 12);
        acc = acc + T * quad;
      }
    }
    if (n > 0 && degree(n) > order && degree(n + 1) > degree(n)) break;
  }
  return acc.truncated(order);
}

// A.4 fast forms for m = 0 (independent construction, used as cross-check):
// H^+_j = sum t_m p_m^{(j)},  H^-_j = sum T_m P_m^{(j)}.
inline QSeries h52_a4(int j, Side side, long order) {
  if (j < 0 || j > 2) throw error("h52_a4: j in {0,1,2}");
  bool plus = side == Side::Inside;
  QSeries T = QSeries::one(order);
  QSeries acc = QSeries::zero(order);
  QSeries E1 = eisenstein(1, order);
  QSeries E2 = eisenstein(2, order);
  // p^{(1)}_0 = (1+3E1)/4, P^{(1)}_0 = (3E1-1)/4
  QSeries lin = (E1 * Rat(3) + QSeries::constant(Rat(plus ? 1 : -1), order)) * Rat(1, 4);
  QSeries sq = QSeries::zero(order);  // sum_{j<=m} 3 q^j/(1-q^j)^2
  for (long n = 0;; ++n) {
    if (n > 0) {
      long shift = plus ? 2 * n : n;  // degree steps of q^{m(m+1)} resp. q^{m(m+1)/2}
      T = T.shifted(shift) * Rat(plus ? 1 : -1);
      T = T.truncated(order);
      if (T.is_zero() || T.min_exp > order) break;
      for (int rep = 0; rep < 3; ++rep) div_one_minus_inplace(T.coeffs, n, Rat(1));
      // (2+q^j)/(1-q^j) = 2 + 3*tail ; (1+2q^j)/(1-q^j) = 1 + 3*tail
      lin = lin + QSeries::constant(Rat(plus ? 2 : 1), order) + geometric_tail(n, order) * Rat(3);
      sq = sq + geometric_tail_weighted(n, order) * Rat(3);
    }
    if (j == 0)
      acc = acc + T;
    else if (j == 1)
      acc = acc + T * lin;
    else {
      // A.4 prints P^{(2)} with -(E_2-3)/24; the sign must be + to reproduce
      // the H^-_2 listing of eq.52deform (the + side is consistent as printed).
      QSeries corr = plus ? (E2 + QSeries::constant(Rat(3), order)) * Rat(-1, 24)
                          : (E2 - QSeries::constant(Rat(3), order)) * Rat(1, 24);
      QSeries quad = lin * lin + sq + corr;
      acc = acc + T * quad;
    }
    if (n > 0 && (plus ? n * (n + 1) : n * (n + 1) / 2) > order) break;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// (-2,3,7) family, A.6.  All series are returned on the q^{1/2} lattice.
// `order` counts lattice steps of q^{1/2}.

namespace detail {

// prod_{k>=0} (1 - sgn * q^{(e0 + 2k)/2}) truncated at half-lattice order W
inline QSeries half_poch_inf(long e0, int sgn, long W) {
  QSeries s = QSeries::one(W, 2);
  if (W < 0) return s;
  std::vector<Rat> c(W + 1, Rat(0));
  c[0] = Rat(1);
  for (long e = e0; e <= W; e += 2) mul_one_minus_inplace(c, e, Rat(sgn));
  s.coeffs = std::move(c);
  s.canonicalize();
  return s;
}

}  // namespace detail

inline QSeries h237(int j, Side side, long order) {
  if (j < 0 || j > 5) throw error("h237: j in {0,...,5}");
  const long W = order;  // half-lattice steps
  const bool plus = side == Side::Inside;
  if (j <= 2) {
    // integer-lattice content: t_m = q^{m(2m+1)} / ((q;q)_m^2 (q;q)_{2m}) and
    // T_n = q^{n(n+1)} / ((q;q)_n^2 (q;q)_{2n}) with the A.6 weights.
    long No = order / 2;  // integer-lattice order
    QSeries T = QSeries::one(No);
    QSeries acc = QSeries::zero(No);
    QSeries E2 = eisenstein(2, No);
    QSeries E1a = eisenstein_partial(1, 0, No), E1b = eisenstein_partial(1, 0, No);
    QSeries E2a = eisenstein_partial(2, 0, No), E2b = eisenstein_partial(2, 0, No);
    QSeries E2zero = eisenstein_partial(2, 0, No);
    for (long n = 0;; ++n) {
      if (n > 0) {
        long shift = plus ? 4 * n - 1 : 2 * n;
        T = T.shifted(shift).truncated(No);
        if (T.is_zero() || T.min_exp > No) break;
        div_one_minus_inplace(T.coeffs, n, Rat(1));
        div_one_minus_inplace(T.coeffs, n, Rat(1));
        div_one_minus_inplace(T.coeffs, 2 * n - 1, Rat(1));
        div_one_minus_inplace(T.coeffs, 2 * n, Rat(1));
        // E_1^{(n)} = E1a - B_n ; E_1^{(2n)} = E1b - B_{2n} (kept incrementally)
        E1a = E1a - geometric_tail(n, No);
        E1b = E1b - geometric_tail(2 * n - 1, No) - geometric_tail(2 * n, No);
        E2a = E2a - geometric_tail_weighted(n, No);
        E2b = E2b - geometric_tail_weighted(2 * n - 1, No) - geometric_tail_weighted(2 * n, No);
      }
      if (j == 0) {
        acc = acc + T;
      } else {
        Rat c0 = plus ? Rat(4 * n + 1) : Rat(2 * n + 1);
        QSeries lin = QSeries::constant(c0, No) - E1a * Rat(2) - E1b * Rat(2);
        if (j == 1) {
          acc = acc + T * lin;
        } else {
          QSeries quad = lin * lin - E2a * Rat(2) - E2b * Rat(4);
          if (plus)
            quad = quad - E2 * Rat(1, 3);
          else
            quad = quad + E2 * Rat(1, 3) + E2zero * Rat(12) - QSeries::constant(Rat(1, 2), No);
          acc = acc + T * quad;
        }
      }
      if (n > 0 && (plus ? n * (2 * n + 1) : n * (n + 1)) > No) break;
    }
    return acc.with_lattice(2).truncated(W);
  }

  // j in {3,4,5}: sums on the half lattice with infinite-product prefactors.
  // Exponents below are in half-lattice steps.
  QSeries pref;
  {
    QSeries qq = pochhammer(kInfinity, W / 2 + 1).with_lattice(2).truncated(W);
    if (plus) {
      int sgn = (j == 4 || j == 5) ? -1 : 1;
      long e0 = (j == 4) ? 2 : 3;  // -q vs +-q^{3/2}
      QSeries top = detail::half_poch_inf(e0, sgn, W);
      pref = top * top * (qq * qq).inverse();
    } else {
      // (q;q)^2 / (s;q)^2 with s in {q^{-1/2}, -1, -q^{-1/2}}
      if (j == 3) {
        // (q^{-1/2};q)_inf = (1 - q^{-1/2}) (q^{1/2};q)_inf ; (1-q^{-1/2})^2 = q^{-1}(1-q^{1/2})^2
        QSeries bottom = detail::half_poch_inf(1, 1, W);
        QSeries extra = QSeries::one(W, 2) - QSeries::monomial(Rat(1), 1, W, 2);
        pref = (qq * qq * (bottom * bottom * extra * extra).inverse()).shifted(2);
      } else if (j == 4) {
        QSeries bottom = detail::half_poch_inf(2, -1, W);
        pref = qq * qq * (bottom * bottom).inverse() * Rat(1, 4);
      } else {
        // (-q^{-1/2};q)_inf = q^{-1/2} (1+q^{1/2}) (-q^{1/2};q)_inf
        QSeries bottom = detail::half_poch_inf(1, -1, W);
        QSeries extra = QSeries::one(W, 2) + QSeries::monomial(Rat(1), 1, W, 2);
        pref = (qq * qq * (bottom * bottom * extra * extra).inverse()).shifted(2);
      }
    }
  }
  // the q-hypergeometric sums; degrees in half steps
  int dsgn = (j == 5) ? -1 : 1;  // sign inside (-+ q^{m+1/2};q)_m denominators
  auto fulldeg = [&](long n) {
    if (plus) return j == 4 ? 2 * n * (2 * n + 1) : 2 * (2 * n + 1) * (n + 1);
    return j == 4 ? 2 * n * (n + 1) : 2 * n * (n + 2);
  };
  QSeries T = QSeries::one(W, 2).shifted(fulldeg(0)).truncated(W);
  QSeries acc = QSeries::zero(W, 2);
  for (long n = 0;; ++n) {
    if (n > 0) {
      T = T.shifted(fulldeg(n) - fulldeg(n - 1)).truncated(W);
      if (T.is_zero() || T.min_exp > W) break;
      if (j == 4) {
        // ((-+ q;q)_n^2 (q;q)_{2n}) denominators
        div_one_minus_inplace(T.coeffs, 2 * n, Rat(-1));
        div_one_minus_inplace(T.coeffs, 2 * n, Rat(-1));
        div_one_minus_inplace(T.coeffs, 2 * (2 * n - 1), Rat(1));
        div_one_minus_inplace(T.coeffs, 2 * (2 * n), Rat(1));
      } else {
        // ((+- q^{3/2};q)_n^2 (q;q)_{2n+1}) denominators: new factors at step n are
        // (1 -+ q^{n+1/2})^2 and (1-q^{2n})(1-q^{2n+1})
        div_one_minus_inplace(T.coeffs, 2 * n + 1, Rat(dsgn));
        div_one_minus_inplace(T.coeffs, 2 * n + 1, Rat(dsgn));
        div_one_minus_inplace(T.coeffs, 2 * (2 * n), Rat(1));
        div_one_minus_inplace(T.coeffs, 2 * (2 * n + 1), Rat(1));
      }
    } else if (j != 4) {
      // n = 0 term still carries 1/(q;q)_1
      div_one_minus_inplace(T.coeffs, 2, Rat(1));
    }
    acc = acc + T;
    if (n > 0 && fulldeg(n) > W) break;
  }
  return (pref * acc).truncated(order);
}

// ---------------------------------------------------------------------------
// Tetrahedron index I_Delta(m,e), exact on the q^{1/2} lattice (half steps).

namespace detail {

// triality rotation (m,e) -> (-e-m, m) with weight (-q^{1/2})^m.
// Returns {m', e', w} with m' <= 0 and I(m,e) = (-q^{1/2})^w I(m',e').
struct TetraRot {
  long m, e, w;
};

inline TetraRot tetra_reduce(long m, long e) {
  if (m <= 0) return {m, e, 0};
  long m1 = -e - m, e1 = m;
  if (m1 <= 0) return {m1, e1, m};
  long m2 = e, e2 = -e - m;
  if (m2 <= 0) return {m2, e2, -e};
  throw non_convergent("tetra_index: no convergent rotation (unreachable)");
}

// exact minimal half-degree of the n-sum for m <= 0 (single minimal term)
inline long tetra_sum_min_half_deg(long m, long e) {
  long n0 = std::max(0L, -e);
  return n0 * (n0 + 1) - 2 * n0 * m - e * m;  // 2 * [n(n+1)/2 - (n+e/2) m]
}

}  // namespace detail

// exact lowest exponent (in q^{1/2} half-steps) of I_Delta(m,e)
inline long tetra_min_half_deg(long m, long e) {
  auto r = detail::tetra_reduce(m, e);
  return r.w + detail::tetra_sum_min_half_deg(r.m, r.e);
}

// I_Delta(m,e) truncated at half-lattice order `horder` (exponent q^{horder/2}).
inline QSeries tetra_index_half(long m, long e, long horder) {
  auto rot = detail::tetra_reduce(m, e);
  long mm = rot.m, ee = rot.e;
  long n0 = std::max(0L, -ee);
  // sum over n >= n0 of (-1)^n q^{n(n+1)/2 - (n+ee/2) mm} / ((q;q)_n (q;q)_{n+ee})
  long lo = detail::tetra_sum_min_half_deg(mm, ee);
  long Wfull = horder - rot.w;  // needed exactness inside the rotation
  if (Wfull < lo) return QSeries::zero(horder, 2);
  long Wint = (Wfull - lo) / 2;  // length in integer steps above the minimum
  // build in integer-lattice window relative to lo
  std::vector<Rat> accv(Wint + 1, Rat(0));
  std::vector<Rat> term(Wint + 1, Rat(0));
  term[0] = Rat((n0 % 2 == 0) ? 1 : -1);
  {  // 1/((q;q)_{n0} (q;q)_{n0+ee}) for the first term
    for (long t = 1; t <= n0; ++t) div_one_minus_inplace(term, t, Rat(1));
    for (long t = 1; t <= n0 + ee; ++t) div_one_minus_inplace(term, t, Rat(1));
  }
  auto half_deg = [&](long n) { return n * (n + 1) - 2 * n * mm - ee * mm; };
  long cur = half_deg(n0);
  for (long n = n0;;) {
    // accumulate term at offset (half_deg(n) - lo)/2
    long off = (cur - lo) / 2;
    for (long k = 0; k + off <= Wint && k < (long)term.size(); ++k) accv[k + off] += term[k];
    ++n;
    long nxt = half_deg(n);
    if (nxt > Wfull) break;
    // ratio: -q^{(nxt-cur)/2 in half} / ((1-q^n)(1-q^{n+ee}))
    for (Rat& c : term) c = -c;
    div_one_minus_inplace(term, n, Rat(1));
    div_one_minus_inplace(term, n + ee, Rat(1));
    // drop entries that will exceed the window after shifting
    long newlen = Wint + 1 - (nxt - lo) / 2;
    if (newlen <= 0) break;
    if ((long)term.size() > newlen) term.resize(newlen);
    cur = nxt;
  }
  QSeries s;
  s.lattice_den = 2;
  s.order = horder;
  s.min_exp = lo + rot.w;
  s.coeffs.assign(horder - s.min_exp + 1, Rat(0));
  int sgn = (rot.w % 2 == 0) ? 1 : -1;
  for (long k = 0; k <= Wint; ++k) {
    long e2 = lo + 2 * k + rot.w;
    if (e2 <= horder) s.coeffs[e2 - s.min_exp] = (sgn > 0 ? accv[k] : -accv[k]);
  }
  s.canonicalize();
  return s;
}

// I_Delta(m,e) truncated at integer order (the spec-facing variant).
inline QSeries tetra_index(long m, long e, long order) { return tetra_index_half(m, e, 2 * order); }

// Brute-force oracle: direct sum with an explicit n-cap, no triality.
inline QSeries tetra_index_bruteforce(long m, long e, long order, long ncap) {
  long horder = 2 * order;
  long n0 = std::max(0L, -e);
  long lo = horder;
  auto hdeg = [&](long n) { return n * (n + 1) - 2 * n * m - e * m; };
  for (long n = n0; n <= n0 + ncap; ++n) lo = std::min(lo, hdeg(n));
  QSeries acc = QSeries::zero(horder, 2);
  for (long n = n0; n <= n0 + ncap; ++n) {
    long hd = hdeg(n);
    if (hd > horder) continue;
    long Wint = (horder - hd) / 2;
    std::vector<Rat> term(Wint + 1, Rat(0));
    term[0] = Rat((n % 2 == 0) ? 1 : -1);
    for (long t = 1; t <= n; ++t) div_one_minus_inplace(term, t, Rat(1));
    for (long t = 1; t <= n + e; ++t) div_one_minus_inplace(term, t, Rat(1));
    QSeries ts;
    ts.lattice_den = 2;
    ts.order = horder;
    ts.min_exp = hd;
    ts.coeffs.assign(horder - hd + 1, Rat(0));
    for (long k = 0; k <= Wint; ++k) ts.coeffs[2 * k] = term[k];
    ts.canonicalize();
    acc = acc + ts;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Total 3D-index as a lattice sum, truncated by the exact per-point minimal
// degree and certified by box doubling.

namespace detail {

struct TetraCache {
  std::map<std::pair<long, long>, QSeries> memo;
  // exact through half-order at least `need`
  const QSeries& get(long m, long e, long need) {
    auto key = std::make_pair(m, e);
    auto it = memo.find(key);
    if (it != memo.end() && it->second.order >= need) return it->second;
    QSeries s = tetra_index_half(m, e, need);
    if (it != memo.end()) {
      it->second = std::move(s);
      return it->second;
    }
    return memo.emplace(key, std::move(s)).first->second;
  }
};

}  // namespace detail

inline QSeries total_index(KnotId knot, long order) {
  const long horder = 2 * order;
  detail::TetraCache cache;

  // per-point argument lists and weight (in half steps)
  auto point_args = [&](long k1, long k2, long k3, std::vector<std::pair<long, long>>& args) -> long {
    args.clear();
    switch (knot) {
      case KnotId::FourOne:
        args.push_back({k1, k2});
        args.push_back({k2, k1});
        return 0;
      case KnotId::FiveTwo:
        args.push_back({-k1, k1 - k2});
        args.push_back({-k1, k1 - k2 - k3});
        args.push_back({2 * k1 - 2 * k2 - k3, -k1});
        return 0;
      case KnotId::Pretzel237:
        args.push_back({2 * k2, k1 - 2 * k2 - k3});
        args.push_back({-k1 + k2, k1 - 2 * k2});
        args.push_back({k1 - 2 * k2 - 2 * k3, k2});
        return k1 - 2 * k2;  // weight (-q^{1/2})^{k1-2k2}
    }
    return 0;
  };
  const int dim = (knot == KnotId::FourOne) ? 2 : 3;

  std::vector<std::pair<long, long>> args;
  auto min_half_deg = [&](long k1, long k2, long k3) -> long {
    long w = point_args(k1, k2, k3, args);
    long d = w;
    for (auto& a : args) d += tetra_min_half_deg(a.first, a.second);
    return d;
  };

  auto sum_box = [&](long B, QSeries& acc, long skip_inner) -> long {
    long contributing = 0;
    long k3lo = dim == 3 ? -B : 0, k3hi = dim == 3 ? B : 0;
    for (long k1 = -B; k1 <= B; ++k1)
      for (long k2 = -B; k2 <= B; ++k2)
        for (long k3 = k3lo; k3 <= k3hi; ++k3) {
          if (std::max({std::abs(k1), std::abs(k2), std::abs(k3)}) <= skip_inner) continue;
          long d = min_half_deg(k1, k2, k3);
          if (d > horder) continue;
          ++contributing;
          long w = point_args(k1, k2, k3, args);
          // factor i must be exact through horder - w - sum of the other
          // factors' minimal degrees
          std::vector<long> dmin(args.size());
          long dtot = w;
          for (size_t i = 0; i < args.size(); ++i) {
            dmin[i] = tetra_min_half_deg(args[i].first, args[i].second);
            dtot += dmin[i];
          }
          auto need = [&](size_t i) { return horder - (dtot - dmin[i]); };
          QSeries prod = cache.get(args[0].first, args[0].second, need(0));
          for (size_t i = 1; i < args.size(); ++i)
            prod = prod * cache.get(args[i].first, args[i].second, need(i));
          if (w != 0) {
            prod = prod.shifted(w);
            if (w % 2 != 0) prod = prod * Rat(-1);
          }
          acc = acc + prod.truncated(horder);
        }
    return contributing;
  };

  // grow the box until three consecutive shells contribute nothing
  long B = 4;
  QSeries acc = QSeries::zero(horder, 2);
  sum_box(B, acc, -1);
  long quiet = 0;
  while (quiet < 3 && B < 4096) {
    ++B;
    long got = sum_box(B, acc, B - 1);
    quiet = got == 0 ? quiet + 1 : 0;
  }
  // certification: no contributing point up to 2B
  long k3lo = dim == 3 ? -2 * B : 0, k3hi = dim == 3 ? 2 * B : 0;
  for (long k1 = -2 * B; k1 <= 2 * B; ++k1)
    for (long k2 = -2 * B; k2 <= 2 * B; ++k2)
      for (long k3 = k3lo; k3 <= k3hi; ++k3) {
        if (std::max({std::abs(k1), std::abs(k2), std::abs(k3)}) <= B) continue;
        if (min_half_deg(k1, k2, k3) <= horder)
          throw truncation_unstable("total_index: doubling the lattice box changed the sum");
      }

  // indices live on the integer lattice even for (-2,3,7)
  QSeries out = QSeries::zero(order, 1);
  out.min_exp = 0;
  out.coeffs.assign(order + 1, Rat(0));
  for (long e2 = acc.is_zero() ? 1 : acc.min_exp; e2 <= horder; ++e2) {
    Rat c = acc.coeff(e2);
    if (c.is_zero()) continue;
    if (e2 % 2 != 0 || e2 < 0)
      throw truncation_unstable("total_index: non-integral exponent survived the lattice sum");
    out.coeffs[e2 / 2] = c;
  }
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Descendant matrices.

struct SeriesMatrix {
  int rows = 0, cols = 0;
  std::vector<QSeries> a;
  QSeries& at(int r, int c) { return a[r * cols + c]; }
  const QSeries& at(int r, int c) const { return a[r * cols + c]; }

  QSeries det() const {
    if (rows != cols) throw error("SeriesMatrix::det: square only");
    if (rows == 1) return a[0];
    if (rows == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (rows == 3)
      return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
             at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
             at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    throw error("SeriesMatrix::det: size > 3 not needed");
  }
};

// 4_1: rows are descendants (m, m+1), columns j = 0,1.
// 5_2: rows are j = 0,1,2, columns are descendants (m, m+1, m+2).
inline SeriesMatrix w_matrix_series(KnotId knot, long m, long order, Side side = Side::Inside) {
  SeriesMatrix M;
  if (knot == KnotId::FourOne) {
    M.rows = M.cols = 2;
    M.a.resize(4);
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < 2; ++j) M.at(r, j) = g41(m + r, j, side, order);
    return M;
  }
  if (knot == KnotId::FiveTwo) {
    M.rows = M.cols = 3;
    M.a.resize(9);
    for (int j = 0; j < 3; ++j)
      for (int c = 0; c < 3; ++c) M.at(j, c) = h52(m + c, j, side, order);
    return M;
  }
  throw unsupported_knot("w_matrix_series: descendants exist for 4_1 and 5_2 only");
}

// Q(tau) = w_0(q)^T [[1,-1/2],[0,1]]; second column realized as (G^{(1)} - G^{(-1)})/2.
inline SeriesMatrix q41_matrix_series(long order) {
  SeriesMatrix M;
  M.rows = M.cols = 2;
  M.a.resize(4);
  for (int j = 0; j < 2; ++j) {
    M.at(j, 0) = g41(0, j, Side::Inside, order);
    M.at(j, 1) = (g41(1, j, Side::Inside, order) - g41(-1, j, Side::Inside, order)) * Rat(1, 2);
  }
  return M;
}

}  // namespace qknot
