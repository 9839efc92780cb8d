// Exact stationary-phase engine for the 4_1 asymptotic coefficients a_j.
//
// Route (the Meinardus trick): G_0's integral representation has log-integrand
//   (1/h) [ -2 pi^2 (u - 1/2)^2 + 2 Li_2(e(u)) ]  +  i pi (u - 1/2)
//   + sum_{k>=2} 2 B_k h^{k-1}/k! Li_{2-k}(e(u))  + ...,
// expanded at the saddle u_0 = 1/2 -+ 1/3 (e(u_0) = zeta_6^{+-1}).  Measuring
// the fluctuation in that = 2 pi i (u - u_0) makes every series coefficient
// land in Q(sqrt(-3)): the explicit pi's cancel against the Gaussian moments
// ((that)^{2n} -> (2n-1)!! (h/(-2 c_2))^n with -2 c_2 = -+ sqrt(-3)), which is
// the exact-cancellation assertion, enforced structurally here and checked by
// the rationality of the normalized a_j.
#pragma once

#include <vector>

#include "errors.hpp"
#include "quadfield.hpp"

namespace qknot {

namespace detail {

using KSeries = std::vector<QuadRat>;  // truncated series in that

inline KSeries kmul(const KSeries& a, const KSeries& b, long T) {
  KSeries r(std::min<size_t>(T + 1, a.size() + b.size() - 1));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    size_t jmax = std::min(b.size(), r.size() - i);
    for (size_t j = 0; j < jmax; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

inline void kadd_inplace(KSeries& a, const KSeries& b, const QuadRat& w) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i] * w;
}

}  // namespace detail

// Exact a_0..a_{count-1} of DefPhi: Phi(h) = 3^{-1/4} sum_j (72 sqrt(-3))^{-j} a_j/j! h^j.
inline std::vector<Rat> phi_exact_41(long count) {
  if (count < 1) throw error("phi_exact_41: count >= 1");
  using detail::KSeries;
  const long J = count - 1;   // highest h-order
  const long T = 6 * J + 6;   // that-truncation
  const int sgn = 1;          // saddle with x0 = e(i pi/3) = zeta_6; its conjugate gives Phi(-h)

  // x0 = (1 + sgn*sqrt(-3))/2; branch check: (1 - x0)^6 == 1 (so log(1-x0) is
  // exactly -+ i pi/3 and the saddle condition holds)
  QuadRat x0(Rat(1, 2), Rat(sgn, 2));
  QuadRat one_minus_x0 = QuadRat(1) - x0;
  if (!(QuadRat::pow(one_minus_x0, 6) == QuadRat(1)) || !(one_minus_x0.x.sign() > 0))
    throw branch_error("phi_exact_41: saddle branch check failed");

  // f0(that) = w/(1-w), w = x0 e^{that}: Taylor series over Q(sqrt(-3))
  KSeries expf(T + 1);  // e^{that}
  {
    Rat f(1);
    for (long n = 0; n <= T; ++n) {
      expf[n] = QuadRat(f);
      f /= Rat(n + 1);
    }
  }
  KSeries w(T + 1);
  for (long n = 0; n <= T; ++n) w[n] = expf[n] * x0;
  // 1/(1-w): Newton-free direct division
  KSeries inv1w(T + 1);
  {
    // (1-w) has constant 1 - x0
    KSeries den(T + 1);
    den[0] = QuadRat(1) - w[0];
    for (long n = 1; n <= T; ++n) den[n] = -w[n];
    QuadRat c0inv = den[0].inv();
    inv1w[0] = c0inv;
    for (long n = 1; n <= T; ++n) {
      QuadRat s;
      for (long k = 1; k <= n; ++k) s += den[k] * inv1w[n - k];
      inv1w[n] = -(s * c0inv);
    }
  }
  KSeries f0 = detail::kmul(w, inv1w, T);  // Li_0(x0 e^{that}) as a series

  // C(that) = sum_{n>=3} c_n that^n with c_n = 2 (f0)_{n-2} (n-2)!/n!
  // and the Gaussian core coefficient c_2 = 1/2 + Li_0(x0) = -+ sqrt(-3)/2.
  QuadRat c2 = QuadRat(Rat(1, 2)) + f0[0];
  if (!(c2 == QuadRat(Rat(0), Rat(sgn, 2))))
    throw branch_error("phi_exact_41: unexpected Gaussian core coefficient");
  KSeries C(T + 1);
  for (long n = 3; n <= T; ++n) C[n] = f0[n - 2] * Rat(2, n * (n - 1));

  // Bernoulli numbers, standard recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0
  std::vector<Rat> B(J + 3, Rat(0));
  B[0] = Rat(1);
  B[1] = Rat(-1, 2);
  for (long m = 2; m < (long)B.size(); ++m) {
    Rat s(0);
    for (long j = 0; j < m; ++j) s += Rat(Int::binom(m + 1, j)) * B[j];
    B[m] = -s / Rat(Int::binom(m + 1, m));
  }

  // S(that, h) = sum_{k>=2} 2 B_k/k! Li_{2-k}(x0 e^{that}) h^{k-1} + (1/12) h:
  // Li_{2-k} chains down from f0 by differentiation in that.
  std::vector<KSeries> S(J + 1);  // S[j] multiplies h^j, j >= 1
  {
    KSeries fcur = f0;  // Li_{-(k-2)} series
    for (long k = 2; k <= J + 1; ++k) {
      if (k > 2) {
        // differentiate previous: Li_{2-k} = d/dthat Li_{3-k}
        KSeries d(fcur.size());
        for (size_t n = 1; n < fcur.size(); ++n) d[n - 1] = fcur[n] * Rat((long)n);
        d.resize(T + 1);
        fcur = d;
      }
      if (k % 2 != 0) continue;  // odd Bernoulli vanish (k >= 3)
      Rat coef = Rat(2) * B[k] / Rat(Int::factorial(k));
      KSeries term(T + 1);
      for (long n = 0; n <= T; ++n) term[n] = fcur[n] * coef;
      if (S[k - 1].empty()) S[k - 1] = std::move(term);
      else detail::kadd_inplace(S[k - 1], term, QuadRat(1));
    }
    if (J >= 1) {
      if (S[1].empty()) S[1] = KSeries(1);
      S[1][0] += QuadRat(Rat(1, 12));  // h/8 from the Gaussian - h/24 from eta
    }
  }

  // E(that, h) = exp(that/2) * exp(sum_j S_j h^j) via E' = S' E in h
  std::vector<KSeries> E(J + 1);
  {
    KSeries e0(T + 1);  // exp(that/2)
    Rat f(1);
    for (long n = 0; n <= T; ++n) {
      e0[n] = QuadRat(f);
      f /= Rat(2 * (n + 1));
    }
    E[0] = e0;
    for (long j = 1; j <= J; ++j) {
      KSeries acc;
      for (long k = 1; k <= j; ++k) {
        if (S[k].empty()) continue;
        KSeries prod = detail::kmul(S[k], E[j - k], T);
        detail::kadd_inplace(acc, prod, QuadRat(Rat(k, j)));
      }
      acc.resize(T + 1);
      E[j] = std::move(acc);
    }
  }

  // prefactor P(that) = 1/(1 - x0 e^{that}) = inv1w; PE_j = P * E_j
  std::vector<KSeries> PE(J + 1);
  for (long j = 0; j <= J; ++j) PE[j] = detail::kmul(inv1w, E[j], T);

  // powers of C/h and Gaussian moments: that^{2n} -> (2n-1)!! g^n h^n with
  // g = 1/(-2 c_2) = -+ 1/sqrt(-3) = sgn * sqrt(-3)/3
  QuadRat g = (QuadRat(-2) * c2).inv();
  std::vector<QuadRat> moment(3 * J + 4);
  {
    QuadRat cur(1);
    Rat dfact(1);
    for (long n = 0; n < (long)moment.size(); ++n) {
      moment[n] = cur * dfact;
      cur *= g;
      dfact *= Rat(2 * n + 1);
    }
  }

  std::vector<QuadRat> phi_raw(J + 1);
  {
    KSeries Cm(1);  // C^m / m!
    Cm[0] = QuadRat(1);
    for (long m = 0; 3 * m <= T; ++m) {
      if (m > 0) {
        Cm = detail::kmul(Cm, C, T);
        for (auto& c : Cm) c = c * Rat(1, m);
      }
      for (long j = 0; j <= J; ++j) {
        // contributes to order o = j - m + n: need n = o - j + m >= 0
        KSeries prod = detail::kmul(PE[j], Cm, T);
        for (long o = std::max(0L, j - m); o <= J; ++o) {
          long n = o - j + m;
          long d = 2 * n;
          if (d >= (long)prod.size()) continue;
          phi_raw[o] += prod[d] * moment[n];
        }
      }
    }
  }

  // normalize: a_j = (phi_raw_j / phi_raw_0) (72 sqrt(-3))^j j!
  if (phi_raw[0].is_zero()) throw branch_error("phi_exact_41: vanishing leading term");
  std::vector<Rat> a(count);
  QuadRat base(Rat(0), Rat(72));
  QuadRat pw(1);
  Rat fact(1);
  QuadRat inv0 = phi_raw[0].inv();
  for (long j = 0; j <= J; ++j) {
    QuadRat v = phi_raw[j] * inv0 * pw * fact;
    if (!v.is_rational()) throw pi_residue("phi_exact_41: non-rational normalized coefficient");
    a[j] = v.x;
    pw *= base;
    fact *= Rat(j + 1);
  }
  return a;
}

}  // namespace qknot
