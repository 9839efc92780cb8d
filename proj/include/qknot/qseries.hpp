// Truncated power series with exact rational coefficients on an exponent
// lattice (1/lattice_den) * Z.  A series knows the order through which it is
// exact: coefficients of q^{e/lattice_den} for min_exp <= e <= order are
// stored, everything above order is unknown, everything below min_exp is zero.
//
// Negative exponents are allowed (tetrahedron indices are Laurent series).
#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace qknot {

class QSeries {
public:
  int lattice_den = 1;     // 1 or 2
  long min_exp = 0;        // in lattice steps
  long order = 0;          // exact modulo q^{(order+1)/lattice_den}
  std::vector<Rat> coeffs; // length order - min_exp + 1, empty for the zero series

  QSeries() = default;

  static QSeries zero(long order, int den = 1) {
    QSeries s;
    s.lattice_den = den;
    s.min_exp = 0;
    s.order = order;
    return s;
  }

  static QSeries constant(const Rat& c, long order, int den = 1) {
    QSeries s = zero(order, den);
    if (!c.is_zero() && order >= 0) {
      s.coeffs.assign(order + 1, Rat(0));
      s.coeffs[0] = c;
    }
    return s;
  }

  static QSeries one(long order, int den = 1) { return constant(Rat(1), order, den); }

  // c * q^{e/den}
  static QSeries monomial(const Rat& c, long e, long order, int den = 1) {
    QSeries s = zero(order, den);
    if (c.is_zero() || e > order) return s;
    s.min_exp = e;
    s.coeffs.assign(order - e + 1, Rat(0));
    s.coeffs[0] = c;
    return s;
  }

  bool is_zero() const { return coeffs.empty(); }

  void canonicalize() {
    bool all_zero = true;
    for (const Rat& c : coeffs)
      if (!c.is_zero()) { all_zero = false; break; }
    if (all_zero) {
      coeffs.clear();
      min_exp = 0;
      return;
    }
    size_t drop = 0;
    while (coeffs[drop].is_zero() && min_exp + (long)drop != 0) ++drop;
    if (drop) {
      coeffs.erase(coeffs.begin(), coeffs.begin() + drop);
      min_exp += (long)drop;
    }
  }

  // Coefficient of q^{e/lattice_den}; throws past the exactness window.
  Rat coeff(long e) const {
    if (e > order) throw error("QSeries::coeff: exponent beyond stored order");
    if (is_zero() || e < min_exp) return Rat(0);
    return coeffs[e - min_exp];
  }

  // Coefficient of q^{p/pden} for arbitrary pden dividing into the lattice.
  Rat coeff_q(long p, int pden) const {
    long e = p * lattice_den;
    if (e % pden != 0) return Rat(0);
    return coeff(e / pden);
  }

  QSeries with_lattice(int den) const {
    if (den == lattice_den) return *this;
    if (den % lattice_den != 0) throw error("QSeries: lattice refinement must be a multiple");
    int f = den / lattice_den;
    QSeries r;
    r.lattice_den = den;
    r.min_exp = min_exp * f;
    r.order = order * f + (f - 1);
    if (!is_zero()) {
      r.coeffs.assign(r.order - r.min_exp + 1, Rat(0));
      for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i * f] = coeffs[i];
    }
    return r;
  }

  QSeries truncated(long new_order) const {
    QSeries r = *this;
    if (new_order >= order) return r;
    r.order = new_order;
    if (!r.is_zero()) {
      if (new_order < r.min_exp)
        r.coeffs.clear(), r.min_exp = 0;
      else
        r.coeffs.resize(new_order - r.min_exp + 1);
    }
    r.canonicalize();
    return r;
  }

  // Multiply by q^{d/lattice_den}.
  QSeries shifted(long d) const {
    QSeries r = *this;
    r.min_exp += d;
    r.order += d;
    if (r.is_zero()) r.min_exp = 0;
    return r;
  }

  friend QSeries operator*(const QSeries& a, const Rat& c) {
    QSeries r = a;
    if (c.is_zero()) {
      r.coeffs.clear();
      r.min_exp = 0;
      return r;
    }
    for (Rat& x : r.coeffs) x *= c;
    return r;
  }

  friend QSeries operator+(const QSeries& a0, const QSeries& b0) {
    int den = (a0.lattice_den == b0.lattice_den) ? a0.lattice_den : 2;
    QSeries a = a0.with_lattice(den), b = b0.with_lattice(den);
    QSeries r;
    r.lattice_den = den;
    r.order = std::min(a.order, b.order);
    if (a.is_zero() && b.is_zero()) { r.min_exp = 0; return r; }
    long lo = a.is_zero() ? b.min_exp : (b.is_zero() ? a.min_exp : std::min(a.min_exp, b.min_exp));
    lo = std::min(lo, r.order);
    r.min_exp = lo;
    r.coeffs.assign(r.order - lo + 1, Rat(0));
    auto acc = [&](const QSeries& s) {
      for (long e = s.min_exp; e <= std::min(s.order, r.order); ++e)
        if (!s.is_zero() && e >= s.min_exp && e - s.min_exp < (long)s.coeffs.size())
          r.coeffs[e - lo] += s.coeffs[e - s.min_exp];
    };
    acc(a);
    acc(b);
    r.canonicalize();
    return r;
  }

  friend QSeries operator-(const QSeries& a) { return a * Rat(-1); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  // Truncation bookkeeping: order = min(order_a + min_exp_b, order_b + min_exp_a).
  friend QSeries operator*(const QSeries& a0, const QSeries& b0) {
    int den = (a0.lattice_den == b0.lattice_den) ? a0.lattice_den : 2;
    QSeries a = a0.with_lattice(den), b = b0.with_lattice(den);
    QSeries r;
    r.lattice_den = den;
    if (a.is_zero() || b.is_zero()) {
      r.order = std::min(a.order + b.min_exp, b.order + a.min_exp);
      r.min_exp = 0;
      return r;
    }
    r.order = std::min(a.order + b.min_exp, b.order + a.min_exp);
    r.min_exp = a.min_exp + b.min_exp;
    if (r.order < r.min_exp) { r.min_exp = 0; r.order = std::max(r.order, -1L); return r; }
    r.coeffs.assign(r.order - r.min_exp + 1, Rat(0));
    long alen = (long)a.coeffs.size(), blen = (long)b.coeffs.size();
    for (long i = 0; i < alen; ++i) {
      if (a.coeffs[i].is_zero()) continue;
      long emax = r.order - (a.min_exp + i) - b.min_exp;  // max j index
      long jcap = std::min(blen - 1, emax);
      for (long j = 0; j <= jcap; ++j) {
        if (b.coeffs[j].is_zero()) continue;
        r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
      }
    }
    r.canonicalize();
    return r;
  }

  // Inverse of a series with nonzero constant term at exponent 0.
  QSeries inverse() const {
    QSeries a = *this;
    a.canonicalize();
    if (a.is_zero() || a.min_exp != 0 || a.coeffs[0].is_zero())
      throw zero_constant_term("series_inv: constant term must be nonzero at exponent 0");
    QSeries r;
    r.lattice_den = a.lattice_den;
    r.min_exp = 0;
    r.order = a.order;
    long n = a.order + 1;
    r.coeffs.assign(n, Rat(0));
    Rat inv0 = a.coeffs[0].inv();
    r.coeffs[0] = inv0;
    for (long k = 1; k < n; ++k) {
      Rat s(0);
      long jcap = std::min<long>(k, (long)a.coeffs.size() - 1);
      for (long j = 1; j <= jcap; ++j)
        if (!a.coeffs[j].is_zero()) s += a.coeffs[j] * r.coeffs[k - j];
      r.coeffs[k] = -s * inv0;
    }
    r.canonicalize();
    return r;
  }

  // Equality per module contract: agree coefficient-wise up to min(order).
  friend bool agree(const QSeries& a0, const QSeries& b0) {
    int den = (a0.lattice_den == b0.lattice_den) ? a0.lattice_den : 2;
    QSeries a = a0.with_lattice(den), b = b0.with_lattice(den);
    long N = std::min(a.order, b.order);
    long lo = std::min(a.is_zero() ? 0 : a.min_exp, b.is_zero() ? 0 : b.min_exp);
    for (long e = lo; e <= N; ++e)
      if (a.coeff(e) != b.coeff(e)) return false;
    return true;
  }

  // Exponent (in lattice steps) of the first coefficient where a and b differ.
  friend std::optional<long> first_defect(const QSeries& a0, const QSeries& b0) {
    int den = (a0.lattice_den == b0.lattice_den) ? a0.lattice_den : 2;
    QSeries a = a0.with_lattice(den), b = b0.with_lattice(den);
    long N = std::min(a.order, b.order);
    long lo = std::min(a.is_zero() ? 0 : a.min_exp, b.is_zero() ? 0 : b.min_exp);
    for (long e = lo; e <= N; ++e)
      if (a.coeff(e) != b.coeff(e)) return e;
    return std::nullopt;
  }
};

// ---- in-place dense helpers on integer-lattice windows ----------------------
// These act on a coefficient window c[0..] for exponents base..base+len-1 and
// implement multiplication by (1 - s*q^j)^{+-1} in O(len) each.

inline void mul_one_minus_inplace(std::vector<Rat>& c, long j, const Rat& s) {
  if (j <= 0) throw error("mul_one_minus_inplace: need j > 0");
  for (long k = (long)c.size() - 1; k >= j; --k)
    if (!c[k - j].is_zero()) c[k] -= s * c[k - j];
}

inline void div_one_minus_inplace(std::vector<Rat>& c, long j, const Rat& s) {
  if (j <= 0) throw error("div_one_minus_inplace: need j > 0");
  for (long k = j; k < (long)c.size(); ++k)
    if (!c[k - j].is_zero()) c[k] += s * c[k - j];
}

// ---- named constructors ------------------------------------------------------

// (q;q)_n truncated at order; n = -1 encodes infinity (pentagonal numbers).
inline QSeries pochhammer(long n, long order) {
  if (order < 0) return QSeries::zero(order);
  if (n < -1) throw negative_n("pochhammer: n must be >= 0 or infinity");
  if (n == -1) {
    QSeries s = QSeries::zero(order);
    s.coeffs.assign(order + 1, Rat(0));
    for (long k = 0;; ++k) {  // generalized pentagonal exponents k(3k+-1)/2
      long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
      if (e1 > order && e2 > order) break;
      Rat sgn((k % 2 == 0) ? 1 : -1);
      if (e1 <= order) s.coeffs[e1] += sgn;
      if (k > 0 && e2 <= order) s.coeffs[e2] += sgn;
    }
    s.canonicalize();
    return s;
  }
  std::vector<Rat> c(order + 1, Rat(0));
  c[0] = Rat(1);
  for (long j = 1; j <= n && j <= order; ++j) mul_one_minus_inplace(c, j, Rat(1));
  QSeries s = QSeries::zero(order);
  s.coeffs = std::move(c);
  s.canonicalize();
  return s;
}

constexpr long kInfinity = -1;

// Non-modular Eisenstein series E_1 = 1 - 4 sum d(n) q^n, E_2 = 1 - 24 sum sigma_1(n) q^n.
inline QSeries eisenstein(int k, long order) {
  if (k != 1 && k != 2) throw unsupported_weight("eisenstein: weight must be 1 or 2");
  if (order < 0) return QSeries::zero(order);
  std::vector<Rat> c(order + 1, Rat(0));
  c[0] = Rat(1);
  long w = (k == 1) ? -4 : -24;
  for (long d = 1; d <= order; ++d)
    for (long s = d; s <= order; s += d) c[s] += Rat(w * (k == 1 ? 1 : d));
  QSeries s = QSeries::zero(order);
  s.coeffs = std::move(c);
  return s;
}

// E^{(m)}_ell(q) = sum_{s>=1} sigma^{(m)}_{ell-1}(s) q^s,
// sigma^{(m)}_{ell-1}(s) = sum over d | s with s/d > m of d^{ell-1}.
inline QSeries eisenstein_partial(long ell, long m, long order) {
  if (ell < 1) throw error("eisenstein_partial: ell >= 1");
  if (m < 0) throw error("eisenstein_partial: m >= 0");
  if (order < 0) return QSeries::zero(order);
  std::vector<Rat> c(order + 1, Rat(0));
  // sum over d >= 1 and multiples s = d*t with t > m
  for (long d = 1; d <= order; ++d) {
    Int dp = Int::pow(Int(d), (unsigned long)(ell - 1));
    Rat w{dp};
    for (long t = m + 1; d * t <= order; ++t) c[d * t] += w;
  }
  QSeries s = QSeries::zero(order);
  s.coeffs = std::move(c);
  s.canonicalize();
  return s;
}

// sum_{t>=1} q^{jt} (the geometric tail of 1/(1-q^j)) truncated.
inline QSeries geometric_tail(long j, long order) {
  QSeries s = QSeries::zero(order);
  if (j <= 0) throw error("geometric_tail: j > 0");
  if (order < j) return s;
  s.coeffs.assign(order + 1, Rat(0));
  for (long t = j; t <= order; t += j) s.coeffs[t] = Rat(1);
  s.canonicalize();
  return s;
}

// sum_{t>=1} t q^{jt}  ( = q^j/(1-q^j)^2 )
inline QSeries geometric_tail_weighted(long j, long order) {
  QSeries s = QSeries::zero(order);
  if (j <= 0) throw error("geometric_tail_weighted: j > 0");
  if (order < j) return s;
  s.coeffs.assign(order + 1, Rat(0));
  long t = 1;
  for (long e = j; e <= order; e += j, ++t) s.coeffs[e] = Rat(t);
  s.canonicalize();
  return s;
}

}  // namespace qknot
