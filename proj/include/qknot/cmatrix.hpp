// Small dense complex matrices (2x2 / 3x3) for the numeric cocycle side.
#pragma once

#include <vector>

#include "complex.hpp"
#include "errors.hpp"

namespace qknot {

struct CMatrix {
  int rows = 0, cols = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  CMatrix(int r, int c, mpfr_prec_t prec) : rows(r), cols(c), a((size_t)r * c, Complex(prec)) {}

  Complex& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Complex& at(int r, int c) const { return a[(size_t)r * cols + c]; }

  static CMatrix identity(int n, mpfr_prec_t prec) {
    CMatrix m(n, n, prec);
    for (int i = 0; i < n; ++i) m.at(i, i) = Complex(1L, prec);
    return m;
  }

  friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.cols != y.rows) throw error("CMatrix: shape mismatch");
    mpfr_prec_t p = x.a.empty() ? 128 : x.a[0].prec();
    CMatrix r(x.rows, y.cols, p);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k)
        for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    return r;
  }

  friend CMatrix operator-(const CMatrix& x, const CMatrix& y) {
    CMatrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
  }

  CMatrix transpose() const {
    CMatrix r(cols, rows, a.empty() ? 128 : a[0].prec());
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Complex det() const {
    if (rows != cols) throw error("CMatrix::det: square only");
    if (rows == 1) return a[0];
    if (rows == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (rows == 3)
      return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
             at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
             at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    throw error("CMatrix::det: size > 3 not needed");
  }

  CMatrix inverse() const {
    Complex d = det();
    mpfr_prec_t p = a[0].prec();
    // crude conditioning check: |det| against the largest entry product scale
    Real scale(0L, p);
    for (const Complex& z : a) scale = scale < abs(z) ? abs(z) : scale;
    Real floor_val = scale;
    mpfr_mul_2si(floor_val.raw(), floor_val.raw(), -(long)p + 8, MPFR_RNDN);
    if (abs(d) < floor_val) throw singular_matrix("CMatrix::inverse: determinant below precision");
    CMatrix r(rows, cols, p);
    if (rows == 2) {
      r.at(0, 0) = at(1, 1) / d;
      r.at(0, 1) = -at(0, 1) / d;
      r.at(1, 0) = -at(1, 0) / d;
      r.at(1, 1) = at(0, 0) / d;
      return r;
    }
    if (rows == 3) {
      auto cof = [&](int i, int j) {
        int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
        return at(i1, j1) * at(i2, j2) - at(i1, j2) * at(i2, j1);
      };
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = cof(j, i) / d;
      return r;
    }
    throw error("CMatrix::inverse: size > 3 not needed");
  }

  Real max_abs_diff(const CMatrix& o) const {
    Real m(0L, a.empty() ? 128 : a[0].prec());
    for (size_t i = 0; i < a.size(); ++i) {
      Real d = abs(a[i] - o.a[i]);
      if (m < d) m = d;
    }
    return m;
  }
};

}  // namespace qknot
