// dev-only exploration; not part of the suite
#include <qknot/knot_series.hpp>

#include <cstdio>
#include <string>
#include <vector>

using namespace qknot;

static bool solve_and_check(const std::vector<std::vector<QSeries>>& kappas_per_m,
                            const std::vector<QSeries>& targets_per_m, long lo, long hi,
                            std::vector<Rat>& x) {
  size_t nm = kappas_per_m.size();
  size_t nun = kappas_per_m[0].size();
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  for (size_t im = 0; im < nm; ++im)
    for (long e = lo; e <= hi; ++e) {
      std::vector<Rat> row(nun);
      for (size_t u = 0; u < nun; ++u) row[u] = kappas_per_m[im][u].coeff(e);
      A.push_back(row);
      b.push_back(targets_per_m[im].coeff(e));
    }
  // gaussian elimination
  size_t rows = A.size(), cols = nun, r = 0;
  std::vector<std::vector<Rat>> A0 = A;
  std::vector<Rat> b0 = b;
  std::vector<long> where(cols, -1);
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && A[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    Rat inv = A[r][c].inv();
    for (size_t cc = 0; cc < cols; ++cc) A[r][cc] *= inv;
    b[r] *= inv;
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || A[rr][c].is_zero()) continue;
      Rat f = A[rr][c];
      for (size_t cc = 0; cc < cols; ++cc) A[rr][cc] -= f * A[r][cc];
      b[rr] -= f * b[r];
    }
    where[c] = (long)r;
    ++r;
  }
  x.assign(cols, Rat(0));
  for (size_t c = 0; c < cols; ++c)
    if (where[c] >= 0) x[c] = b[where[c]];
  for (size_t rr = 0; rr < rows; ++rr) {
    Rat s(0);
    for (size_t cc = 0; cc < cols; ++cc) s += A0[rr][cc] * x[cc];
    if (!(s == b0[rr])) return false;
  }
  return true;
}

int main() {
  long ord = 16;
  std::map<long, std::array<QSeries, 3>> HI, HO;
  for (long k = -6; k <= 6; ++k)
    for (int j = 0; j < 3; ++j) {
      HI[k][j] = h52(k, j, Side::Inside, ord);
      HO[k][j] = h52(k, j, Side::Outside, ord);
    }
  std::vector<long> ms = {-1, 0, 1, 2, 3};

  for (int negout = 0; negout < 2; ++negout)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        // unknowns: alpha_{kl}, beta_{kl}: weight alpha + beta q^m on u_k v_l
        std::vector<std::vector<QSeries>> K;
        std::vector<QSeries> T;
        for (long m : ms) {
          std::vector<QSeries> row;
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
              long nu = negout ? (m + 1 - l) : (-m - 1 + l);
              QSeries base = HI[m - 1 + k][r] * HO[nu][c];
              row.push_back(base);
            }
          size_t base_n = row.size();
          for (size_t i = 0; i < base_n; ++i) row.push_back(row[i].shifted(m));
          K.push_back(row);
          T.push_back(QSeries::one(10));
        }
        std::vector<Rat> x;
        if (solve_and_check(K, T, -8, 9, x)) {
          std::printf("negout=%d (r=%d,c=%d): alpha/beta = ", negout, r, c);
          for (int i = 0; i < 18; ++i) std::printf("%s ", x[i].str().c_str());
          std::printf("\n");
        }
      }
  std::printf("done\n");
  return 0;
}
