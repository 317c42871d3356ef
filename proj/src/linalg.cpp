#include "onepoint/linalg.hpp"

namespace onepoint {

Rref rref(const Mat& m, const FieldPtr& field, std::size_t ncols) {
  Mat a = m;
  for (auto& row : a)
    if (row.size() != ncols) throw Error(Errc::Internal, "rref: ragged matrix");
  Rref out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < a.size(); ++col) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    AlgNum inv = a[r][col].inverse();
    for (std::size_t j = col; j < ncols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      AlgNum f = a[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(col);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  (void)field;
  return out;
}

std::size_t rank(const Mat& m, const FieldPtr& field, std::size_t ncols) {
  return rref(m, field, ncols).pivots.size();
}

std::vector<Vec> kernel(const Mat& m, const FieldPtr& field, std::size_t ncols) {
  Rref r = rref(m, field, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(ncols, AlgNum(field));
    v[f] = AlgNum(field, 1L);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

AlgNum det(Mat a, const FieldPtr& field) {
  const std::size_t n = a.size();
  if (n == 0) return AlgNum(field, 1L);
  bool negate = false;
  AlgNum prev(field, 1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return AlgNum(field);
      std::swap(a[k], a[piv]);
      negate = !negate;
    }
    AlgNum prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) * prev_inv;
      }
    }
    prev = a[k][k];
  }
  AlgNum d = a[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace onepoint
