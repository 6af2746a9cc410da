#include "ctv/linalg.hpp"

#include <stdexcept>

namespace ctv {
namespace {

// Fraction-free Gaussian elimination (Bareiss). Returns the rank; rows is
// modified in place. Columns beyond dim are ignored.
size_t bareiss_rank(std::vector<IntVec>& rows, size_t dim) {
  size_t r = 0;
  Int prev = 1;
  for (size_t c = 0; c < dim && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      for (size_t j = c + 1; j < dim; ++j) {
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    ++r;
  }
  return r;
}

}  // namespace

size_t rank_int(const std::vector<IntVec>& rows, size_t dim) {
  std::vector<IntVec> work = rows;
  return bareiss_rank(work, dim);
}

size_t rank(const Matrix& m) {
  std::vector<IntVec> rows(m.rows);
  for (size_t i = 0; i < m.rows; ++i) {
    Point row(m.cols);
    for (size_t j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
    IntVec v = to_primitive(row);
    if (v.empty()) v.assign(m.cols, Int(0));
    rows[i] = v;
  }
  return bareiss_rank(rows, m.cols);
}

std::vector<IntVec> kernel_basis_int(const std::vector<IntVec>& rows, size_t dim) {
  // Reduced row echelon form over the rationals, then read off the kernel.
  std::vector<Point> rr;
  rr.reserve(rows.size());
  for (const auto& r : rows) rr.push_back(to_point(r));

  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < dim && r < rr.size(); ++c) {
    size_t piv = r;
    while (piv < rr.size() && rr[piv][c].is_zero()) ++piv;
    if (piv == rr.size()) continue;
    std::swap(rr[r], rr[piv]);
    Rational inv = Rational(1) / rr[r][c];
    for (size_t j = c; j < dim; ++j) rr[r][j] *= inv;
    for (size_t i = 0; i < rr.size(); ++i) {
      if (i == r || rr[i][c].is_zero()) continue;
      Rational f = rr[i][c];
      for (size_t j = c; j < dim; ++j) rr[i][j] -= f * rr[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(dim, false);
  for (size_t c : pivot_col) is_pivot[c] = true;

  std::vector<IntVec> basis;
  for (size_t freec = 0; freec < dim; ++freec) {
    if (is_pivot[freec]) continue;
    Point v(dim, Rational(0));
    v[freec] = Rational(1);
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rr[i][freec];
    basis.push_back(to_primitive(v));
  }
  return basis;
}

LinSolution solve_linear(const Matrix& A, const std::vector<Rational>& b) {
  if (b.size() != A.rows) throw std::invalid_argument("solve_linear: size mismatch");
  size_t n = A.cols;
  std::vector<Point> aug(A.rows, Point(n + 1));
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = A.at(i, j);
    aug[i][n] = b[i];
  }

  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < aug.size(); ++c) {
    size_t piv = r;
    while (piv < aug.size() && aug[piv][c].is_zero()) ++piv;
    if (piv == aug.size()) continue;
    std::swap(aug[r], aug[piv]);
    Rational inv = Rational(1) / aug[r][c];
    for (size_t j = c; j <= n; ++j) aug[r][j] *= inv;
    for (size_t i = 0; i < aug.size(); ++i) {
      if (i == r || aug[i][c].is_zero()) continue;
      Rational f = aug[i][c];
      for (size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  LinSolution sol;
  for (size_t i = r; i < aug.size(); ++i) {
    if (!aug[i][n].is_zero()) return sol;  // inconsistent
  }
  sol.solvable = true;
  sol.x.assign(n, Rational(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) sol.x[pivot_col[i]] = aug[i][n];

  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[freec] = Rational(1);
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -aug[i][freec];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

size_t affine_rank(const std::vector<Point>& pts) {
  if (pts.empty()) return 0;
  size_t d = pts[0].size();
  Matrix m(pts.size(), d + 1);
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = 0; j < d; ++j) m.at(i, j) = pts[i][j];
    m.at(i, d) = Rational(1);
  }
  return rank(m);
}

bool is_general_position(const std::vector<Point>& pts, size_t k) {
  if (k == 0) return !pts.empty();
  if (affine_rank(pts) != k + 1) return false;
  // Every (k+1)-subset must be affinely independent.
  std::vector<size_t> idx(k + 1);
  size_t n = pts.size();
  if (n < k + 1) return false;
  std::vector<size_t> c(k + 1);
  for (size_t i = 0; i <= k; ++i) c[i] = i;
  while (true) {
    std::vector<Point> sub;
    for (size_t i = 0; i <= k; ++i) sub.push_back(pts[c[i]]);
    if (affine_rank(sub) != k + 1) return false;
    // next combination
    size_t i = k + 1;
    while (i > 0) {
      --i;
      if (c[i] != i + n - (k + 1)) {
        ++c[i];
        for (size_t j = i + 1; j <= k; ++j) c[j] = c[j - 1] + 1;
        break;
      }
      if (i == 0) return true;
    }
  }
}

}  // namespace ctv
