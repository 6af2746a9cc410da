#include "ctv/hull.hpp"

#include "ctv/linalg.hpp"
#include "ctv/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctv {
namespace {

Point primitive_point(const Point& p) { return to_point(to_primitive(p)); }

}  // namespace

HullResult point_in_hull(const Point& q, const std::vector<Point>& S) {
  if (S.empty()) throw std::invalid_argument("point_in_hull: empty point set");
  size_t d = q.size();
  for (const auto& s : S)
    if (s.size() != d) throw std::invalid_argument("point_in_hull: dimension mismatch");

  size_t n = S.size();
  LinearSystem sys;
  sys.num_vars = n;
  for (size_t j = 0; j < d; ++j) {
    std::vector<Rational> row(n);
    for (size_t i = 0; i < n; ++i) row[i] = S[i][j];
    sys.add(std::move(row), q[j], Rel::EQ);
  }
  sys.add(std::vector<Rational>(n, Rational(1)), Rational(1), Rel::EQ);
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n, Rational(0));
    row[i] = Rational(-1);
    sys.add(std::move(row), Rational(0), Rel::LE);
  }

  FeasResult r = solve_feasibility(sys);
  if (auto* f = std::get_if<LpFeasible>(&r)) {
    return InHull{std::move(f->x)};
  }
  // The equality multipliers are a functional w with w.s_i >= -t for all i
  // and w.q < -t; flip so q lands on the strictly positive side.
  const auto& mult = std::get<FarkasCertificate>(r).multipliers;
  Point w(d);
  for (size_t j = 0; j < d; ++j) w[j] = -mult[j];
  Point h = primitive_point(w);
  Rational hq = dot(h, q);
  Rational hs_max = dot(h, S[0]);
  for (size_t i = 1; i < n; ++i) hs_max = std::max(hs_max, dot(h, S[i]));
  OrientedHyperplane sep{std::move(h), (hq + hs_max) / Rational(2)};
  return Outside{std::move(sep)};
}

IntersectResult hulls_intersect(const std::vector<Point>& A, const std::vector<Point>& B) {
  if (A.empty() || B.empty()) throw std::invalid_argument("hulls_intersect: empty input");
  size_t d = A[0].size();
  for (const auto& p : A)
    if (p.size() != d) throw std::invalid_argument("hulls_intersect: dimension mismatch");
  for (const auto& p : B)
    if (p.size() != d) throw std::invalid_argument("hulls_intersect: dimension mismatch");

  size_t na = A.size(), nb = B.size(), n = na + nb;
  LinearSystem sys;
  sys.num_vars = n;
  for (size_t j = 0; j < d; ++j) {
    std::vector<Rational> row(n);
    for (size_t i = 0; i < na; ++i) row[i] = A[i][j];
    for (size_t i = 0; i < nb; ++i) row[na + i] = -B[i][j];
    sys.add(std::move(row), Rational(0), Rel::EQ);
  }
  {
    std::vector<Rational> row(n, Rational(0));
    for (size_t i = 0; i < na; ++i) row[i] = Rational(1);
    sys.add(std::move(row), Rational(1), Rel::EQ);
  }
  {
    std::vector<Rational> row(n, Rational(0));
    for (size_t i = 0; i < nb; ++i) row[na + i] = Rational(1);
    sys.add(std::move(row), Rational(1), Rel::EQ);
  }
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n, Rational(0));
    row[i] = Rational(-1);
    sys.add(std::move(row), Rational(0), Rel::LE);
  }

  FeasResult r = solve_feasibility(sys);
  if (auto* f = std::get_if<LpFeasible>(&r)) {
    HullsIntersect res;
    res.weights_a.assign(f->x.begin(), f->x.begin() + na);
    res.weights_b.assign(f->x.begin() + na, f->x.end());
    res.point.assign(d, Rational(0));
    for (size_t i = 0; i < na; ++i)
      for (size_t j = 0; j < d; ++j) res.point[j] += res.weights_a[i] * A[i][j];
    return res;
  }
  // Multipliers w on coordinate rows give min_A w.a > max_B w.b; flip so
  // A is strictly negative and B strictly positive.
  const auto& mult = std::get<FarkasCertificate>(r).multipliers;
  Point w(d);
  for (size_t j = 0; j < d; ++j) w[j] = -mult[j];
  Point h = primitive_point(w);
  Rational amax = dot(h, A[0]);
  for (const auto& p : A) amax = std::max(amax, dot(h, p));
  Rational bmin = dot(h, B[0]);
  for (const auto& p : B) bmin = std::min(bmin, dot(h, p));
  if (!(amax < bmin)) {  // orientation came out reversed; flip
    for (auto& c : h) c = -c;
    amax = dot(h, A[0]);
    for (const auto& p : A) amax = std::max(amax, dot(h, p));
    bmin = dot(h, B[0]);
    for (const auto& p : B) bmin = std::min(bmin, dot(h, p));
  }
  if (!(amax < bmin)) throw std::logic_error("hulls_intersect: invalid separator");
  return HullsSeparated{OrientedHyperplane{std::move(h), (amax + bmin) / Rational(2)}};
}

std::vector<Circuit> affine_circuits(const std::vector<Point>& P) {
  std::vector<Circuit> out;
  if (P.empty()) return out;
  size_t k = P[0].size();
  for (const auto& p : P)
    if (p.size() != k) throw std::invalid_argument("affine_circuits: dimension mismatch");
  size_t n = P.size();

  for (size_t sz = 2; sz <= std::min(n, k + 2); ++sz) {
    for_each_combination(n, sz, [&](const std::vector<size_t>& idx) {
      // Affine dependence space: coefficients c with sum c_i p_i = 0 and
      // sum c_i = 0.
      std::vector<IntVec> rows;
      for (size_t j = 0; j < k; ++j) {
        Point row(sz);
        for (size_t i = 0; i < sz; ++i) row[i] = P[idx[i]][j];
        rows.push_back(to_primitive(row));
      }
      rows.push_back(IntVec(sz, Int(1)));
      auto ker = kernel_basis_int(rows, sz);
      if (ker.size() != 1) return;  // independent, or non-minimal (dim >= 2)
      const IntVec& c = ker[0];
      for (const auto& x : c)
        if (sgn(x) == 0) return;  // support smaller than the subset: not minimal here
      Circuit circ;
      circ.support = idx;
      circ.signs.resize(sz);
      int flip = sgn(c[0]) < 0 ? -1 : 1;
      for (size_t i = 0; i < sz; ++i) circ.signs[i] = flip * sgn(c[i]);
      out.push_back(std::move(circ));
    });
  }
  std::sort(out.begin(), out.end(),
            [](const Circuit& a, const Circuit& b) { return a.support < b.support; });
  return out;
}

Point circuit_witness(const std::vector<Point>& P, const Circuit& c) {
  // Recover the dependence coefficients and normalize the positive part.
  std::vector<size_t> idx = c.support;
  size_t sz = idx.size();
  std::vector<IntVec> rows;
  size_t k = P[0].size();
  for (size_t j = 0; j < k; ++j) {
    Point row(sz);
    for (size_t i = 0; i < sz; ++i) row[i] = P[idx[i]][j];
    rows.push_back(to_primitive(row));
  }
  rows.push_back(IntVec(sz, Int(1)));
  auto ker = kernel_basis_int(rows, sz);
  if (ker.size() != 1) throw std::invalid_argument("circuit_witness: not a circuit");
  IntVec coeff = ker[0];
  if (sgn(coeff[0]) < 0)
    for (auto& x : coeff) x = -x;
  Int possum = 0;
  for (const auto& x : coeff)
    if (sgn(x) > 0) possum += x;
  Point w(k, Rational(0));
  for (size_t i = 0; i < sz; ++i) {
    if (sgn(coeff[i]) <= 0) continue;
    Rational t(coeff[i], possum);
    for (size_t j = 0; j < k; ++j) w[j] += t * P[idx[i]][j];
  }
  return w;
}

std::vector<Point> midpoints(const std::vector<Point>& V) {
  std::vector<Point> pts = V;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      out.push_back(scale(Rational(1, 2), add(pts[i], pts[j])));
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ctv
