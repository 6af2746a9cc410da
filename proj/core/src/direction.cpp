#include "ctv/direction.hpp"

#include "ctv/hull.hpp"
#include "ctv/linalg.hpp"
#include "ctv/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ctv {

std::vector<IntVec> canonical_normals(const std::vector<IntVec>& raw) {
  std::vector<IntVec> out;
  std::set<IntVec> seen;
  for (const auto& v : raw) {
    if (is_zero(v)) continue;
    IntVec c = canonical_normal(v);
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

std::vector<IntVec> difference_normals(const std::vector<Polytope>& members) {
  std::vector<Point> verts;
  for (const auto& m : members)
    for (const auto& v : m.vertices) verts.push_back(v);
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  std::vector<IntVec> raw;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      raw.push_back(to_primitive(sub(verts[j], verts[i])));
  return canonical_normals(raw);
}

std::vector<int8_t> sign_vector(const std::vector<IntVec>& normals, const IntVec& rep) {
  std::vector<int8_t> out(normals.size());
  for (size_t i = 0; i < normals.size(); ++i)
    out[i] = static_cast<int8_t>(sgn(dot(normals[i], rep)));
  return out;
}

bool angle_ccw_less(const IntVec& u, const IntVec& v) {
  auto upper = [](const IntVec& w) {
    int s = sgn(w[1]);
    return s > 0 || (s == 0 && sgn(w[0]) > 0);
  };
  bool hu = upper(u), hv = upper(v);
  if (hu != hv) return hu;
  Int cr = u[0] * v[1] - u[1] * v[0];
  return sgn(cr) > 0;
}

namespace {

IntVec rot90(const IntVec& v) { return {-v[1], v[0]}; }

// Determinant of a square integer matrix by fraction-free elimination.
// The matrix is consumed.
Int det_int(std::vector<IntVec> m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && sgn(m[piv][k]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Cofactor vector of a (d-1) x d integer matrix: orthogonal to every row,
// zero exactly when the rows have rank below d-1.
IntVec cofactor_kernel(const std::vector<const IntVec*>& rows, size_t d) {
  IntVec v(d);
  for (size_t j = 0; j < d; ++j) {
    std::vector<IntVec> minor(d - 1, IntVec(d - 1));
    for (size_t i = 0; i + 1 < d; ++i) {
      size_t cc = 0;
      for (size_t c = 0; c < d; ++c) {
        if (c == j) continue;
        minor[i][cc++] = (*rows[i])[c];
      }
    }
    Int dt = det_int(std::move(minor));
    v[j] = (j % 2 == 0) ? dt : Int(-dt);
  }
  return v;
}

// DFS over sign vectors with LP feasibility pruning. Works in any
// dimension; each emitted representative is exact and re-verified by the
// sign check in the LP layer itself.
std::vector<DirectionCell> dfs_cells(const std::vector<IntVec>& normals, size_t d) {
  size_t m = normals.size();
  std::vector<DirectionCell> out;
  std::vector<int8_t> signs(m, 0);

  std::function<void(size_t, const IntVec*)> rec = [&](size_t i, const IntVec* rep) {
    if (i == m) {
      if (rep == nullptr) {
        // All signs zero: the cell is the common kernel minus the origin.
        auto kb = kernel_basis_int(normals, d);
        if (kb.empty()) return;
        IntVec r0 = primitive_ray(kb[0]);
        out.push_back({signs, r0});
        if (kb.size() == 1) {
          IntVec neg(r0.size());
          for (size_t j = 0; j < r0.size(); ++j) neg[j] = -r0[j];
          out.push_back({signs, std::move(neg)});
        }
        return;
      }
      out.push_back({signs, *rep});
      return;
    }
    const int8_t order[3] = {-1, 0, 1};
    for (int8_t s : order) {
      signs[i] = s;
      int have = rep ? sgn(dot(normals[i], *rep)) : 0;
      if (have == s) {
        rec(i + 1, rep);
        continue;
      }
      LinearSystem sys;
      sys.num_vars = d;
      for (size_t j = 0; j <= i; ++j) {
        Point row = to_point(normals[j]);
        if (signs[j] == 0) {
          sys.add(row, Rational(0), Rel::EQ);
        } else {
          // signs[j] * (n_j . x) > 0  <=>  -signs[j] * (n_j . x) < 0
          for (auto& c : row) c *= Rational(-signs[j]);
          sys.add(std::move(row), Rational(0), Rel::LT);
        }
      }
      auto res = solve_feasibility(sys);
      if (auto* f = std::get_if<LpFeasible>(&res)) {
        IntVec r = to_primitive(f->x);
        rec(i + 1, &r);
      }
    }
    signs[i] = 0;
  };

  rec(0, nullptr);
  return out;
}

void sort_cells(std::vector<DirectionCell>& cells) {
  std::sort(cells.begin(), cells.end(), [](const DirectionCell& a, const DirectionCell& b) {
    if (a.signs != b.signs) return a.signs < b.signs;
    return a.rep < b.rep;
  });
}

}  // namespace

std::vector<DirectionCell> sweep_circle_cells(const std::vector<IntVec>& normals) {
  for (const auto& n : normals)
    if (n.size() != 2) throw std::invalid_argument("sweep_circle_cells: normals must be 2d");

  if (normals.empty()) {
    return {{{}, IntVec{1, 0}}};
  }

  // Boundary directions: both orientations of each normal's perpendicular.
  std::vector<IntVec> dirs;
  for (const auto& n : normals) {
    IntVec p = primitive_ray(rot90(n));
    dirs.push_back(p);
    dirs.push_back({-p[0], -p[1]});
  }
  std::sort(dirs.begin(), dirs.end(), angle_ccw_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  size_t t = dirs.size();  // even: dirs are closed under negation
  std::vector<DirectionCell> out;
  out.reserve(2 * t);
  for (size_t i = 0; i < t; ++i) {
    out.push_back({sign_vector(normals, dirs[i]), dirs[i]});
    const IntVec& u = dirs[i];
    const IntVec& v = dirs[(i + 1) % t];
    IntVec arc;
    if (u[0] == -v[0] && u[1] == -v[1]) {
      arc = rot90(u);  // half-circle arc: its midpoint direction
    } else {
      arc = primitive_ray(IntVec{u[0] + v[0], u[1] + v[1]});
    }
    out.push_back({sign_vector(normals, arc), std::move(arc)});
  }
  return out;
}

std::vector<DirectionCell> enumerate_direction_cells(const std::vector<IntVec>& normals,
                                                     size_t d) {
  for (const auto& n : normals)
    if (n.size() != d) throw std::invalid_argument("enumerate_direction_cells: bad normal size");
  std::vector<DirectionCell> cells;
  if (d == 2) {
    cells = sweep_circle_cells(normals);
  } else {
    cells = dfs_cells(normals, d);
  }
  sort_cells(cells);
  return cells;
}

std::vector<IntVec> minimal_face_candidates(const std::vector<IntVec>& normals, size_t d) {
  if (d == 0) throw std::invalid_argument("minimal_face_candidates: d must be positive");
  std::vector<IntVec> out;
  std::set<IntVec> seen;
  auto push = [&](const IntVec& v) {
    if (is_zero(v)) return;
    IntVec c = canonical_normal(v);
    if (seen.insert(c).second) out.push_back(std::move(c));
  };

  if (normals.empty()) {
    IntVec e1(d, 0);
    e1[0] = 1;
    out.push_back(std::move(e1));
    return out;
  }

  // Directions where the normals do not span: every closed feasible set
  // that misses all arrangement vertices still contains the common kernel.
  if (rank_int(normals, d) < d) {
    auto kb = kernel_basis_int(normals, d);
    if (!kb.empty()) push(kb[0]);
  }

  // Kernel directions of all corank-1 subsets: the vertices (minimal
  // faces) of the central arrangement all arise this way.
  std::vector<const IntVec*> rows(d - 1);
  for_each_combination(normals.size(), d - 1, [&](const std::vector<size_t>& c) {
    for (size_t i = 0; i + 1 < d; ++i) rows[i] = &normals[c[i]];
    push(cofactor_kernel(rows, d));
  });
  return out;
}

std::optional<OrientedHyperplane> find_hyperplane_transversal(
    const std::vector<Polytope>& members, size_t d) {
  if (members.empty()) {
    Point e1(d, Rational(0));
    if (d > 0) e1[0] = Rational(1);
    return OrientedHyperplane{std::move(e1), Rational(0)};
  }
  for (const auto& m : members)
    for (const auto& v : m.vertices)
      if (v.size() != d)
        throw std::invalid_argument("find_hyperplane_transversal: dimension mismatch");

  auto normals = difference_normals(members);
  auto cands = minimal_face_candidates(normals, d);

  // Integer vertex matrices for fast interval evaluation: scale all
  // coordinates by the common denominator D (the verdict is D-invariant).
  Int D = 1;
  for (const auto& m : members)
    for (const auto& v : m.vertices)
      for (const auto& c : v) {
        Int den = c.den();
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), den.get_mpz_t());
      }
  std::vector<std::vector<IntVec>> scaled(members.size());
  for (size_t i = 0; i < members.size(); ++i) {
    for (const auto& v : members[i].vertices) {
      IntVec w(d);
      for (size_t j = 0; j < d; ++j) w[j] = v[j].num() * (D / v[j].den());
      scaled[i].push_back(std::move(w));
    }
  }

  for (const auto& cand : cands) {
    bool ok = true;
    Int lo, hi;
    for (size_t i = 0; i < members.size() && ok; ++i) {
      Int mn = dot(scaled[i][0], cand);
      Int mx = mn;
      for (size_t j = 1; j < scaled[i].size(); ++j) {
        Int v = dot(scaled[i][j], cand);
        if (v < mn) mn = v;
        if (v > mx) mx = v;
      }
      if (i == 0) {
        lo = mn;
        hi = mx;
      } else {
        if (mn > lo) lo = mn;
        if (mx < hi) hi = mx;
      }
      if (lo > hi) ok = false;
    }
    if (!ok) continue;
    // Scale back: vertex . cand = (scaled . cand) / D.
    Rational t = Rational(lo + hi, 2 * D);
    return OrientedHyperplane{to_point(cand), std::move(t)};
  }
  return std::nullopt;
}

std::optional<std::pair<int, OrientedHyperplane>> find_monochromatic_transversal(
    const ColoredFamily& family) {
  family.validate();
  for (int color = 1; color <= family.coloring.r; ++color) {
    std::vector<Polytope> cls;
    for (size_t i : family.color_class(color)) cls.push_back(family.members[i]);
    if (auto h = find_hyperplane_transversal(cls, family.d)) {
      return std::make_pair(color, std::move(*h));
    }
  }
  return std::nullopt;
}

}  // namespace ctv
