#include "ctv/complex.hpp"

#include "ctv/hull.hpp"
#include "ctv/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ctv {
namespace {

IntVec neg(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

IntVec cross3(const IntVec& u, const IntVec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

struct ProtoCell {
  std::vector<int8_t> signs;
  IntVec rep;
  size_t dim = 0;
};

// d = 2: points and arcs from the circular sweep; coverings from angular
// adjacency.
void build_s1(const std::vector<IntVec>& normals, std::vector<ProtoCell>& cells,
              std::vector<std::pair<size_t, size_t>>& cover) {
  auto sweep = sweep_circle_cells(normals);
  size_t n = sweep.size();
  for (size_t i = 0; i < n; ++i) {
    size_t zeros = 0;
    for (int8_t s : sweep[i].signs)
      if (s == 0) ++zeros;
    // Distinct canonical normals are pairwise non-parallel, so 0-cells are
    // exactly the cells with a zero entry (even sweep indices).
    size_t dim = (normals.empty() || zeros == 0) ? 1 : 0;
    cells.push_back({sweep[i].signs, sweep[i].rep, dim});
  }
  if (normals.empty()) return;
  for (size_t i = 0; i < n; i += 2) {
    cover.emplace_back(i, (i + 1) % n);
    cover.emplace_back(i, (i + n - 1) % n);
  }
}

// d = 3: great-circle arrangement, subdivided circle by circle.
void build_s2(const std::vector<IntVec>& normals, std::vector<ProtoCell>& cells,
              std::vector<std::pair<size_t, size_t>>& cover) {
  size_t m = normals.size();
  if (m == 0) {
    cells.push_back({{}, IntVec{Int(1), Int(0), Int(0)}, 2});
    return;
  }
  if (m == 1) {
    auto kb = kernel_basis_int({normals[0]}, 3);
    std::vector<int8_t> zero{0};
    cells.push_back({zero, primitive_ray(kb[0]), 1});
    cells.push_back({{1}, normals[0], 2});
    cells.push_back({{-1}, neg(normals[0]), 2});
    cover.emplace_back(0, 1);
    cover.emplace_back(0, 2);
    return;
  }

  // 0-cells: intersection rays of all circle pairs. Canonical normals are
  // pairwise non-parallel, so every pair meets in two antipodal points.
  std::map<IntVec, size_t> vert_id;
  std::vector<IntVec> verts;
  auto add_vert = [&](const IntVec& ray) {
    auto it = vert_id.find(ray);
    if (it != vert_id.end()) return it->second;
    size_t id = verts.size();
    vert_id.emplace(ray, id);
    verts.push_back(ray);
    return id;
  };
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      IntVec w = primitive_ray(cross3(normals[i], normals[j]));
      add_vert(w);
      add_vert(neg(w));
    }
  }
  for (const auto& v : verts) cells.push_back({sign_vector(normals, v), v, 0});

  std::map<std::vector<int8_t>, size_t> region_id;
  for (size_t i = 0; i < m; ++i) {
    const IntVec& n = normals[i];
    auto kb = kernel_basis_int({n}, 3);
    const IntVec &a = kb[0], &b = kb[1];
    // Orientation-preserving chart of the circle: the Gram map
    // v -> (v.a, v.b) has positive-definite matrix, so angular order in the
    // chart matches the circle's cyclic order.
    auto chart = [&](const IntVec& v) { return IntVec{dot(v, a), dot(v, b)}; };

    std::vector<size_t> on;
    for (size_t vi = 0; vi < verts.size(); ++vi)
      if (sgn(dot(n, verts[vi])) == 0) on.push_back(vi);
    std::sort(on.begin(), on.end(),
              [&](size_t x, size_t y) { return angle_ccw_less(chart(verts[x]), chart(verts[y])); });

    Int mag = 1;
    for (size_t k = 0; k < m; ++k) {
      Int d = abs(dot(normals[k], n));
      if (d >= mag) mag = d + 1;
    }

    size_t s = on.size();
    for (size_t j = 0; j < s; ++j) {
      const IntVec& u = verts[on[j]];
      const IntVec& v = verts[on[(j + 1) % s]];
      IntVec arc;
      if (u == neg(v)) {
        // Half-circle: take the in-plane perpendicular on the ccw side.
        arc = primitive_ray(cross3(n, u));
        IntVec pu = chart(u), pw = chart(arc);
        if (sgn(pu[0] * pw[1] - pu[1] * pw[0]) <= 0) arc = neg(arc);
      } else {
        arc = primitive_ray(IntVec{u[0] + v[0], u[1] + v[1], u[2] + v[2]});
      }
      size_t arc_cell = cells.size();
      cells.push_back({sign_vector(normals, arc), arc, 1});
      cover.emplace_back(on[j], arc_cell);
      cover.emplace_back(on[(j + 1) % s], arc_cell);

      for (int side : {1, -1}) {
        IntVec rep(3);
        for (size_t c = 0; c < 3; ++c) rep[c] = mag * arc[c] + side * n[c];
        rep = primitive_ray(rep);
        auto signs = sign_vector(normals, rep);
        auto it = region_id.find(signs);
        size_t rid;
        if (it == region_id.end()) {
          rid = cells.size();
          region_id.emplace(signs, rid);
          cells.push_back({std::move(signs), std::move(rep), 2});
        } else {
          rid = it->second;
        }
        cover.emplace_back(arc_cell, rid);
      }
    }
  }
}

}  // namespace

SphereComplex build_complex(const ColoredFamily& F) {
  if (F.d != 2 && F.d != 3)
    throw std::invalid_argument("build_complex: exact construction only for d = 2 or 3");
  F.validate();

  std::vector<Point> P = F.all_vertices();
  std::sort(P.begin(), P.end(), lex_less);
  P.erase(std::unique(P.begin(), P.end()), P.end());
  for (auto& mp : midpoints(P)) P.push_back(std::move(mp));
  std::sort(P.begin(), P.end(), lex_less);
  P.erase(std::unique(P.begin(), P.end()), P.end());

  std::vector<IntVec> raw;
  for (size_t i = 0; i < P.size(); ++i)
    for (size_t j = i + 1; j < P.size(); ++j) raw.push_back(to_primitive(sub(P[j], P[i])));

  SphereComplex out;
  out.d = F.d;
  out.normals = canonical_normals(raw);

  std::vector<ProtoCell> proto;
  std::vector<std::pair<size_t, size_t>> cover;
  if (F.d == 2) {
    build_s1(out.normals, proto, cover);
  } else {
    build_s2(out.normals, proto, cover);
  }

  // Deterministic cell ids: sort by sign vector, then representative.
  std::vector<size_t> order(proto.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    if (proto[x].signs != proto[y].signs) return proto[x].signs < proto[y].signs;
    return proto[x].rep < proto[y].rep;
  });
  std::vector<size_t> new_id(proto.size());
  for (size_t i = 0; i < order.size(); ++i) new_id[order[i]] = i;

  out.cells.resize(proto.size());
  for (size_t i = 0; i < proto.size(); ++i) {
    ComplexCell& c = out.cells[new_id[i]];
    c.signs = std::move(proto[i].signs);
    c.rep = std::move(proto[i].rep);
    c.dim = proto[i].dim;
  }

  // Boundary relation: transitive closure of the construction's covering
  // pairs (vertex < arc < region).
  std::vector<std::set<size_t>> up(out.cells.size());
  for (auto& [lo, hi] : cover) up[new_id[lo]].insert(new_id[hi]);
  for (size_t i = 0; i < out.cells.size(); ++i) {
    std::set<size_t> closed = up[i];
    for (size_t j : up[i]) closed.insert(up[j].begin(), up[j].end());
    out.cells[i].boundary_of.assign(closed.begin(), closed.end());
  }

  // Antipodes: negated sign vector; ties (the all-zero pair) resolved by
  // the negated representative.
  std::map<std::vector<int8_t>, std::vector<size_t>> by_signs;
  for (size_t i = 0; i < out.cells.size(); ++i) by_signs[out.cells[i].signs].push_back(i);
  for (size_t i = 0; i < out.cells.size(); ++i) {
    std::vector<int8_t> want = out.cells[i].signs;
    for (auto& s : want) s = static_cast<int8_t>(-s);
    auto it = by_signs.find(want);
    if (it == by_signs.end() || it->second.empty())
      throw std::logic_error("build_complex: missing antipodal cell");
    if (it->second.size() == 1) {
      out.cells[i].antipode = it->second[0];
    } else {
      IntVec nrep = neg(out.cells[i].rep);
      size_t found = out.cells.size();
      for (size_t j : it->second)
        if (out.cells[j].rep == nrep) found = j;
      if (found == out.cells.size())
        throw std::logic_error("build_complex: ambiguous antipodal cell");
      out.cells[i].antipode = found;
    }
  }
  return out;
}

namespace {

// Denominator-cleared copy of the family's vertices, so per-direction
// projections run in pure integer arithmetic.
struct ScaledFamily {
  Int D = 1;
  std::vector<std::vector<IntVec>> verts;

  explicit ScaledFamily(const ColoredFamily& F) {
    for (const auto& m : F.members)
      for (const auto& v : m.vertices)
        for (const auto& c : v) {
          Int den = c.den();
          mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), den.get_mpz_t());
        }
    verts.resize(F.size());
    for (size_t i = 0; i < F.size(); ++i) {
      for (const auto& v : F.members[i].vertices) {
        IntVec w(F.d);
        for (size_t j = 0; j < F.d; ++j) w[j] = v[j].num() * (D / v[j].den());
        verts[i].push_back(std::move(w));
      }
    }
  }
};

CentralData annotate_scaled(const ColoredFamily& F, const ScaledFamily& S, const IntVec& x) {
  int r = F.coloring.r;
  int need = (r + 1) / 2;
  size_t n = F.size();
  if (n == 0) throw std::invalid_argument("annotate_direction: empty family");
  if (is_zero(x)) throw std::invalid_argument("annotate_direction: zero direction");

  std::vector<Int> mins(n), maxs(n);
  for (size_t i = 0; i < n; ++i) {
    Int lo = dot(S.verts[i][0], x);
    Int hi = lo;
    for (size_t j = 1; j < S.verts[i].size(); ++j) {
      Int v = dot(S.verts[i][j], x);
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    mins[i] = std::move(lo);
    maxs[i] = std::move(hi);
  }

  // t1: smallest t whose closed lower side {min_i <= t} spans >= need
  // colors; members with equal extreme values enter together.
  auto sweep_threshold = [&](const std::vector<Int>& vals, bool ascending) {
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      if (vals[a] != vals[b]) return ascending ? vals[a] < vals[b] : vals[a] > vals[b];
      return a < b;
    });
    std::vector<bool> seen(r + 1, false);
    int count = 0;
    size_t i = 0;
    while (i < n) {
      size_t j = i;
      while (j < n && vals[idx[j]] == vals[idx[i]]) {
        int c = F.coloring.color[idx[j]];
        if (!seen[c]) {
          seen[c] = true;
          ++count;
        }
        ++j;
      }
      if (count >= need) return vals[idx[i]];
      i = j;
    }
    throw std::logic_error("annotate_direction: coloring does not span enough colors");
  };

  CentralData out;
  Int t1 = sweep_threshold(mins, true);
  Int t2 = sweep_threshold(maxs, false);
  Point xp = to_point(x);
  out.H1 = OrientedHyperplane{xp, Rational(t1, S.D)};
  out.H2 = OrientedHyperplane{xp, Rational(t2, S.D)};
  out.H = OrientedHyperplane{xp, Rational(t1 + t2, 2 * S.D)};
  out.separated_order = t1 < t2;
  Int tsum = t1 + t2;
  for (size_t i = 0; i < n; ++i) {
    if (2 * maxs[i] < tsum) out.F_minus.push_back(i);
    else if (2 * mins[i] > tsum) out.F_plus.push_back(i);
  }
  return out;
}

}  // namespace

CentralData annotate_direction(const ColoredFamily& F, const Point& x) {
  if (x.empty()) throw std::invalid_argument("annotate_direction: empty direction");
  ScaledFamily S(F);
  // Clearing x's denominators only rescales every projection by a positive
  // constant, which moves the hyperplane offsets by the same factor; undo
  // that factor so offsets refer to the caller's x.
  Int l = 1;
  for (const auto& c : x) {
    Int den = c.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  IntVec xi(x.size());
  for (size_t j = 0; j < x.size(); ++j) xi[j] = x[j].num() * (l / x[j].den());
  CentralData out = annotate_scaled(F, S, xi);
  Rational fix(Int(1), l);  // projections onto l*x are l times those onto x
  out.H1 = OrientedHyperplane{x, out.H1.offset * fix};
  out.H2 = OrientedHyperplane{x, out.H2.offset * fix};
  out.H = OrientedHyperplane{x, out.H.offset * fix};
  return out;
}

std::pair<OrientedHyperplane, OrientedHyperplane> sweep_pair(const ColoredFamily& F,
                                                             const Point& x) {
  auto data = annotate_direction(F, x);
  return {std::move(data.H1), std::move(data.H2)};
}

OrientedHyperplane central_hyperplane(const ColoredFamily& F, const Point& x) {
  return annotate_direction(F, x).H;
}

namespace {

// Up to `want` further interior points of the cell: scaled copies of the
// representative perturbed inside the kernel of the cell's zero-set
// normals, with perturbations small enough to keep every strict sign.
std::vector<IntVec> interior_points(const SphereComplex& C, const ComplexCell& cell,
                                    size_t want) {
  std::vector<IntVec> zero_rows;
  for (size_t j = 0; j < C.normals.size(); ++j)
    if (cell.signs[j] == 0) zero_rows.push_back(C.normals[j]);
  auto kb = kernel_basis_int(zero_rows, C.d);

  std::vector<IntVec> dirs;
  for (const auto& b : kb) {
    dirs.push_back(b);
    dirs.push_back(neg(b));
  }
  for (size_t i = 0; i < kb.size(); ++i)
    for (size_t j = i + 1; j < kb.size(); ++j) {
      IntVec s(C.d);
      for (size_t c = 0; c < C.d; ++c) s[c] = kb[i][c] + kb[j][c];
      dirs.push_back(std::move(s));
    }
  // Fallback for 0-cells (kernel is the representative's own line): scaled
  // copies of the same sphere point.
  dirs.push_back(cell.rep);
  dirs.push_back(cell.rep);

  std::vector<IntVec> out;
  std::set<IntVec> seen{cell.rep};
  for (const auto& u : dirs) {
    if (out.size() >= want) break;
    Int mag = 1;
    for (const auto& nrm : C.normals) {
      Int d = abs(dot(nrm, u));
      if (d >= mag) mag = d + 1;
    }
    IntVec cand(C.d);
    for (size_t c = 0; c < C.d; ++c) cand[c] = mag * cell.rep[c] + u[c];
    cand = primitive_ray(cand);
    if (sign_vector(C.normals, cand) != cell.signs)
      throw std::logic_error("interior_points: perturbation left the cell");
    if (seen.insert(cand).second) out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace

std::vector<CentralData> annotate_cells(const SphereComplex& C, const ColoredFamily& F,
                                        bool test_mode) {
  ScaledFamily S(F);
  std::vector<CentralData> out;
  out.reserve(C.cells.size());
  for (const auto& cell : C.cells) {
    CentralData data = annotate_scaled(F, S, cell.rep);
    if (test_mode) {
      for (const auto& p : interior_points(C, cell, 5)) {
        CentralData again = annotate_scaled(F, S, p);
        if (again.F_minus != data.F_minus || again.F_plus != data.F_plus)
          throw std::logic_error("annotate_cells: separated subfamilies vary inside a cell");
      }
    }
    out.push_back(std::move(data));
  }
  return out;
}

MonotonicityReport verify_monotonicity(const SphereComplex& C,
                                       const std::vector<CentralData>& data) {
  if (data.size() != C.cells.size())
    throw std::invalid_argument("verify_monotonicity: annotation size mismatch");
  MonotonicityReport report;
  for (size_t tau = 0; tau < C.cells.size(); ++tau) {
    for (size_t sigma : C.cells[tau].boundary_of) {
      bool holds =
          std::includes(data[sigma].F_minus.begin(), data[sigma].F_minus.end(),
                        data[tau].F_minus.begin(), data[tau].F_minus.end()) &&
          std::includes(data[sigma].F_plus.begin(), data[sigma].F_plus.end(),
                        data[tau].F_plus.begin(), data[tau].F_plus.end());
      report.pairs.push_back({tau, sigma, holds});
      if (!holds) report.all_hold = false;
    }
  }
  return report;
}

}  // namespace ctv
