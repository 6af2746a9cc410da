#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ctv/lp.hpp"
#include "ctv/linalg.hpp"
using namespace ctv;

TEST_CASE("lp interval") {
  LinearSystem s; s.num_vars = 1;
  s.add({Rational(-1)}, Rational(0), Rel::LE);  // x >= 0
  s.add({Rational(1)}, Rational(1), Rel::LE);   // x <= 1
  auto r = solve_feasibility(s);
  REQUIRE(std::holds_alternative<LpFeasible>(r));
  CHECK(satisfies(s, std::get<LpFeasible>(r).x));
}
TEST_CASE("lp infeasible") {
  LinearSystem s; s.num_vars = 1;
  s.add({Rational(1)}, Rational(-1), Rel::LE);  // x <= -1
  s.add({Rational(-1)}, Rational(-1), Rel::LE); // x >= 1
  auto r = solve_feasibility(s);
  REQUIRE(std::holds_alternative<FarkasCertificate>(r));
  CHECK(verify_farkas(s, std::get<FarkasCertificate>(r)));
}
TEST_CASE("lp strict") {
  LinearSystem s; s.num_vars = 2;
  s.add({Rational(1), Rational(1)}, Rational(0), Rel::LT);   // x+y < 0
  s.add({Rational(-1), Rational(0)}, Rational(0), Rel::LT);  // x > 0
  auto r = solve_feasibility(s);
  REQUIRE(std::holds_alternative<LpFeasible>(r));
  CHECK(satisfies(s, std::get<LpFeasible>(r).x));
}
TEST_CASE("lp strict infeasible") {
  LinearSystem s; s.num_vars = 1;
  s.add({Rational(1)}, Rational(0), Rel::LT);   // x < 0
  s.add({Rational(-1)}, Rational(0), Rel::LE);  // x >= 0
  auto r = solve_feasibility(s);
  REQUIRE(std::holds_alternative<FarkasCertificate>(r));
  CHECK(verify_farkas(s, std::get<FarkasCertificate>(r)));
}
TEST_CASE("kernel and rank") {
  std::vector<IntVec> rows = {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}};
  CHECK(rank_int(rows, 3) == 2);
  auto ker = kernel_basis_int(rows, 3);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][2] != 0);
}
#include "ctv/hull.hpp"
#include "ctv/ordering.hpp"
#include "ctv/family.hpp"
#include "ctv/direction.hpp"

static Point pt(std::initializer_list<long> c) {
  Point p; for (long x : c) p.push_back(Rational(x)); return p;
}

TEST_CASE("point in hull") {
  std::vector<Point> S = {pt({-1, 0}), pt({1, 0})};
  auto in = point_in_hull(pt({0, 0}), S);
  REQUIRE(std::holds_alternative<InHull>(in));
  auto& w = std::get<InHull>(in).weights;
  CHECK(w[0] == Rational(1, 2));
  CHECK(w[1] == Rational(1, 2));
  auto out = point_in_hull(pt({2, 0}), S);
  REQUIRE(std::holds_alternative<Outside>(out));
  auto& sep = std::get<Outside>(out).sep;
  CHECK(dot(sep.normal, pt({2, 0})) > sep.offset);
  for (auto& s : S) CHECK(dot(sep.normal, s) < sep.offset);
}
TEST_CASE("hulls intersect and separate") {
  std::vector<Point> A = {pt({0, 0}), pt({2, 0})};
  std::vector<Point> B = {pt({1, -1}), pt({1, 1})};
  auto r = hulls_intersect(A, B);
  REQUIRE(std::holds_alternative<HullsIntersect>(r));
  CHECK(std::get<HullsIntersect>(r).point == pt({1, 0}));
  std::vector<Point> C = {pt({3, 0}), pt({4, 0})};
  auto s = hulls_intersect(A, C);
  REQUIRE(std::holds_alternative<HullsSeparated>(s));
}
TEST_CASE("circuits on a line") {
  std::vector<Point> P = {pt({0}), pt({1}), pt({2})};
  auto cs = affine_circuits(P);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].support == std::vector<size_t>{0, 1, 2});
  // {0,2} vs {1}: signs +,-,+ after normalizing first to +1
  CHECK(cs[0].signs == std::vector<int>{1, -1, 1});
  CHECK(circuit_witness(P, cs[0]) == pt({1}));
}
TEST_CASE("midpoints") {
  auto m = midpoints({pt({0, 0}), pt({2, 0}), pt({0, 2})});
  REQUIRE(m.size() == 3);
  CHECK(m[0] == pt({0, 1}));
  CHECK(m[1] == pt({1, 0}));
  CHECK(m[2] == pt({1, 1}));
}
TEST_CASE("r bounds") {
  auto b = r_bound(2, 1);
  CHECK(b.lower == 3); REQUIRE(b.upper); CHECK(*b.upper == 3); CHECK(b.exact);
  b = r_bound(4, 2);
  CHECK(b.lower == 4); REQUIRE(b.upper); CHECK(*b.upper == 4); CHECK(b.exact);
  b = r_bound(3, 2);
  CHECK(b.lower == 4); CHECK(!b.upper);
  b = r_bound(4, 3);
  CHECK(b.lower == 5); REQUIRE(b.upper); CHECK(*b.upper == 35); CHECK(!b.exact);
  b = r_bound(5, 3);
  CHECK(b.lower == 5); REQUIRE(b.upper); CHECK(*b.upper == 11); CHECK(!b.exact);
}
TEST_CASE("sweep single normal gives four cells") {
  std::vector<IntVec> normals = {{Int(1), Int(0)}};
  auto cells = sweep_circle_cells(normals);
  REQUIRE(cells.size() == 4);
  int zeros = 0, pos = 0, neg = 0;
  for (auto& c : cells) {
    REQUIRE(c.signs.size() == 1);
    if (c.signs[0] == 0) ++zeros; else if (c.signs[0] > 0) ++pos; else ++neg;
    CHECK(sign_vector(normals, c.rep) == c.signs);
  }
  CHECK(zeros == 2); CHECK(pos == 1); CHECK(neg == 1);
}
TEST_CASE("dfs cells match sweep counts in the plane") {
  std::vector<IntVec> normals = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}};
  auto sweep = enumerate_direction_cells(normals, 2);
  CHECK(sweep.size() == 12);  // 4n cells for n pairwise independent lines
  for (auto& c : sweep) CHECK(sign_vector(normals, c.rep) == c.signs);
}
TEST_CASE("transversal of two crossing segments") {
  auto seg = [](Point a, Point b) { return Polytope::make({std::move(a), std::move(b)}); };
  std::vector<Polytope> f = {seg(pt({0, 0}), pt({2, 0})), seg(pt({1, -1}), pt({1, 1}))};
  auto h = find_hyperplane_transversal(f, 2);
  REQUIRE(h);
  for (auto& m : f) {
    auto iv = projection_interval(m, h->normal);
    CHECK(iv.lo <= h->offset);
    CHECK(iv.hi >= h->offset);
  }
  // Three pairwise-far segments with incompatible directions: no common line.
  std::vector<Polytope> g = {seg(pt({0, 0}), pt({1, 0})),
                             seg(pt({10, 10}), pt({10, 11})),
                             seg(pt({-10, 10}), pt({-11, 10}))};
  auto iv = transversal_in_direction(g, pt({0, 1}));
  CHECK(!iv);
}
#include "ctv/complex.hpp"

static ColoredFamily seg_family_2d() {
  auto seg = [](Point a, Point b) { return Polytope::make({std::move(a), std::move(b)}); };
  ColoredFamily f;
  f.d = 2;
  f.ids = {"a", "b", "c"};
  f.members = {seg(pt({0, 0}), pt({2, 1})), seg(pt({1, -1}), pt({3, 2})),
               seg(pt({-1, 2}), pt({2, -2}))};
  f.coloring = {{1, 2, 3}, 3};
  return f;
}

TEST_CASE("complex on a single segment") {
  ColoredFamily f;
  f.d = 2;
  f.ids = {"a"};
  f.members = {Polytope::make({pt({0, 0}), pt({2, 0})})};
  f.coloring = {{1}, 1};
  auto C = build_complex(f);
  // 3 collinear points, all normals parallel -> one canonical normal, 4 cells.
  CHECK(C.normals.size() == 1);
  CHECK(C.cells.size() == 4);
  for (auto& c : C.cells) {
    CHECK(C.cells[c.antipode].antipode == &c - C.cells.data());
    CHECK(sign_vector(C.normals, c.rep) == c.signs);
  }
}

TEST_CASE("complex 2d structure and monotonicity") {
  auto f = seg_family_2d();
  auto C = build_complex(f);
  REQUIRE(!C.normals.empty());
  CHECK(C.cells.size() == 4 * C.normals.size());
  for (size_t i = 0; i < C.cells.size(); ++i) {
    auto& c = C.cells[i];
    CHECK(sign_vector(C.normals, c.rep) == c.signs);
    // antipodal involution with flipped signs
    auto& a = C.cells[c.antipode];
    CHECK(a.antipode == i);
    for (size_t j = 0; j < c.signs.size(); ++j) CHECK(int(a.signs[j]) == -int(c.signs[j]));
    // boundary pairs are conformal: tau zeroes some entries, agrees elsewhere
    for (size_t s : c.boundary_of)
      for (size_t j = 0; j < c.signs.size(); ++j)
        CHECK((c.signs[j] == 0 || c.signs[j] == C.cells[s].signs[j]));
  }
  auto data = annotate_cells(C, f, true);
  auto rep = verify_monotonicity(C, data);
  CHECK(rep.all_hold);
  // F_sigma^- = F_{-sigma}^+ (antipodal exchange)
  for (size_t i = 0; i < C.cells.size(); ++i)
    CHECK(data[i].F_minus == data[C.cells[i].antipode].F_plus);
}

TEST_CASE("sweep pair on a line of three points") {
  ColoredFamily f;
  f.d = 2;
  f.ids = {"a", "b", "c"};
  f.members = {Polytope::make({pt({0, 0})}), Polytope::make({pt({1, 0})}),
               Polytope::make({pt({2, 0})})};
  f.coloring = {{1, 2, 3}, 3};
  auto [h1, h2] = sweep_pair(f, pt({1, 0}));
  CHECK(h1.offset == Rational(1));
  CHECK(h2.offset == Rational(1));
  CHECK(central_hyperplane(f, pt({1, 0})).offset == Rational(1));
  // r = 2 example: two points, one color each
  ColoredFamily g;
  g.d = 2;
  g.ids = {"a", "b"};
  g.members = {Polytope::make({pt({0, 0})}), Polytope::make({pt({1, 0})})};
  g.coloring = {{1, 2}, 2};
  auto [g1, g2] = sweep_pair(g, pt({1, 0}));
  CHECK(g1.offset == Rational(0));
  CHECK(g2.offset == Rational(1));
  CHECK(central_hyperplane(g, pt({1, 0})).offset == Rational(1, 2));
  // antipodal symmetry: sweep_pair(F, -x) = (-H2, -H1)
  auto [n1, n2] = sweep_pair(g, pt({-1, 0}));
  CHECK(n1.offset == -g2.offset);
  CHECK(n2.offset == -g1.offset);
}

TEST_CASE("complex 3d small") {
  ColoredFamily f;
  f.d = 3;
  f.ids = {"a", "b"};
  f.members = {Polytope::make({pt({0, 0, 0}), pt({2, 0, 0})}),
               Polytope::make({pt({0, 1, 1}), pt({1, 3, 0})})};
  f.coloring = {{1, 2}, 2};
  auto C = build_complex(f);
  size_t v = 0, e = 0, r2 = 0;
  for (size_t i = 0; i < C.cells.size(); ++i) {
    auto& c = C.cells[i];
    CHECK(sign_vector(C.normals, c.rep) == c.signs);
    auto& a = C.cells[c.antipode];
    CHECK(a.antipode == i);
    if (c.dim == 0) ++v;
    else if (c.dim == 1) ++e;
    else ++r2;
    for (size_t s : c.boundary_of) {
      CHECK(C.cells[s].dim > c.dim);
      for (size_t j = 0; j < c.signs.size(); ++j)
        CHECK((c.signs[j] == 0 || c.signs[j] == C.cells[s].signs[j]));
    }
  }
  // Euler characteristic of S^2
  CHECK(v - e + r2 == 2);
  auto data = annotate_cells(C, f, true);
  CHECK(verify_monotonicity(C, data).all_hold);
}
#include "ctv/join.hpp"

TEST_CASE("lift and origin in join") {
  KOrdering ord{1, {pt({2}), pt({-2}), pt({0})}};
  Coloring col{{1, 2, 3}, 3};
  auto q = lift(ord, col, {0}, {1, 2});
  REQUIRE(q.q_minus.size() == 1);
  CHECK(q.q_minus[0] == pt({-2, -1}));
  CHECK(q.q_plus[0] == pt({-2, 1}));
  CHECK(q.q_plus[1] == pt({0, 1}));
  // paper example k=1: {(-1,1)}, {(1,-1)}, {(5,1)} colored 1,2,3
  std::vector<Point> Q = {pt({-1, 1}), pt({1, -1}), pt({5, 1})};
  auto w = origin_in_join(Q, {1, 2, 3}, 3, 1);
  REQUIRE(w);
  CHECK(w->subset == std::vector<size_t>{0, 1});
  CHECK(w->weights[0] == Rational(1, 2));
  CHECK(w->weights[1] == Rational(1, 2));
  // all points lifted to the same side: None
  std::vector<Point> up = {pt({-1, 1}), pt({1, 1}), pt({5, 1})};
  CHECK(!origin_in_join(up, {1, 2, 3}, 3, 1));
}

TEST_CASE("s sigma variants and norigin certificate") {
  // Config with an antipodal colorful pair: members 0 (color 1, below) and
  // 1 (color 2, above) share the phi-image 2, so their lifts are +-(2, 1).
  KOrdering ord{1, {pt({2}), pt({2}), pt({-7}), pt({-7})}};
  Coloring col{{1, 2, 1, 2}, 2};
  auto q = lift(ord, col, {0, 3}, {1, 2});
  auto join_s = SSigma::make(SVariant::Join, q);
  auto slice_s = SSigma::make(SVariant::SliceJoin, q);
  auto conv_s = SSigma::make(SVariant::ConvSliceJoin, q);
  CHECK(join_s.m == 2);
  CHECK(slice_s.m == 1);
  auto wj = origin_in_s_sigma(join_s, 2);
  auto ws = origin_in_s_sigma(slice_s, 2);
  auto wc = origin_in_s_sigma(conv_s, 2);
  REQUIRE(wj);
  REQUIRE(ws);
  REQUIRE(wc);

  ColoredFamily f;
  f.d = 2;
  f.ids = {"a", "b", "c", "d"};
  f.members = {Polytope::make({pt({2, -2})}), Polytope::make({pt({2, 2})}),
               Polytope::make({pt({-7, 2})}), Polytope::make({pt({-7, -2})})};
  f.coloring = col;
  OrientedHyperplane H{pt({0, 1}), Rational(0)};
  auto v = norigin_certificate(conv_s, 2, ord, f, H);
  CHECK(!v.pair.part1.empty());
  CHECK(!v.pair.part2.empty());
  // the violation passes the rainbow validator's own re-check
  std::vector<Point> i1, i2;
  for (size_t m : v.pair.part1) i1.push_back(ord.points[m]);
  for (size_t m : v.pair.part2) i2.push_back(ord.points[m]);
  CHECK(std::holds_alternative<InHull>(point_in_hull(v.pair.witness, i1)));
  CHECK(std::holds_alternative<InHull>(point_in_hull(v.pair.witness, i2)));

  // Q strictly inside x1 > 0: None everywhere.
  KOrdering far{1, {pt({1}), pt({2}), pt({-3}), pt({-4})}};
  auto qf = lift(far, col, {0, 2}, {1, 3});
  // minus side lifts to (-1,-1), (3,-1); plus to (2,1), (-4,1) -- shift all right
  for (auto& p : qf.q_minus) p[0] += Rational(10);
  for (auto& p : qf.q_plus) p[0] += Rational(10);
  CHECK(!origin_in_s_sigma(SSigma::make(SVariant::Join, qf), 2));
  CHECK(!origin_in_s_sigma(SSigma::make(SVariant::SliceJoin, qf), 2));
  CHECK(!origin_in_s_sigma(SSigma::make(SVariant::ConvSliceJoin, qf), 2));
}

TEST_CASE("kernel point greedy") {
  // k = 1, r = 11: both sides span >= 6 colors.
  size_t k = 1;
  int r = 11;
  LiftedConfig q;
  q.k = k;
  for (int c = 1; c <= 6; ++c) {
    q.q_minus.push_back(pt({c, -1}));
    q.src_minus.push_back(c - 1);
    q.col_minus.push_back(c);
  }
  for (int c = 6; c <= 11; ++c) {
    q.q_plus.push_back(pt({-c, 1}));
    q.src_plus.push_back(c - 1);
    q.col_plus.push_back(c);
  }
  auto S = SSigma::make(SVariant::SliceJoin, q);
  BoundarySelection sel;
  sel.X = {0, 6};  // colors 1 and 6: midpoint of (1,-1) and (-6,1)... need x in conv
  sel.x = pt({0, 0});
  sel.x[0] = (q.q_minus[0][0] + q.q_plus[0][0]) / Rational(2);
  auto kp = kernel_point(S, {sel}, r);
  CHECK(kp.p[1].is_zero());
  CHECK(q.is_minus(kp.p1));
  CHECK(!q.is_minus(kp.p2));
}
#include "oracles.hpp"
#include "ctv/instance.hpp"
#include <algorithm>

TEST_CASE("feasibility matches Fourier-Motzkin on small systems") {
  Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    LinearSystem sys;
    sys.num_vars = static_cast<size_t>(rng.range(1, 4));
    long m = rng.range(1, 8);
    for (long i = 0; i < m; ++i) {
      std::vector<Rational> a(sys.num_vars);
      for (auto& c : a) c = Rational(rng.range(-4, 4));
      long rel = rng.range(0, 9);
      sys.add(std::move(a), Rational(rng.range(-4, 4)),
              rel < 6 ? Rel::LE : (rel < 8 ? Rel::LT : Rel::EQ));
    }
    CHECK(std::holds_alternative<LpFeasible>(solve_feasibility(sys)) ==
          oracle::fm_feasible(sys));
  }
}

TEST_CASE("hull membership matches Caratheodory enumeration") {
  Rng rng(12);
  for (int it = 0; it < 60; ++it) {
    size_t d = static_cast<size_t>(rng.range(2, 3));
    size_t n = static_cast<size_t>(rng.range(1, 6));
    std::vector<Point> S;
    for (size_t i = 0; i < n; ++i) {
      Point p(d);
      for (auto& c : p) c = rng.coord(5);
      S.push_back(std::move(p));
    }
    Point q(d);
    for (auto& c : q) c = rng.coord(5);
    CHECK(std::holds_alternative<InHull>(point_in_hull(q, S)) == oracle::cara_in_hull(q, S));
  }
}

TEST_CASE("circuits match brute force over subset pairs") {
  Rng rng(13);
  for (int it = 0; it < 25; ++it) {
    size_t dim = static_cast<size_t>(rng.range(1, 2));
    size_t n = static_cast<size_t>(rng.range(3, 7));
    std::vector<Point> P;
    for (size_t i = 0; i < n; ++i) {
      Point p(dim);
      for (auto& c : p) c = Rational(rng.range(-3, 3));
      P.push_back(std::move(p));
    }
    auto fast = affine_circuits(P);
    auto brute = oracle::brute_circuits(P);
    REQUIRE(fast.size() == brute.size());
    for (size_t i = 0; i < fast.size(); ++i) {
      CHECK(fast[i].support == brute[i].support);
      CHECK(fast[i].signs == brute[i].signs);
    }
  }
}

TEST_CASE("colorful circuits equal the brute-force colorful filter") {
  Rng rng(14);
  for (int it = 0; it < 20; ++it) {
    size_t n = 9;
    KOrdering ord;
    ord.k = 2;
    Coloring col;
    col.r = 4;
    for (size_t i = 0; i < n; ++i) {
      ord.points.push_back({rng.coord(5), rng.coord(5)});
      col.color.push_back(static_cast<int>(i % 4) + 1);
    }
    PartitionMatroid pm(col);
    auto fast = enumerate_colorful_circuits(ord, pm);
    // Oracle: all circuits of the configuration, filtered by independence.
    std::vector<Circuit> filtered;
    for (auto& c : affine_circuits(ord.points))
      if (pm.is_independent(c.support)) filtered.push_back(c);
    REQUIRE(fast.size() == filtered.size());
    for (size_t i = 0; i < fast.size(); ++i) {
      std::vector<size_t> support = fast[i].part1;
      support.insert(support.end(), fast[i].part2.begin(), fast[i].part2.end());
      std::sort(support.begin(), support.end());
      CHECK(support == filtered[i].support);
    }
  }
}

TEST_CASE("rainbow consistency matches the exhaustive pair quantifier") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    InstanceSpec s;
    s.d = 2, s.k = 1, s.r = 3, s.members_per_color = 2;
    s.kind = PolyKind::Segments;
    s.coord_bound = 6, s.spread = 2, s.seed = seed;
    Instance inst = generate_instance(s);
    PartitionMatroid pm(inst.family.coloring);
    CHECK(std::holds_alternative<Consistent>(
              is_rainbow_consistent(inst.family, inst.ordering, pm)) ==
          oracle::exhaustive_rainbow_consistent(inst.family, inst.ordering, pm));
    CHECK(std::holds_alternative<Consistent>(
              is_consistent_ordering(inst.family, inst.ordering)) ==
          oracle::copies_consistent(inst.family, inst.ordering));
  }
}

TEST_CASE("transversal search agrees with a dense sweep oracle") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    InstanceSpec s;
    s.d = 2, s.k = 1, s.r = 1, s.members_per_color = 4;
    s.kind = PolyKind::Segments;
    s.coord_bound = 8, s.spread = 3, s.seed = seed;
    Instance inst = generate_instance(s);
    auto fast = find_hyperplane_transversal(inst.family.members, 2);
    auto slow = oracle::sweep_transversal_2d(inst.family.members);
    if (slow) CHECK(fast.has_value());  // the sweep is sound, so Some forces Some
    if (fast) {
      // Every Some re-verifies against all members.
      for (const auto& m : inst.family.members) {
        auto iv = projection_interval(m, fast->normal);
        CHECK(iv.lo <= fast->offset);
        CHECK(iv.hi >= fast->offset);
      }
    } else {
      CHECK(!slow);
    }
  }
}

TEST_CASE("blocking triangles admit no line transversal") {
  auto tri = [](long ax, long ay, long bx, long by, long cx, long cy) {
    return Polytope::make({pt({ax, ay}), pt({bx, by}), pt({cx, cy})});
  };
  std::vector<Polytope> f = {tri(0, 0, 4, 0, 2, 3), tri(10, 0, 14, 0, 12, 3),
                             tri(5, 10, 9, 10, 7, 13)};
  CHECK(!find_hyperplane_transversal(f, 2));
  CHECK(!oracle::sweep_transversal_2d(f));
}
