#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ctv::oracle {
namespace {

struct FmRow {
  std::vector<Rational> a;
  Rational b;
  bool strict = false;
  unsigned long ancestors = 0;  // bitmask of the original rows combined
};

/// Scales so the first nonzero coefficient has absolute value 1 (dedup key).
void normalize_row(FmRow& r) {
  for (const auto& c : r.a) {
    if (!c.is_zero()) {
      Rational s = c.sign() > 0 ? c : -c;
      for (auto& x : r.a) x /= s;
      r.b /= s;
      return;
    }
  }
}

bool row_less(const FmRow& x, const FmRow& y) {
  if (x.strict != y.strict) return x.strict < y.strict;
  for (size_t j = 0; j < x.a.size(); ++j)
    if (x.a[j] != y.a[j]) return x.a[j] < y.a[j];
  return x.b < y.b;
}

/// nullopt = still open; value = decided (constant row was contradictory
/// or trivially true and removed).
bool row_contradicts(const FmRow& r) {
  for (const auto& c : r.a)
    if (!c.is_zero()) return false;
  return r.b.sign() < 0 || (r.b.is_zero() && r.strict);
}

bool row_trivial(const FmRow& r) {
  for (const auto& c : r.a)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

bool fm_feasible(const LinearSystem& sys) {
  std::vector<FmRow> rows;
  unsigned long orig = 0;
  for (const auto& row : sys.rows) {
    std::vector<Rational> a = row.a;
    a.resize(sys.num_vars);
    switch (row.rel) {
      case Rel::LE: rows.push_back({a, row.b, false, 1ul << orig++}); break;
      case Rel::LT: rows.push_back({a, row.b, true, 1ul << orig++}); break;
      case Rel::EQ: {
        rows.push_back({a, row.b, false, 1ul << orig++});
        std::vector<Rational> na;
        for (const auto& c : a) na.push_back(-c);
        rows.push_back({na, -row.b, false, 1ul << orig++});
        break;
      }
    }
  }

  std::vector<bool> eliminated(sys.num_vars, false);
  for (size_t step = 1; step <= sys.num_vars; ++step) {
    // Greedy order: eliminate the variable producing the fewest new rows.
    size_t var = sys.num_vars;
    long best = 0;
    for (size_t v = 0; v < sys.num_vars; ++v) {
      if (eliminated[v]) continue;
      long lo = 0, hi = 0;
      for (const auto& r : rows) {
        int s = r.a[v].sign();
        if (s > 0) ++hi;
        else if (s < 0) ++lo;
      }
      long cost = lo * hi - lo - hi;
      if (var == sys.num_vars || cost < best) var = v, best = cost;
    }
    eliminated[var] = true;

    std::vector<FmRow> zero, lower, upper;
    for (auto& r : rows) {
      int s = r.a[var].sign();
      if (s == 0) zero.push_back(std::move(r));
      else {
        // Scale so the coefficient of var is +-1.
        Rational m = s > 0 ? r.a[var] : -r.a[var];
        for (auto& c : r.a) c /= m;
        r.b /= m;
        (s > 0 ? upper : lower).push_back(std::move(r));
      }
    }
    rows = std::move(zero);
    for (const auto& l : lower)
      for (const auto& u : upper) {
        FmRow n;
        n.ancestors = l.ancestors | u.ancestors;
        // Imbert's criterion: after eliminating `step` variables, any row
        // combining more than step+1 original rows is redundant.
        if (static_cast<size_t>(__builtin_popcountl(n.ancestors)) > step + 1) continue;
        n.a.resize(sys.num_vars);
        for (size_t j = 0; j < sys.num_vars; ++j) n.a[j] = l.a[j] + u.a[j];
        n.b = l.b + u.b;
        n.strict = l.strict || u.strict;
        rows.push_back(std::move(n));
      }
    for (auto& r : rows) {
      if (row_contradicts(r)) return false;
      normalize_row(r);
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), row_trivial), rows.end());
    // Dedup; among equal rows keep the one with the fewest ancestors so the
    // Imbert test never drops a constraint that has a cheaper derivation.
    std::sort(rows.begin(), rows.end(), [](const FmRow& x, const FmRow& y) {
      if (row_less(x, y)) return true;
      if (row_less(y, x)) return false;
      return __builtin_popcountl(x.ancestors) < __builtin_popcountl(y.ancestors);
    });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const FmRow& x, const FmRow& y) {
                             return !row_less(x, y) && !row_less(y, x);
                           }),
               rows.end());
  }
  for (const auto& r : rows)
    if (row_contradicts(r)) return false;
  return true;
}

bool cara_in_hull(const Point& q, const std::vector<Point>& S) {
  if (S.empty()) return false;
  size_t d = q.size();
  for (size_t t = 1; t <= std::min(S.size(), d + 1); ++t) {
    bool found = false;
    for_each_combination(S.size(), t, [&](const std::vector<size_t>& idx) {
      if (found) return;
      // Augmented system: d coordinate equations plus the sum-to-one row.
      std::vector<std::vector<Rational>> M(d + 1, std::vector<Rational>(t + 1));
      for (size_t row = 0; row < d; ++row) {
        for (size_t col = 0; col < t; ++col) M[row][col] = S[idx[col]][row];
        M[row][t] = q[row];
      }
      for (size_t col = 0; col < t; ++col) M[d][col] = Rational(1);
      M[d][t] = Rational(1);

      // Gaussian elimination with exact pivoting.
      size_t rank = 0;
      std::vector<size_t> pivot_col;
      for (size_t col = 0; col < t && rank < d + 1; ++col) {
        size_t piv = rank;
        while (piv < d + 1 && M[piv][col].is_zero()) ++piv;
        if (piv == d + 1) continue;
        std::swap(M[rank], M[piv]);
        Rational p = M[rank][col];
        for (auto& x : M[rank]) x /= p;
        for (size_t row = 0; row < d + 1; ++row) {
          if (row == rank || M[row][col].is_zero()) continue;
          Rational f = M[row][col];
          for (size_t j = col; j <= t; ++j) M[row][j] -= f * M[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
      }
      if (rank < t) return;  // affinely dependent subset; a smaller one decides
      for (size_t row = rank; row < d + 1; ++row)
        if (!M[row][t].is_zero()) return;  // inconsistent
      for (size_t i = 0; i < t; ++i)
        if (M[i][t].sign() < 0) return;
      found = true;
    });
    if (found) return true;
  }
  return false;
}

std::vector<Circuit> brute_circuits(const std::vector<Point>& P) {
  if (P.empty()) return {};
  size_t d = P[0].size();
  std::vector<Circuit> out;
  for (size_t s = 2; s <= std::min(P.size(), d + 2); ++s) {
    for_each_combination(P.size(), s, [&](const std::vector<size_t>& T) {
      for (const auto& c : out)
        if (std::includes(T.begin(), T.end(), c.support.begin(), c.support.end())) return;
      // All splits with T[0] on the positive side.
      for (unsigned long mask = 1; mask < (1ul << s); mask += 2) {
        if (mask == (1ul << s) - 1) continue;  // one side empty
        std::vector<Point> A, B;
        for (size_t i = 0; i < s; ++i) ((mask >> i) & 1 ? A : B).push_back(P[T[i]]);
        if (std::holds_alternative<HullsIntersect>(hulls_intersect(A, B))) {
          Circuit c;
          c.support = T;
          for (size_t i = 0; i < s; ++i) c.signs.push_back((mask >> i) & 1 ? 1 : -1);
          out.push_back(std::move(c));
          return;
        }
      }
    });
  }
  std::sort(out.begin(), out.end(),
            [](const Circuit& x, const Circuit& y) { return x.support < y.support; });
  return out;
}

bool exhaustive_rainbow_consistent(const ColoredFamily& family, const KOrdering& ordering,
                                   const IndependenceOracle& oracle) {
  size_t n = family.size();
  unsigned long total = 1;
  for (size_t i = 0; i < n; ++i) total *= 3;
  for (unsigned long code = 0; code < total; ++code) {
    std::vector<size_t> s1, s2;
    unsigned long c = code;
    int first_side = 0;
    for (size_t i = 0; i < n; ++i, c /= 3) {
      int a = static_cast<int>(c % 3);
      if (a == 1) {
        if (first_side == 0) first_side = 1;
        s1.push_back(i);
      } else if (a == 2) {
        if (first_side == 0) first_side = 2;
        s2.push_back(i);
      }
    }
    if (s1.empty() || s2.empty() || first_side != 1) continue;  // canonical order
    std::vector<size_t> uni = s1;
    uni.insert(uni.end(), s2.begin(), s2.end());
    std::sort(uni.begin(), uni.end());
    if (!oracle.is_independent(uni)) continue;
    std::vector<Point> p1, p2;
    for (size_t i : s1) p1.push_back(ordering.points[i]);
    for (size_t i : s2) p2.push_back(ordering.points[i]);
    if (!std::holds_alternative<HullsIntersect>(hulls_intersect(p1, p2))) continue;
    std::vector<Point> a, b;
    for (size_t i : s1)
      for (const auto& v : family.members[i].vertices) a.push_back(v);
    for (size_t i : s2)
      for (const auto& v : family.members[i].vertices) b.push_back(v);
    if (std::holds_alternative<HullsSeparated>(hulls_intersect(a, b))) return false;
  }
  return true;
}

bool copies_consistent(const ColoredFamily& family, const KOrdering& ordering) {
  // Circuits have support at most k+2, so the reduction needs at least k+2
  // copies for every plain Radon pair to be realizable colorfully.
  int r = std::max<int>(family.coloring.r, static_cast<int>(ordering.k) + 2);
  struct Entry {
    std::string id;
    Polytope member;
    int color;
    Point phi;
  };
  std::vector<Entry> entries;
  for (size_t i = 0; i < family.size(); ++i)
    for (int j = 1; j <= r; ++j)
      entries.push_back({family.ids[i] + "_copy" + std::to_string(j), family.members[i], j,
                         ordering.points[i]});
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return x.id < y.id; });

  ColoredFamily copies;
  copies.d = family.d;
  copies.coloring.r = r;
  KOrdering ord;
  ord.k = ordering.k;
  for (auto& e : entries) {
    copies.ids.push_back(e.id);
    copies.members.push_back(std::move(e.member));
    copies.coloring.color.push_back(e.color);
    ord.points.push_back(std::move(e.phi));
  }
  PartitionMatroid oracle(copies.coloring);
  return std::holds_alternative<Consistent>(is_rainbow_consistent(copies, ord, oracle));
}

std::optional<OrientedHyperplane> sweep_transversal_2d(const std::vector<Polytope>& members,
                                                       long n) {
  auto try_direction = [&](long x, long y) -> std::optional<OrientedHyperplane> {
    if (x == 0 && y == 0) return std::nullopt;
    Point dir = {Rational(x), Rational(y)};
    bool first = true;
    Rational lo, hi;
    for (const auto& m : members) {
      Rational mn, mx;
      for (size_t i = 0; i < m.vertices.size(); ++i) {
        Rational v = dot(dir, m.vertices[i]);
        if (i == 0 || v < mn) mn = v;
        if (i == 0 || v > mx) mx = v;
      }
      if (first) {
        lo = mn;
        hi = mx;
        first = false;
      } else {
        if (mn > lo) lo = mn;
        if (mx < hi) hi = mx;
      }
      if (lo > hi) return std::nullopt;
    }
    return OrientedHyperplane{dir, (lo + hi) / Rational(2)};
  };
  // theta = 2*atan(i/n) rationalized; the rotated copy covers the angles
  // the first family misses near +-pi/2... both together cover the circle.
  for (long i = -n; i <= n; ++i) {
    if (auto h = try_direction(n * n - i * i, 2 * i * n)) return h;
    if (auto h = try_direction(-2 * i * n, n * n - i * i)) return h;
  }
  return std::nullopt;
}

}  // namespace ctv::oracle
