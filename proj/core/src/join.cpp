#include "ctv/join.hpp"

#include "ctv/hull.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ctv {

LiftedConfig lift(const KOrdering& ordering, const Coloring& coloring,
                  const std::vector<size_t>& f_minus, const std::vector<size_t>& f_plus) {
  std::set<size_t> minus(f_minus.begin(), f_minus.end());
  for (size_t m : f_plus)
    if (minus.count(m)) throw std::invalid_argument("lift: F- and F+ overlap");

  LiftedConfig out;
  out.k = ordering.k;
  auto lifted = [&](size_t m, int sign) {
    if (m >= ordering.points.size()) throw std::invalid_argument("lift: member not in ordering");
    Point p(out.k + 1);
    for (size_t j = 0; j < out.k; ++j) p[j] = Rational(sign) * ordering.points[m][j];
    p[out.k] = Rational(sign);
    return p;
  };
  for (size_t m : f_minus) {
    out.q_minus.push_back(lifted(m, -1));
    out.src_minus.push_back(m);
    out.col_minus.push_back(coloring.color[m]);
  }
  for (size_t m : f_plus) {
    out.q_plus.push_back(lifted(m, +1));
    out.src_plus.push_back(m);
    out.col_plus.push_back(coloring.color[m]);
  }
  return out;
}

SSigma SSigma::make(SVariant v, LiftedConfig q) {
  SSigma s;
  s.variant = v;
  s.m = (v == SVariant::Join) ? q.k + 1 : q.k;
  s.q = std::move(q);
  return s;
}

std::optional<JoinWitness> origin_in_join(const std::vector<Point>& Q,
                                          const std::vector<int>& colors, int r, size_t k) {
  if (Q.size() != colors.size()) throw std::invalid_argument("origin_in_join: size mismatch");
  std::vector<bool> present(r + 1, false);
  for (int c : colors) {
    if (c < 1 || c > r) throw std::invalid_argument("origin_in_join: color out of range");
    present[c] = true;
  }
  for (int c = 1; c <= r; ++c)
    if (!present[c]) throw std::invalid_argument("origin_in_join: empty color class");

  size_t n = Q.size();
  Point zero(k + 1, Rational(0));
  std::optional<JoinWitness> found;
  size_t cap = std::min(n, k + 2);
  for (size_t s = 1; s <= cap && !found; ++s) {
    for_each_combination(n, s, [&](const std::vector<size_t>& c) {
      if (found) return;
      std::vector<bool> used(r + 1, false);
      for (size_t i : c) {
        if (used[colors[i]]) return;
        used[colors[i]] = true;
      }
      std::vector<Point> pts;
      for (size_t i : c) pts.push_back(Q[i]);
      auto res = point_in_hull(zero, pts);
      if (auto* in = std::get_if<InHull>(&res)) {
        found = JoinWitness{c, in->weights};
      }
    });
  }
  return found;
}

namespace {

void gather(const LiftedConfig& q, std::vector<Point>& pts, std::vector<int>& cols) {
  for (size_t i = 0; i < q.size(); ++i) {
    pts.push_back(q.point(i));
    cols.push_back(q.color(i));
  }
}

bool all_colors_present(const LiftedConfig& q, int r) {
  std::vector<bool> present(r + 1, false);
  for (size_t i = 0; i < q.size(); ++i) present[q.color(i)] = true;
  for (int c = 1; c <= r; ++c)
    if (!present[c]) return false;
  return true;
}

// Combines (index, weight) pairs on shared indices and sorts ascending.
SWitness pack_witness(SVariant variant, std::vector<std::pair<size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SWitness w;
  w.variant = variant;
  for (auto& [i, wt] : entries) {
    if (!w.subset.empty() && w.subset.back() == i) {
      w.weights.back() += wt;
    } else {
      w.subset.push_back(i);
      w.weights.push_back(wt);
    }
  }
  return w;
}

}  // namespace

std::optional<SWitness> origin_in_s_sigma(const SSigma& S, int r) {
  const LiftedConfig& q = S.q;
  if (S.variant == SVariant::Join || S.variant == SVariant::SliceJoin) {
    // The origin lies in W, so slicing the join with W does not change the
    // origin-membership question.
    if (!all_colors_present(q, r)) return std::nullopt;
    std::vector<Point> pts;
    std::vector<int> cols;
    gather(q, pts, cols);
    auto jw = origin_in_join(pts, cols, r, q.k);
    if (!jw) return std::nullopt;
    return SWitness{S.variant, std::move(jw->subset), std::move(jw->weights)};
  }

  // ConvSliceJoin, scoped to k = 1: the generators of conv(W n join) are
  // the W-slice points of colorful cross pairs, and the origin lies in
  // their convex hull iff their values bracket 0.
  if (q.k != 1)
    throw std::invalid_argument("origin_in_s_sigma: ConvSliceJoin is only supported for k = 1");
  size_t nm = q.q_minus.size();
  bool have = false;
  Rational lo, hi;
  std::pair<size_t, size_t> lo_pair, hi_pair, zero_pair;
  bool have_zero = false;
  for (size_t i = 0; i < nm; ++i) {
    for (size_t j = nm; j < q.size(); ++j) {
      if (q.color(i) == q.color(j)) continue;
      Rational v = (q.point(i)[0] + q.point(j)[0]) / Rational(2);
      if (!have || v < lo) { lo = v; lo_pair = {i, j}; }
      if (!have || v > hi) { hi = v; hi_pair = {i, j}; }
      if (v.is_zero() && !have_zero) { zero_pair = {i, j}; have_zero = true; }
      have = true;
    }
  }
  if (!have || lo > Rational(0) || hi < Rational(0)) return std::nullopt;
  if (have_zero) {
    return pack_witness(SVariant::ConvSliceJoin, {{zero_pair.first, Rational(1, 2)},
                                                  {zero_pair.second, Rational(1, 2)}});
  }
  // 0 = lam*lo + (1 - lam)*hi with lam = hi / (hi - lo).
  Rational lam = hi / (hi - lo);
  Rational mu = Rational(1) - lam;
  return pack_witness(SVariant::ConvSliceJoin,
                      {{lo_pair.first, lam / Rational(2)},
                       {lo_pair.second, lam / Rational(2)},
                       {hi_pair.first, mu / Rational(2)},
                       {hi_pair.second, mu / Rational(2)}});
}

ConsistencyViolation norigin_certificate(const SSigma& S, int r, const KOrdering& ordering,
                                         const ColoredFamily& family,
                                         const OrientedHyperplane& H) {
  // A colorful join witness is needed; for ConvSliceJoin the d = 2 cycle
  // lemma guarantees the Join variant also succeeds on the same Q_sigma.
  SSigma probe = S;
  if (S.variant == SVariant::ConvSliceJoin) probe.variant = SVariant::Join;
  auto w = origin_in_s_sigma(probe, r);
  if (!w) throw std::logic_error("norigin_certificate: no origin witness");

  const LiftedConfig& q = S.q;
  size_t k = q.k;
  RadonPair pair;
  Point x(k, Rational(0));
  for (size_t t = 0; t < w->subset.size(); ++t) {
    size_t i = w->subset[t];
    const Rational& wt = w->weights[t];
    if (wt.is_zero()) continue;
    Rational scaled = Rational(2) * wt;
    if (q.is_minus(i)) {
      pair.part1.push_back(q.source(i));
      pair.weights1.push_back(scaled);
    } else {
      pair.part2.push_back(q.source(i));
      pair.weights2.push_back(scaled);
      // x = 2 * sum of plus-side weights times phi-images
      for (size_t j = 0; j < k; ++j) x[j] += scaled * q.point(i)[j];
    }
  }
  pair.witness = x;

  // Re-substitute on the minus side: -(q^-) drops to the phi-image.
  Point check(k, Rational(0));
  Rational w1(0), w2(0);
  for (const auto& wt : pair.weights1) w1 += wt;
  for (const auto& wt : pair.weights2) w2 += wt;
  for (size_t t = 0; t < pair.part1.size(); ++t)
    for (size_t j = 0; j < k; ++j)
      check[j] += pair.weights1[t] * ordering.points[pair.part1[t]][j];
  if (w1 != Rational(1) || w2 != Rational(1) || check != x)
    throw std::logic_error("norigin_certificate: witness does not reproduce the Radon point");

  // The central hyperplane strictly separates the two member sets.
  for (size_t m : pair.part1)
    for (const auto& v : family.members[m].vertices)
      if (H.side(v) >= 0) throw std::logic_error("norigin_certificate: part1 not strictly below H");
  for (size_t m : pair.part2)
    for (const auto& v : family.members[m].vertices)
      if (H.side(v) <= 0) throw std::logic_error("norigin_certificate: part2 not strictly above H");

  auto sort_part = [](std::vector<size_t>& part, std::vector<Rational>& weights) {
    std::vector<size_t> order(part.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return part[a] < part[b]; });
    std::vector<size_t> p2;
    std::vector<Rational> w2v;
    for (size_t o : order) {
      p2.push_back(part[o]);
      w2v.push_back(weights[o]);
    }
    part = std::move(p2);
    weights = std::move(w2v);
  };
  sort_part(pair.part1, pair.weights1);
  sort_part(pair.part2, pair.weights2);
  return ConsistencyViolation{std::move(pair), H};
}

KernelPoint kernel_point(const SSigma& S, const std::vector<BoundarySelection>& selections,
                         int r) {
  if (S.variant != SVariant::SliceJoin)
    throw std::invalid_argument("kernel_point: requires the SliceJoin variant");
  const LiftedConfig& q = S.q;
  long k = static_cast<long>(q.k);
  if (r < 2 * (k + 1) * (k + 1) + 3)
    throw std::invalid_argument("kernel_point: r below the star-shapedness threshold");
  long side_need = (k + 1) * (k + 1) + 2;
  auto span = [&](bool minus) {
    std::set<int> cs;
    for (size_t i = 0; i < q.size(); ++i)
      if (q.is_minus(i) == minus) cs.insert(q.color(i));
    return static_cast<long>(cs.size());
  };
  if (span(true) < side_need || span(false) < side_need)
    throw std::invalid_argument("kernel_point: a side spans too few colors");
  if (selections.size() > q.k + 1)
    throw std::invalid_argument("kernel_point: too many boundary selections");

  std::set<int> used;
  for (const auto& sel : selections) {
    if (sel.X.size() > q.k + 1)
      throw std::invalid_argument("kernel_point: selection too large");
    std::set<int> own;
    std::vector<Point> pts;
    for (size_t i : sel.X) {
      if (i >= q.size()) throw std::invalid_argument("kernel_point: selection index out of range");
      if (!own.insert(q.color(i)).second)
        throw std::invalid_argument("kernel_point: selection not colorful");
      pts.push_back(q.point(i));
    }
    if (sel.x.size() != q.k + 1 || !sel.x[q.k].is_zero())
      throw std::invalid_argument("kernel_point: boundary point not in W");
    if (!std::holds_alternative<InHull>(point_in_hull(sel.x, pts)))
      throw std::invalid_argument("kernel_point: boundary point not in its hull");
    used.insert(own.begin(), own.end());
  }

  auto pick = [&](bool minus) {
    for (size_t i = 0; i < q.size(); ++i) {
      if (q.is_minus(i) != minus) continue;
      if (!used.count(q.color(i))) {
        used.insert(q.color(i));
        return i;
      }
    }
    throw std::logic_error("kernel_point: counting bound violated");
  };
  size_t p1 = pick(true);
  size_t p2 = pick(false);
  Point p = scale(Rational(1, 2), add(q.point(p1), q.point(p2)));

  // Visibility: p and every x_i lie in the convex W-slice of
  // conv(X_i u {p1, p2}), so the segment x_i p stays inside S(sigma).
  for (const auto& sel : selections) {
    std::vector<Point> pts;
    for (size_t i : sel.X) pts.push_back(q.point(i));
    pts.push_back(q.point(p1));
    pts.push_back(q.point(p2));
    if (!std::holds_alternative<InHull>(point_in_hull(p, pts)) ||
        !std::holds_alternative<InHull>(point_in_hull(sel.x, pts)))
      throw std::logic_error("kernel_point: visibility verification failed");
  }
  return KernelPoint{std::move(p), p1, p2};
}

}  // namespace ctv
