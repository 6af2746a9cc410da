#include "ctv/ordering.hpp"

#include "ctv/family.hpp"
#include "ctv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctv {

bool Coloring::valid() const {
  if (r <= 0) return false;
  std::vector<bool> seen(r + 1, false);
  for (int c : color) {
    if (c < 1 || c > r) return false;
    seen[c] = true;
  }
  for (int c = 1; c <= r; ++c)
    if (!seen[c]) return false;
  return true;
}

bool Coloring::is_colorful(const std::vector<size_t>& members) const {
  std::vector<int> used(r + 1, 0);
  for (size_t m : members) {
    if (m >= color.size()) return false;
    if (++used[color[m]] > 1) return false;
  }
  return true;
}

bool TableMatroid::is_independent(const std::vector<size_t>& members) const {
  std::vector<size_t> key = members;
  std::sort(key.begin(), key.end());
  return independent_.count(key) > 0;
}

bool KOrdering::valid(size_t num_members) const {
  if (points.size() != num_members) return false;
  for (const auto& p : points)
    if (p.size() != k) return false;
  if (k == 0) return !points.empty();
  // Bijection onto the image.
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return affine_rank(points) == k + 1;
}

std::vector<RadonPair> enumerate_colorful_circuits(const KOrdering& ordering,
                                                   const IndependenceOracle& oracle) {
  std::vector<RadonPair> out;
  auto circuits = affine_circuits(ordering.points);
  for (const auto& c : circuits) {
    if (!oracle.is_independent(c.support)) continue;
    RadonPair pair;
    for (size_t i = 0; i < c.support.size(); ++i) {
      (c.signs[i] > 0 ? pair.part1 : pair.part2).push_back(c.support[i]);
    }
    pair.witness = circuit_witness(ordering.points, c);
    std::vector<Point> p1, p2;
    for (size_t m : pair.part1) p1.push_back(ordering.points[m]);
    for (size_t m : pair.part2) p2.push_back(ordering.points[m]);
    auto h1 = point_in_hull(pair.witness, p1);
    auto h2 = point_in_hull(pair.witness, p2);
    auto* w1 = std::get_if<InHull>(&h1);
    auto* w2 = std::get_if<InHull>(&h2);
    if (!w1 || !w2) throw std::logic_error("circuit witness failed hull re-check");
    pair.weights1 = w1->weights;
    pair.weights2 = w2->weights;
    out.push_back(std::move(pair));
  }
  return out;
}

namespace {

std::vector<Point> member_vertices(const ColoredFamily& family,
                                   const std::vector<size_t>& members) {
  std::vector<Point> out;
  for (size_t m : members)
    for (const auto& v : family.members[m].vertices) out.push_back(v);
  return out;
}

}  // namespace

ConsistencyResult is_rainbow_consistent(const ColoredFamily& family, const KOrdering& ordering,
                                        const IndependenceOracle& oracle) {
  family.validate();
  if (ordering.points.size() != family.size())
    throw std::invalid_argument("ordering does not cover the family");
  auto pairs = enumerate_colorful_circuits(ordering, oracle);
  for (auto& pair : pairs) {  // circuits arrive sorted by support
    auto res = hulls_intersect(member_vertices(family, pair.part1),
                               member_vertices(family, pair.part2));
    if (auto* sep = std::get_if<HullsSeparated>(&res)) {
      return ConsistencyViolation{std::move(pair), std::move(sep->sep)};
    }
  }
  return Consistent{};
}

ConsistencyResult is_consistent_ordering(const ColoredFamily& family, const KOrdering& ordering) {
  FreeMatroid oracle(static_cast<int>(family.size()));
  return is_rainbow_consistent(family, ordering, oracle);
}

RBound r_bound(long d, long k) {
  if (d <= k || k < 0) throw std::invalid_argument("r_bound requires d > k >= 0");
  RBound out;
  out.lower = k + 2;

  // Upper bounds propagate upward in d via r(d, k) >= r(d+1, k). Known
  // exact values: r(1,0) = 2, r(2,1) = 3, r(4,2) = 4. r(3,2) has no
  // established upper bound.
  std::optional<long> best;
  auto offer = [&best](long v) {
    if (!best || v < *best) best = v;
  };
  for (long d0 = k + 1; d0 <= d; ++d0) {
    if ((d0 == 1 && k == 0) || (d0 == 2 && k == 1)) offer(k + 2);
    else if (d0 == 4 && k == 2) offer(4);
    else if (d0 == k + 1 && k >= 3) offer(2 * (k + 1) * (k + 1) + 3);
    else if (d0 == k + 2 && k >= 3) offer((k + 2) * (k + 1) / 2 + 1);
  }
  out.upper = best;
  out.exact = best.has_value() && *best == out.lower;
  return out;
}

}  // namespace ctv
