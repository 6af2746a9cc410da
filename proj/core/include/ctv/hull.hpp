#pragma once

#include "ctv/hyperplane.hpp"
#include "ctv/rational.hpp"

#include <variant>
#include <vector>

namespace ctv {

struct InHull {
  std::vector<Rational> weights;  // nonnegative, sum to 1, reproduce q
};
struct Outside {
  OrientedHyperplane sep;  // q strictly positive, all of S on the negative side
};
using HullResult = std::variant<InHull, Outside>;

/// Exact convex hull membership with certificate either way.
HullResult point_in_hull(const Point& q, const std::vector<Point>& S);

struct HullsIntersect {
  Point point;
  std::vector<Rational> weights_a, weights_b;  // barycentric witnesses
};
struct HullsSeparated {
  OrientedHyperplane sep;  // hull(A) strictly negative, hull(B) strictly positive
};
using IntersectResult = std::variant<HullsIntersect, HullsSeparated>;

IntersectResult hulls_intersect(const std::vector<Point>& A, const std::vector<Point>& B);

/// Minimal affinely dependent subset with the signs of its (unique up to
/// scale) affine dependence. Positive and negative supports form the
/// minimal Radon pair.
struct Circuit {
  std::vector<size_t> support;  // ascending indices into P
  std::vector<int> signs;       // +1 / -1 per support entry; first is +1
};

/// All circuits of a point configuration, found by scanning subsets of
/// size at most dim+2. Sorted by support, lexicographically.
std::vector<Circuit> affine_circuits(const std::vector<Point>& P);

/// Common point of the two hulls of a circuit's Radon pair.
Point circuit_witness(const std::vector<Point>& P, const Circuit& c);

/// Deduplicated midpoints of all pairs of distinct points, sorted.
std::vector<Point> midpoints(const std::vector<Point>& V);

/// Visits every size-k index combination of {0..n-1} in lexicographic order.
template <typename F>
void for_each_combination(size_t n, size_t k, F&& f) {
  if (k > n) return;
  std::vector<size_t> c(k);
  for (size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    f(const_cast<const std::vector<size_t>&>(c));
    size_t i = k;
    while (i > 0) {
      --i;
      if (c[i] != i + n - k) {
        ++c[i];
        for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace ctv
