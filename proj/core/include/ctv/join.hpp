#pragma once

#include "ctv/family.hpp"
#include "ctv/hyperplane.hpp"
#include "ctv/ordering.hpp"
#include "ctv/rational.hpp"

#include <optional>
#include <vector>

namespace ctv {

/// Lifted configuration Q = Q_minus u Q_plus in R^{k+1}: images of the
/// members below / above the central hyperplane, with last coordinate -1
/// resp. +1. Points are addressed by a single global index, minus side
/// first.
struct LiftedConfig {
  size_t k = 0;
  std::vector<Point> q_minus, q_plus;
  std::vector<size_t> src_minus, src_plus;  // member indices
  std::vector<int> col_minus, col_plus;     // member colors

  size_t size() const { return q_minus.size() + q_plus.size(); }
  bool is_minus(size_t i) const { return i < q_minus.size(); }
  const Point& point(size_t i) const {
    return is_minus(i) ? q_minus[i] : q_plus[i - q_minus.size()];
  }
  int color(size_t i) const {
    return is_minus(i) ? col_minus[i] : col_plus[i - q_minus.size()];
  }
  size_t source(size_t i) const {
    return is_minus(i) ? src_minus[i] : src_plus[i - q_minus.size()];
  }
};

/// Q_minus = { -(phi(m), 1) : m in f_minus }, Q_plus = { (phi(m), 1) }.
LiftedConfig lift(const KOrdering& ordering, const Coloring& coloring,
                  const std::vector<size_t>& f_minus, const std::vector<size_t>& f_plus);

enum class SVariant { Join, SliceJoin, ConvSliceJoin };

/// One of the three S(sigma) constructions over a lifted configuration.
/// W is always the hyperplane {last coordinate = 0}.
struct SSigma {
  SVariant variant = SVariant::Join;
  size_t m = 0;  // ambient dimension of S: k+1 for Join, k for the slices
  LiftedConfig q;

  static SSigma make(SVariant v, LiftedConfig q);
};

struct JoinWitness {
  std::vector<size_t> subset;     // ascending point indices, colorful
  std::vector<Rational> weights;  // positive, sum to 1, reproduce the origin
};

/// 0 in join(Q) for an r-colored point set in R^{k+1}, decided by
/// enumerating colorful subsets of size <= k+2 (Caratheodory bound) in
/// lexicographic order. Every color class must be non-empty.
std::optional<JoinWitness> origin_in_join(const std::vector<Point>& Q,
                                          const std::vector<int>& colors, int r, size_t k);

/// Witness that the origin lies in S(sigma). For the Join and SliceJoin
/// variants the subset is colorful; for ConvSliceJoin it collects the
/// endpoints of at most two colorful cross pairs whose W-slice points
/// bracket the origin.
struct SWitness {
  SVariant variant = SVariant::Join;
  std::vector<size_t> subset;
  std::vector<Rational> weights;
};

std::optional<SWitness> origin_in_s_sigma(const SSigma& S, int r);

/// Turns an origin witness into a rainbow-consistency violation: the
/// witness splits into a colorful Radon pair of phi-images whose member
/// polytopes are strictly separated by the central hyperplane H.
ConsistencyViolation norigin_certificate(const SSigma& S, int r, const KOrdering& ordering,
                                         const ColoredFamily& family,
                                         const OrientedHyperplane& H);

/// Boundary point of S(sigma) presented as x in W intersect conv(X) for a
/// colorful X of at most k+1 points (global indices).
struct BoundarySelection {
  Point x;  // in R^{k+1}, last coordinate 0
  std::vector<size_t> X;
};

struct KernelPoint {
  Point p;            // in W (last coordinate 0)
  size_t p1 = 0, p2 = 0;  // chosen points on the minus / plus side
};

/// Constructive star-shapedness: greedily picks p1 in Q_minus and p2 in
/// Q_plus with colors unused by the selections, and returns their W-slice
/// midpoint p, re-verifying that p and every x_i lie in
/// W intersect conv(X_i u {p1, p2}).
KernelPoint kernel_point(const SSigma& S, const std::vector<BoundarySelection>& selections,
                         int r);

}  // namespace ctv
