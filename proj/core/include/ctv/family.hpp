#pragma once

#include "ctv/hyperplane.hpp"
#include "ctv/ordering.hpp"
#include "ctv/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ctv {

/// V-representation convex polytope; vertices are stored deduplicated.
struct Polytope {
  std::vector<Point> vertices;

  static Polytope make(std::vector<Point> vertices);
};

/// Finite family of polytopes in R^d with an r-coloring. Members are kept
/// sorted by id so indices are deterministic.
struct ColoredFamily {
  size_t d = 0;
  std::vector<std::string> ids;
  std::vector<Polytope> members;
  Coloring coloring;

  size_t size() const { return members.size(); }
  void validate() const;  // throws std::invalid_argument on broken invariants

  /// All vertices of all members (with repeats across members).
  std::vector<Point> all_vertices() const;
  /// Member indices of one color class.
  std::vector<size_t> color_class(int color) const;
};

struct ProjInterval {
  Rational lo, hi;
  size_t argmin = 0, argmax = 0;  // vertex indices; lexicographic tie-break
};

/// Exact support interval of K in direction x (min/max of v.x).
ProjInterval projection_interval(const Polytope& K, const Point& x);

/// The t-interval for which the hyperplane (x, t) meets every member, or
/// nullopt when the projection intervals have empty intersection.
std::optional<std::pair<Rational, Rational>> transversal_in_direction(
    const std::vector<Polytope>& members, const Point& x);

}  // namespace ctv
