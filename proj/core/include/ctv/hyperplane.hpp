#pragma once

#include "ctv/rational.hpp"

namespace ctv {

/// Oriented hyperplane { v : v . normal = offset }. Points with
/// v . normal < offset are on the negative side, > offset on the positive
/// side. (normal, offset) and (-normal, -offset) describe the same point
/// set with reversed orientation.
struct OrientedHyperplane {
  Point normal;
  Rational offset;

  OrientedHyperplane reversed() const {
    OrientedHyperplane h;
    h.normal.reserve(normal.size());
    for (const auto& c : normal) h.normal.push_back(-c);
    h.offset = -offset;
    return h;
  }

  /// Sign of the side v lies on: -1, 0, +1.
  int side(const Point& v) const { return (dot(v, normal) - offset).sign(); }
};

}  // namespace ctv
