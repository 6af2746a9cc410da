#include "ctv/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctv {

Polytope Polytope::make(std::vector<Point> vertices) {
  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw std::invalid_argument("polytope needs at least one vertex");
  return Polytope{std::move(vertices)};
}

void ColoredFamily::validate() const {
  if (ids.size() != members.size() || coloring.color.size() != members.size())
    throw std::invalid_argument("family: ids/members/coloring size mismatch");
  if (!std::is_sorted(ids.begin(), ids.end()))
    throw std::invalid_argument("family: ids must be sorted");
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("family: duplicate member id");
  if (!coloring.valid()) throw std::invalid_argument("family: invalid coloring");
  for (const auto& m : members) {
    if (m.vertices.empty()) throw std::invalid_argument("family: empty member");
    for (const auto& v : m.vertices)
      if (v.size() != d) throw std::invalid_argument("family: vertex dimension mismatch");
  }
}

std::vector<Point> ColoredFamily::all_vertices() const {
  std::vector<Point> out;
  for (const auto& m : members)
    for (const auto& v : m.vertices) out.push_back(v);
  return out;
}

std::vector<size_t> ColoredFamily::color_class(int color) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < members.size(); ++i)
    if (coloring.color[i] == color) out.push_back(i);
  return out;
}

ProjInterval projection_interval(const Polytope& K, const Point& x) {
  bool zero = true;
  for (const auto& c : x)
    if (!c.is_zero()) zero = false;
  if (zero) throw std::invalid_argument("projection_interval: zero direction");

  ProjInterval out;
  out.lo = out.hi = dot(K.vertices[0], x);
  for (size_t i = 1; i < K.vertices.size(); ++i) {
    Rational v = dot(K.vertices[i], x);
    if (v < out.lo) { out.lo = v; out.argmin = i; }
    if (v > out.hi) { out.hi = v; out.argmax = i; }
    // Vertices are stored sorted, so the first attaining vertex is the
    // lexicographically smallest.
  }
  return out;
}

std::optional<std::pair<Rational, Rational>> transversal_in_direction(
    const std::vector<Polytope>& members, const Point& x) {
  if (members.empty()) return std::make_pair(Rational(0), Rational(0));
  auto first = projection_interval(members[0], x);
  Rational lo = first.lo, hi = first.hi;
  for (size_t i = 1; i < members.size(); ++i) {
    auto iv = projection_interval(members[i], x);
    if (iv.lo > lo) lo = iv.lo;
    if (iv.hi < hi) hi = iv.hi;
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace ctv
