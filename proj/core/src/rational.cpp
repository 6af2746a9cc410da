#include "ctv/rational.hpp"

#include <stdexcept>

namespace ctv {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(s));
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (sgn(d) == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point add(const Point& a, const Point& b) {
  Point r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  Point r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Point scale(const Rational& c, const Point& a) {
  Point r(a);
  for (auto& x : r) x *= c;
  return r;
}

bool lex_less(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

IntVec to_primitive(const Point& p) {
  Int l = 1;
  for (const auto& x : p) {
    Int d = x.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IntVec v(p.size());
  for (size_t i = 0; i < p.size(); ++i) v[i] = p[i].num() * (l / p[i].den());
  return primitive_ray(v);
}

IntVec primitive_ray(const IntVec& p) {
  Int g = 0;
  for (const auto& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (sgn(g) == 0) return p;
  IntVec v(p.size());
  for (size_t i = 0; i < p.size(); ++i) v[i] = p[i] / g;
  return v;
}

IntVec canonical_normal(const IntVec& p) {
  IntVec v = primitive_ray(p);
  for (const auto& x : v) {
    int s = sgn(x);
    if (s > 0) break;
    if (s < 0) {
      for (auto& y : v) y = -y;
      break;
    }
  }
  return v;
}

IntVec canonical_normal(const Point& p) { return canonical_normal(to_primitive(p)); }

Point to_point(const IntVec& v) {
  Point p(v.size());
  for (size_t i = 0; i < v.size(); ++i) p[i] = Rational(v[i]);
  return p;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace ctv
