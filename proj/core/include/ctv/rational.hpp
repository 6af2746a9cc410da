#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ctv {

using Int = mpz_class;

/// Exact rational number, always kept in lowest terms with positive
/// denominator. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& n, const Int& d) : v_(n, d) { v_.canonicalize(); }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
  /// or zero denominator.
  static Rational parse(const std::string& s);

  const Int num() const { return v_.get_num(); }
  const Int den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  /// Serializes as "p/q", with "/q" omitted when the denominator is 1.
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

using Point = std::vector<Rational>;
using IntVec = std::vector<Int>;

Rational dot(const Point& a, const Point& b);
Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(const Rational& c, const Point& a);

Int dot(const IntVec& a, const IntVec& b);

/// Lexicographic comparison, used for deterministic tie breaking.
bool lex_less(const Point& a, const Point& b);

/// Clears denominators and divides by the content, so the result is an
/// integer vector with coprime entries. Direction (sign) is preserved.
IntVec to_primitive(const Point& p);

/// Same as to_primitive but additionally flips the sign so the first
/// nonzero entry is positive. Canonical key for undirected normals.
IntVec canonical_normal(const Point& p);
IntVec canonical_normal(const IntVec& p);

/// Divides by the content only (keeps orientation).
IntVec primitive_ray(const IntVec& p);

Point to_point(const IntVec& v);

bool is_zero(const IntVec& v);

}  // namespace ctv
