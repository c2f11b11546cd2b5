#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "tilescope/rational.hpp"

namespace tilescope {

/// Exact coordinate tuple of dimension 2 or 3. Points and displacement
/// vectors share the representation; Point - Point yields a Vector and
/// Point + Vector a Point.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim) : dim_(dim) { assert(dim == 2 || dim == 3); }
  Vec(std::initializer_list<Rational> coords);
  static Vec zero(int dim) { return Vec(dim); }

  int dim() const { return dim_; }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rational& s);

  bool is_zero() const;

  friend bool operator==(const Vec& a, const Vec& b);
  /// Lexicographic order on coordinates.
  friend bool operator<(const Vec& a, const Vec& b);

 private:
  int dim_ = 0;
  std::array<Rational, 3> c_{};
};

using Point = Vec;
using Vector = Vec;

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, Vec a);
Vec operator*(Vec a, const Rational& s);

Rational dot(const Vec& a, const Vec& b);
/// z-component of the 2D cross product.
Rational cross2(const Vec& a, const Vec& b);
Vec cross3(const Vec& a, const Vec& b);
Rational det3(const Vec& a, const Vec& b, const Vec& c);

/// Scales by a positive rational so the entries become coprime integers.
/// Direction (and sign) is preserved. The zero vector is returned unchanged.
Vec primitive_integer(const Vec& v);

/// Flips sign so the first nonzero coordinate is positive.
Vec sign_normalized(const Vec& v);

bool parallel(const Vec& a, const Vec& b);

/// Exact comparator ordering 2D directions by angle in [0, 2*pi) from +x.
bool angle_less(const Vec& a, const Vec& b);

double to_double(const Rational& r);
std::array<double, 3> to_doubles(const Vec& v);

std::string to_string(const Vec& v);

}  // namespace tilescope
