#include "tilescope/vec.hpp"

namespace tilescope {

Vec::Vec(std::initializer_list<Rational> coords) : dim_(static_cast<int>(coords.size())) {
  assert(dim_ == 2 || dim_ == 3);
  int i = 0;
  for (const auto& c : coords) c_[i++] = c;
}

Vec& Vec::operator+=(const Vec& o) {
  assert(dim_ == o.dim_);
  for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  assert(dim_ == o.dim_);
  for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(const Rational& s) {
  for (int i = 0; i < dim_; ++i) c_[i] *= s;
  return *this;
}

bool Vec::is_zero() const {
  for (int i = 0; i < dim_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool operator==(const Vec& a, const Vec& b) {
  if (a.dim_ != b.dim_) return false;
  for (int i = 0; i < a.dim_; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

bool operator<(const Vec& a, const Vec& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  for (int i = 0; i < a.dim_; ++i) {
    if (a.c_[i] < b.c_[i]) return true;
    if (b.c_[i] < a.c_[i]) return false;
  }
  return false;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator-(const Vec& a) { return Rational(-1) * a; }
Vec operator*(const Rational& s, Vec a) { return a *= s; }
Vec operator*(Vec a, const Rational& s) { return a *= s; }

Rational dot(const Vec& a, const Vec& b) {
  assert(a.dim() == b.dim());
  Rational s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

Vec cross3(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational det3(const Vec& a, const Vec& b, const Vec& c) { return dot(a, cross3(b, c)); }

Vec primitive_integer(const Vec& v) {
  if (v.is_zero()) return v;
  Integer l = 1;
  for (int i = 0; i < v.dim(); ++i) l = lcm(l, v[i].get_den());
  Integer g = 0;
  std::array<Integer, 3> ints;
  for (int i = 0; i < v.dim(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    g = gcd(g, ints[i]);
  }
  Vec out(v.dim());
  for (int i = 0; i < v.dim(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

Vec sign_normalized(const Vec& v) {
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] != 0) return v[i] > 0 ? v : -v;
  }
  return v;
}

bool parallel(const Vec& a, const Vec& b) {
  if (a.dim() == 2) return cross2(a, b) == 0;
  return cross3(a, b).is_zero();
}

namespace {
int half_plane(const Vec& a) { return (a[1] < 0 || (a[1] == 0 && a[0] < 0)) ? 1 : 0; }
}  // namespace

bool angle_less(const Vec& a, const Vec& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

double to_double(const Rational& r) { return r.get_d(); }

std::array<double, 3> to_doubles(const Vec& v) {
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int i = 0; i < v.dim(); ++i) out[i] = v[i].get_d();
  return out;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace tilescope
