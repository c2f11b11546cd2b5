#include "tilescope/lattice.hpp"

#include <algorithm>

#include "tilescope/errors.hpp"

namespace tilescope {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;  // [row][col]

Rational matrix_det(const std::vector<Vector>& cols) {
  if (cols.size() == 2) return cross2(cols[0], cols[1]);
  return det3(cols[0], cols[1], cols[2]);
}

// Column operations only; lower-triangular Hermite normal form.
void hermite_columns(IntMatrix& h) {
  const int d = static_cast<int>(h.size());
  auto col_combine = [&](int i, int j, const Integer& a, const Integer& b, const Integer& c, const Integer& e) {
    // (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + e*col_j)
    for (int r = 0; r < d; ++r) {
      Integer ni = a * h[r][i] + b * h[r][j];
      Integer nj = c * h[r][i] + e * h[r][j];
      h[r][i] = ni;
      h[r][j] = nj;
    }
  };
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (h[i][j] == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h[i][i].get_mpz_t(), h[i][j].get_mpz_t());
      Integer a = h[i][i] / g, b = h[i][j] / g;
      col_combine(i, j, s, t, -b, a);
    }
    if (h[i][i] < 0)
      for (int r = 0; r < d; ++r) h[r][i] = -h[r][i];
    for (int j = 0; j < i; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][j].get_mpz_t(), h[i][i].get_mpz_t());
      if (q == 0) continue;
      for (int r = 0; r < d; ++r) h[r][j] -= q * h[r][i];
    }
  }
}

}  // namespace

Lattice::Lattice(std::vector<Vector> basis) : basis_(std::move(basis)) {
  const int d = static_cast<int>(basis_.size());
  if (d != 2 && d != 3) throw DegenerateInput("lattice: dimension must be 2 or 3");
  for (const auto& b : basis_)
    if (b.dim() != d) throw DegenerateInput("lattice: basis vectors must have dimension equal to their count");
  if (matrix_det(basis_) == 0) throw DegenerateInput("lattice: singular basis");
}

Lattice Lattice::integer(int dim) {
  std::vector<Vector> b;
  for (int i = 0; i < dim; ++i) {
    Vector e(dim);
    e[i] = 1;
    b.push_back(e);
  }
  return Lattice(std::move(b));
}

Rational Lattice::det() const { return matrix_det(basis_); }
Rational Lattice::abs_det() const { return abs(det()); }

Vector Lattice::point(const std::vector<Integer>& coeffs) const {
  Vector v(dim());
  for (int i = 0; i < dim(); ++i) v += Rational(coeffs[i]) * basis_[i];
  return v;
}

std::vector<Rational> Lattice::coordinates(const Vector& v) const {
  // Cramer's rule.
  const Rational d = det();
  std::vector<Rational> t(dim());
  for (int i = 0; i < dim(); ++i) {
    auto cols = basis_;
    cols[i] = v;
    t[i] = matrix_det(cols) / d;
  }
  return t;
}

Lattice Lattice::canonical() const {
  const int d = dim();
  Integer den = 1;
  for (const auto& b : basis_)
    for (int r = 0; r < d; ++r) den = lcm(den, b[r].get_den());
  IntMatrix h(d, std::vector<Integer>(d));
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) h[r][c] = basis_[c][r].get_num() * (den / basis_[c][r].get_den());
  hermite_columns(h);
  std::vector<Vector> cols(d, Vector(d));
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) cols[c][r] = make_rational(h[r][c], den);
  return Lattice(std::move(cols));
}

Lattice Lattice::scaled(const Rational& s) const {
  auto b = basis_;
  for (auto& v : b) v *= s;
  return Lattice(std::move(b));
}

bool operator==(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) return false;
  return a.canonical().basis_ == b.canonical().basis_;
}

bool operator<(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.canonical().basis_ < b.canonical().basis_;
}

std::vector<Vector> lattice_points_near(const Lattice& lattice, const std::vector<Point>& points) {
  const int d = lattice.dim();
  std::vector<Integer> lo(d), hi(d);
  bool first = true;
  for (const auto& p : points) {
    auto t = lattice.coordinates(p);
    for (int i = 0; i < d; ++i) {
      Integer f = floor_of(t[i]), c = ceil_of(t[i]);
      if (first || f < lo[i]) lo[i] = f;
      if (first || c > hi[i]) hi[i] = c;
    }
    first = false;
  }
  std::vector<Vector> out;
  std::vector<Integer> k = lo;
  while (true) {
    out.push_back(lattice.point(k));
    int i = 0;
    for (; i < d; ++i) {
      if (k[i] < hi[i]) {
        ++k[i];
        break;
      }
      k[i] = lo[i];
    }
    if (i == d) break;
  }
  return out;
}

}  // namespace tilescope
