#pragma once

#include <vector>

#include "tilescope/vec.hpp"

namespace tilescope {

/// Lattice spanned by the columns of a nonsingular d x d rational matrix.
class Lattice {
 public:
  /// Throws DegenerateInput if the basis is singular or dimensions disagree.
  explicit Lattice(std::vector<Vector> basis);
  static Lattice integer(int dim);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& basis() const { return basis_; }
  const Vector& basis_vector(int i) const { return basis_[i]; }

  Rational det() const;
  Rational abs_det() const;

  /// Lattice point sum_i coeffs[i] * b_i.
  Vector point(const std::vector<Integer>& coeffs) const;
  /// Coordinates of v in the basis (not necessarily integral).
  std::vector<Rational> coordinates(const Vector& v) const;

  /// Column Hermite normal form: lower triangular with positive diagonal and
  /// 0 <= h[i][j] < h[i][i] for j < i. Equal lattices have equal forms.
  Lattice canonical() const;

  Lattice scaled(const Rational& s) const;

  friend bool operator==(const Lattice& a, const Lattice& b);
  /// Order on canonical forms, for deterministic sorting.
  friend bool operator<(const Lattice& a, const Lattice& b);

 private:
  std::vector<Vector> basis_;
};

/// Every lattice vector v such that the polytope hull(points) could contain
/// v: a superset obtained from the exact coefficient bounding box.
std::vector<Vector> lattice_points_near(const Lattice& lattice, const std::vector<Point>& points);

}  // namespace tilescope
