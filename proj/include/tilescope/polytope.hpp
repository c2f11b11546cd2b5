#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tilescope/vec.hpp"

namespace tilescope {

/// Outward facet inequality normal . x <= offset. The normal is a primitive
/// integer vector, so parallel facets compare equal up to sign exactly.
struct Facet {
  Vector normal;
  Rational offset;
  /// Vertex indices in cyclic order: for d=2 the edge's start and end in
  /// counterclockwise boundary order; for d=3 counterclockwise as seen from
  /// outside the polytope.
  std::vector<int> cycle;
};

/// Identifies one face of a polytope by dimension and index into
/// FaceLattice::faces[dim].
struct FaceRef {
  int dim = -1;
  int index = -1;
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

struct FaceLattice {
  /// faces[k] lists the k-faces (k = 0..d-1) as sorted vertex-index sets.
  /// faces[0][i] == {i}; faces[d-1][j] belongs to facet j.
  std::vector<std::vector<std::vector<int>>> faces;
  /// For each subfacet (faces[d-2]) the two facets containing it.
  std::vector<std::array<int, 2>> subfacet_facets;

  int count(int k) const { return static_cast<int>(faces.at(k).size()); }
};

/// Full-dimensional convex polytope in dimension 2 or 3, kept in both V- and
/// H-representation together with the complete face lattice. Immutable.
///
/// Vertices are sorted lexicographically. In 2D, facets (edges) are listed
/// counterclockwise starting with the edge leaving vertex 0; in 3D, facets are
/// sorted by outward normal and edges by their vertex pair.
class Polytope {
 public:
  int dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int i) const { return vertices_[i]; }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(int i) const { return facets_[i]; }
  const FaceLattice& faces() const { return lattice_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_facets() const { return static_cast<int>(facets_.size()); }
  int num_subfacets() const { return lattice_.count(dim_ - 2); }

  /// Vertex indices of subfacet i (a single vertex in 2D, an edge in 3D).
  const std::vector<int>& subfacet(int i) const { return lattice_.faces[dim_ - 2][i]; }

  /// Counterclockwise boundary cycle (2D only).
  std::vector<int> boundary_cycle() const;

  /// Signed slack offset - normal . p of facet f (0 on the facet, > 0 inside).
  Rational slack(int f, const Point& p) const;

  Polytope translated(const Vector& t) const;
  Polytope scaled(const Rational& s) const;
  Polytope reflected() const;

  friend Polytope convex_hull(std::span<const Point> points);

 private:
  int dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  FaceLattice lattice_;
};

/// Throws DegenerateInput unless the points affinely span their dimension.
Polytope convex_hull(std::span<const Point> points);
inline Polytope convex_hull(const std::vector<Point>& points) {
  return convex_hull(std::span<const Point>(points));
}

const FaceLattice& face_lattice(const Polytope& p);

enum class LocationTag { Interior, Boundary, Exterior };

struct Location {
  LocationTag tag = LocationTag::Exterior;
  /// Minimal face containing the point (Boundary only).
  std::optional<FaceRef> face;

  bool interior() const { return tag == LocationTag::Interior; }
  bool boundary() const { return tag == LocationTag::Boundary; }
  bool exterior() const { return tag == LocationTag::Exterior; }
};

Location locate_point(const Polytope& p, const Point& q);

/// Indices of facets whose hyperplane contains q (q need not lie in p).
std::vector<int> tight_facets(const Polytope& p, const Point& q);

bool contains(const Polytope& p, const Point& q);
bool contains_in_interior(const Polytope& p, const Point& q);

Rational volume(const Polytope& p);

/// Vertex average; an interior point of any full-dimensional polytope.
Point vertex_centroid(const Polytope& p);

/// True iff the open interiors are disjoint. Decided by searching for a weakly
/// separating hyperplane among facet normals of both polytopes and (in 3D)
/// cross products of their edge directions.
bool interiors_disjoint(const Polytope& a, const Polytope& b);

}  // namespace tilescope
