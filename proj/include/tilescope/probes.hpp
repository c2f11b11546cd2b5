#pragma once

#include <optional>
#include <vector>

#include "tilescope/belts.hpp"
#include "tilescope/multiplicity.hpp"

namespace tilescope {

/// Classification of the translates through a boundary point q of P.
/// Vectors are listed in lexicographic order.
struct BoundaryClassification {
  std::vector<Vector> all;            // q in P + x
  std::vector<Vector> interior_hits;  // q in int(P + x)
  std::vector<Vector> boundary_hits;  // q on the boundary of P + x
  std::vector<Vector> touching;       // boundary hits with int(P) cap (P + x) empty
};

/// Requires the origin in X.
BoundaryClassification boundary_sets(const Polytope& p, const TranslateSet& x, const Point& q);

/// Part of a belt facet on one side of S(G, q).
struct FacetFragment {
  int facet = -1;
  std::vector<Point> points;  // vertex cycle of the fragment
};

enum class Side { Plus, Minus };

/// Local picture of the belt B_P(G) at a point q on one of its facets.
///
/// S(G, q) is the line through q parallel to G in 3D and the point q itself
/// in 2D. Orientation: walking counterclockwise around the belt (viewed from
/// the tip of the belt axis in 3D), the minus part is reached before S(G, q)
/// and the plus part after it.
struct BeltLocalGeometry {
  Point q;
  std::optional<Vector> direction;  // belt axis; unset in 2D
  int belt = -1;                    // index into belts_of(P)
  std::vector<FacetFragment> plus, minus;
  /// Translates of G bounding the plus / minus parts away from q.
  std::optional<int> e_plus, e_minus;
  /// Display only. Decisions use angle_is_straight.
  double angle_radians = 0.0;
  /// Exact: true iff q lies on no translate of G.
  bool angle_is_straight = false;

  /// Exact membership in S(G, q).
  bool in_s(const Point& p) const;
  const std::vector<FacetFragment>& side(Side s) const { return s == Side::Plus ? plus : minus; }
};

/// Throws PointNotOnBelt if q is on no facet of the belt containing subfacet g.
BeltLocalGeometry belt_local_geometry(const Polytope& p, int subfacet, const Point& q);

struct RefinedSets {
  std::vector<Vector> s_contact;  // touching x with P cap (P + x) inside S(G, q)
  std::vector<Vector> side;       // touching x meeting the chosen side off S(G, q)
};

RefinedSets refined_boundary_sets(const Polytope& p, const TranslateSet& x, int subfacet, const Point& q,
                                  Side orientation);

/// Finds x_j != designated in X with q on the boundary of P + x_j and the
/// interiors of P + designated and P + x_j disjoint; the partner nearest to
/// the designated translate is returned (ties broken lexicographically).
///
/// Before searching, the local coverage of X around q is checked: in every
/// open sector around q the count of covering translates must be the same
/// positive number. Otherwise the window cannot be a neighbourhood of a
/// multiple tiling and PrewindowTooSmall is thrown.
std::optional<Vector> lemma2_probe(const Polytope& p, const TranslateSet& x, const Point& q,
                                   const std::optional<Vector>& designated = std::nullopt);

/// Coverage counts of X in the open sectors around q (one per sampled
/// generic direction). Exact in 2D; a fixed direction grid in 3D.
std::vector<long> local_multiplicities(const Polytope& p, const TranslateSet& x, const Point& q);

}  // namespace tilescope
