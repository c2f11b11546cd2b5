#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tilescope/polytope.hpp"

namespace tilescope {

/// Closed halfspace normal . x <= offset.
struct Halfspace {
  Vector normal;
  Rational offset;
};

std::vector<Halfspace> halfspaces_of(const Polytope& p);

/// Clips a convex planar polygon (vertices in cyclic order; a segment is
/// given as its two endpoints) against halfspaces. The result is the vertex
/// cycle of the intersection with duplicates removed; it may degenerate to a
/// segment, a point or nothing.
std::vector<Point> clip_convex(std::vector<Point> polygon, const std::vector<Halfspace>& hs);

/// Parametric clip of segment [a, b]; returns the surviving closed piece.
std::optional<std::pair<Point, Point>> clip_segment(const Point& a, const Point& b,
                                                    const std::vector<Halfspace>& hs);

/// Vertex set of P cap Q where the interiors are disjoint, so the
/// intersection lies on the boundary of P. Empty if they do not meet.
std::vector<Point> boundary_intersection_points(const Polytope& p, const Polytope& q);

/// Vertex cycle of facet f.
std::vector<Point> facet_polygon(const Polytope& p, int f);

}  // namespace tilescope
