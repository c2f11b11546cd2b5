#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tilescope/polytope.hpp"

namespace tilescope {

struct SymmetryReport {
  std::optional<Point> body_center;
  std::vector<std::optional<Point>> facet_centers;
  bool is_cs_with_cs_facets = false;
};

/// Center c with 2c - V = V, if one exists. The candidate is the vertex
/// centroid, verified by exact pairing.
std::optional<Point> symmetry_center(const Polytope& p);

/// Same test for an arbitrary finite point set (used per facet).
std::optional<Point> point_set_center(std::span<const Point> points);

SymmetryReport cs_facets_report(const Polytope& p);

}  // namespace tilescope
