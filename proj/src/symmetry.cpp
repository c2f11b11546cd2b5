#include "tilescope/symmetry.hpp"

#include <algorithm>

namespace tilescope {

std::optional<Point> point_set_center(std::span<const Point> points) {
  if (points.empty()) return std::nullopt;
  Point c = Vec::zero(points.front().dim());
  for (const auto& v : points) c += v;
  c *= Rational(1, static_cast<unsigned long>(points.size()));
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& v : sorted) {
    Point mirror = Rational(2) * c - v;
    if (!std::binary_search(sorted.begin(), sorted.end(), mirror)) return std::nullopt;
  }
  return c;
}

std::optional<Point> symmetry_center(const Polytope& p) { return point_set_center(p.vertices()); }

SymmetryReport cs_facets_report(const Polytope& p) {
  SymmetryReport r;
  r.body_center = symmetry_center(p);
  bool all = true;
  for (const auto& f : p.facets()) {
    std::vector<Point> pts;
    for (int v : f.cycle) pts.push_back(p.vertex(v));
    // Point reflection of a planar set stays in its plane, so pairing in
    // ambient coordinates is the same test as pairing in facet coordinates.
    r.facet_centers.push_back(point_set_center(pts));
    all = all && r.facet_centers.back().has_value();
  }
  r.is_cs_with_cs_facets = r.body_center.has_value() && all;
  return r;
}

}  // namespace tilescope
