#include "tilescope/clip.hpp"

#include <algorithm>

namespace tilescope {

std::vector<Halfspace> halfspaces_of(const Polytope& p) {
  std::vector<Halfspace> hs;
  for (const auto& f : p.facets()) hs.push_back({f.normal, f.offset});
  return hs;
}

std::vector<Point> clip_convex(std::vector<Point> poly, const std::vector<Halfspace>& hs) {
  for (const auto& h : hs) {
    if (poly.empty()) break;
    std::vector<Point> next;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = poly[i];
      const Point& b = poly[(i + 1) % n];
      Rational sa = h.offset - dot(h.normal, a);
      Rational sb = h.offset - dot(h.normal, b);
      if (sa >= 0) next.push_back(a);
      if ((sa > 0 && sb < 0) || (sa < 0 && sb > 0)) {
        Rational t = sa / (sa - sb);
        next.push_back(a + t * (b - a));
      }
    }
    // Drop consecutive duplicates (including wrap-around).
    std::vector<Point> dedup;
    for (auto& p : next)
      if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(std::move(p));
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    poly = std::move(dedup);
  }
  // A 2-vertex "polygon" traverses its segment twice; keep unique points.
  std::vector<Point> uniq;
  for (const auto& p : poly)
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  return uniq;
}

std::optional<std::pair<Point, Point>> clip_segment(const Point& a, const Point& b,
                                                    const std::vector<Halfspace>& hs) {
  Rational t0 = 0, t1 = 1;
  const Vec d = b - a;
  for (const auto& h : hs) {
    Rational na = dot(h.normal, a);
    Rational nd = dot(h.normal, d);
    Rational rhs = h.offset - na;  // need t * nd <= rhs
    if (nd == 0) {
      if (rhs < 0) return std::nullopt;
      continue;
    }
    Rational t = rhs / nd;
    if (nd > 0) {
      if (t < t1) t1 = t;
    } else {
      if (t > t0) t0 = t;
    }
    if (t0 > t1) return std::nullopt;
  }
  return std::make_pair(a + t0 * d, a + t1 * d);
}

std::vector<Point> facet_polygon(const Polytope& p, int f) {
  std::vector<Point> pts;
  for (int v : p.facet(f).cycle) pts.push_back(p.vertex(v));
  return pts;
}

std::vector<Point> boundary_intersection_points(const Polytope& p, const Polytope& q) {
  const auto hq = halfspaces_of(q);
  std::vector<Point> out;
  for (int f = 0; f < p.num_facets(); ++f) {
    for (auto& pt : clip_convex(facet_polygon(p, f), hq))
      if (std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(std::move(pt));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tilescope
