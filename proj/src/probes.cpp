#include "tilescope/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tilescope/clip.hpp"
#include "tilescope/errors.hpp"

namespace tilescope {

BoundaryClassification boundary_sets(const Polytope& p, const TranslateSet& x, const Point& q) {
  if (!x.contains(Vec::zero(p.dim()))) throw PreconditionError("boundary_sets: X must contain the origin");
  BoundaryClassification c;
  for (const auto& e : x.entries()) {
    auto loc = locate_point(p, q - e.vector);
    if (loc.exterior()) continue;
    c.all.push_back(e.vector);
    if (loc.interior()) {
      c.interior_hits.push_back(e.vector);
      continue;
    }
    c.boundary_hits.push_back(e.vector);
    if (interiors_disjoint(p, p.translated(e.vector))) c.touching.push_back(e.vector);
  }
  for (auto* v : {&c.all, &c.interior_hits, &c.boundary_hits, &c.touching}) std::sort(v->begin(), v->end());
  return c;
}

bool BeltLocalGeometry::in_s(const Point& p) const {
  if (!direction) return p == q;
  return cross3(p - q, *direction).is_zero();
}

namespace {

// Counterclockwise travel direction along a belt facet with outward normal n.
Vec travel_direction(const Vec& n, const std::optional<Vector>& axis) {
  if (!axis) return Vec{-n[1], n[0]};
  return cross3(*axis, n);
}

bool subfacet_contains(const Polytope& p, int s, const Point& q) {
  const auto& vs = p.subfacet(s);
  if (p.dim() == 2) return p.vertex(vs[0]) == q;
  const Point& a = p.vertex(vs[0]);
  const Point& b = p.vertex(vs[1]);
  if (!cross3(b - a, q - a).is_zero()) return false;
  Rational t = dot(q - a, b - a);
  return t >= 0 && t <= dot(b - a, b - a);
}

bool subfacet_in_facet(const Polytope& p, int s, int f) {
  const auto& fv = p.faces().faces[p.dim() - 1][f];
  for (int v : p.subfacet(s))
    if (!std::binary_search(fv.begin(), fv.end(), v)) return false;
  return true;
}

Point subfacet_point(const Polytope& p, int s) { return p.vertex(p.subfacet(s)[0]); }

double angle_between(const Vec& a, const Vec& b) {
  auto x = to_doubles(a), y = to_doubles(b);
  double d = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
  double na = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  double nb = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
  return std::acos(std::clamp(d / (na * nb), -1.0, 1.0));
}

}  // namespace

BeltLocalGeometry belt_local_geometry(const Polytope& p, int subfacet, const Point& q) {
  const auto belts = belts_of(p);
  const int bi = belt_index_of(belts, subfacet);
  if (bi < 0) throw PreconditionError("belt_local_geometry: unknown subfacet " + std::to_string(subfacet));
  const Belt& belt = belts[bi];
  const int m = belt.size();

  BeltLocalGeometry g;
  g.q = q;
  g.direction = belt.axis;
  g.belt = bi;

  std::vector<int> on;  // positions in the belt cycle of facets containing q
  if (contains(p, q)) {
    for (int i = 0; i < m; ++i)
      if (p.slack(belt.facet_ids[i], q) == 0) on.push_back(i);
  }
  if (on.empty()) throw PointNotOnBelt("point " + to_string(q) + " lies on no facet of the belt");

  auto members_in = [&](int f) {
    std::vector<int> out;
    for (int s : belt.members)
      if (subfacet_in_facet(p, s, f)) out.push_back(s);
    return out;
  };

  if (on.size() == 2) {
    int minus_pos, plus_pos;
    if ((on[0] + 1) % m == on[1]) {
      minus_pos = on[0];
      plus_pos = on[1];
    } else if ((on[1] + 1) % m == on[0]) {
      minus_pos = on[1];
      plus_pos = on[0];
    } else {
      throw InternalVerificationFailure("belt_local_geometry: facets through q are not adjacent in the belt");
    }
    const int fm = belt.facet_ids[minus_pos], fp = belt.facet_ids[plus_pos];
    g.minus.push_back({fm, facet_polygon(p, fm)});
    g.plus.push_back({fp, facet_polygon(p, fp)});
    for (int s : members_in(fm))
      if (!subfacet_contains(p, s, q)) g.e_minus = s;
    for (int s : members_in(fp))
      if (!subfacet_contains(p, s, q)) g.e_plus = s;
    g.angle_is_straight = false;
    g.angle_radians = angle_between(-travel_direction(p.facet(fm).normal, belt.axis),
                                    travel_direction(p.facet(fp).normal, belt.axis));
    return g;
  }
  if (on.size() != 1) throw InternalVerificationFailure("belt_local_geometry: q on more than two belt facets");

  const int f = belt.facet_ids[on[0]];
  const Vec t = travel_direction(p.facet(f).normal, belt.axis);
  const Rational tq = dot(t, q);
  g.plus.push_back({f, clip_convex(facet_polygon(p, f), {{-t, -tq}})});
  g.minus.push_back({f, clip_convex(facet_polygon(p, f), {{t, tq}})});
  for (int s : members_in(f)) {
    if (subfacet_contains(p, s, q))
      throw InternalVerificationFailure("belt_local_geometry: q on a translate of G but only one belt facet");
    (dot(t, subfacet_point(p, s)) > tq ? g.e_plus : g.e_minus) = s;
  }
  g.angle_is_straight = true;
  g.angle_radians = std::numbers::pi;
  return g;
}

RefinedSets refined_boundary_sets(const Polytope& p, const TranslateSet& x, int subfacet, const Point& q,
                                  Side orientation) {
  const auto geo = belt_local_geometry(p, subfacet, q);
  const auto cls = boundary_sets(p, x, q);
  RefinedSets out;
  for (const auto& v : cls.touching) {
    const Polytope moved = p.translated(v);
    const auto meet = boundary_intersection_points(p, moved);
    if (std::all_of(meet.begin(), meet.end(), [&](const Point& pt) { return geo.in_s(pt); }))
      out.s_contact.push_back(v);
    const auto hs = halfspaces_of(moved);
    bool off_s = false;
    for (const auto& frag : geo.side(orientation)) {
      for (const auto& pt : clip_convex(frag.points, hs))
        if (!geo.in_s(pt)) {
          off_s = true;
          break;
        }
      if (off_s) break;
    }
    if (off_s) out.side.push_back(v);
  }
  return out;
}

namespace {

std::vector<Vec> sector_directions(const Polytope& p, const std::vector<Vec>& normals) {
  std::vector<Vec> dirs;
  if (p.dim() == 2) {
    std::vector<Vec> crit;
    for (const auto& n : normals) {
      crit.push_back(Vec{-n[1], n[0]});
      crit.push_back(Vec{n[1], -n[0]});
    }
    if (crit.empty()) return {Vec{1, 0}};
    std::sort(crit.begin(), crit.end(), angle_less);
    std::vector<Vec> uniq;
    for (const auto& c : crit)
      if (uniq.empty() || !(parallel(uniq.back(), c) && dot(uniq.back(), c) > 0)) uniq.push_back(c);
    if (uniq.size() > 1 && parallel(uniq.front(), uniq.back()) && dot(uniq.front(), uniq.back()) > 0)
      uniq.pop_back();
    for (std::size_t i = 0; i < uniq.size(); ++i) {
      const Vec& a = uniq[i];
      const Vec& b = uniq[(i + 1) % uniq.size()];
      Vec mid = a + b;
      if (cross2(a, b) == 0) mid = Vec{-a[1], a[0]};  // opposite rays: one line
      dirs.push_back(mid);
    }
    return dirs;
  }
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        Vec d{a, b, c};
        if (d.is_zero()) continue;
        bool generic = true;
        for (const auto& n : normals) generic = generic && dot(n, d) != 0;
        if (generic) dirs.push_back(d);
      }
  return dirs;
}

}  // namespace

std::vector<long> local_multiplicities(const Polytope& p, const TranslateSet& x, const Point& q) {
  struct Through {
    long mult;
    std::vector<Vec> normals;
  };
  std::vector<Through> through;
  std::vector<Vec> all_normals;
  for (const auto& e : x.entries()) {
    const Point local = q - e.vector;
    if (!contains(p, local)) continue;
    Through t{e.multiplicity, {}};
    for (int f : tight_facets(p, local)) {
      t.normals.push_back(p.facet(f).normal);
      all_normals.push_back(p.facet(f).normal);
    }
    through.push_back(std::move(t));
  }
  std::vector<long> counts;
  for (const auto& d : sector_directions(p, all_normals)) {
    long c = 0;
    for (const auto& t : through) {
      bool inside = true;
      for (const auto& n : t.normals) inside = inside && dot(n, d) < 0;
      if (inside) c += t.mult;
    }
    counts.push_back(c);
  }
  return counts;
}

std::optional<Vector> lemma2_probe(const Polytope& p, const TranslateSet& x, const Point& q,
                                   const std::optional<Vector>& designated) {
  const Vector xi = designated.value_or(Vec::zero(p.dim()));
  if (!x.contains(xi)) throw PreconditionError("lemma2_probe: designated translate not in X");
  const Polytope base = p.translated(xi);
  if (!locate_point(base, q).boundary())
    throw PreconditionError("lemma2_probe: q is not on the boundary of the designated translate");

  const auto local = local_multiplicities(p, x, q);
  const bool uniform = !local.empty() && std::all_of(local.begin(), local.end(), [&](long c) { return c == local[0]; });
  if (!uniform || local[0] == 0)
    throw PrewindowTooSmall("lemma2_probe: coverage around " + to_string(q) +
                            " is not locally constant; the window is not a neighbourhood of a tiling");

  std::optional<Vector> best;
  Rational best_dist;
  for (const auto& e : x.entries()) {
    if (e.vector == xi) continue;
    if (!locate_point(p, q - e.vector).boundary()) continue;
    if (!interiors_disjoint(base, p.translated(e.vector))) continue;
    const Vec diff = e.vector - xi;
    const Rational dist = dot(diff, diff);
    if (!best || dist < best_dist || (dist == best_dist && e.vector < *best)) {
      best = e.vector;
      best_dist = dist;
    }
  }
  return best;
}

}  // namespace tilescope
