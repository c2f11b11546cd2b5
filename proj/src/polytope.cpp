#include "tilescope/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tilescope/errors.hpp"

namespace tilescope {

namespace {

std::vector<Point> unique_points(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool spans_2d(const std::vector<Point>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (cross2(pts[i] - pts[0], pts[j] - pts[0]) != 0) return true;
  return false;
}

bool spans_3d(const std::vector<Point>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Vec n = cross3(pts[i] - pts[0], pts[j] - pts[0]);
      if (n.is_zero()) continue;
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (dot(n, pts[k] - pts[0]) != 0) return true;
    }
  return false;
}

// Andrew's monotone chain, dropping collinear points. Returns the hull
// counterclockwise starting at the lexicographically least point.
std::vector<Point> hull_cycle_2d(const std::vector<Point>& pts) {
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

Polytope convex_hull(std::span<const Point> points) {
  if (points.empty()) throw DegenerateInput("convex_hull: no points");
  const int d = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != d) throw DegenerateInput("convex_hull: mixed dimensions");
  if (d != 2 && d != 3) throw DegenerateInput("convex_hull: dimension must be 2 or 3");
  auto pts = unique_points(points);

  Polytope out;
  out.dim_ = d;
  if (d == 2) {
    if (!spans_2d(pts)) throw DegenerateInput("convex_hull: points are collinear");
    auto cycle = hull_cycle_2d(pts);
    out.vertices_ = cycle;
    std::sort(out.vertices_.begin(), out.vertices_.end());
    auto index_of = [&](const Point& p) {
      return static_cast<int>(std::lower_bound(out.vertices_.begin(), out.vertices_.end(), p) -
                              out.vertices_.begin());
    };
    const int m = static_cast<int>(cycle.size());
    out.lattice_.faces.resize(2);
    out.lattice_.subfacet_facets.resize(m);
    for (int i = 0; i < m; ++i) out.lattice_.faces[0].push_back({i});
    for (int k = 0; k < m; ++k) {
      int a = index_of(cycle[k]);
      int b = index_of(cycle[(k + 1) % m]);
      Vec e = cycle[(k + 1) % m] - cycle[k];
      Facet f;
      f.normal = primitive_integer(Vec{e[1], -e[0]});
      f.offset = dot(f.normal, cycle[k]);
      f.cycle = {a, b};
      out.facets_.push_back(f);
      out.lattice_.faces[1].push_back({std::min(a, b), std::max(a, b)});
      out.lattice_.subfacet_facets[b][0] = k;                // incoming edge
      out.lattice_.subfacet_facets[a][1] = k;                // outgoing edge
    }
    return out;
  }

  if (!spans_3d(pts)) throw DegenerateInput("convex_hull: points are coplanar");
  const std::size_t n = pts.size();
  std::set<std::pair<Vec, Rational>> planes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec nrm = cross3(pts[j] - pts[i], pts[k] - pts[i]);
        if (nrm.is_zero()) continue;
        nrm = primitive_integer(nrm);
        Rational off = dot(nrm, pts[i]);
        bool pos = false, neg = false;
        for (std::size_t m = 0; m < n && !(pos && neg); ++m) {
          int s = sgn(dot(nrm, pts[m]) - off);
          pos |= s > 0;
          neg |= s < 0;
        }
        if (pos && neg) continue;
        if (pos) {
          nrm = -nrm;
          off = -off;
        }
        planes.emplace(nrm, off);
      }

  // Extreme points: tight facet normals must span R^3.
  for (const auto& p : pts) {
    std::vector<Vec> tight;
    for (const auto& [nrm, off] : planes)
      if (dot(nrm, p) == off) tight.push_back(nrm);
    bool vertex = false;
    for (std::size_t a = 0; a < tight.size() && !vertex; ++a)
      for (std::size_t b = a + 1; b < tight.size() && !vertex; ++b) {
        Vec c = cross3(tight[a], tight[b]);
        if (c.is_zero()) continue;
        for (std::size_t e = b + 1; e < tight.size(); ++e)
          if (dot(c, tight[e]) != 0) {
            vertex = true;
            break;
          }
      }
    if (vertex) out.vertices_.push_back(p);
  }
  // pts was sorted, so vertices_ is in lexicographic order.

  for (const auto& [nrm, off] : planes) {
    Facet f;
    f.normal = nrm;
    f.offset = off;
    std::vector<int> members;
    for (int v = 0; v < static_cast<int>(out.vertices_.size()); ++v)
      if (dot(nrm, out.vertices_[v]) == off) members.push_back(v);
    Point c = Vec::zero(3);
    for (int v : members) c += out.vertices_[v];
    c *= Rational(1, static_cast<unsigned long>(members.size()));
    Vec ref = out.vertices_[members[0]] - c;
    auto local = [&](int v) {
      Vec a = out.vertices_[v] - c;
      return Vec{dot(a, ref), dot(nrm, cross3(ref, a))};
    };
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return angle_less(local(a), local(b)); });
    f.cycle = members;
    out.facets_.push_back(std::move(f));
  }
  // std::set already yields facets ordered by (normal, offset).

  out.lattice_.faces.resize(3);
  for (int v = 0; v < static_cast<int>(out.vertices_.size()); ++v) out.lattice_.faces[0].push_back({v});
  std::map<std::pair<int, int>, std::array<int, 2>> edges;
  const int nf = static_cast<int>(out.facets_.size());
  for (int f = 0; f < nf; ++f) {
    const auto& cyc = out.facets_[f].cycle;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      auto key = std::make_pair(std::min(a, b), std::max(a, b));
      auto it = edges.find(key);
      if (it == edges.end()) {
        edges.emplace(key, std::array<int, 2>{f, -1});
      } else {
        it->second[1] = f;
      }
    }
    auto sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    out.lattice_.faces[2].push_back(sorted);
  }
  for (const auto& [key, fs] : edges) {
    if (fs[1] < 0) throw InternalVerificationFailure("convex_hull: edge with a single facet");
    out.lattice_.faces[1].push_back({key.first, key.second});
    out.lattice_.subfacet_facets.push_back(fs);
  }
  return out;
}

const FaceLattice& face_lattice(const Polytope& p) { return p.faces(); }

std::vector<int> Polytope::boundary_cycle() const {
  std::vector<int> c;
  for (const auto& f : facets_) c.push_back(f.cycle[0]);
  return c;
}

Rational Polytope::slack(int f, const Point& p) const { return facets_[f].offset - dot(facets_[f].normal, p); }

Polytope Polytope::translated(const Vector& t) const {
  Polytope out = *this;
  for (auto& v : out.vertices_) v += t;
  for (auto& f : out.facets_) f.offset += dot(f.normal, t);
  return out;
}

Polytope Polytope::scaled(const Rational& s) const {
  Polytope out = *this;
  for (auto& v : out.vertices_) v *= s;
  for (auto& f : out.facets_) f.offset *= s;
  return out;
}

Polytope Polytope::reflected() const {
  std::vector<Point> pts;
  for (const auto& v : vertices_) pts.push_back(-v);
  return convex_hull(pts);
}

std::vector<int> tight_facets(const Polytope& p, const Point& q) {
  std::vector<int> out;
  for (int f = 0; f < p.num_facets(); ++f)
    if (dot(p.facet(f).normal, q) == p.facet(f).offset) out.push_back(f);
  return out;
}

Location locate_point(const Polytope& p, const Point& q) {
  std::vector<int> tight;
  for (int f = 0; f < p.num_facets(); ++f) {
    int s = sgn(p.slack(f, q));
    if (s < 0) return {LocationTag::Exterior, std::nullopt};
    if (s == 0) tight.push_back(f);
  }
  if (tight.empty()) return {LocationTag::Interior, std::nullopt};

  const auto& faces = p.faces().faces;
  std::vector<int> common = faces[p.dim() - 1][tight[0]];
  for (std::size_t i = 1; i < tight.size(); ++i) {
    const auto& other = faces[p.dim() - 1][tight[i]];
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), other.begin(), other.end(), std::back_inserter(next));
    common = std::move(next);
  }
  for (int k = 0; k < p.dim(); ++k) {
    const auto& list = faces[k];
    for (int i = 0; i < static_cast<int>(list.size()); ++i)
      if (list[i] == common) return {LocationTag::Boundary, FaceRef{k, i}};
  }
  throw InternalVerificationFailure("locate_point: tight facets do not meet in a face");
}

bool contains(const Polytope& p, const Point& q) {
  for (int f = 0; f < p.num_facets(); ++f)
    if (p.slack(f, q) < 0) return false;
  return true;
}

bool contains_in_interior(const Polytope& p, const Point& q) {
  for (int f = 0; f < p.num_facets(); ++f)
    if (p.slack(f, q) <= 0) return false;
  return true;
}

Point vertex_centroid(const Polytope& p) {
  Point c = Vec::zero(p.dim());
  for (const auto& v : p.vertices()) c += v;
  c *= Rational(1, static_cast<unsigned long>(p.num_vertices()));
  return c;
}

Rational volume(const Polytope& p) {
  Rational vol = 0;
  if (p.dim() == 2) {
    auto cyc = p.boundary_cycle();
    for (std::size_t i = 0; i < cyc.size(); ++i)
      vol += cross2(p.vertex(cyc[i]), p.vertex(cyc[(i + 1) % cyc.size()]));
    return vol / 2;
  }
  Point c = vertex_centroid(p);
  for (const auto& f : p.facets()) {
    const Vec a = p.vertex(f.cycle[0]) - c;
    for (std::size_t i = 1; i + 1 < f.cycle.size(); ++i)
      vol += det3(a, p.vertex(f.cycle[i]) - c, p.vertex(f.cycle[i + 1]) - c);
  }
  return vol / 6;
}

namespace {

std::pair<Rational, Rational> support_range(const Polytope& p, const Vec& n) {
  Rational lo = dot(n, p.vertex(0)), hi = lo;
  for (int i = 1; i < p.num_vertices(); ++i) {
    Rational v = dot(n, p.vertex(i));
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return {lo, hi};
}

bool separates(const Polytope& a, const Polytope& b, const Vec& n) {
  auto [alo, ahi] = support_range(a, n);
  auto [blo, bhi] = support_range(b, n);
  return ahi <= blo || bhi <= alo;
}

std::vector<Vec> edge_directions(const Polytope& p) {
  std::vector<Vec> dirs;
  for (const auto& e : p.faces().faces[1]) dirs.push_back(p.vertex(e[1]) - p.vertex(e[0]));
  return dirs;
}

}  // namespace

bool interiors_disjoint(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) throw PreconditionError("interiors_disjoint: dimension mismatch");
  for (const auto& f : a.facets())
    if (separates(a, b, f.normal)) return true;
  for (const auto& f : b.facets())
    if (separates(a, b, f.normal)) return true;
  if (a.dim() == 3) {
    auto da = edge_directions(a);
    auto db = edge_directions(b);
    for (const auto& u : da)
      for (const auto& v : db) {
        Vec n = cross3(u, v);
        if (!n.is_zero() && separates(a, b, n)) return true;
      }
  }
  return false;
}

}  // namespace tilescope
