#include "tilescope/shapes.hpp"

#include <algorithm>

#include "tilescope/symmetry.hpp"

namespace tilescope::shapes {

namespace {

Polytope hull2(std::initializer_list<std::pair<int, int>> pts) {
  std::vector<Point> v;
  for (auto [x, y] : pts) v.push_back(Vec{x, y});
  return convex_hull(v);
}

}  // namespace

Polytope unit_square() { return hull2({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

Polytope box2(const Rational& w, const Rational& h) {
  return convex_hull(std::vector<Point>{Vec{0, 0}, Vec{w, 0}, Vec{w, h}, Vec{0, h}});
}

Polytope triangle() { return hull2({{0, 0}, {1, 0}, {0, 1}}); }

Polytope octagon_o7() { return hull2({{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}}); }

Polytope hexagon_h6() { return hull2({{0, 0}, {2, 0}, {3, 1}, {3, 2}, {1, 2}, {0, 1}}); }

Polytope box3(const Rational& a, const Rational& b, const Rational& c) {
  std::vector<Point> v;
  for (int i = 0; i < 8; ++i)
    v.push_back(Vec{(i & 1) ? a : Rational(0), (i & 2) ? b : Rational(0), (i & 4) ? c : Rational(0)});
  return convex_hull(v);
}

Polytope unit_cube() { return box3(1, 1, 1); }

Polytope regular_octahedron() {
  std::vector<Point> v;
  for (int s : {-1, 1}) {
    v.push_back(Vec{s, 0, 0});
    v.push_back(Vec{0, s, 0});
    v.push_back(Vec{0, 0, s});
  }
  return convex_hull(v);
}

Polytope tetrahedron() {
  return convex_hull(std::vector<Point>{Vec{0, 0, 0}, Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}});
}

Polytope rhombic_dodecahedron() {
  std::vector<Point> v;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) v.push_back(Vec{a, b, c});
  for (int s : {-2, 2}) {
    v.push_back(Vec{s, 0, 0});
    v.push_back(Vec{0, s, 0});
    v.push_back(Vec{0, 0, s});
  }
  return convex_hull(v);
}

Polytope truncated_octahedron() {
  std::vector<Point> v;
  std::array<int, 3> base{0, 1, 2};
  do {
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) {
          c[i] = base[i] == 0 ? 0 : base[i] == 1 ? s1 : 2 * s2;
        }
        v.push_back(Vec{c[0], c[1], c[2]});
      }
  } while (std::next_permutation(base.begin(), base.end()));
  return convex_hull(v);
}

Polytope cuboctahedron() {
  std::vector<Point> v;
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      v.push_back(Vec{a, b, 0});
      v.push_back(Vec{a, 0, b});
      v.push_back(Vec{0, a, b});
    }
  return convex_hull(v);
}

Polytope prism(const Polytope& base, const Rational& h) {
  std::vector<Point> v;
  for (const auto& p : base.vertices()) {
    v.push_back(Vec{p[0], p[1], 0});
    v.push_back(Vec{p[0], p[1], h});
  }
  return convex_hull(v);
}

Polytope random_cs_polygon(std::mt19937_64& rng, int m, int coord_bound, int den) {
  auto draw = [&] { return static_cast<int>(rng() % (2 * coord_bound + 1)) - coord_bound; };
  std::vector<Vec> edges;
  while (static_cast<int>(edges.size()) < m) {
    Vec e{make_rational(draw(), den), make_rational(draw(), den)};
    if (e.is_zero()) continue;
    // Upper half-plane representative so the m directions sort by angle in [0, pi).
    if (e[1] < 0 || (e[1] == 0 && e[0] < 0)) e = -e;
    bool dup = false;
    for (const auto& f : edges) dup = dup || parallel(e, f);
    if (!dup) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(), angle_less);
  std::vector<Point> pts;
  Point cur = Vec::zero(2);
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& e : edges) {
      pts.push_back(cur);
      cur += pass == 0 ? e : -e;
    }
  Polytope p = convex_hull(pts);
  return p.translated(-p.vertex(0));
}

Polytope random_non_cs_polygon(std::mt19937_64& rng, int coord_bound) {
  while (true) {
    std::vector<Point> pts;
    const int n = 3 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i)
      pts.push_back(Vec{static_cast<int>(rng() % (coord_bound + 1)), static_cast<int>(rng() % (coord_bound + 1))});
    try {
      Polytope p = convex_hull(pts);
      if (!symmetry_center(p)) return p;
    } catch (const std::exception&) {
      // collinear draw; retry
    }
  }
}

std::vector<NamedPolytope> corpus(std::uint64_t seed) {
  std::vector<NamedPolytope> out;
  out.push_back({"unit_square", unit_square()});
  out.push_back({"box_1x2", box2(1, 2)});
  out.push_back({"square_2", box2(2, 2)});
  out.push_back({"triangle", triangle()});
  out.push_back({"octagon_o7", octagon_o7()});
  out.push_back({"octagon_o7_x2", octagon_o7().scaled(2)});
  out.push_back({"hexagon_h6", hexagon_h6()});
  out.push_back({"parallelogram", hull2({{0, 0}, {2, 0}, {3, 1}, {1, 1}})});
  out.push_back({"unit_cube", unit_cube()});
  out.push_back({"box_1x2x3", box3(1, 2, 3)});
  out.push_back({"regular_octahedron", regular_octahedron()});
  out.push_back({"tetrahedron", tetrahedron()});
  out.push_back({"rhombic_dodecahedron", rhombic_dodecahedron()});
  out.push_back({"truncated_octahedron", truncated_octahedron()});
  out.push_back({"cuboctahedron", cuboctahedron()});
  out.push_back({"octagonal_prism", prism(octagon_o7(), 1)});
  out.push_back({"hexagonal_prism", prism(hexagon_h6(), 2)});

  std::mt19937_64 rng(seed);
  for (int i = 0; i < 8; ++i) out.push_back({"cs_parallelogram_" + std::to_string(i), random_cs_polygon(rng, 2, 3)});
  for (int i = 0; i < 8; ++i) out.push_back({"cs_hexagon_" + std::to_string(i), random_cs_polygon(rng, 3, 3)});
  for (int i = 0; i < 6; ++i) out.push_back({"cs_octagon_" + std::to_string(i), random_cs_polygon(rng, 4, 2)});
  for (int i = 0; i < 3; ++i) out.push_back({"cs_decagon_" + std::to_string(i), random_cs_polygon(rng, 5, 2)});
  for (int i = 0; i < 6; ++i) out.push_back({"non_cs_polygon_" + std::to_string(i), random_non_cs_polygon(rng, 4)});
  for (int i = 0; i < 3; ++i) {
    std::mt19937_64 r2(seed + 100 + i);
    out.push_back({"hexagon_prism_" + std::to_string(i), prism(random_cs_polygon(r2, 3, 2), 1)});
  }
  {
    std::mt19937_64 r2(seed + 200);
    out.push_back({"decagon_prism", prism(random_cs_polygon(r2, 5, 2), 1)});
  }
  return out;
}

}  // namespace tilescope::shapes
