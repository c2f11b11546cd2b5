#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tilescope/polytope.hpp"

namespace tilescope::shapes {

Polytope unit_square();
Polytope box2(const Rational& w, const Rational& h);
Polytope triangle();
/// hull{(1,0),(2,0),(3,1),(3,2),(2,3),(1,3),(0,2),(0,1)}: area 7.
Polytope octagon_o7();
/// hull{(0,0),(2,0),(3,1),(3,2),(1,2),(0,1)}: area 5.
Polytope hexagon_h6();

Polytope unit_cube();
Polytope box3(const Rational& a, const Rational& b, const Rational& c);
Polytope regular_octahedron();
Polytope tetrahedron();
Polytope rhombic_dodecahedron();
/// Permutations of (0, +-1, +-2).
Polytope truncated_octahedron();
Polytope cuboctahedron();
/// Prism over a 2D polygon with heights [0, h].
Polytope prism(const Polytope& base, const Rational& h);

/// Centrally symmetric 2m-gon with edge vectors e_1..e_m, -e_1..-e_m, where
/// e_i are random pairwise non-parallel vectors with coordinates p/den,
/// |p| <= coord_bound, translated so the lowest vertex is at the origin.
Polytope random_cs_polygon(std::mt19937_64& rng, int m, int coord_bound, int den = 1);

/// Hull of random integer points in [0, coord_bound]^2 that is not
/// centrally symmetric.
Polytope random_non_cs_polygon(std::mt19937_64& rng, int coord_bound);

struct NamedPolytope {
  std::string name;
  Polytope polytope;
};

/// Deterministic mixed 2D/3D corpus (tiles and non-tiles).
std::vector<NamedPolytope> corpus(std::uint64_t seed = 0);

}  // namespace tilescope::shapes
