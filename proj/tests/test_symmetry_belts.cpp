#include <doctest.h>

#include <map>

#include "tilescope/belts.hpp"
#include "tilescope/errors.hpp"
#include "tilescope/shapes.hpp"
#include "tilescope/symmetry.hpp"

using namespace tilescope;

TEST_CASE("symmetry centers") {
  CHECK(symmetry_center(shapes::unit_square()) == Vec{Rational(1, 2), Rational(1, 2)});
  CHECK_FALSE(symmetry_center(shapes::triangle()).has_value());
  CHECK(symmetry_center(shapes::octagon_o7()) == Vec{Rational(3, 2), Rational(3, 2)});
  CHECK(symmetry_center(shapes::hexagon_h6()) == Vec{Rational(3, 2), 1});
}

TEST_CASE("cs facet report") {
  auto sq = cs_facets_report(shapes::hexagon_h6());
  CHECK(sq.is_cs_with_cs_facets);  // segments are always centrally symmetric
  CHECK(cs_facets_report(shapes::unit_cube()).is_cs_with_cs_facets);
  auto oct = cs_facets_report(shapes::regular_octahedron());
  CHECK(oct.body_center.has_value());
  CHECK_FALSE(oct.is_cs_with_cs_facets);
  for (const auto& c : oct.facet_centers) CHECK_FALSE(c.has_value());
  CHECK_FALSE(cs_facets_report(shapes::cuboctahedron()).is_cs_with_cs_facets);
  CHECK(cs_facets_report(shapes::truncated_octahedron()).is_cs_with_cs_facets);
}

TEST_CASE("symmetry invariants over the corpus") {
  for (const auto& [name, p] : shapes::corpus()) {
    CAPTURE(name);
    auto rep = cs_facets_report(p);
    bool all = rep.body_center.has_value();
    for (const auto& c : rep.facet_centers) all = all && c.has_value();
    CHECK(rep.is_cs_with_cs_facets == all);

    Vec t(p.dim());
    for (int k = 0; k < p.dim(); ++k) t[k] = Rational(2 * k - 3, 5);
    auto c = symmetry_center(p);
    auto ct = symmetry_center(p.translated(t));
    CHECK(c.has_value() == ct.has_value());
    if (!c) continue;
    CHECK(*ct == *c + t);
    // Facets pair up under x -> 2c - x with negated normals.
    for (const auto& f : p.facets()) {
      bool paired = false;
      for (const auto& g : p.facets())
        if (g.normal == -f.normal && g.offset == f.offset - Rational(2) * dot(f.normal, *c)) paired = true;
      CHECK(paired);
    }
  }
}

TEST_CASE("belts of basic shapes") {
  auto sq = belts_of(shapes::unit_square());
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].size() == 4);
  CHECK(sq[0].generator == 0);

  auto o7 = belts_of(shapes::octagon_o7());
  REQUIRE(o7.size() == 1);
  CHECK(o7[0].size() == 8);

  auto cube = belts_of(shapes::unit_cube());
  REQUIRE(cube.size() == 3);
  for (const auto& b : cube) CHECK(b.size() == 4);

  CHECK_THROWS_AS(belts_of(shapes::triangle()), NotCentrallySymmetric);
  CHECK_THROWS_AS(belts_of(shapes::regular_octahedron()), NotCentrallySymmetric);
}

TEST_CASE("belt condition") {
  auto h6 = belt_condition(shapes::hexagon_h6());
  CHECK(h6.verdict == BeltVerdict::Pass);
  REQUIRE(h6.belts.size() == 1);
  CHECK(h6.belts[0].size() == 6);

  auto o7 = belt_condition(shapes::octagon_o7());
  CHECK(o7.verdict == BeltVerdict::Fail);
  REQUIRE(o7.witness.has_value());
  CHECK(o7.witness->size() == 8);

  // Six edge directions, each shared by six facets (scipy hull oracle).
  auto to = belt_condition(shapes::truncated_octahedron());
  CHECK(to.verdict == BeltVerdict::Pass);
  CHECK(to.belts.size() == 6);
  for (const auto& b : to.belts) CHECK(b.size() == 6);

  auto rd = belt_condition(shapes::rhombic_dodecahedron());
  CHECK(rd.verdict == BeltVerdict::Pass);
  CHECK(rd.belts.size() == 4);
  for (const auto& b : rd.belts) CHECK(b.size() == 6);

  // Octagonal prism: the vertical belt has 8 facets, the four horizontal ones 4.
  auto prism = belt_condition(shapes::prism(shapes::octagon_o7(), 1));
  CHECK(prism.verdict == BeltVerdict::Fail);
  CHECK(prism.witness->size() == 8);
  std::map<int, int> hist;
  for (const auto& b : prism.belts) ++hist[b.size()];
  CHECK(hist == std::map<int, int>{{4, 4}, {8, 1}});
}

TEST_CASE("belt invariants over the corpus") {
  for (const auto& [name, p] : shapes::corpus()) {
    CAPTURE(name);
    auto rep = cs_facets_report(p);
    if (!rep.is_cs_with_cs_facets) {
      CHECK_THROWS_AS(belts_of(p), NotCentrallySymmetric);
      continue;
    }
    auto belts = belts_of(p);
    std::vector<int> membership(p.num_facets(), 0);
    for (const auto& b : belts) {
      CHECK(b.size() >= 4);
      CHECK(b.size() % 2 == 0);
      for (int f : b.facet_ids) ++membership[f];
      // Antipodal closure: the facet opposite to a belt facet is in the belt.
      for (int f : b.facet_ids) {
        bool found = false;
        for (int g : b.facet_ids) found = found || p.facet(g).normal == -p.facet(f).normal;
        CHECK(found);
      }
      // Antipodal facets sit half a turn apart in the cyclic order.
      const int m = b.size();
      for (int i = 0; i < m; ++i)
        CHECK(p.facet(b.facet_ids[(i + m / 2) % m]).normal == -p.facet(b.facet_ids[i]).normal);
      if (p.dim() == 3) {
        for (int f : b.facet_ids) CHECK(dot(p.facet(f).normal, *b.axis) == 0);
      }
    }
    if (p.dim() == 2) {
      CHECK(belts.size() == 1);
      for (int m : membership) CHECK(m == 1);
    } else {
      // A facet belongs to one belt per translation class among its edges.
      for (int f = 0; f < p.num_facets(); ++f) {
        std::vector<Vec> classes;
        const auto& cyc = p.facet(f).cycle;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
          Vec k = sign_normalized(p.vertex(cyc[(i + 1) % cyc.size()]) - p.vertex(cyc[i]));
          if (std::find(classes.begin(), classes.end(), k) == classes.end()) classes.push_back(k);
        }
        CHECK(membership[f] == static_cast<int>(classes.size()));
      }
    }
    // Translation invariance.
    Vec t(p.dim());
    for (int k = 0; k < p.dim(); ++k) t[k] = Rational(k + 1, 3);
    auto moved = belts_of(p.translated(t));
    REQUIRE(moved.size() == belts.size());
    for (std::size_t i = 0; i < belts.size(); ++i) {
      CHECK(moved[i].facet_ids == belts[i].facet_ids);
      CHECK(moved[i].generator == belts[i].generator);
    }
  }
}
