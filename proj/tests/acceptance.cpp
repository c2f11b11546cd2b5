// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tilescope/classify.hpp"
#include "tilescope/clip.hpp"
#include "tilescope/errors.hpp"
#include "tilescope/probes.hpp"
#include "tilescope/shapes.hpp"

using namespace tilescope;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) o.require(secs < limit_seconds, "runtime limit");
  if (!o.ok) ++failures;
  std::printf("%s %s %s | %s(%.2f s)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

bool constant(const MultiplicityReport& r, long k) {
  return r.verdict == CoverageVerdict::Constant && r.k == k && r.volume_identity.consistent;
}

struct Tiling {
  Polytope p;
  Lattice l;
};

std::vector<Tiling> verified_tilings() {
  return {{shapes::unit_square(), Lattice::integer(2)},
          {shapes::hexagon_h6(), Lattice({Vec{3, 1}, Vec{1, 2}})},
          {shapes::octagon_o7(), Lattice::integer(2)}};
}

std::vector<Point> boundary_samples(const Polytope& p, std::mt19937_64& rng, int per_edge) {
  std::vector<Point> out;
  for (int f = 0; f < p.num_facets(); ++f) {
    const Point& a = p.vertex(p.facet(f).cycle[0]);
    const Point& b = p.vertex(p.facet(f).cycle[1]);
    out.push_back(a);
    for (int i = 0; i < per_edge; ++i) out.push_back(a + oracle::random_fraction(rng, 0, 1, 997) * (b - a));
  }
  return out;
}

Point random_boundary_point(const Polytope& p, std::mt19937_64& rng) {
  const auto& f = p.facet(static_cast<int>(rng() % p.num_facets()));
  const Point& a = p.vertex(f.cycle[0]);
  const Point& b = p.vertex(f.cycle[1]);
  if (rng() % 3 == 0) return a;
  return a + oracle::random_fraction(rng, 0, 1, 101) * (b - a);
}

Polytope random_polygon(std::mt19937_64& rng) {
  if (rng() % 2) return shapes::random_cs_polygon(rng, 2 + static_cast<int>(rng() % 3), 3, 1 + static_cast<int>(rng() % 3));
  return shapes::random_non_cs_polygon(rng, 5);
}

/// Area of P cap Q cap (p + [-eps, eps]^2) is zero.
bool locally_disjoint(const Polytope& p, const Polytope& q, const Point& at, const Rational& eps) {
  std::vector<Point> box{at + Vec{-eps, -eps}, at + Vec{eps, -eps}, at + Vec{eps, eps}, at + Vec{-eps, eps}};
  auto piece = clip_convex(clip_convex(box, halfspaces_of(p)), halfspaces_of(q));
  return piece.size() < 3 || oracle::shoelace(piece) == 0;
}

}  // namespace

int main() {
  criterion("A1", "octagon O7: not a tile, 7-fold lattice tile with Z^2", 10, [](Outcome& o) {
    auto o7 = shapes::octagon_o7();
    auto one = is_translative_tile(o7);
    auto two = is_twofold_translative_tile(o7);
    o.require(one.symmetry.body_center.has_value(), "O7 centrally symmetric");
    o.require(one.belts && one.belts->belts.size() == 1 && one.belts->belts[0].size() == 8, "one belt of 8 facets");
    o.require(one.verdict == TileVerdict::NotTile && one.reason == TileReason::BeltWitness, "onefold NotTile");
    o.require(two.verdict == TileVerdict::NotTile, "twofold NotTile");
    auto search = search_lattice_multiplicity(o7, 7);
    bool hit = false;
    for (const auto& h : search.found) hit = hit || (h.k >= 2 && h.lattice == Lattice::integer(2));
    o.require(hit, "search finds (Z^2, k >= 2)");
    auto r = verify_lattice_tiling(o7, Lattice::integer(2));
    o.require(constant(r, 7), "verifier gives Constant(7)");
    o.require(Rational(r.k) * r.volume_identity.det == volume(o7) && volume(o7) == 7, "7 * 1 = area 7");
    o.detail << "belt size 8, search hits " << search.found.size() << ", Constant(" << r.k << ") with 7*1 = "
             << to_string(volume(o7)) << " ";
  });

  criterion("A2", "2D translative tiles certified with a onefold lattice", 30, [](Outcome& o) {
    std::mt19937_64 rng(2024);
    std::vector<Polytope> cases{shapes::unit_square(), shapes::hexagon_h6()};
    for (int i = 0; i < 10; ++i) cases.push_back(shapes::random_cs_polygon(rng, 2, 4, 1 + i % 3));
    for (int i = 0; i < 20; ++i) cases.push_back(shapes::random_cs_polygon(rng, 3, 4, 1 + i % 4));
    for (const auto& p : cases) {
      auto d = is_translative_tile(p);
      o.require(d.verdict == TileVerdict::Tile, "Tile verdict");
      auto l = construct_lattice_2d(p);
      auto r = verify_lattice_tiling(p, l);
      o.require(constant(r, 1), "Constant(1)");
      o.require(l.abs_det() == volume(p), "k * det = area");
    }
    o.detail << cases.size() << " polygons ";
  });

  criterion("A3", "symmetry gates", 0, [](Outcome& o) {
    o.require(is_translative_tile(shapes::regular_octahedron()).reason == TileReason::FacetNotCS, "octahedron FacetNotCS");
    std::mt19937_64 rng(3);
    std::vector<Polytope> cases{shapes::triangle()};
    for (int i = 0; i < 30; ++i) cases.push_back(shapes::random_non_cs_polygon(rng, 6));
    for (const auto& p : cases) {
      auto d = is_translative_tile(p);
      o.require(d.verdict == TileVerdict::NotTile && d.reason == TileReason::NotCS, "non-cs polygon NotCS");
    }
    o.detail << "octahedron FacetNotCS, " << cases.size() << " non-cs polygons NotCS ";
  });

  criterion("A4", "3D belt criterion", 0, [](Outcome& o) {
    auto cube = is_translative_tile(shapes::unit_cube());
    o.require(cube.verdict == TileVerdict::Tile && cube.belts->belts.size() == 3, "cube Tile with 3 belts");
    for (const auto& b : cube.belts->belts) o.require(b.size() == 4, "cube belts of size 4");
    for (const auto& p : {shapes::rhombic_dodecahedron(), shapes::truncated_octahedron()}) {
      auto d = is_translative_tile(p);
      o.require(d.verdict == TileVerdict::Tile, "Tile");
      for (const auto& b : d.belts->belts) o.require(b.size() == 4 || b.size() == 6, "belt sizes in {4,6}");
    }
    auto prism = is_translative_tile(shapes::prism(shapes::octagon_o7(), 1));
    o.require(prism.verdict == TileVerdict::NotTile && prism.witness && prism.witness->size() == 8, "octagonal prism");
    o.detail << "cube 3x4, rhombic dodecahedron and truncated octahedron Tile, octagonal prism belt 8 ";
  });

  criterion("A5", "twofold/onefold coherence and empty k=2 searches", 300, [](Outcome& o) {
    auto corpus = shapes::corpus(0);
    o.require(corpus.size() >= 50, "corpus of at least 50");
    long searched = 0, candidates = 0;
    for (const auto& np : corpus) {
      auto one = is_translative_tile(np.polytope);
      auto two = is_twofold_translative_tile(np.polytope);
      o.require(one.verdict == two.verdict, "verdicts agree on " + np.name);
      if (np.polytope.dim() != 2 || one.verdict == TileVerdict::Tile) continue;
      auto r = search_lattice_multiplicity(np.polytope, 2);
      for (const auto& h : r.found) o.require(h.k != 2, "no k=2 lattice for " + np.name);
      ++searched;
      candidates += r.candidates_examined;
    }
    o.detail << corpus.size() << " polytopes, " << searched << " 2D non-tiles searched (" << candidates
             << " candidates) ";
  });

  criterion("A6", "exact 2D multiplicity verifier", 0, [](Outcome& o) {
    auto z2 = Lattice::integer(2);
    o.require(constant(verify_lattice_tiling(shapes::box2(2, 2), z2), 4), "[0,2]^2 Constant(4)");
    o.require(constant(verify_lattice_tiling(shapes::box2(1, 2), z2), 2), "[0,1]x[0,2] Constant(2)");
    auto gap = verify_lattice_tiling(shapes::unit_square(), Lattice({Vec{2, 0}, Vec{0, 1}}));
    o.require(gap.verdict == CoverageVerdict::NotCovering && gap.gap_witness, "NotCovering with witness");
    if (gap.gap_witness)
      o.require(oracle::lattice_count(oracle::cycle_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), Vec{2, 0}, Vec{0, 1},
                                      *gap.gap_witness, 4) == 0,
                "witness uncovered");

    struct Case {
      Polytope p;
      oracle::Cycle cycle;
      Vec b1, b2;
    };
    std::vector<Case> cases{
        {shapes::octagon_o7(), oracle::cycle_of({{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}}),
         Vec{1, 0}, Vec{0, 1}},
        {shapes::hexagon_h6(), oracle::cycle_of({{0, 0}, {2, 0}, {3, 1}, {3, 2}, {1, 2}, {0, 1}}), Vec{3, 1}, Vec{1, 2}},
        {shapes::box2(1, 2), oracle::cycle_of({{0, 0}, {1, 0}, {1, 2}, {0, 2}}), Vec{1, 0}, Vec{0, Rational(3, 2)}},
        {shapes::triangle(), oracle::cycle_of({{0, 0}, {1, 0}, {0, 1}}), Vec{1, 0}, Vec{Rational(1, 2), 1}}};
    std::mt19937_64 rng(6);
    long generic = 0, mismatches = 0;
    while (generic < 1000) {
      const auto& c = cases[generic % cases.size()];
      Point q{oracle::random_fraction(rng, -3, 4, 613), oracle::random_fraction(rng, -3, 4, 617)};
      long expect = oracle::lattice_count(c.cycle, c.b1, c.b2, q, 12);
      if (expect < 0) continue;
      if (lattice_multiplicity_at(c.p, Lattice({c.b1, c.b2}), q) != expect) ++mismatches;
      ++generic;
    }
    o.require(mismatches == 0, "oracle equivalence");
    o.detail << "Constant(4), Constant(2), NotCovering; " << generic << " points, " << mismatches << " mismatches ";
  });

  criterion("A7", "both side sets nonempty at belt boundary points", 0, [](Outcome& o) {
    std::mt19937_64 rng(7);
    long samples = 0;
    for (const auto& t : verified_tilings()) {
      for (const auto& q : boundary_samples(t.p, rng, 6)) {
        auto x = lattice_window(t.p, t.l, q, Rational(1, 4));
        o.require(!refined_boundary_sets(t.p, x, 0, q, Side::Plus).side.empty(), "X+ nonempty at " + to_string(q));
        o.require(!refined_boundary_sets(t.p, x, 0, q, Side::Minus).side.empty(), "X- nonempty at " + to_string(q));
        ++samples;
      }
    }
    o.require(samples >= 100, "at least 100 samples");
    o.detail << samples << " boundary points ";
  });

  criterion("A8", "lemma2 partner with disjoint interiors", 0, [](Outcome& o) {
    std::mt19937_64 rng(8);
    long samples = 0;
    for (const auto& t : verified_tilings()) {
      for (const auto& q : boundary_samples(t.p, rng, 6)) {
        auto x = lattice_window(t.p, t.l, q, Rational(1, 4));
        auto partner = lemma2_probe(t.p, x, q);
        o.require(partner.has_value(), "partner exists at " + to_string(q));
        if (partner) {
          auto moved = t.p.translated(*partner);
          o.require(interiors_disjoint(t.p, moved), "disjoint interiors");
          o.require(locate_point(moved, q).boundary(), "q on the partner's boundary");
        }
        ++samples;
      }
    }
    o.require(samples >= 100, "at least 100 samples");
    o.detail << samples << " boundary points ";
  });

  criterion("A9", "local disjointness at a shared point agrees with interiors_disjoint", 0, [](Outcome& o) {
    std::mt19937_64 rng(9);
    const std::vector<Rational> eps{Rational(1), Rational(1, 2), Rational(1, 8), Rational(1, 32), Rational(1, 256)};
    long disjoint = 0;
    for (int i = 0; i < 500; ++i) {
      auto p = random_polygon(rng);
      auto q0 = random_polygon(rng);
      const Point at = random_boundary_point(p, rng);
      const Point on_q = random_boundary_point(q0, rng);
      // Either a translate of Q0 or of -Q0 with the chosen boundary point moved onto `at`.
      auto q = rng() % 2 ? q0.translated(at - on_q) : q0.reflected().translated(at + on_q);
      const bool global = interiors_disjoint(p, q);
      bool some = false, all = true;
      for (const auto& e : eps) {
        bool local = locally_disjoint(p, q, at, e);
        some = some || local;
        all = all && local;
      }
      o.require(!some || global, "local => global");
      o.require(!global || all, "global => local");
      disjoint += global;
    }
    o.detail << "500 pairs, " << disjoint << " disjoint ";
  });

  return failures;
}
