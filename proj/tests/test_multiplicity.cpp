#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tilescope/errors.hpp"
#include "tilescope/kernels.hpp"
#include "tilescope/multiplicity.hpp"
#include "tilescope/shapes.hpp"

using namespace tilescope;

namespace {

Lattice lattice2(const Vec& a, const Vec& b) { return Lattice({a, b}); }

oracle::Cycle cycle_of(const Polytope& p) {
  oracle::Cycle c;
  for (int i : p.boundary_cycle()) c.push_back(p.vertex(i));
  return c;
}

}  // namespace

TEST_CASE("lattice canonical form") {
  auto z2 = Lattice::integer(2);
  CHECK(z2.canonical().basis() == z2.basis());
  auto other = lattice2(Vec{1, 1}, Vec{2, 1});  // det -1, also Z^2
  CHECK(other == z2);
  auto sub = lattice2(Vec{3, 1}, Vec{1, 2});
  CHECK(sub.abs_det() == 5);
  auto c = sub.canonical();
  CHECK(c.basis()[1][0] == 0);  // lower triangular: second column is (0, h11)
  CHECK(c.basis()[0][0] > 0);
  CHECK(c.basis()[1][1] > 0);
  CHECK(c.abs_det() == 5);
  CHECK(c == sub);
  CHECK_FALSE(sub == z2);
  auto half = lattice2(Vec{Rational(1, 2), 0}, Vec{Rational(1, 4), Rational(3, 2)});
  CHECK(half.canonical() == half);
  CHECK(half.canonical().abs_det() == Rational(3, 4));
  CHECK_THROWS_AS(lattice2(Vec{1, 2}, Vec{2, 4}), DegenerateInput);
}

TEST_CASE("canonical form is a lattice invariant (random unimodular changes)") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto draw = [&] { return static_cast<int>(rng() % 11) - 5; };
    Vec a{draw(), draw()}, b{draw(), Rational(draw(), 3)};
    if (cross2(a, b) == 0) continue;
    Lattice l = lattice2(a, b);
    // Unimodular column operations.
    Vec a2 = a + Rational(draw()) * b;
    Vec b2 = b + Rational(draw()) * a2;
    CHECK(lattice2(b2, a2) == l);
    CHECK(lattice2(b2, a2).canonical().basis() == l.canonical().basis());
  }
  std::vector<Vector> b3{Vec{1, 1, 0}, Vec{0, 1, 1}, Vec{1, 0, 1}};
  Lattice fcc(b3);
  Lattice fcc2({b3[0] + b3[1], b3[1], b3[2] - b3[0]});
  CHECK(fcc == fcc2);
  CHECK(fcc.canonical().abs_det() == 2);
}

TEST_CASE("multiplicity_at examples") {
  auto sq = shapes::unit_square();
  auto origin = TranslateSet::from_vectors({Vec{0, 0}});
  CHECK(multiplicity_at(sq, origin, Vec{Rational(1, 2), Rational(1, 2)}) == 1);
  CHECK(multiplicity_at(sq, origin, Vec{5, 5}) == 0);
  CHECK_THROWS_AS(multiplicity_at(sq, origin, Vec{1, Rational(1, 2)}), NonGenericPoint);

  std::vector<Vector> window;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) window.push_back(Vec{i, j});
  CHECK(multiplicity_at(shapes::box2(2, 2), TranslateSet::from_vectors(window), Vec{Rational(1, 2), Rational(1, 2)}) ==
        4);
}

TEST_CASE("translate multisets keep multiplicities") {
  TranslateSet x = TranslateSet::from_vectors({Vec{0, 0}, Vec{0, 0}, Vec{1, 0}});
  CHECK(x.entries().size() == 2);
  CHECK(x.total() == 3);
  CHECK(x.multiplicity_of(Vec{0, 0}) == 2);
  CHECK(multiplicity_at(shapes::unit_square(), x, Vec{Rational(1, 3), Rational(1, 3)}) == 2);
  CHECK_THROWS_AS(x.add(Vec{2, 2}, 0), PreconditionError);
}

TEST_CASE("multiplicity_at matches the brute-force oracle on random generic points") {
  std::mt19937_64 rng(11);
  struct Case {
    Polytope p;
    Lattice l;
  };
  std::vector<Case> cases{{shapes::octagon_o7(), Lattice::integer(2)},
                          {shapes::hexagon_h6(), lattice2(Vec{3, 1}, Vec{1, 2})},
                          {shapes::box2(2, 2), Lattice::integer(2)},
                          {shapes::triangle(), lattice2(Vec{1, 0}, Vec{Rational(1, 2), 1})}};
  long checked = 0;
  for (const auto& c : cases) {
    const auto cyc = cycle_of(c.p);
    std::vector<Vector> xs;
    for (int i = -6; i <= 6; ++i)
      for (int j = -6; j <= 6; ++j) xs.push_back(c.l.point({i, j}));
    const auto window = TranslateSet::from_vectors(xs);
    for (int n = 0; n < 250; ++n) {
      Point q{oracle::random_fraction(rng, -2, 3, 1009), oracle::random_fraction(rng, -2, 3, 1013)};
      long expect = oracle::set_count(cyc, xs, q);
      if (expect < 0) continue;
      CHECK(multiplicity_at(c.p, window, q) == expect);
      CHECK(lattice_multiplicity_at(c.p, c.l, q) == expect);
      ++checked;
    }
  }
  CHECK(checked > 900);
}

TEST_CASE("exact 2D verifier examples") {
  auto z2 = Lattice::integer(2);
  auto r1 = verify_lattice_tiling(shapes::unit_square(), z2);
  CHECK(r1.verdict == CoverageVerdict::Constant);
  CHECK(r1.k == 1);
  CHECK(r1.method == VerificationMethod::Exact2D);
  CHECK(r1.volume_identity.consistent);

  auto r4 = verify_lattice_tiling(shapes::box2(2, 2), z2);
  CHECK(r4.verdict == CoverageVerdict::Constant);
  CHECK(r4.k == 4);
  CHECK(r4.volume_identity.volume == 4);
  CHECK(r4.volume_identity.det == 1);

  auto gap = verify_lattice_tiling(shapes::unit_square(), lattice2(Vec{2, 0}, Vec{0, 1}));
  CHECK(gap.verdict == CoverageVerdict::NotCovering);
  REQUIRE(gap.gap_witness.has_value());
  CHECK(lattice_multiplicity_at(shapes::unit_square(), lattice2(Vec{2, 0}, Vec{0, 1}), *gap.gap_witness) == 0);
  CHECK_FALSE(gap.volume_identity.consistent);

  auto o7 = verify_lattice_tiling(shapes::octagon_o7(), z2);
  CHECK(o7.verdict == CoverageVerdict::Constant);
  CHECK(o7.k == 7);
  CHECK(o7.volume_identity.consistent);

  auto h6 = verify_lattice_tiling(shapes::hexagon_h6(), lattice2(Vec{3, 1}, Vec{1, 2}));
  CHECK(h6.verdict == CoverageVerdict::Constant);
  CHECK(h6.k == 1);
}

TEST_CASE("non-constant coverage yields two generic witnesses") {
  // Unit square with lattice {(1,0),(1/2,1)}... covers once. Use a 2x1 box on
  // the lattice {(1,0),(0,3/2)}: rows overlap in a strip.
  auto p = shapes::box2(1, 2);
  auto l = lattice2(Vec{1, 0}, Vec{0, Rational(3, 2)});
  auto r = verify_lattice_tiling(p, l);
  REQUIRE(r.verdict == CoverageVerdict::NonConstant);
  CHECK(r.values.first == 1);
  CHECK(r.values.second == 2);
  CHECK(lattice_multiplicity_at(p, l, *r.witness_lo) == 1);
  CHECK(lattice_multiplicity_at(p, l, *r.witness_hi) == 2);
}

TEST_CASE("verifier cell samples agree with the oracle everywhere") {
  const auto p = shapes::octagon_o7();
  const auto l = lattice2(Vec{2, 1}, Vec{-1, 3});  // det 7: not a tiling by O7
  const auto arr = kernels::build_fundamental_arrangement(p, l);
  const auto events = kernels::event_abscissae(arr.segments, Execution::Serial);
  const auto samples = kernels::cell_samples(arr, events, Execution::Serial);
  const auto counts = kernels::count_cover(p, arr.translates, samples, Execution::Serial);
  const auto cyc = cycle_of(p);
  REQUIRE(samples.size() == counts.size());
  for (std::size_t i = 0; i < samples.size(); ++i)
    CHECK(counts[i] == oracle::lattice_count(cyc, l.basis_vector(0), l.basis_vector(1), samples[i], 8));
  auto r = verify_lattice_tiling(p, l);
  CHECK(r.verdict != CoverageVerdict::Constant);
}

TEST_CASE("sampled 3D verification") {
  VerifyOptions opts;
  opts.samples_3d = 300;
  auto cube = verify_lattice_tiling(shapes::unit_cube(), Lattice::integer(3), opts);
  CHECK(cube.verdict == CoverageVerdict::Constant);
  CHECK(cube.k == 1);
  CHECK(cube.method == VerificationMethod::Sampled3D);
  CHECK(cube.samples == 300);
  CHECK(cube.volume_identity.consistent);

  auto box = verify_lattice_tiling(shapes::box3(2, 1, 1), Lattice::integer(3), opts);
  CHECK(box.verdict == CoverageVerdict::Constant);
  CHECK(box.k == 2);

  // Rhombic dodecahedron tiles with the fcc lattice spanned by (2,2,0), (2,0,2), (0,2,2).
  auto rd = verify_lattice_tiling(shapes::rhombic_dodecahedron(),
                                  Lattice({Vec{2, 2, 0}, Vec{2, 0, 2}, Vec{0, 2, 2}}), opts);
  CHECK(rd.verdict == CoverageVerdict::Constant);
  CHECK(rd.k == 1);
  CHECK(rd.volume_identity.consistent);

  auto sparse = verify_lattice_tiling(shapes::unit_cube(), Lattice({Vec{2, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}}), opts);
  CHECK(sparse.verdict == CoverageVerdict::NotCovering);
}

TEST_CASE("lattice windows contain the translates meeting the box") {
  auto p = shapes::box2(2, 2);
  auto w = lattice_window(p, Lattice::integer(2), Vec{2, Rational(1, 2)}, Rational(1, 4));
  // [x, x+2] meets [7/4, 9/4] for x in {0, 1, 2}; [y, y+2] meets [1/4, 3/4] for y in {-1, 0}.
  CHECK(w.entries().size() == 6);
  CHECK(w.contains(Vec{0, 0}));
  CHECK(w.contains(Vec{2, -1}));
  CHECK_FALSE(w.contains(Vec{3, 0}));
}

TEST_CASE("early stop on the first cell still gives a consistent verdict") {
  auto p = convex_hull(std::vector<Point>{Vec{0, 0}, Vec{0, 2}, Vec{2, -1}, Vec{2, 4}, Vec{4, -1}, Vec{4, 4}, Vec{6, 1},
                                          Vec{6, 3}});
  Lattice l({Vec{1, 7}, Vec{0, 24}});
  VerifyOptions opts;
  opts.expected_k = 1;
  auto early = verify_lattice_tiling(p, l, opts);
  CHECK(early.verdict == CoverageVerdict::NonConstant);
  CHECK(early.values.first != early.values.second);
  CHECK(lattice_multiplicity_at(p, l, *early.witness_lo) == early.values.first);
  CHECK(lattice_multiplicity_at(p, l, *early.witness_hi) == early.values.second);
  CHECK(verify_lattice_tiling(p, l).verdict == CoverageVerdict::NotCovering);
}
