#include "tilescope/classify.hpp"

#include <algorithm>
#include <exception>

#include "tilescope/errors.hpp"
#include "tilescope/kernels.hpp"

namespace tilescope {

namespace {

Lattice lattice_from_edges(const Polytope& p) {
  std::vector<Vec> edges;
  for (const auto& f : p.facets()) edges.push_back(p.vertex(f.cycle[1]) - p.vertex(f.cycle[0]));
  if (edges.size() == 4) return Lattice({edges[0], edges[1]});
  if (edges.size() == 6) return Lattice({edges[0] + edges[1], edges[1] + edges[2]});
  throw NotATile("construct_lattice_2d: a 2D translative tile has four or six edges");
}

MultiplicityReport verify_onefold(const Polytope& p, const Lattice& l) {
  auto r = verify_lattice_tiling(p, l);
  if (r.verdict != CoverageVerdict::Constant || r.k != 1 || !r.volume_identity.consistent)
    throw InternalVerificationFailure("constructed lattice does not give a onefold tiling");
  return r;
}

TileDecision decide(const Polytope& p) {
  TileDecision d;
  d.symmetry = cs_facets_report(p);
  if (!d.symmetry.body_center) {
    d.reason = TileReason::NotCS;
    return d;
  }
  if (!d.symmetry.is_cs_with_cs_facets) {
    d.reason = TileReason::FacetNotCS;
    return d;
  }
  d.belts = belt_condition(p);
  if (d.belts->verdict == BeltVerdict::Fail) {
    d.reason = TileReason::BeltWitness;
    d.witness = d.belts->witness;
    return d;
  }
  d.verdict = TileVerdict::Tile;
  d.reason = TileReason::Certified;
  return d;
}

}  // namespace

TileDecision is_translative_tile(const Polytope& p) {
  TileDecision d = decide(p);
  if (d.verdict == TileVerdict::Tile && p.dim() == 2) {
    d.lattice = lattice_from_edges(p);
    d.crosscheck = verify_onefold(p, *d.lattice);
  }
  return d;
}

TileDecision is_twofold_translative_tile(const Polytope& p) {
  TileDecision d = is_translative_tile(p);
  d.basis = DecisionBasis::TwofoldEquivalence;
  return d;
}

Lattice construct_lattice_2d(const Polytope& p) {
  if (p.dim() != 2) throw NotATile("construct_lattice_2d: polytope is not 2D");
  if (decide(p).verdict != TileVerdict::Tile) throw NotATile("construct_lattice_2d: polytope is not a translative tile");
  Lattice l = lattice_from_edges(p);
  verify_onefold(p, l);
  return l;
}

namespace {

struct Candidate {
  Lattice lattice;
  long k;
};

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> small, large;
  for (Integer a = 1; a * a <= n; ++a) {
    if (n % a != 0) continue;
    small.push_back(a);
    if (a * a != n) large.push_back(n / a);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<SearchHit> try_candidate(const Polytope& p, const Candidate& c) {
  // A handful of random points rejects most candidates before the exact
  // arrangement is built.
  for (const auto& s : kernels::sample_cover(p, c.lattice, 8, 0, Execution::Serial))
    if (s.count != c.k) return std::nullopt;
  VerifyOptions opts;
  opts.execution = Execution::Serial;
  opts.expected_k = c.k;
  auto r = verify_lattice_tiling(p, c.lattice, opts);
  if (r.verdict != CoverageVerdict::Constant || r.k != c.k) return std::nullopt;
  return SearchHit{c.lattice, c.k, std::move(r)};
}

}  // namespace

SearchResult search_lattice_multiplicity(const Polytope& p, long max_k, const SearchBudget& budget, Execution exec) {
  if (p.dim() != 2) throw PreconditionError("search_lattice_multiplicity: 2D only");
  if (budget.grid_refinement < 1) throw PreconditionError("search_lattice_multiplicity: refinement must be positive");
  SearchResult result;
  result.budget = budget;
  Integer den = 1;
  for (const auto& v : p.vertices())
    for (int i = 0; i < 2; ++i) den = lcm(den, v[i].get_den());
  den *= budget.grid_refinement;
  result.grid_denominator = den;

  const Rational vol = volume(p);
  std::vector<Candidate> cands;
  for (long k = 1; k <= max_k; ++k) {
    const Rational n_rat = vol * den * den / k;  // det in grid units
    if (n_rat.get_den() != 1) continue;
    const Integer n = n_rat.get_num();
    long emitted = 0;
    for (const auto& a : divisors(n)) {
      const Integer c = n / a;
      for (Integer h = 0; h < c; ++h) {
        if (emitted == budget.max_candidates_per_k) {
          result.truncated = true;
          break;
        }
        // Column HNF [[a, 0], [h, c]] scaled by 1/den.
        cands.push_back({Lattice({Vec{make_rational(a, den), make_rational(h, den)}, Vec{0, make_rational(c, den)}}), k});
        ++emitted;
      }
      if (emitted == budget.max_candidates_per_k) break;
    }
  }
  result.candidates_examined = static_cast<long>(cands.size());

  std::vector<std::optional<SearchHit>> hits(cands.size());
  const long n = static_cast<long>(cands.size());
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) hits[i] = try_candidate(p, cands[i]);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      try {
        hits[i] = try_candidate(p, cands[i]);
      } catch (...) {
#pragma omp critical(search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  for (auto& h : hits)
    if (h) result.found.push_back(std::move(*h));
  std::stable_sort(result.found.begin(), result.found.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.lattice < b.lattice;
  });
  return result;
}

}  // namespace tilescope
