#pragma once

#include <optional>
#include <vector>

#include "tilescope/belts.hpp"
#include "tilescope/multiplicity.hpp"
#include "tilescope/symmetry.hpp"

namespace tilescope {

enum class TileVerdict { Tile, NotTile };
enum class TileReason { NotCS, FacetNotCS, BeltWitness, Certified };
/// How the verdict was reached: directly from the belt criterion, or for the
/// twofold question by its equivalence with the onefold one.
enum class DecisionBasis { BeltCriterion, TwofoldEquivalence };

struct TileDecision {
  TileVerdict verdict = TileVerdict::NotTile;
  TileReason reason = TileReason::NotCS;
  DecisionBasis basis = DecisionBasis::BeltCriterion;
  SymmetryReport symmetry;
  std::optional<BeltCertificate> belts;  // when the symmetry gates pass
  std::optional<Belt> witness;           // BeltWitness only
  std::optional<Lattice> lattice;        // 2D Tile only
  std::optional<MultiplicityReport> crosscheck;
};

/// cs body -> cs facets -> every belt has 4 or 6 facets. 2D tiles also get a
/// constructed lattice cross-checked by the exact verifier.
TileDecision is_translative_tile(const Polytope& p);

/// Same verdict as is_translative_tile, reached through the twofold/onefold
/// equivalence; search_lattice_multiplicity corroborates it independently.
TileDecision is_twofold_translative_tile(const Polytope& p);

/// Parallelogram: two consecutive edge vectors. Centrally symmetric hexagon
/// with consecutive edges e1, e2, e3: {e1 + e2, e2 + e3}. Throws NotATile
/// unless p is a 2D translative tile and InternalVerificationFailure if the
/// result does not verify as a onefold tiling.
Lattice construct_lattice_2d(const Polytope& p);

struct SearchBudget {
  /// Candidates are sublattices of (1 / (D * refinement)) Z^2 where D is the
  /// common denominator of the vertex coordinates.
  long grid_refinement = 1;
  long max_candidates_per_k = 20000;
};

struct SearchHit {
  Lattice lattice;
  long k = 0;
  MultiplicityReport report;
};

struct SearchResult {
  std::vector<SearchHit> found;  // ordered by k, then canonical lattice
  SearchBudget budget;
  Integer grid_denominator;
  long candidates_examined = 0;
  bool truncated = false;
};

/// Enumerates every sublattice of the grid with |det| = volume / k (one
/// Hermite normal form each) for k = 1..max_k, verifies each exactly and
/// returns the k-fold lattice tilings found. 2D only.
SearchResult search_lattice_multiplicity(const Polytope& p, long max_k, const SearchBudget& budget = {},
                                         Execution exec = Execution::Parallel);

}  // namespace tilescope
