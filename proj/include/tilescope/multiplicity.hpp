#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tilescope/lattice.hpp"
#include "tilescope/polytope.hpp"

namespace tilescope {

/// Finite multiset X of translation vectors. Entries hold distinct vectors
/// with positive multiplicities; nothing is ever silently deduplicated.
class TranslateSet {
 public:
  struct Entry {
    Vector vector;
    long multiplicity = 1;
  };

  TranslateSet() = default;
  /// Repeated vectors accumulate multiplicity. Entries stay sorted by vector.
  static TranslateSet from_vectors(const std::vector<Vector>& vectors);

  void add(const Vector& v, long multiplicity = 1);
  const std::vector<Entry>& entries() const { return entries_; }
  long total() const;
  long multiplicity_of(const Vector& v) const;
  bool contains(const Vector& v) const { return multiplicity_of(v) > 0; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry>::iterator lower_bound(const Vector& v);
  std::vector<Entry> entries_;
};

/// Lattice vectors whose translates of P meet the closed box q +- radius.
TranslateSet lattice_window(const Polytope& p, const Lattice& lattice, const Point& q, const Rational& radius);

/// Sum of multiplicities of x with q in int(P + x). Throws NonGenericPoint if
/// q lies on the boundary of any translate.
long multiplicity_at(const Polytope& p, const TranslateSet& x, const Point& q);

/// Same count for the full lattice family P + L.
long lattice_multiplicity_at(const Polytope& p, const Lattice& lattice, const Point& q);

enum class Execution { Serial, Parallel };

enum class CoverageVerdict { Constant, NonConstant, NotCovering };
enum class VerificationMethod { Exact2D, Sampled3D };

struct VolumeIdentity {
  Rational volume;
  Rational det;  // |det L|
  bool consistent = false;  // k * det == volume for a Constant(k) verdict
};

struct MultiplicityReport {
  CoverageVerdict verdict = CoverageVerdict::NotCovering;
  long k = 0;  // Constant only
  /// NonConstant: points attaining the smallest and largest observed counts.
  std::optional<Point> witness_lo, witness_hi;
  std::pair<long, long> values{0, 0};
  /// NotCovering: a point covered by no translate.
  std::optional<Point> gap_witness;
  VerificationMethod method = VerificationMethod::Exact2D;
  long samples = 0;  // points evaluated (arrangement cells in 2D)
  VolumeIdentity volume_identity;
};

struct VerifyOptions {
  Execution execution = Execution::Parallel;
  long samples_3d = 10000;
  std::uint64_t seed = 0;
  /// When set, evaluation stops at the first cell whose count differs. The
  /// Constant(k) answer is unaffected, but an early stop may report
  /// NonConstant where a full scan would also find an uncovered cell.
  std::optional<long> expected_k;
};

MultiplicityReport verify_lattice_tiling(const Polytope& p, const Lattice& lattice, const VerifyOptions& opts = {});

}  // namespace tilescope
