#pragma once

// Data-parallel inner loops of the multiplicity verifier. Every kernel has a
// serial reference path and an OpenMP path; both must produce identical
// results in identical order.

#include <cstdint>
#include <optional>
#include <vector>

#include "tilescope/clip.hpp"
#include "tilescope/lattice.hpp"
#include "tilescope/multiplicity.hpp"

namespace tilescope::kernels {

struct Segment {
  Point a, b;
};

/// Half-open fundamental parallelogram of a 2D lattice and the edges of every
/// translate of P clipped to its closure.
struct FundamentalArrangement {
  std::vector<Point> corners;  // counterclockwise
  std::vector<Halfspace> bounds;
  std::vector<Vector> translates;  // lattice vectors whose translate may meet the closure
  std::vector<Segment> segments;   // includes the parallelogram's own edges
};

FundamentalArrangement build_fundamental_arrangement(const Polytope& p, const Lattice& lattice);

/// Sorted distinct x-coordinates of segment endpoints and pairwise crossings.
std::vector<Rational> event_abscissae(const std::vector<Segment>& segments, Execution exec);

/// One exact interior point per trapezoid of the vertical slab decomposition
/// that lies inside the open parallelogram. Every face of the arrangement
/// contains at least one of them.
std::vector<Point> cell_samples(const FundamentalArrangement& arr, const std::vector<Rational>& events,
                                Execution exec);

/// Coverage count of each sample by P + translates; -1 marks a sample lying
/// on some translate boundary. With stop_unless set (serial path only) the
/// scan stops after the first count different from it, and the returned
/// vector is truncated there.
std::vector<long> count_cover(const Polytope& p, const std::vector<Vector>& translates,
                              const std::vector<Point>& samples, Execution exec,
                              std::optional<long> stop_unless = std::nullopt);

struct SampledCount {
  Point point;
  long count = 0;
};

/// n deterministic pseudo-random rational points of the half-open
/// fundamental parallelepiped, each resampled until it lies on no translate
/// boundary, with its exact coverage count.
std::vector<SampledCount> sample_cover(const Polytope& p, const Lattice& lattice, long n, std::uint64_t seed,
                                       Execution exec);

}  // namespace tilescope::kernels
