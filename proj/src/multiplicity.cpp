#include "tilescope/multiplicity.hpp"

#include <algorithm>

#include "tilescope/errors.hpp"
#include "tilescope/kernels.hpp"

namespace tilescope {

TranslateSet TranslateSet::from_vectors(const std::vector<Vector>& vectors) {
  TranslateSet x;
  for (const auto& v : vectors) x.add(v);
  return x;
}

void TranslateSet::add(const Vector& v, long multiplicity) {
  if (multiplicity <= 0) throw PreconditionError("translate multiplicity must be positive");
  auto it = lower_bound(v);
  if (it != entries_.end() && it->vector == v)
    it->multiplicity += multiplicity;
  else
    entries_.insert(it, {v, multiplicity});
}

std::vector<TranslateSet::Entry>::iterator TranslateSet::lower_bound(const Vector& v) {
  return std::lower_bound(entries_.begin(), entries_.end(), v,
                          [](const Entry& e, const Vector& key) { return e.vector < key; });
}

long TranslateSet::total() const {
  long t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

long TranslateSet::multiplicity_of(const Vector& v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, const Vector& key) { return e.vector < key; });
  return it != entries_.end() && it->vector == v ? it->multiplicity : 0;
}

TranslateSet lattice_window(const Polytope& p, const Lattice& lattice, const Point& q, const Rational& radius) {
  const int d = p.dim();
  // Box corners minus vertices bound every lattice vector whose translate meets the box.
  std::vector<Point> corners;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Point c = q;
    for (int i = 0; i < d; ++i) c[i] += (mask >> i & 1) ? radius : -radius;
    corners.push_back(c);
  }
  std::vector<Point> reach;
  for (const auto& c : corners)
    for (const auto& v : p.vertices()) reach.push_back(c - v);

  std::vector<Rational> box_lo(d), box_hi(d), p_lo(d), p_hi(d);
  for (int i = 0; i < d; ++i) {
    box_lo[i] = q[i] - radius;
    box_hi[i] = q[i] + radius;
    p_lo[i] = p_hi[i] = p.vertex(0)[i];
    for (const auto& v : p.vertices()) {
      if (v[i] < p_lo[i]) p_lo[i] = v[i];
      if (v[i] > p_hi[i]) p_hi[i] = v[i];
    }
  }
  std::vector<Halfspace> box;
  for (int i = 0; i < d; ++i) {
    Vector e(d);
    e[i] = 1;
    box.push_back({e, box_hi[i]});
    box.push_back({-e, -box_lo[i]});
  }

  TranslateSet out;
  for (const auto& t : lattice_points_near(lattice, reach)) {
    bool overlap = true;
    for (int i = 0; i < d && overlap; ++i)
      overlap = p_lo[i] + t[i] <= box_hi[i] && p_hi[i] + t[i] >= box_lo[i];
    if (!overlap) continue;
    // Exact test: some facet of the translate meets the box, or the box lies inside it.
    Polytope moved = p.translated(t);
    bool meets = contains(moved, q);
    for (int f = 0; f < moved.num_facets() && !meets; ++f) {
      if (d == 2) {
        const auto& c = moved.facet(f).cycle;
        meets = clip_segment(moved.vertex(c[0]), moved.vertex(c[1]), box).has_value();
      } else {
        meets = !clip_convex(facet_polygon(moved, f), box).empty();
      }
    }
    if (meets) out.add(t);
  }
  return out;
}

long multiplicity_at(const Polytope& p, const TranslateSet& x, const Point& q) {
  long count = 0;
  for (const auto& e : x.entries()) {
    auto loc = locate_point(p, q - e.vector);
    if (loc.boundary())
      throw NonGenericPoint("point " + to_string(q) + " lies on the boundary of translate " + to_string(e.vector));
    if (loc.interior()) count += e.multiplicity;
  }
  return count;
}

long lattice_multiplicity_at(const Polytope& p, const Lattice& lattice, const Point& q) {
  std::vector<Point> reach;
  for (const auto& v : p.vertices()) reach.push_back(q - v);
  return multiplicity_at(p, TranslateSet::from_vectors(lattice_points_near(lattice, reach)), q);
}

namespace {

struct Observation {
  const Point* point;
  long count;
};

MultiplicityReport summarize(const std::vector<Observation>& obs, const Polytope& p, const Lattice& lattice) {
  MultiplicityReport r;
  r.samples = static_cast<long>(obs.size());
  r.volume_identity.volume = volume(p);
  r.volume_identity.det = lattice.abs_det();
  if (obs.empty()) throw InternalVerificationFailure("verify_lattice_tiling: no sample points");
  const Observation* lo = &obs[0];
  const Observation* hi = &obs[0];
  for (const auto& o : obs) {
    if (o.count < lo->count) lo = &o;
    if (o.count > hi->count) hi = &o;
  }
  if (lo->count == 0) {
    r.verdict = CoverageVerdict::NotCovering;
    r.gap_witness = *lo->point;
    r.values = {lo->count, hi->count};
  } else if (lo->count != hi->count) {
    r.verdict = CoverageVerdict::NonConstant;
    r.witness_lo = *lo->point;
    r.witness_hi = *hi->point;
    r.values = {lo->count, hi->count};
  } else {
    r.verdict = CoverageVerdict::Constant;
    r.k = lo->count;
    r.values = {r.k, r.k};
    r.volume_identity.consistent = Rational(r.k) * r.volume_identity.det == r.volume_identity.volume;
  }
  return r;
}

}  // namespace

MultiplicityReport verify_lattice_tiling(const Polytope& p, const Lattice& lattice, const VerifyOptions& opts) {
  if (p.dim() != lattice.dim()) throw PreconditionError("verify_lattice_tiling: dimension mismatch");

  if (p.dim() == 2) {
    const auto arr = kernels::build_fundamental_arrangement(p, lattice);
    const auto events = kernels::event_abscissae(arr.segments, opts.execution);
    const auto samples = kernels::cell_samples(arr, events, opts.execution);
    const Execution exec = opts.expected_k ? Execution::Serial : opts.execution;
    auto counts = kernels::count_cover(p, arr.translates, samples, exec, opts.expected_k);
    // Stopped at the very first cell: one value is not enough for a witness pair.
    if (opts.expected_k && counts.size() == 1 && counts[0] > 0 && counts[0] != *opts.expected_k)
      counts = kernels::count_cover(p, arr.translates, samples, exec);
    std::vector<Observation> obs;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] < 0)
        throw InternalVerificationFailure("verify_lattice_tiling: cell sample " + to_string(samples[i]) +
                                          " lies on a translate boundary");
      obs.push_back({&samples[i], counts[i]});
    }
    auto r = summarize(obs, p, lattice);
    r.method = VerificationMethod::Exact2D;
    if (r.verdict == CoverageVerdict::Constant && !r.volume_identity.consistent)
      throw InternalVerificationFailure("verify_lattice_tiling: constant count contradicts the volume identity");
    return r;
  }

  const auto sampled = kernels::sample_cover(p, lattice, opts.samples_3d, opts.seed, opts.execution);
  std::vector<Observation> obs;
  for (const auto& s : sampled) obs.push_back({&s.point, s.count});
  auto r = summarize(obs, p, lattice);
  r.method = VerificationMethod::Sampled3D;
  return r;
}

}  // namespace tilescope
