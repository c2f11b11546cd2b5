#include "tilescope/kernels.hpp"

#include <algorithm>
#include <random>

#include "tilescope/errors.hpp"

namespace tilescope::kernels {

namespace {

const Rational& min_x(const Segment& s) { return s.a[0] < s.b[0] ? s.a[0] : s.b[0]; }
const Rational& max_x(const Segment& s) { return s.a[0] < s.b[0] ? s.b[0] : s.a[0]; }

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// x-coordinate of the crossing of two non-parallel segments, if they meet.
std::optional<Rational> crossing_x(const Segment& s, const Segment& t) {
  const Vec r = s.b - s.a, u = t.b - t.a;
  const Rational denom = cross2(r, u);
  if (denom == 0) return std::nullopt;
  const Vec w = t.a - s.a;
  const Rational ps = cross2(w, u) / denom;
  if (ps < 0 || ps > 1) return std::nullopt;
  const Rational pt = cross2(w, r) / denom;
  if (pt < 0 || pt > 1) return std::nullopt;
  return s.a[0] + ps * r[0];
}

void crossings_from(const std::vector<Segment>& segs, std::size_t i, std::vector<Rational>& out) {
  for (std::size_t j = i + 1; j < segs.size(); ++j)
    if (auto x = crossing_x(segs[i], segs[j])) out.push_back(std::move(*x));
}

std::vector<Point> slab_samples(const FundamentalArrangement& arr, const Rational& xa, const Rational& xb) {
  const Rational xm = (xa + xb) / 2;
  std::vector<Rational> ys;
  for (const auto& s : arr.segments) {
    if (s.a[0] == s.b[0]) continue;  // vertical segments sit on event lines
    if (min_x(s) > xa || max_x(s) < xb) continue;
    ys.push_back(s.a[1] + (xm - s.a[0]) * (s.b[1] - s.a[1]) / (s.b[0] - s.a[0]));
  }
  sort_unique(ys);
  std::vector<Point> out;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    Point q{xm, (ys[i] + ys[i + 1]) / 2};
    bool inside = true;
    for (const auto& h : arr.bounds)
      if (dot(h.normal, q) >= h.offset) {
        inside = false;
        break;
      }
    if (inside) out.push_back(std::move(q));
  }
  return out;
}

// Precomputed normal . translate and normal . sample reduce each test to one
// comparison per facet.
long count_one(const Polytope& p, const std::vector<std::vector<Rational>>& shift, const Point& q) {
  const int nf = p.num_facets();
  std::vector<Rational> slack(nf);
  for (int f = 0; f < nf; ++f) slack[f] = p.facet(f).offset - dot(p.facet(f).normal, q);
  long count = 0;
  for (const auto& sh : shift) {
    // q - x in P+... : offset_f - n.(q - x) = slack_f + n.x
    bool interior = true, outside = false;
    for (int f = 0; f < nf; ++f) {
      int s = sgn(slack[f] + sh[f]);
      if (s < 0) {
        outside = true;
        break;
      }
      if (s == 0) interior = false;
    }
    if (outside) continue;
    if (!interior) return -1;
    ++count;
  }
  return count;
}

std::vector<std::vector<Rational>> facet_shifts(const Polytope& p, const std::vector<Vector>& translates) {
  std::vector<std::vector<Rational>> shift(translates.size(), std::vector<Rational>(p.num_facets()));
  for (std::size_t i = 0; i < translates.size(); ++i)
    for (int f = 0; f < p.num_facets(); ++f) shift[i][f] = dot(p.facet(f).normal, translates[i]);
  return shift;
}

constexpr unsigned long kGrid = 2147483647UL;  // prime; sample denominators are 2 * kGrid

Rational grid_coordinate(std::mt19937_64& rng) {
  const unsigned long r = static_cast<unsigned long>(rng() % kGrid);
  return make_rational(Integer(2 * r + 1), Integer(2 * kGrid));
}

}  // namespace

FundamentalArrangement build_fundamental_arrangement(const Polytope& p, const Lattice& lattice) {
  if (p.dim() != 2 || lattice.dim() != 2) throw PreconditionError("fundamental arrangement is 2D only");
  FundamentalArrangement arr;
  const Vec& b1 = lattice.basis_vector(0);
  const Vec& b2 = lattice.basis_vector(1);
  const Point o = Vec::zero(2);
  if (cross2(b1, b2) > 0)
    arr.corners = {o, b1, b1 + b2, b2};
  else
    arr.corners = {o, b2, b1 + b2, b1};
  for (int i = 0; i < 4; ++i) {
    const Vec e = arr.corners[(i + 1) % 4] - arr.corners[i];
    Vec n{e[1], -e[0]};
    arr.bounds.push_back({n, dot(n, arr.corners[i])});
  }
  std::vector<Point> reach;
  for (const auto& c : arr.corners)
    for (const auto& v : p.vertices()) reach.push_back(c - v);
  arr.translates = lattice_points_near(lattice, reach);

  const auto cycle = p.boundary_cycle();
  for (const auto& t : arr.translates) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point a = p.vertex(cycle[i]) + t;
      const Point b = p.vertex(cycle[(i + 1) % cycle.size()]) + t;
      auto piece = clip_segment(a, b, arr.bounds);
      if (piece && !(piece->first == piece->second)) arr.segments.push_back({piece->first, piece->second});
    }
  }
  for (int i = 0; i < 4; ++i) arr.segments.push_back({arr.corners[i], arr.corners[(i + 1) % 4]});
  return arr;
}

std::vector<Rational> event_abscissae(const std::vector<Segment>& segs, Execution exec) {
  std::vector<Rational> xs;
  for (const auto& s : segs) {
    xs.push_back(s.a[0]);
    xs.push_back(s.b[0]);
  }
  const long n = static_cast<long>(segs.size());
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) crossings_from(segs, i, xs);
  } else {
#pragma omp parallel
    {
      std::vector<Rational> local;
#pragma omp for schedule(dynamic, 8) nowait
      for (long i = 0; i < n; ++i) crossings_from(segs, i, local);
#pragma omp critical
      xs.insert(xs.end(), local.begin(), local.end());
    }
  }
  sort_unique(xs);
  return xs;
}

std::vector<Point> cell_samples(const FundamentalArrangement& arr, const std::vector<Rational>& events,
                                Execution exec) {
  const long slabs = static_cast<long>(events.size()) - 1;
  if (slabs <= 0) return {};
  std::vector<std::vector<Point>> per_slab(slabs);
  if (exec == Execution::Serial) {
    for (long i = 0; i < slabs; ++i) per_slab[i] = slab_samples(arr, events[i], events[i + 1]);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < slabs; ++i) per_slab[i] = slab_samples(arr, events[i], events[i + 1]);
  }
  std::vector<Point> out;
  for (auto& v : per_slab)
    for (auto& q : v) out.push_back(std::move(q));
  return out;
}

std::vector<long> count_cover(const Polytope& p, const std::vector<Vector>& translates,
                              const std::vector<Point>& samples, Execution exec, std::optional<long> stop_unless) {
  const auto shift = facet_shifts(p, translates);
  const long n = static_cast<long>(samples.size());
  std::vector<long> counts(n);
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) {
      counts[i] = count_one(p, shift, samples[i]);
      if (stop_unless && counts[i] != *stop_unless) {
        counts.resize(i + 1);
        break;
      }
    }
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) counts[i] = count_one(p, shift, samples[i]);
  }
  return counts;
}

std::vector<SampledCount> sample_cover(const Polytope& p, const Lattice& lattice, long n, std::uint64_t seed,
                                       Execution exec) {
  const int d = p.dim();
  std::vector<std::vector<Rational>> tv;
  for (const auto& v : p.vertices()) tv.push_back(lattice.coordinates(v));

  auto one = [&](long i) -> SampledCount {
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(attempt)};
      std::mt19937_64 rng(seq);
      std::vector<Rational> t(d);
      for (int j = 0; j < d; ++j) t[j] = grid_coordinate(rng);
      Point q(d);
      for (int j = 0; j < d; ++j) q += t[j] * lattice.basis_vector(j);

      std::vector<Integer> lo(d), hi(d);
      for (int j = 0; j < d; ++j) {
        Rational mn = t[j] - tv[0][j], mx = mn;
        for (const auto& c : tv) {
          Rational x = t[j] - c[j];
          if (x < mn) mn = x;
          if (x > mx) mx = x;
        }
        lo[j] = ceil_of(mn);
        hi[j] = floor_of(mx);
      }
      std::vector<Vector> cands;
      bool empty = false;
      for (int j = 0; j < d; ++j) empty |= lo[j] > hi[j];
      if (!empty) {
        std::vector<Integer> k = lo;
        while (true) {
          cands.push_back(lattice.point(k));
          int j = 0;
          for (; j < d; ++j) {
            if (k[j] < hi[j]) {
              ++k[j];
              break;
            }
            k[j] = lo[j];
          }
          if (j == d) break;
        }
      }
      long c = count_one(p, facet_shifts(p, cands), q);
      if (c >= 0) return {q, c};
    }
    throw InternalVerificationFailure("sample_cover: no generic sample after 64 attempts");
  };

  std::vector<SampledCount> out(n);
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) out[i] = one(i);
  } else {
    bool failed = false;
#pragma omp parallel for schedule(dynamic, 32)
    for (long i = 0; i < n; ++i) {
      try {
        out[i] = one(i);
      } catch (const InternalVerificationFailure&) {
#pragma omp atomic write
        failed = true;
      }
    }
    if (failed) throw InternalVerificationFailure("sample_cover: no generic sample after 64 attempts");
  }
  return out;
}

}  // namespace tilescope::kernels
