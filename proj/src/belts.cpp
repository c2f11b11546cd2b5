#include "tilescope/belts.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tilescope/errors.hpp"
#include "tilescope/symmetry.hpp"

namespace tilescope {

namespace {

// Basis (u, w) of the plane orthogonal to g with u x w a positive multiple of g.
std::pair<Vec, Vec> orthogonal_basis(const Vec& g) {
  const Vec axes[3] = {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}};
  for (const auto& e : axes) {
    Vec u = cross3(g, e);
    if (!u.is_zero()) return {u, cross3(g, u)};
  }
  throw InternalVerificationFailure("orthogonal_basis: zero axis");
}

void order_cyclically(const Polytope& p, Belt& belt) {
  BeltFrame frame(belt);
  std::sort(belt.facet_ids.begin(), belt.facet_ids.end(), [&](int a, int b) {
    return angle_less(frame.project(p.facet(a).normal), frame.project(p.facet(b).normal));
  });
}

}  // namespace

BeltFrame::BeltFrame(const Belt& belt) : axis(belt.axis) {
  if (axis) std::tie(u, w) = orthogonal_basis(*axis);
}

Vec BeltFrame::project(const Vec& v) const {
  if (!axis) return v;
  return Vec{dot(v, u), dot(v, w)};
}

std::vector<Belt> belts_of(const Polytope& p) {
  if (!cs_facets_report(p).is_cs_with_cs_facets)
    throw NotCentrallySymmetric("belts are defined only for centrally symmetric polytopes with centrally symmetric facets");

  std::vector<Belt> out;
  if (p.dim() == 2) {
    // Every vertex is a translate of every other: one belt holding all edges.
    Belt b;
    b.generator = 0;
    b.facet_ids.resize(p.num_facets());
    std::iota(b.facet_ids.begin(), b.facet_ids.end(), 0);
    b.members.resize(p.num_vertices());
    std::iota(b.members.begin(), b.members.end(), 0);
    out.push_back(std::move(b));
    return out;
  }

  // Edges keyed by their sign-normalized edge vector: same key <=> translates.
  std::map<Vec, std::vector<int>> classes;
  for (int e = 0; e < p.num_subfacets(); ++e) {
    const auto& ends = p.subfacet(e);
    classes[sign_normalized(p.vertex(ends[1]) - p.vertex(ends[0]))].push_back(e);
  }
  for (auto& [key, edges] : classes) {
    Belt b;
    b.generator = edges.front();
    b.axis = key;
    b.members = edges;
    std::vector<int> facets;
    for (int e : edges)
      for (int f : p.faces().subfacet_facets[e]) facets.push_back(f);
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    b.facet_ids = std::move(facets);
    order_cyclically(p, b);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Belt& a, const Belt& b) { return a.generator < b.generator; });
  return out;
}

int belt_index_of(const std::vector<Belt>& belts, int subfacet) {
  for (int i = 0; i < static_cast<int>(belts.size()); ++i)
    if (std::find(belts[i].members.begin(), belts[i].members.end(), subfacet) != belts[i].members.end()) return i;
  return -1;
}

BeltCertificate belt_condition(const Polytope& p) {
  BeltCertificate cert;
  cert.belts = belts_of(p);
  cert.verdict = BeltVerdict::Pass;
  for (const auto& b : cert.belts) {
    if (b.size() != 4 && b.size() != 6) {
      cert.verdict = BeltVerdict::Fail;
      cert.witness = b;
      break;
    }
  }
  return cert;
}

}  // namespace tilescope
