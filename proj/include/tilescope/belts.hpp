#pragma once

#include <optional>
#include <vector>

#include "tilescope/polytope.hpp"

namespace tilescope {

/// B_P(G): the facets containing a translate of subfacet G, in cyclic order.
///
/// The cyclic order is the counterclockwise angular order of the facet normals
/// projected to the plane orthogonal to G (the plane itself in 2D), viewed
/// from the tip of `axis`. `axis` is the sign-normalized edge vector of G in
/// 3D and unset in 2D.
struct Belt {
  int generator = -1;  // subfacet index of G
  std::optional<Vector> axis;
  std::vector<int> facet_ids;
  /// Subfacets that are translates of G.
  std::vector<int> members;

  int size() const { return static_cast<int>(facet_ids.size()); }
};

/// Belt-local 2D frame: projects along the belt axis so belt facets become
/// the edges of a convex polygon traversed counterclockwise.
struct BeltFrame {
  std::optional<Vector> axis;
  Vector u, w;  // orthogonal basis of the cross-section plane (3D only)

  explicit BeltFrame(const Belt& belt);
  Vec project(const Vec& v) const;
};

std::vector<Belt> belts_of(const Polytope& p);

/// Index into belts_of(p) of the belt whose members include subfacet g.
int belt_index_of(const std::vector<Belt>& belts, int subfacet);

enum class BeltVerdict { Pass, Fail };

struct BeltCertificate {
  BeltVerdict verdict = BeltVerdict::Fail;
  std::vector<Belt> belts;
  std::optional<Belt> witness;
};

BeltCertificate belt_condition(const Polytope& p);

}  // namespace tilescope
