#pragma once

#include <json.hpp>
#include <string>

#include "tilescope/classify.hpp"
#include "tilescope/probes.hpp"

namespace tilescope::io {

using nlohmann::ordered_json;

ordered_json to_json(const Rational& r);
ordered_json to_json(const Vec& v);
Rational rational_from_json(const ordered_json& j);
Vec vec_from_json(const ordered_json& j, int dim);

/// {"dim": d, "vertices": [["p/q", ...], ...]}. Any finite point set is
/// accepted; the hull is taken and the echo lists only its vertices.
Polytope polytope_from_json(const ordered_json& j);
ordered_json polytope_to_json(const Polytope& p);

/// {"lattice": [[...], [...]]}: each inner array is one basis vector.
Lattice lattice_from_json(const ordered_json& j, int dim);
ordered_json lattice_to_json(const Lattice& l);

/// {"translates": [{"v": [...], "m": 1}, ...]}
TranslateSet translates_from_json(const ordered_json& j, int dim);
ordered_json translates_to_json(const TranslateSet& x);

/// "p/q,p/q[,p/q]"
Point parse_point(const std::string& text, int dim);

ordered_json load_json_file(const std::string& path);

ordered_json to_json(const FaceLattice& f);
ordered_json to_json(const SymmetryReport& s);
ordered_json to_json(const Belt& b);
ordered_json to_json(const BeltCertificate& c);
ordered_json to_json(const MultiplicityReport& r);
ordered_json to_json(const TileDecision& d);
ordered_json to_json(const SearchResult& r);
ordered_json to_json(const BoundaryClassification& c);
ordered_json to_json(const BeltLocalGeometry& g);
ordered_json to_json(const RefinedSets& r);

const char* to_string(CoverageVerdict v);
const char* to_string(TileVerdict v);
const char* to_string(TileReason r);

}  // namespace tilescope::io
