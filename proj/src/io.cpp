#include "tilescope/io.hpp"

#include <fstream>

#include "tilescope/errors.hpp"

namespace tilescope::io {

ordered_json to_json(const Rational& r) { return tilescope::to_string(r); }

ordered_json to_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(tilescope::to_string(v[i]));
  return a;
}

Rational rational_from_json(const ordered_json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("expected a rational \"p/q\" string, got " + j.dump());
}

Vec vec_from_json(const ordered_json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError("expected an array of " + std::to_string(dim) + " rationals, got " + j.dump());
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rational_from_json(j[i]);
  return v;
}

Polytope polytope_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw ParseError("polytope JSON needs \"dim\" and \"vertices\"");
  const auto& dj = j["dim"];
  if (!dj.is_number_integer()) throw ParseError("\"dim\" must be an integer");
  const int dim = dj.get<int>();
  if (dim != 2 && dim != 3) throw ParseError("\"dim\" must be 2 or 3");
  if (!j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
  std::vector<Point> pts;
  for (const auto& v : j["vertices"]) pts.push_back(vec_from_json(v, dim));
  return convex_hull(pts);
}

ordered_json polytope_to_json(const Polytope& p) {
  ordered_json j;
  j["dim"] = p.dim();
  j["vertices"] = ordered_json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(to_json(v));
  return j;
}

Lattice lattice_from_json(const ordered_json& j, int dim) {
  if (!j.is_object() || !j.contains("lattice") || !j["lattice"].is_array())
    throw ParseError("lattice JSON needs a \"lattice\" array of basis vectors");
  std::vector<Vector> basis;
  for (const auto& b : j["lattice"]) basis.push_back(vec_from_json(b, dim));
  if (static_cast<int>(basis.size()) != dim) throw ParseError("lattice needs exactly " + std::to_string(dim) + " basis vectors");
  try {
    return Lattice(std::move(basis));
  } catch (const DegenerateInput& e) {
    throw ParseError(e.what());
  }
}

ordered_json lattice_to_json(const Lattice& l) {
  ordered_json j;
  j["lattice"] = ordered_json::array();
  for (const auto& b : l.basis()) j["lattice"].push_back(to_json(b));
  return j;
}

TranslateSet translates_from_json(const ordered_json& j, int dim) {
  if (!j.is_object() || !j.contains("translates") || !j["translates"].is_array())
    throw ParseError("translate JSON needs a \"translates\" array");
  TranslateSet x;
  for (const auto& e : j["translates"]) {
    if (!e.is_object() || !e.contains("v")) throw ParseError("translate entries need \"v\"");
    long m = 1;
    if (e.contains("m")) {
      if (!e["m"].is_number_integer() || e["m"].get<long>() <= 0)
        throw ParseError("translate multiplicity \"m\" must be a positive integer");
      m = e["m"].get<long>();
    }
    x.add(vec_from_json(e["v"], dim), m);
  }
  return x;
}

ordered_json translates_to_json(const TranslateSet& x) {
  ordered_json j;
  j["translates"] = ordered_json::array();
  for (const auto& e : x.entries()) j["translates"].push_back({{"v", to_json(e.vector)}, {"m", e.multiplicity}});
  return j;
}

Point parse_point(const std::string& text, int dim) {
  Vec v(dim);
  std::size_t start = 0;
  for (int i = 0; i < dim; ++i) {
    std::size_t comma = text.find(',', start);
    if ((i + 1 < dim) == (comma == std::string::npos))
      throw ParseError("point '" + text + "' must have " + std::to_string(dim) + " comma-separated coordinates");
    v[i] = parse_rational(std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    start = comma + 1;
  }
  return v;
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

ordered_json vector_list(const std::vector<Vector>& vs) {
  ordered_json a = ordered_json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

ordered_json optional_point(const std::optional<Point>& p) { return p ? to_json(*p) : ordered_json(nullptr); }

}  // namespace

ordered_json to_json(const FaceLattice& f) {
  ordered_json j;
  j["f_vector"] = ordered_json::array();
  for (const auto& level : f.faces) j["f_vector"].push_back(level.size());
  j["faces"] = f.faces;
  ordered_json inc = ordered_json::array();
  for (const auto& pair : f.subfacet_facets) inc.push_back({pair[0], pair[1]});
  j["subfacet_facets"] = inc;
  return j;
}

ordered_json to_json(const SymmetryReport& s) {
  ordered_json j;
  j["body_center"] = optional_point(s.body_center);
  j["facet_centers"] = ordered_json::array();
  for (const auto& c : s.facet_centers) j["facet_centers"].push_back(optional_point(c));
  j["is_cs_with_cs_facets"] = s.is_cs_with_cs_facets;
  return j;
}

ordered_json to_json(const Belt& b) {
  ordered_json j;
  j["generator"] = b.generator;
  j["axis"] = b.axis ? to_json(*b.axis) : ordered_json(nullptr);
  j["size"] = b.size();
  j["facet_ids"] = b.facet_ids;
  return j;
}

ordered_json to_json(const BeltCertificate& c) {
  ordered_json j;
  j["verdict"] = c.verdict == BeltVerdict::Pass ? "Pass" : "Fail";
  j["belts"] = ordered_json::array();
  for (const auto& b : c.belts) j["belts"].push_back(to_json(b));
  j["witness"] = c.witness ? to_json(*c.witness) : ordered_json(nullptr);
  return j;
}

const char* to_string(CoverageVerdict v) {
  switch (v) {
    case CoverageVerdict::Constant: return "Constant";
    case CoverageVerdict::NonConstant: return "NonConstant";
    case CoverageVerdict::NotCovering: return "NotCovering";
  }
  return "?";
}

const char* to_string(TileVerdict v) { return v == TileVerdict::Tile ? "Tile" : "NotTile"; }

const char* to_string(TileReason r) {
  switch (r) {
    case TileReason::NotCS: return "NotCS";
    case TileReason::FacetNotCS: return "FacetNotCS";
    case TileReason::BeltWitness: return "BeltWitness";
    case TileReason::Certified: return "Certified";
  }
  return "?";
}

ordered_json to_json(const MultiplicityReport& r) {
  ordered_json j;
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == CoverageVerdict::Constant) j["k"] = r.k;
  if (r.verdict == CoverageVerdict::NonConstant) {
    j["witness_lo"] = optional_point(r.witness_lo);
    j["witness_hi"] = optional_point(r.witness_hi);
    j["values"] = {r.values.first, r.values.second};
  }
  if (r.verdict == CoverageVerdict::NotCovering) j["witness"] = optional_point(r.gap_witness);
  j["method"] = r.method == VerificationMethod::Exact2D ? "Exact2D" : "Sampled3D";
  j["samples"] = r.samples;
  j["volume_identity"] = {{"volume", to_json(r.volume_identity.volume)},
                          {"det", to_json(r.volume_identity.det)},
                          {"consistent", r.volume_identity.consistent}};
  return j;
}

ordered_json to_json(const TileDecision& d) {
  ordered_json j;
  j["verdict"] = to_string(d.verdict);
  j["reason"] = to_string(d.reason);
  j["basis"] = d.basis == DecisionBasis::BeltCriterion ? "BeltCriterion" : "TwofoldEquivalence";
  if (d.witness) j["witness"] = to_json(*d.witness);
  j["lattice"] = d.lattice ? lattice_to_json(*d.lattice)["lattice"] : ordered_json(nullptr);
  j["crosscheck"] = d.crosscheck ? to_json(*d.crosscheck) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const SearchResult& r) {
  ordered_json j;
  j["found"] = ordered_json::array();
  for (const auto& h : r.found)
    j["found"].push_back({{"k", h.k}, {"lattice", lattice_to_json(h.lattice)["lattice"]}, {"report", to_json(h.report)}});
  j["budget"] = {{"grid_denominator", r.grid_denominator.get_str()},
                 {"grid_refinement", r.budget.grid_refinement},
                 {"max_candidates_per_k", r.budget.max_candidates_per_k},
                 {"candidates_examined", r.candidates_examined},
                 {"truncated", r.truncated}};
  return j;
}

ordered_json to_json(const BoundaryClassification& c) {
  return {{"all", vector_list(c.all)},
          {"interior_hits", vector_list(c.interior_hits)},
          {"boundary_hits", vector_list(c.boundary_hits)},
          {"touching", vector_list(c.touching)}};
}

ordered_json to_json(const BeltLocalGeometry& g) {
  auto frags = [](const std::vector<FacetFragment>& fs) {
    ordered_json a = ordered_json::array();
    for (const auto& f : fs) a.push_back({{"facet", f.facet}, {"points", vector_list(f.points)}});
    return a;
  };
  ordered_json j;
  j["q"] = to_json(g.q);
  j["direction"] = g.direction ? to_json(*g.direction) : ordered_json(nullptr);
  j["belt"] = g.belt;
  j["F_plus"] = frags(g.plus);
  j["F_minus"] = frags(g.minus);
  j["E_plus"] = g.e_plus ? ordered_json(*g.e_plus) : ordered_json(nullptr);
  j["E_minus"] = g.e_minus ? ordered_json(*g.e_minus) : ordered_json(nullptr);
  j["angle_is_straight"] = g.angle_is_straight;
  j["display_angle_radians"] = g.angle_radians;
  return j;
}

ordered_json to_json(const RefinedSets& r) { return {{"S_contact", vector_list(r.s_contact)}, {"X_side", vector_list(r.side)}}; }

}  // namespace tilescope::io
