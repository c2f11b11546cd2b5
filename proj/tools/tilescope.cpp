#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "tilescope/classify.hpp"
#include "tilescope/errors.hpp"
#include "tilescope/io.hpp"
#include "tilescope/svg.hpp"

using namespace tilescope;
using io::ordered_json;

namespace {

struct Options {
  std::string polytope;
  std::string lattice;
  std::string translates;
  std::string point;
  std::string window;
  std::string out;
  std::optional<int> subfacet;
  long max_k = 2;
  long refinement = 1;
  long samples = 10000;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  bool serial = false;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("TILESCOPE_SEED")) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("TILESCOPE_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

Execution execution(const Options& o) { return o.serial ? Execution::Serial : Execution::Parallel; }

ordered_json location_json(const Polytope& p, const Location& loc) {
  ordered_json j;
  j["tag"] = loc.interior() ? "Interior" : loc.boundary() ? "Boundary" : "Exterior";
  if (loc.face) {
    j["face"] = {{"dim", loc.face->dim}, {"index", loc.face->index}};
    j["face_vertices"] = p.faces().faces[loc.face->dim][loc.face->index];
  }
  return j;
}

ordered_json analyze(const Polytope& p) {
  ordered_json j;
  j["volume"] = io::to_json(volume(p));
  j["face_lattice"] = io::to_json(p.faces());
  auto one = is_translative_tile(p);
  j["symmetry"] = io::to_json(one.symmetry);
  j["belts"] = one.belts ? io::to_json(*one.belts) : ordered_json(nullptr);
  j["decision"] = io::to_json(one);
  j["twofold_decision"] = io::to_json(is_twofold_translative_tile(p));
  return j;
}

ordered_json verify(const Polytope& p, const Options& o, std::uint64_t seed, ordered_json& input) {
  ordered_json j;
  if (!o.lattice.empty()) {
    auto l = io::lattice_from_json(io::load_json_file(o.lattice), p.dim());
    input["lattice"] = io::lattice_to_json(l)["lattice"];
    VerifyOptions opts;
    opts.execution = execution(o);
    opts.samples_3d = o.samples;
    opts.seed = seed;
    j["multiplicity"] = io::to_json(verify_lattice_tiling(p, l, opts));
    return j;
  }
  // A finite translate set: report overlapping pairs and, with --point, the
  // multiplicity there.
  auto x = io::translates_from_json(io::load_json_file(o.translates), p.dim());
  input["translates"] = io::translates_to_json(x)["translates"];
  ordered_json overlaps = ordered_json::array();
  const auto& es = x.entries();
  for (std::size_t a = 0; a < es.size(); ++a) {
    if (es[a].multiplicity > 1)
      overlaps.push_back(ordered_json::array({io::to_json(es[a].vector), io::to_json(es[a].vector)}));
    for (std::size_t b = a + 1; b < es.size(); ++b)
      if (!interiors_disjoint(p.translated(es[a].vector), p.translated(es[b].vector)))
        overlaps.push_back(ordered_json::array({io::to_json(es[a].vector), io::to_json(es[b].vector)}));
  }
  j["translate_count"] = x.total();
  j["packing"] = overlaps.empty();
  j["overlapping_pairs"] = overlaps;
  if (!o.point.empty()) {
    auto q = io::parse_point(o.point, p.dim());
    input["point"] = io::to_json(q);
    j["multiplicity_at"] = {{"point", io::to_json(q)}, {"multiplicity", multiplicity_at(p, x, q)}};
  }
  return j;
}

int default_subfacet(const Polytope& p, const Point& q) {
  for (int g = 0; g < p.num_subfacets(); ++g) {
    try {
      belt_local_geometry(p, g, q);
      return g;
    } catch (const PointNotOnBelt&) {
    }
  }
  throw PointNotOnBelt("point " + to_string(q) + " is not on the boundary");
}

ordered_json probe(const Polytope& p, const Options& o, ordered_json& input) {
  const Point q = io::parse_point(o.point, p.dim());
  const Rational r = parse_rational(o.window);
  if (r <= 0) throw PreconditionError("--window must be positive");
  input["point"] = io::to_json(q);
  input["window"] = io::to_json(r);
  TranslateSet x;
  if (!o.translates.empty()) {
    x = io::translates_from_json(io::load_json_file(o.translates), p.dim());
    input["translates"] = io::translates_to_json(x)["translates"];
  } else {
    Lattice l = o.lattice.empty() ? Lattice::integer(p.dim())
                                  : io::lattice_from_json(io::load_json_file(o.lattice), p.dim());
    input["lattice"] = io::lattice_to_json(l)["lattice"];
    x = lattice_window(p, l, q, r);
  }

  ordered_json j;
  j["location"] = location_json(p, locate_point(p, q));
  j["window"] = io::translates_to_json(x)["translates"];
  j["boundary_sets"] = io::to_json(boundary_sets(p, x, q));
  const int g = o.subfacet ? *o.subfacet : default_subfacet(p, q);
  if (g < 0 || g >= p.num_subfacets()) throw PreconditionError("--subfacet out of range");
  j["subfacet"] = g;
  j["subfacet_vertices"] = p.subfacet(g);
  j["belt_local_geometry"] = io::to_json(belt_local_geometry(p, g, q));
  j["refined_plus"] = io::to_json(refined_boundary_sets(p, x, g, q, Side::Plus));
  j["refined_minus"] = io::to_json(refined_boundary_sets(p, x, g, q, Side::Minus));
  auto counts = local_multiplicities(p, x, q);
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  j["local_multiplicities"] = counts;
  auto partner = lemma2_probe(p, x, q);
  j["lemma2_partner"] = partner ? io::to_json(*partner) : ordered_json(nullptr);
  return j;
}

ordered_json search(const Polytope& p, const Options& o) {
  if (o.max_k < 1) throw PreconditionError("--max-k must be at least 1");
  SearchBudget budget;
  budget.grid_refinement = o.refinement;
  return {{"search", io::to_json(search_lattice_multiplicity(p, o.max_k, budget, execution(o)))}};
}

ordered_json render(const Polytope& p, const Options& o, ordered_json& input) {
  std::string svg;
  if (!o.lattice.empty()) {
    auto l = io::lattice_from_json(io::load_json_file(o.lattice), p.dim());
    input["lattice"] = io::lattice_to_json(l)["lattice"];
    svg = svg::render_tiling(p, l);
  } else {
    svg = svg::render_polytope(p);
  }
  std::ofstream out(o.out);
  if (!out) throw ParseError("cannot write " + o.out);
  out << svg;
  return {{"svg", o.out}, {"bytes", svg.size()}};
}

int run(const std::string& command, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = resolve_seed(o);
  const Polytope p = io::polytope_from_json(io::load_json_file(o.polytope));

  ordered_json report;
  report["tool"] = "tilescope";
  report["tool_version"] = TILESCOPE_VERSION;
  report["command"] = command;
  report["seed"] = seed;
  ordered_json input;
  input["polytope"] = io::polytope_to_json(p);

  ordered_json body;
  if (command == "analyze") body = analyze(p);
  else if (command == "verify") body = verify(p, o, seed, input);
  else if (command == "probe") body = probe(p, o, input);
  else if (command == "search") body = search(p, o);
  else body = render(p, o, input);

  report["input"] = input;
  for (auto& [k, v] : body.items()) report[k] = v;
  if (o.timing) {
    std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    report["timing"] = {{"display_seconds", took.count()}};
  }
  std::cout << report.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact translative tiling analysis for convex polygons and polyhedra"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("polytope", o.polytope, "Polytope JSON file")->required();
    sub->add_option("--seed", o.seed, "Random seed (default: $TILESCOPE_SEED or 0)");
    sub->add_flag("--timing", o.timing, "Add wall-clock timing to the report");
    sub->add_flag("--serial", o.serial, "Run kernels on one thread");
  };

  auto* analyze = app.add_subcommand("analyze", "Symmetry, belts and tiling decisions");
  common(analyze);

  auto* verify = app.add_subcommand("verify", "Multiplicity of a lattice or a finite translate set");
  common(verify);
  auto* vl = verify->add_option("--lattice", o.lattice, "Lattice JSON file");
  auto* vt = verify->add_option("--translates", o.translates, "Translate set JSON file");
  vl->excludes(vt);
  verify->add_option("--point", o.point, "Point for a multiplicity query with --translates");
  verify->add_option("--samples", o.samples, "Sample points for 3D verification")->check(CLI::PositiveNumber);

  auto* probe = app.add_subcommand("probe", "Boundary classification and belt geometry at a point");
  common(probe);
  probe->add_option("--point", o.point, "Boundary point p/q,p/q[,p/q]")->required();
  probe->add_option("--window", o.window, "Half-width of the translate window")->required();
  probe->add_option("--subfacet", o.subfacet, "Subfacet index generating the belt");
  auto* pl = probe->add_option("--lattice", o.lattice, "Lattice JSON file (default: integer lattice)");
  auto* pt = probe->add_option("--translates", o.translates, "Translate set JSON file");
  pl->excludes(pt);

  auto* search = app.add_subcommand("search", "Search for k-fold lattice tilings (2D)");
  common(search);
  search->add_option("--max-k", o.max_k, "Largest multiplicity to try")->required();
  search->add_option("--refinement", o.refinement, "Grid refinement factor")->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "Write an SVG of the polytope or a tiling patch");
  common(render);
  render->add_option("--lattice", o.lattice, "Lattice JSON file");
  render->add_option("--out", o.out, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (verify->parsed() && o.lattice.empty() && o.translates.empty()) {
    std::cerr << "tilescope: verify needs --lattice or --translates\n";
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const ParseError& e) {
    std::cerr << "tilescope: malformed input: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "tilescope: precondition violated: " << e.what() << '\n';
    return 2;
  } catch (const InternalVerificationFailure& e) {
    std::cerr << "tilescope: internal verification failure: " << e.what() << '\n';
    return 3;
  }
}
