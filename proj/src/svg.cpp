#include "tilescope/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

#include "tilescope/errors.hpp"

namespace tilescope::svg {

namespace {

struct Frame {
  double min_x, min_y, max_x, max_y;
  double scale;
  double pad = 20.0;

  double x(double v) const { return pad + (v - min_x) * scale; }
  double y(double v) const { return pad + (max_y - v) * scale; }
  double width() const { return 2 * pad + (max_x - min_x) * scale; }
  double height() const { return 2 * pad + (max_y - min_y) * scale; }
};

Frame frame_for(const std::vector<std::array<double, 2>>& pts, double target = 480.0) {
  Frame f{pts[0][0], pts[0][1], pts[0][0], pts[0][1], 1.0};
  for (const auto& p : pts) {
    f.min_x = std::min(f.min_x, p[0]);
    f.max_x = std::max(f.max_x, p[0]);
    f.min_y = std::min(f.min_y, p[1]);
    f.max_y = std::max(f.max_y, p[1]);
  }
  const double span = std::max({f.max_x - f.min_x, f.max_y - f.min_y, 1e-9});
  f.scale = target / span;
  return f;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string header(const Frame& f) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(f.width()) + "\" height=\"" + fmt(f.height()) +
         "\" viewBox=\"0 0 " + fmt(f.width()) + " " + fmt(f.height()) + "\">\n";
}

std::array<double, 2> xy(const Point& p) {
  auto d = to_doubles(p);
  return {d[0], d[1]};
}

}  // namespace

std::string render_polytope(const Polytope& p) {
  std::vector<std::array<double, 2>> pts;
  for (const auto& v : p.vertices()) pts.push_back(xy(v));
  const Frame f = frame_for(pts);
  std::ostringstream out;
  out << header(f);
  if (p.dim() == 2) {
    out << "<polygon fill=\"#eef\" stroke=\"none\" points=\"";
    for (int v : p.boundary_cycle()) out << fmt(f.x(xy(p.vertex(v))[0])) << "," << fmt(f.y(xy(p.vertex(v))[1])) << " ";
    out << "\"/>\n";
    // Opposite edges of a centrally symmetric polygon share a color.
    const int m = p.num_facets();
    for (int i = 0; i < m; ++i) {
      const auto& c = p.facet(i).cycle;
      auto a = xy(p.vertex(c[0])), b = xy(p.vertex(c[1]));
      out << "<line x1=\"" << fmt(f.x(a[0])) << "\" y1=\"" << fmt(f.y(a[1])) << "\" x2=\"" << fmt(f.x(b[0]))
          << "\" y2=\"" << fmt(f.y(b[1])) << "\" stroke=\"" << kPalette[(i % (m / 2 > 0 ? m / 2 : 1)) % 8]
          << "\" stroke-width=\"3\"/>\n";
    }
  } else {
    for (const auto& e : p.faces().faces[1]) {
      auto a = xy(p.vertex(e[0])), b = xy(p.vertex(e[1]));
      out << "<line x1=\"" << fmt(f.x(a[0])) << "\" y1=\"" << fmt(f.y(a[1])) << "\" x2=\"" << fmt(f.x(b[0]))
          << "\" y2=\"" << fmt(f.y(b[1])) << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (int i = 0; i < p.num_vertices(); ++i) {
    auto a = xy(p.vertex(i));
    out << "<circle cx=\"" << fmt(f.x(a[0])) << "\" cy=\"" << fmt(f.y(a[1])) << "\" r=\"3\" fill=\"#000\"/>\n";
    out << "<text x=\"" << fmt(f.x(a[0]) + 5) << "\" y=\"" << fmt(f.y(a[1]) - 5) << "\" font-size=\"11\">" << i
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_tiling(const Polytope& p, const Lattice& lattice) {
  if (p.dim() != 2) throw PreconditionError("render_tiling: 2D only");
  const Vec& b1 = lattice.basis_vector(0);
  const Vec& b2 = lattice.basis_vector(1);
  // Window: the fundamental parallelogram dilated by 1 in each basis direction.
  std::vector<Point> window;
  for (int i : {-1, 2})
    for (int j : {-1, 2}) window.push_back(Rational(i) * b1 + Rational(j) * b2);
  std::vector<Point> reach;
  for (const auto& w : window)
    for (const auto& v : p.vertices()) reach.push_back(w - v);
  const auto translates = lattice_points_near(lattice, reach);

  std::vector<std::array<double, 2>> pts;
  for (const auto& w : window) pts.push_back(xy(w));
  Frame f = frame_for(pts);
  std::ostringstream out;
  out << header(f);
  out << "<defs><clipPath id=\"win\"><rect x=\"0\" y=\"0\" width=\"" << fmt(f.width()) << "\" height=\""
      << fmt(f.height()) << "\"/></clipPath></defs>\n<g clip-path=\"url(#win)\">\n";
  for (const auto& t : translates) {
    out << "<polygon fill=\"#2060c0\" fill-opacity=\"0.12\" stroke=\"#103060\" stroke-width=\"0.8\" points=\"";
    for (int v : p.boundary_cycle()) {
      auto a = xy(p.vertex(v) + t);
      out << fmt(f.x(a[0])) << "," << fmt(f.y(a[1])) << " ";
    }
    out << "\"/>\n";
  }
  const Point o = Vec::zero(2);
  out << "<polygon fill=\"none\" stroke=\"#c02020\" stroke-width=\"2\" stroke-dasharray=\"6,3\" points=\"";
  for (const auto& c : {o, b1, b1 + b2, b2}) {
    auto a = xy(c);
    out << fmt(f.x(a[0])) << "," << fmt(f.y(a[1])) << " ";
  }
  out << "\"/>\n</g>\n</svg>\n";
  return out.str();
}

}  // namespace tilescope::svg
