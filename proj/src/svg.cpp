#include "ckc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "ckc/errors.hpp"
#include "ckc/grid.hpp"

namespace ckc {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string render_svg(const Instance& inst, const PlotOptions& opts) {
  if (inst.metric != MetricKind::EuclideanPlane) throw Error("plot needs a planar instance");
  const int n = inst.n();

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = rat_to_double(inst.coords[i].first);
    const double y = rat_to_double(inst.coords[i].second);
    if (i == 0) {
      minx = maxx = x;
      miny = maxy = y;
    }
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  double pad = 0.1 * std::max(maxx - minx, maxy - miny);
  if (opts.solution) pad = std::max(pad, 1.2 * opts.solution->radius.value());
  if (pad <= 0) pad = 1;
  minx -= pad;
  maxx += pad;
  miny -= pad;
  maxy += pad;

  const double span = std::max(maxx - minx, maxy - miny);
  const double dot = span / 150;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx) << " " << fmt(-maxy)
      << " " << fmt(maxx - minx) << " " << fmt(maxy - miny) << "\">\n";
  out << "<!-- seed " << opts.seed << " -->\n";

  // grid and occupied edge regions
  if (opts.alpha && opts.rho && !opts.rho->is_zero()) {
    GridSpec grid;
    grid.ell = opts.rho->scaled(*opts.alpha / 2);
    std::map<GridEdge, bool> occupied;
    for (int p = 0; p < n; ++p)
      for (const GridEdge& e : edges_near(grid, inst.coords[p].first, inst.coords[p].second, *opts.rho))
        occupied[e] = true;
    const double rho_d = opts.rho->value();
    for (const auto& [edge, unused] : occupied) {
      (void)unused;
      const Rhombus r = rhombus_of(grid, edge);
      // Minkowski sum drawn as a fat round-joined outline around the rhombus
      out << "<polygon points=\"";
      for (int i = 0; i < 4; ++i)
        out << fmt(r.v[i].x.approx()) << "," << fmt(-r.v[i].y.approx()) << (i < 3 ? " " : "");
      out << "\" fill=\"#f2e9c9\" stroke=\"#f2e9c9\" stroke-width=\"" << fmt(2 * rho_d)
          << "\" stroke-linejoin=\"round\"/>\n";
    }
    for (const auto& [edge, unused] : occupied) {
      (void)unused;
      const Rhombus r = rhombus_of(grid, edge);
      out << "<polygon points=\"";
      for (int i = 0; i < 4; ++i)
        out << fmt(r.v[i].x.approx()) << "," << fmt(-r.v[i].y.approx()) << (i < 3 ? " " : "");
      out << "\" fill=\"none\" stroke=\"#b0a060\" stroke-width=\"" << fmt(dot / 3)
          << "\" stroke-dasharray=\"" << fmt(dot) << "\"/>\n";
      const auto ends = edge_endpoints(edge);
      const Vec2E a = grid.vertex(ends[0].i, ends[0].j);
      const Vec2E b = grid.vertex(ends[1].i, ends[1].j);
      out << "<line x1=\"" << fmt(a.x.approx()) << "\" y1=\"" << fmt(-a.y.approx()) << "\" x2=\""
          << fmt(b.x.approx()) << "\" y2=\"" << fmt(-b.y.approx())
          << "\" stroke=\"#808080\" stroke-width=\"" << fmt(dot / 3) << "\"/>\n";
    }
  }

  if (opts.solution) {
    const double r = opts.solution->radius.value();
    for (int c : opts.solution->centers) {
      out << "<circle cx=\"" << fmt(rat_to_double(inst.coords[c].first)) << "\" cy=\""
          << fmt(-rat_to_double(inst.coords[c].second)) << "\" r=\"" << fmt(r)
          << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"" << fmt(dot / 2)
          << "\" stroke-dasharray=\"" << fmt(2 * dot) << "\"/>\n";
    }
  }

  for (int i = 0; i < n; ++i) {
    const char* color = kPalette[inst.colors[i] % 6];
    out << "<circle cx=\"" << fmt(rat_to_double(inst.coords[i].first)) << "\" cy=\""
        << fmt(-rat_to_double(inst.coords[i].second)) << "\" r=\"" << fmt(dot) << "\" fill=\""
        << color << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ckc
