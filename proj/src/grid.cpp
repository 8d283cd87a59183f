#include "ckc/grid.hpp"

#include <algorithm>
#include <cmath>

#include "ckc/errors.hpp"

namespace ckc {

namespace {

Ext ext_scaled(const Ext& e, const Rat& f) { return e * Ext::rational(f, e.s); }

Vec2E centroid(const Vec2E& a, const Vec2E& b, const Vec2E& c) {
  const Rat third(1, 3);
  return {ext_scaled(a.x + b.x + c.x, third), ext_scaled(a.y + b.y + c.y, third)};
}

}  // namespace

Vec2E GridSpec::vertex(long i, long j) const {
  Quad3 x(Rat(i) + Rat(j) / 2);
  Quad3 y(Rat(0), Rat(j) / 2);
  return {times_ell(std::move(x)), times_ell(std::move(y))};
}

std::array<LatticeVertex, 2> edge_endpoints(const GridEdge& e) {
  switch (e.orient) {
    case 0:
      return {LatticeVertex{e.i, e.j}, LatticeVertex{e.i + 1, e.j}};
    case 1:
      return {LatticeVertex{e.i, e.j}, LatticeVertex{e.i, e.j + 1}};
    case 2:
      return {LatticeVertex{e.i + 1, e.j}, LatticeVertex{e.i, e.j + 1}};
    default:
      throw Error("bad edge orientation");
  }
}

Rhombus rhombus_of(const GridSpec& g, const GridEdge& e) {
  const auto ends = edge_endpoints(e);
  LatticeVertex t1{}, t2{};  // third vertices of the two incident triangles
  switch (e.orient) {
    case 0:
      t1 = {e.i, e.j + 1};
      t2 = {e.i + 1, e.j - 1};
      break;
    case 1:
      t1 = {e.i + 1, e.j};
      t2 = {e.i - 1, e.j + 1};
      break;
    case 2:
      t1 = {e.i, e.j};
      t2 = {e.i + 1, e.j + 1};
      break;
    default:
      throw Error("bad edge orientation");
  }
  const Vec2E a = g.vertex(ends[0].i, ends[0].j);
  const Vec2E b = g.vertex(ends[1].i, ends[1].j);
  Rhombus r;
  r.v[0] = a;
  r.v[1] = centroid(a, b, g.vertex(t1.i, t1.j));
  r.v[2] = b;
  r.v[3] = centroid(a, b, g.vertex(t2.i, t2.j));
  return r;
}

bool in_extended_region(const GridSpec& g, const GridEdge& e, const Vec2E& p, const Length& rho) {
  const Rhombus r = rhombus_of(g, e);
  if (point_in_convex(r.v, p)) return true;
  const Ext rho2 = g.rational(rho.sq);
  for (int i = 0; i < 4; ++i)
    if (seg_dist_le(p, r.v[i], r.v[(i + 1) % 4], rho2)) return true;
  return false;
}

bool in_extended_region(const GridSpec& g, const GridEdge& e, const Rat& px, const Rat& py,
                        const Length& rho) {
  const Vec2E p{g.rational(px), g.rational(py)};
  return in_extended_region(g, e, p, rho);
}

namespace {

// floor(y / ((sqrt3/2)*ell)), exactly; double estimate corrected by exact signs
long floor_rows(const GridSpec& g, const Rat& py) {
  const double ell = g.ell.value();
  const double h = std::sqrt(3.0) / 2.0 * ell;
  long t = static_cast<long>(std::floor(rat_to_double(py) / h));
  const Ext y = g.rational(py);
  auto row_at_most = [&](long m) {
    // m*h <= py  <=>  sign(py - m*(sqrt3/2)*ell) >= 0
    return (y - g.times_ell(Quad3(Rat(0), Rat(m) / 2))).sign() >= 0;
  };
  long guard = 0;
  while (!row_at_most(t)) {
    --t;
    if (++guard > 1000000) throw Error("grid row location diverged");
  }
  while (row_at_most(t + 1)) {
    ++t;
    if (++guard > 1000000) throw Error("grid row location diverged");
  }
  return t;
}

long floor_cols(const GridSpec& g, const Rat& px, long j0) {
  const double ell = g.ell.value();
  long t = static_cast<long>(std::floor((rat_to_double(px) - static_cast<double>(j0) * ell / 2) / ell));
  const Ext u = g.rational(px) - g.times_ell(Quad3(Rat(j0) / 2));
  auto col_at_most = [&](long m) { return (u - g.times_ell(Quad3(Rat(m)))).sign() >= 0; };
  long guard = 0;
  while (!col_at_most(t)) {
    --t;
    if (++guard > 1000000) throw Error("grid column location diverged");
  }
  while (col_at_most(t + 1)) {
    ++t;
    if (++guard > 1000000) throw Error("grid column location diverged");
  }
  return t;
}

}  // namespace

std::vector<GridEdge> edges_near(const GridSpec& g, const Rat& px, const Rat& py, const Length& rho) {
  if (g.ell.is_zero()) throw Error("grid side must be positive");
  const long j0 = floor_rows(g, py);
  const long i0 = floor_cols(g, px, j0);

  const double ell = g.ell.value();
  const double h = std::sqrt(3.0) / 2.0 * ell;
  const long rings = static_cast<long>(std::ceil((rho.value() + ell) / h)) + 2;

  const Vec2E p{g.rational(px), g.rational(py)};
  std::vector<GridEdge> out;
  for (long dj = -rings; dj <= rings; ++dj)
    for (long di = -rings; di <= rings; ++di)
      for (int orient = 0; orient < 3; ++orient) {
        const GridEdge e{orient, i0 + di, j0 + dj};
        if (in_extended_region(g, e, p, rho)) out.push_back(e);
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool adjacent(const GridEdge& a, const GridEdge& b) {
  const auto ea = edge_endpoints(a);
  const auto eb = edge_endpoints(b);
  for (const auto& u : ea)
    for (const auto& v : eb)
      if (u == v) return true;
  return false;
}

}  // namespace ckc
