#pragma once

#include <array>
#include <compare>
#include <vector>

#include "ckc/quad.hpp"
#include "ckc/rational.hpp"

namespace ckc {

/// Equilateral triangular grid of side ell, anchored at the origin with one
/// lattice direction along the x-axis. Lattice vertex (i, j) sits at
/// (i + j/2, j*sqrt(3)/2) * ell; all exact coordinates live in
/// Q(sqrt(3), sqrt(ell^2)).
struct GridSpec {
  Length ell;

  const Rat& s() const { return ell.sq; }
  Ext rational(Rat q) const { return Ext::rational(std::move(q), ell.sq); }
  /// coef * ell as an exact coordinate
  Ext times_ell(Quad3 coef) const { return Ext::sqrt_s(std::move(coef), ell.sq); }
  Vec2E vertex(long i, long j) const;
};

/// Grid edge identified by orientation and the base lattice cell.
/// orient 0: (i,j)-(i+1,j); orient 1: (i,j)-(i,j+1); orient 2: (i+1,j)-(i,j+1).
struct GridEdge {
  int orient = 0;
  long i = 0, j = 0;

  friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

struct LatticeVertex {
  long i = 0, j = 0;

  friend auto operator<=>(const LatticeVertex&, const LatticeVertex&) = default;
};

std::array<LatticeVertex, 2> edge_endpoints(const GridEdge& e);

/// Voronoi cell of a grid edge: the rhombus spanned by the edge's endpoints
/// and the centroids of its two incident triangles, in the order
/// (endpoint, centroid, endpoint, centroid).
struct Rhombus {
  std::array<Vec2E, 4> v;
};

Rhombus rhombus_of(const GridSpec& g, const GridEdge& e);

/// Membership in the extended Voronoi region (rhombus Minkowski-summed with a
/// closed rho-ball), decided exactly.
bool in_extended_region(const GridSpec& g, const GridEdge& e, const Vec2E& p, const Length& rho);
bool in_extended_region(const GridSpec& g, const GridEdge& e, const Rat& px, const Rat& py,
                        const Length& rho);

/// All edges whose extended region contains the point: a constant-radius
/// lattice window around p's cell, filtered by the exact membership test.
std::vector<GridEdge> edges_near(const GridSpec& g, const Rat& px, const Rat& py, const Length& rho);

/// Edges sharing an endpoint (an edge is adjacent to itself).
bool adjacent(const GridEdge& a, const GridEdge& b);

}  // namespace ckc
