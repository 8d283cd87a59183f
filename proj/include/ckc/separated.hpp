#pragma once

#include <optional>

#include "ckc/grid.hpp"
#include "ckc/instance.hpp"
#include "ckc/matching.hpp"

namespace ckc {

/// Matching view of a planar instance at a radius guess: one graph vertex per
/// lattice endpoint of an occupied grid edge, one weighted edge per grid edge
/// whose extended Voronoi region holds at least one point.
struct MatchInstance {
  WeightedGraph g_prime;
  GridSpec grid;
  std::vector<GridEdge> grid_edges;          // per g_prime edge
  std::vector<std::vector<int>> members;     // P(e): point ids, sorted
  std::vector<LatticeVertex> vertex_coords;  // per g_prime vertex
  mpz_class n_bound;                         // N = 2*max(n, |V'|)
  Length rho;
  Rat alpha;
};

/// Builds the grid graph with side 0.5*alpha*rho. Checks that vertex-disjoint
/// edges have disjoint member sets (what the alpha > 8 geometry guarantees).
MatchInstance build_match_instance(const Instance& inst, const Length& rho, const Rat& alpha);

/// Adds |V'| - 2*k_eff auxiliary vertices connected to every original vertex
/// with zero-weight edges; original edges keep their indices.
WeightedGraph augment(const MatchInstance& mi, int k_eff);

struct MatchingStats {
  long support_calls = 0;
  long recover_calls = 0;
};

/// Full separated-branch solve: descend on the matching size, compute one
/// support table per size, scan targets at least the requirements, recover
/// the first achievable one and place a ball of radius (0.5*alpha + 2)*rho at
/// the lowest point id of each matched region.
std::optional<Solution> solve_separated(const Instance& inst, const Length& rho, const Rat& alpha,
                                        std::uint64_t seed, MatchingStats* stats = nullptr);

}  // namespace ckc
