#pragma once

#include <optional>

#include "ckc/instance.hpp"
#include "ckc/lp.hpp"

namespace ckc {

/// Output of the greedy clustering pass: ordered centers S, the clusters they
/// absorbed, per-color member counts, and the modified LP values (x~, z~).
struct ClusterSet {
  Length rho;
  std::vector<int> centers;                      // S, in greedy pick order
  std::vector<std::vector<int>> clusters;        // members per center, sorted
  std::vector<std::vector<long>> color_counts;   // per center, per color
  std::vector<Rat> x_center;                     // x~ restricted to S
  std::vector<Rat> x_tilde, z_tilde;             // over all points
};

/// Coverage feasibility LP: variables x_0..x_{n-1}, z_0..z_{n-1} in [0,1];
/// per point j: sum of x over the closed ball B(j, rho) >= z_j; sum x <= k;
/// per color: sum of z over the class >= t_color.
LinearProgram build_feasibility_lp(const Instance& inst, const Length& rho);

/// Greedy clustering driven by a feasible point (x', z') of the feasibility
/// LP. Repeatedly picks the unclustered point with maximum z' (lowest id on
/// ties), absorbs everything within 2*rho, and propagates the modified values.
ClusterSet greedy_cluster(const Instance& inst, const Length& rho, const std::vector<Rat>& x_prime,
                          const std::vector<Rat>& z_prime);

/// Cluster-selection LP: one [0,1] variable per center in S, maximize color-0
/// coverage, per-color constraints for colors 1..c-1, cardinality <= k.
LinearProgram build_simplified_lp(const ClusterSet& cs, const Instance& inst);

/// Full pseudo-approximation run at a radius guess: feasibility LP, greedy
/// clustering, extreme-point optimum of the simplified LP, rounding every
/// positive variable up. Uses at most budget + c - 1 centers at radius 2*rho;
/// nullopt when the feasibility LP is infeasible at this guess.
std::optional<Solution> pseudo_approximate(const Instance& inst, int budget, const Length& rho);

/// Exact check of the clustering invariants (partition, 2*rho separation of
/// centers, z~ domination, per-color coverage and cardinality bounds).
/// Throws Error naming the first violated property.
void check_cluster_invariants(const Instance& inst, const Length& rho, const std::vector<Rat>& x_prime,
                              const std::vector<Rat>& z_prime, const ClusterSet& cs);

}  // namespace ckc
