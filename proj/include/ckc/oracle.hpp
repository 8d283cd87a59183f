#pragma once

#include <vector>

#include "ckc/instance.hpp"

namespace ckc {

struct OracleResult {
  Length radius;
  std::vector<int> best_centers;                // first optimal set in enumeration order
  std::vector<std::vector<int>> optimal_sets;   // all optimal sets, capped
  bool optimal_sets_capped = false;
  unsigned long long combos_enumerated = 0;
};

/// Exhaustive optimum over all k-subsets of points; every guarantee in the
/// test suite is measured against this. Throws GuardError when C(n, k) > 1e6.
OracleResult brute_force_optimum(const Instance& inst);

/// All pairwise center distances strictly greater than alpha * radius.
bool is_alpha_separated(const Instance& inst, const std::vector<int>& centers, const Length& radius,
                        const Rat& alpha);

/// Some optimal center set (over the capped enumeration) is alpha-separated
/// at the optimal radius.
bool exists_separated_optimum(const Instance& inst, const Rat& alpha);

}  // namespace ckc
