#pragma once

#include <optional>
#include <string>

#include "ckc/instance.hpp"
#include "ckc/separated.hpp"

namespace ckc {

struct SolverConfig {
  Rat alpha = Rat(33, 4);  // 8.25; the grid reduction needs alpha > 8
  std::uint64_t seed = 0;
  int parallel = 1;  // reserved; results are identical at any setting
  bool early_stop = false;
  std::optional<Length> pinned_radius;  // evaluate a single guess
  std::optional<int> k_override;
};

struct BranchACase {
  std::string status;  // "solution" | "infeasible_lp" | "skipped_budget"
  int budget = 0;
  int centers = 0;
  bool accepted = false;
};

struct BranchBCase {
  std::vector<int> sbar;
  std::string status;  // "solution" | "none" | "budget_exhausted" | "skipped"
  int centers = 0;
};

struct GuessReport {
  Length rho;
  std::vector<BranchACase> branch_a;
  std::vector<BranchBCase> branch_b;
};

struct Provenance {
  Length rho;
  std::string branch;
  std::vector<int> sbar;
};

struct RunReport {
  bool feasible = false;
  std::optional<Solution> best;
  Provenance provenance;
  std::vector<GuessReport> guesses;
  long matching_support_calls = 0;
  long matching_recover_calls = 0;
  std::uint64_t seed = 0;
  Rat alpha;
  double wall_ms = 0;  // reported out of band; not part of canonical JSON
};

struct ResidualInstance {
  Instance inst;
  std::vector<int> orig_ids;  // residual point id -> original point id
};

/// Removes everything within rho of a guessed center, decreases each color
/// requirement by the removed count (floored at zero) and charges the guessed
/// centers against k.
ResidualInstance residual_instance(const Instance& inst, const std::vector<int>& guessed,
                                   const Length& rho);

/// Runs the pseudo-approximation branch and (on planar instances) the
/// separated branch with all center guesses of size at most c-2 at every
/// candidate radius, and returns the cheapest verified-feasible solution.
RunReport solve(const Instance& inst, const SolverConfig& cfg);

}  // namespace ckc
