#pragma once

#include <vector>

#include "ckc/rational.hpp"

namespace ckc {

enum class Rel { Le, Ge, Eq };

/// Box-constrained LP over exact rationals. Every variable carries finite
/// bounds; the solver never touches floating point, so feasibility and
/// tightness are exact statements.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rat> lo, hi;

  struct Row {
    std::vector<Rat> a;
    Rel rel = Rel::Le;
    Rat rhs;
  };
  std::vector<Row> rows;

  std::vector<Rat> objective;  // empty => feasibility problem
  bool maximize = true;

  void add_row(std::vector<Rat> a, Rel rel, Rat rhs);
  void check() const;  // throws Error on malformed input
};

enum class LpStatus { Feasible, Infeasible, OptimalExtreme };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rat> values;
  std::vector<int> tight_rows;    // constraints satisfied with equality
  std::vector<int> tight_lower;   // variables at their lower bound
  std::vector<int> tight_upper;   // variables at their upper bound
};

/// Phase-1 simplex: an exactly feasible rational point or Infeasible.
LpOutcome solve_feasible(const LinearProgram& lp);

/// Phase-1 + phase-2 simplex (Bland's rule). The returned point is a vertex:
/// the tight constraints together with tight box bounds have rank num_vars.
LpOutcome solve_extreme_optimal(const LinearProgram& lp);

/// Number of variables strictly between their box bounds.
int count_fractional(const LinearProgram& lp, const LpOutcome& out);

/// Exact rank of a set of rational row vectors.
int rank_of_rows(std::vector<std::vector<Rat>> rows);

}  // namespace ckc
