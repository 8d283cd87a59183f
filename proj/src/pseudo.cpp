#include "ckc/pseudo.hpp"

#include <algorithm>

#include "ckc/errors.hpp"

namespace ckc {

LinearProgram build_feasibility_lp(const Instance& inst, const Length& rho) {
  const int n = inst.n();
  const int c = inst.num_colors();
  LinearProgram lp;
  lp.num_vars = 2 * n;  // x_0..x_{n-1}, z_0..z_{n-1}
  lp.lo.assign(lp.num_vars, Rat(0));
  lp.hi.assign(lp.num_vars, Rat(1));
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> row(lp.num_vars, Rat(0));
    for (int i = 0; i < n; ++i)
      if (inst.dist_sq(i, j) <= rho.sq) row[i] = 1;
    row[n + j] = -1;
    lp.add_row(std::move(row), Rel::Ge, Rat(0));
  }
  {
    std::vector<Rat> row(lp.num_vars, Rat(0));
    for (int i = 0; i < n; ++i) row[i] = 1;
    lp.add_row(std::move(row), Rel::Le, Rat(inst.k));
  }
  for (int color = 0; color < c; ++color) {
    std::vector<Rat> row(lp.num_vars, Rat(0));
    for (int j = 0; j < n; ++j)
      if (inst.colors[j] == color) row[n + j] = 1;
    lp.add_row(std::move(row), Rel::Ge, Rat(inst.requirements[color]));
  }
  return lp;
}

ClusterSet greedy_cluster(const Instance& inst, const Length& rho, const std::vector<Rat>& x_prime,
                          const std::vector<Rat>& z_prime) {
  const int n = inst.n();
  const int c = inst.num_colors();
  const Rat four_rho_sq = 4 * rho.sq;

  ClusterSet cs;
  cs.rho = rho;
  cs.x_tilde.assign(n, Rat(0));
  cs.z_tilde.assign(n, Rat(0));

  std::vector<bool> clustered(n, false);
  int remaining = n;
  while (remaining > 0) {
    int j = -1;
    for (int cand = 0; cand < n; ++cand) {
      if (clustered[cand]) continue;
      if (j < 0 || z_prime[cand] > z_prime[j]) j = cand;  // lowest id wins ties
    }
    Rat mass(0);
    for (int i = 0; i < n; ++i)
      if (inst.dist_sq(i, j) <= rho.sq) mass += x_prime[i];  // over all of P
    if (mass > 1) mass = 1;

    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (!clustered[i] && inst.dist_sq(i, j) <= four_rho_sq) members.push_back(i);
    std::vector<long> counts(c, 0);
    for (int i : members) {
      clustered[i] = true;
      ++counts[inst.colors[i]];
      cs.z_tilde[i] = mass;
      cs.x_tilde[i] = 0;
    }
    cs.x_tilde[j] = mass;
    remaining -= static_cast<int>(members.size());

    cs.centers.push_back(j);
    cs.clusters.push_back(std::move(members));
    cs.color_counts.push_back(std::move(counts));
    cs.x_center.push_back(std::move(mass));
  }
  return cs;
}

LinearProgram build_simplified_lp(const ClusterSet& cs, const Instance& inst) {
  const int m = static_cast<int>(cs.centers.size());
  const int c = inst.num_colors();
  LinearProgram lp;
  lp.num_vars = m;
  lp.lo.assign(m, Rat(0));
  lp.hi.assign(m, Rat(1));
  lp.objective.assign(m, Rat(0));
  lp.maximize = true;
  for (int i = 0; i < m; ++i) lp.objective[i] = cs.color_counts[i][0];
  for (int color = 1; color < c; ++color) {
    std::vector<Rat> row(m, Rat(0));
    for (int i = 0; i < m; ++i) row[i] = cs.color_counts[i][color];
    lp.add_row(std::move(row), Rel::Ge, Rat(inst.requirements[color]));
  }
  {
    std::vector<Rat> row(m, Rat(1));
    lp.add_row(std::move(row), Rel::Le, Rat(inst.k));
  }
  return lp;
}

std::optional<Solution> pseudo_approximate(const Instance& inst, int budget, const Length& rho) {
  if (budget < 1) throw Error("pseudo_approximate needs budget >= 1");
  Instance capped = inst;
  capped.k = budget;

  const LinearProgram feas = build_feasibility_lp(capped, rho);
  const LpOutcome point = solve_feasible(feas);
  if (point.status == LpStatus::Infeasible) return std::nullopt;

  const int n = inst.n();
  std::vector<Rat> x(point.values.begin(), point.values.begin() + n);
  std::vector<Rat> z(point.values.begin() + n, point.values.end());
  const ClusterSet cs = greedy_cluster(capped, rho, x, z);

  const LinearProgram simple = build_simplified_lp(cs, capped);
  const LpOutcome opt = solve_extreme_optimal(simple);
  if (opt.status == LpStatus::Infeasible) throw Error("simplified LP unexpectedly infeasible");

  std::vector<int> centers;
  for (int i = 0; i < static_cast<int>(cs.centers.size()); ++i)
    if (sgn(opt.values[i]) > 0) centers.push_back(cs.centers[i]);
  return make_solution(inst, std::move(centers), rho.scaled(2));
}

void check_cluster_invariants(const Instance& inst, const Length& rho, const std::vector<Rat>& x_prime,
                              const std::vector<Rat>& z_prime, const ClusterSet& cs) {
  const int n = inst.n();
  const int c = inst.num_colors();

  // clusters partition P
  std::vector<int> owner(n, -1);
  for (size_t s = 0; s < cs.clusters.size(); ++s)
    for (int j : cs.clusters[s]) {
      if (owner[j] != -1) throw Error("clusters overlap");
      owner[j] = static_cast<int>(s);
    }
  for (int j = 0; j < n; ++j)
    if (owner[j] < 0) throw Error("point left unclustered");

  // centers pairwise further than 2*rho apart
  const Rat four_rho_sq = 4 * rho.sq;
  for (size_t a = 0; a < cs.centers.size(); ++a)
    for (size_t b = a + 1; b < cs.centers.size(); ++b)
      if (inst.dist_sq(cs.centers[a], cs.centers[b]) <= four_rho_sq)
        throw Error("centers within 2*rho");

  // at most one center within rho of any point
  for (int j = 0; j < n; ++j) {
    int close = 0;
    for (int s : cs.centers)
      if (inst.dist_sq(s, j) <= rho.sq) ++close;
    if (close > 1) throw Error("two centers within rho of one point");
  }

  // z~ dominates z' inside each cluster
  for (size_t s = 0; s < cs.clusters.size(); ++s)
    for (int j : cs.clusters[s])
      if (cs.z_tilde[j] < z_prime[j]) throw Error("z~ fails to dominate z'");

  // per-color coverage and cardinality, exactly
  for (int color = 0; color < c; ++color) {
    Rat covered(0);
    for (size_t s = 0; s < cs.centers.size(); ++s)
      covered += Rat(cs.color_counts[s][color]) * cs.x_center[s];
    if (covered < Rat(inst.requirements[color])) throw Error("fractional coverage below requirement");
  }
  Rat total(0);
  for (const Rat& v : cs.x_center) total += v;
  if (total > Rat(inst.k)) throw Error("fractional cardinality above k");

  (void)x_prime;
}

}  // namespace ckc
