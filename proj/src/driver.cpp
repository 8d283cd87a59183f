#include "ckc/driver.hpp"

#include <algorithm>
#include <chrono>

#include "ckc/errors.hpp"
#include "ckc/oracle.hpp"
#include "ckc/prng.hpp"
#include "ckc/pseudo.hpp"

namespace ckc {

ResidualInstance residual_instance(const Instance& inst, const std::vector<int>& guessed,
                                   const Length& rho) {
  const int n = inst.n();
  std::vector<int> guess(guessed);
  std::sort(guess.begin(), guess.end());
  guess.erase(std::unique(guess.begin(), guess.end()), guess.end());
  for (int g : guess)
    if (g < 0 || g >= n) throw Error("guessed center id out of range");

  std::vector<bool> removed(n, false);
  for (int j = 0; j < n; ++j)
    for (int g : guess)
      if (inst.dist_sq(j, g) <= rho.sq) {
        removed[j] = true;
        break;
      }

  ResidualInstance out;
  out.inst.metric = inst.metric;
  out.inst.k = inst.k - static_cast<int>(guess.size());
  std::vector<long> removed_counts(inst.num_colors(), 0);
  for (int j = 0; j < n; ++j) {
    if (removed[j]) {
      ++removed_counts[inst.colors[j]];
      continue;
    }
    out.orig_ids.push_back(j);
    out.inst.colors.push_back(inst.colors[j]);
    if (inst.metric == MetricKind::EuclideanPlane) out.inst.coords.push_back(inst.coords[j]);
  }
  if (inst.metric == MetricKind::Matrix) {
    const int m = static_cast<int>(out.orig_ids.size());
    out.inst.dist.assign(m, std::vector<Rat>(m));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) out.inst.dist[a][b] = inst.dist[out.orig_ids[a]][out.orig_ids[b]];
  }
  out.inst.requirements.resize(inst.num_colors());
  for (int color = 0; color < inst.num_colors(); ++color)
    out.inst.requirements[color] = std::max<long>(0, inst.requirements[color] - removed_counts[color]);
  return out;
}

namespace {

void enumerate_subsets(int n, int max_size, std::vector<std::vector<int>>& out) {
  out.push_back({});
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) >= max_size) return;
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      out.push_back(cur);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  if (max_size > 0) rec(rec, 0);
}

}  // namespace

RunReport solve(const Instance& inst, const SolverConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.alpha <= 8) throw Error("solver needs alpha > 8");

  Instance work = inst;
  if (cfg.k_override) work.k = *cfg.k_override;
  work.validate();

  RunReport rep;
  rep.seed = cfg.seed;
  rep.alpha = cfg.alpha;
  const int c = work.num_colors();

  bool all_zero = true;
  for (long t : work.requirements)
    if (t > 0) all_zero = false;
  if (all_zero) {
    rep.best = make_solution(work, {}, Length::from_sq(Rat(0)));
    rep.feasible = true;
    rep.provenance = {Length::from_sq(Rat(0)), "trivial", {}};
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  for (int color = 0; color < c; ++color)
    if (work.requirements[color] > work.color_size(color)) {
      rep.feasible = false;
      rep.wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      return rep;
    }

  std::vector<Length> radii;
  if (cfg.pinned_radius)
    radii.push_back(*cfg.pinned_radius);
  else
    radii = candidate_radii(work);

  const bool planar = work.metric == MetricKind::EuclideanPlane;
  std::vector<std::vector<int>> sbar_sets;
  if (planar) enumerate_subsets(work.n(), c - 2, sbar_sets);

  MatchingStats stats;
  const Prng base = Prng(cfg.seed).derive("driver");

  auto consider = [&](const Solution& sol, const Length& rho, const std::string& branch,
                      const std::vector<int>& sbar) {
    const CoverageReport check = verify(work, sol);
    if (!check.feasible) return false;  // coverage and center budget, both
    if (!rep.best || sol.radius < rep.best->radius) {
      rep.best = sol;
      rep.provenance = {rho, branch, sbar};
    }
    return true;
  };

  for (size_t ridx = 0; ridx < radii.size(); ++ridx) {
    const Length& rho = radii[ridx];
    if (cfg.early_stop && rep.best && rho.scaled(2) >= rep.best->radius) break;

    GuessReport guess;
    guess.rho = rho;

    // pseudo-approximation: the combination budget k-(c-1), plus the plain
    // budget-k run kept when it happens to respect the center budget
    std::vector<int> budgets{work.k - (c - 1)};
    if (work.k != budgets[0]) budgets.push_back(work.k);
    for (int budget : budgets) {
      BranchACase bc;
      bc.budget = budget;
      if (budget < 1) {
        bc.status = "skipped_budget";
      } else {
        const auto sol = pseudo_approximate(work, budget, rho);
        if (!sol) {
          bc.status = "infeasible_lp";
        } else {
          bc.status = "solution";
          bc.centers = static_cast<int>(sol->centers.size());
          if (bc.centers <= work.k) bc.accepted = consider(*sol, rho, "pseudo", {});
        }
      }
      guess.branch_a.push_back(std::move(bc));
    }

    if (planar && !rho.is_zero()) {
      for (size_t sidx = 0; sidx < sbar_sets.size(); ++sidx) {
        const std::vector<int>& sbar = sbar_sets[sidx];
        BranchBCase bb;
        bb.sbar = sbar;
        const ResidualInstance resid = residual_instance(work, sbar, rho);
        bool resid_zero = true;
        for (long t : resid.inst.requirements)
          if (t > 0) resid_zero = false;
        if (resid_zero) {
          const Solution sol = make_solution(work, sbar, rho);
          bb.status = "solution";
          bb.centers = static_cast<int>(sol.centers.size());
          consider(sol, rho, "separated", sbar);
        } else if (resid.inst.k < 1) {
          bb.status = "budget_exhausted";
        } else {
          const std::uint64_t sub_seed = base.derive(ridx).derive(sidx).key;
          const auto sub = solve_separated(resid.inst, rho, cfg.alpha, sub_seed, &stats);
          if (!sub) {
            bb.status = "none";
          } else {
            std::vector<int> centers = sbar;
            for (int id : sub->centers) centers.push_back(resid.orig_ids[id]);
            const Solution merged = make_solution(work, std::move(centers), rho.scaled(cfg.alpha / 2 + 2));
            bb.status = "solution";
            bb.centers = static_cast<int>(merged.centers.size());
            consider(merged, rho, "separated", sbar);
          }
        }
        guess.branch_b.push_back(std::move(bb));
      }
    }
    rep.guesses.push_back(std::move(guess));
  }

  rep.feasible = rep.best.has_value();
  rep.matching_support_calls = stats.support_calls;
  rep.matching_recover_calls = stats.recover_calls;
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace ckc
