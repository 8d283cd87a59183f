#include "ckc/oracle.hpp"

#include <algorithm>

#include "ckc/errors.hpp"

namespace ckc {

namespace {

constexpr unsigned long long kComboGuard = 1000000;
constexpr size_t kOptimalSetCap = 10000;

unsigned long long binomial_capped(int n, int k) {
  unsigned long long acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    if (acc > 100 * kComboGuard) return acc;  // enough to trip the guard
  }
  return acc;
}

}  // namespace

OracleResult brute_force_optimum(const Instance& inst) {
  inst.validate();
  const int n = inst.n();
  const int k = inst.k;
  const int c = inst.num_colors();
  if (binomial_capped(n, k) > kComboGuard) throw GuardError("brute-force oracle size guard exceeded");

  std::vector<std::vector<Rat>> d2(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d2[i][j] = inst.dist_sq(i, j);

  OracleResult res;
  bool have_best = false;
  Rat best_sq(0);

  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  std::vector<Rat> nearest(n);
  std::vector<std::vector<Rat>> per_color(c);

  auto eval = [&]() {
    ++res.combos_enumerated;
    for (int j = 0; j < n; ++j) {
      const Rat* best = &d2[j][combo[0]];
      for (int t = 1; t < k; ++t)
        if (d2[j][combo[t]] < *best) best = &d2[j][combo[t]];
      nearest[j] = *best;
    }
    Rat radius_sq(0);
    for (int color = 0; color < c; ++color) {
      const long need = inst.requirements[color];
      if (need == 0) continue;
      auto& pool = per_color[color];
      pool.clear();
      for (int j = 0; j < n; ++j)
        if (inst.colors[j] == color) pool.push_back(nearest[j]);
      std::nth_element(pool.begin(), pool.begin() + (need - 1), pool.end());
      if (pool[need - 1] > radius_sq) radius_sq = pool[need - 1];
    }
    if (!have_best || radius_sq < best_sq) {
      have_best = true;
      best_sq = radius_sq;
      res.best_centers = combo;
      res.optimal_sets.clear();
      res.optimal_sets.push_back(combo);
      res.optimal_sets_capped = false;
    } else if (radius_sq == best_sq) {
      if (res.optimal_sets.size() < kOptimalSetCap)
        res.optimal_sets.push_back(combo);
      else
        res.optimal_sets_capped = true;
    }
  };

  eval();
  while (true) {
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int t = i + 1; t < k; ++t) combo[t] = combo[t - 1] + 1;
    eval();
  }
  res.radius = Length::from_sq(best_sq);
  return res;
}

bool is_alpha_separated(const Instance& inst, const std::vector<int>& centers, const Length& radius,
                        const Rat& alpha) {
  const Rat threshold_sq = alpha * alpha * radius.sq;
  for (size_t a = 0; a < centers.size(); ++a)
    for (size_t b = a + 1; b < centers.size(); ++b)
      if (inst.dist_sq(centers[a], centers[b]) <= threshold_sq) return false;
  return true;
}

bool exists_separated_optimum(const Instance& inst, const Rat& alpha) {
  const OracleResult res = brute_force_optimum(inst);
  for (const auto& centers : res.optimal_sets)
    if (is_alpha_separated(inst, centers, res.radius, alpha)) return true;
  return false;
}

}  // namespace ckc
