#pragma once

// Test-only oracles. Deliberately naive and kept independent of the library
// code paths they cross-check.

#include <optional>
#include <vector>

#include "ckc/instance.hpp"
#include "ckc/lp.hpp"
#include "ckc/matching.hpp"
#include "ckc/prng.hpp"

namespace ckc::testing {

/// Solves a square rational system by Gauss elimination; nullopt if singular.
inline std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                                    std::vector<Rat> b) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(a[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rat f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct VertexOracle {
  bool feasible = false;
  std::optional<Rat> best_objective;
  std::vector<std::vector<Rat>> vertices;
};

/// Enumerates every candidate vertex (all n-subsets of constraint rows and
/// box rows as equalities), keeps the feasible ones, and maximizes the
/// objective over them. Exact and complete for box-bounded LPs.
inline VertexOracle enumerate_vertices(const LinearProgram& lp) {
  const int n = lp.num_vars;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (const auto& r : lp.rows) {
    rows.push_back(r.a);
    rhs.push_back(r.rhs);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> e(n, Rat(0));
    e[j] = 1;
    rows.push_back(e);
    rhs.push_back(lp.lo[j]);
    rows.push_back(e);
    rhs.push_back(lp.hi[j]);
  }
  const int total = static_cast<int>(rows.size());

  VertexOracle out;
  auto feasible_point = [&](const std::vector<Rat>& x) {
    for (int j = 0; j < n; ++j)
      if (x[j] < lp.lo[j] || x[j] > lp.hi[j]) return false;
    for (const auto& r : lp.rows) {
      Rat lhs(0);
      for (int j = 0; j < n; ++j) lhs += r.a[j] * x[j];
      if (r.rel == Rel::Le && lhs > r.rhs) return false;
      if (r.rel == Rel::Ge && lhs < r.rhs) return false;
      if (r.rel == Rel::Eq && lhs != r.rhs) return false;
    }
    return true;
  };

  std::vector<int> pick(n);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == n) {
      std::vector<std::vector<Rat>> a(n);
      std::vector<Rat> b(n);
      for (int i = 0; i < n; ++i) {
        a[i] = rows[pick[i]];
        b[i] = rhs[pick[i]];
      }
      const auto x = solve_square(std::move(a), std::move(b));
      if (!x || !feasible_point(*x)) return;
      out.feasible = true;
      if (!lp.objective.empty()) {
        Rat obj(0);
        for (int j = 0; j < n; ++j) obj += lp.objective[j] * (*x)[j];
        if (!out.best_objective || obj > *out.best_objective) out.best_objective = obj;
      }
      out.vertices.push_back(*x);
      return;
    }
    for (int i = start; i < total; ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Recursive Pfaffian over F_P by expansion along the first row.
inline std::uint64_t pfaffian_brute(const std::vector<std::uint64_t>& mat, int n) {
  if (n == 0) return 1;
  if (n % 2) return 0;
  std::vector<int> alive(n);
  for (int i = 0; i < n; ++i) alive[i] = i;
  auto rec = [&](auto&& self, std::vector<int> idx) -> std::uint64_t {
    if (idx.empty()) return 1;
    std::uint64_t acc = 0;
    const int a = idx[0];
    for (size_t t = 1; t < idx.size(); ++t) {
      const int b = idx[t];
      const std::uint64_t entry = mat[static_cast<size_t>(a) * n + b];
      if (entry != 0) {
        std::vector<int> rest;
        for (size_t s = 1; s < idx.size(); ++s)
          if (s != t) rest.push_back(idx[s]);
        const std::uint64_t sub = self(self, std::move(rest));
        const std::uint64_t term = modp::mul(entry, sub);
        acc = (t % 2 == 1) ? modp::add(acc, term) : modp::sub(acc, term);
      }
    }
    return acc;
  };
  return rec(rec, alive);
}

/// Naive per-color coverage recount (double loop over points and centers).
inline std::vector<long> naive_covered(const Instance& inst, const std::vector<int>& centers,
                                       const Length& radius) {
  std::vector<long> out(inst.num_colors(), 0);
  for (int j = 0; j < inst.n(); ++j) {
    bool covered = false;
    for (int c : centers)
      if (inst.dist_sq(j, c) <= radius.sq) covered = true;
    if (covered) ++out[inst.colors[j]];
  }
  return out;
}

/// Random weighted graph for matching tests.
inline WeightedGraph random_graph(int n, int colors, long max_w, std::uint64_t seed,
                                  int percent_edges = 50) {
  Prng rng = Prng(seed).derive("random_graph");
  WeightedGraph g;
  g.n = n;
  g.colors = colors;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.below(100) >= static_cast<std::uint64_t>(percent_edges)) continue;
      WeightedGraph::Edge e;
      e.u = u;
      e.v = v;
      for (int i = 0; i < colors; ++i) e.w.push_back(static_cast<long>(rng.below(max_w + 1)));
      g.edges.push_back(std::move(e));
    }
  return g;
}

}  // namespace ckc::testing
