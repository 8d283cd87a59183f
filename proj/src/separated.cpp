#include "ckc/separated.hpp"

#include <algorithm>
#include <map>

#include "ckc/errors.hpp"
#include "ckc/prng.hpp"

namespace ckc {

MatchInstance build_match_instance(const Instance& inst, const Length& rho, const Rat& alpha) {
  if (inst.metric != MetricKind::EuclideanPlane) throw Error("grid reduction needs planar input");
  if (alpha <= 8) throw Error("grid reduction needs alpha > 8");
  if (rho.is_zero()) throw Error("grid reduction needs rho > 0");

  MatchInstance mi;
  mi.rho = rho;
  mi.alpha = alpha;
  mi.grid.ell = rho.scaled(alpha / 2);

  const int n = inst.n();
  std::map<GridEdge, std::vector<int>> occupied;
  for (int p = 0; p < n; ++p)
    for (const GridEdge& e : edges_near(mi.grid, inst.coords[p].first, inst.coords[p].second, rho))
      occupied[e].push_back(p);

  std::map<LatticeVertex, int> vertex_ids;
  for (const auto& [edge, pts] : occupied) {
    for (const LatticeVertex& v : edge_endpoints(edge))
      if (!vertex_ids.count(v)) {
        const int id = static_cast<int>(vertex_ids.size());
        vertex_ids[v] = id;
        mi.vertex_coords.push_back(v);
      }
    mi.grid_edges.push_back(edge);
    mi.members.push_back(pts);
  }
  mi.g_prime.n = static_cast<int>(vertex_ids.size());
  mi.g_prime.colors = inst.num_colors();
  for (size_t idx = 0; idx < mi.grid_edges.size(); ++idx) {
    const auto ends = edge_endpoints(mi.grid_edges[idx]);
    WeightedGraph::Edge e;
    e.u = vertex_ids[ends[0]];
    e.v = vertex_ids[ends[1]];
    e.w.assign(inst.num_colors(), 0);
    for (int p : mi.members[idx]) ++e.w[inst.colors[p]];
    mi.g_prime.edges.push_back(std::move(e));
  }
  mi.n_bound = 2 * std::max<long>(n, mi.g_prime.n);

  // vertex-disjoint grid edges must hold disjoint point sets (alpha > 8)
  for (size_t a = 0; a < mi.grid_edges.size(); ++a)
    for (size_t b = a + 1; b < mi.grid_edges.size(); ++b) {
      if (adjacent(mi.grid_edges[a], mi.grid_edges[b])) continue;
      std::vector<int> common;
      std::set_intersection(mi.members[a].begin(), mi.members[a].end(), mi.members[b].begin(),
                            mi.members[b].end(), std::back_inserter(common));
      if (!common.empty()) throw Error("non-adjacent grid edges share points; regions not disjoint");
    }
  return mi;
}

WeightedGraph augment(const MatchInstance& mi, int k_eff) {
  const int vp = mi.g_prime.n;
  if (vp < 2 * k_eff) throw Error("not enough grid vertices for the requested matching size");
  WeightedGraph g = mi.g_prime;
  const int aux = vp - 2 * k_eff;
  g.n = vp + aux;
  const std::vector<long> zero(g.colors, 0);
  for (int a = 0; a < aux; ++a)
    for (int v = 0; v < vp; ++v) g.edges.push_back({vp + a, v, zero});
  return g;
}

namespace {

// Largest per-color totals reachable with at most k_eff grid edges; anything
// below the requirements makes the whole support pass pointless.
std::vector<long> best_case_counts(const WeightedGraph& g, int k_eff) {
  std::vector<long> out(g.colors, 0);
  for (int i = 0; i < g.colors; ++i) {
    std::vector<long> ws;
    for (const auto& e : g.edges) ws.push_back(e.w[i]);
    std::sort(ws.rbegin(), ws.rend());
    for (int t = 0; t < std::min<long>(k_eff, static_cast<long>(ws.size())); ++t) out[i] += ws[t];
  }
  return out;
}

}  // namespace

std::optional<Solution> solve_separated(const Instance& inst, const Length& rho, const Rat& alpha,
                                        std::uint64_t seed, MatchingStats* stats) {
  const int c = inst.num_colors();
  for (int color = 0; color < c; ++color)
    if (inst.requirements[color] > inst.color_size(color)) return std::nullopt;
  bool all_zero = true;
  for (long t : inst.requirements)
    if (t > 0) all_zero = false;
  if (all_zero) return make_solution(inst, {}, Length::from_sq(Rat(0)));
  if (rho.is_zero()) return std::nullopt;

  const MatchInstance mi = build_match_instance(inst, rho, alpha);
  const Length ball_radius = rho.scaled(alpha / 2 + 2);

  std::vector<long> class_sizes(c, 0);
  for (int color = 0; color < c; ++color) class_sizes[color] = inst.color_size(color);

  const Prng base = Prng(seed).derive("solve_separated");
  for (int k_eff = std::min(inst.k, mi.g_prime.n / 2); k_eff >= 1; --k_eff) {
    const std::vector<long> best = best_case_counts(mi.g_prime, k_eff);
    bool hopeless = false;
    for (int color = 0; color < c; ++color)
      if (best[color] < inst.requirements[color]) hopeless = true;
    if (hopeless) break;  // fewer edges reach even less

    const WeightedGraph g = augment(mi, k_eff);
    const std::uint64_t sup_seed = base.derive("support").derive(k_eff).key;
    const SupportTable table = support(g, class_sizes, sup_seed);
    if (stats) ++stats->support_calls;

    // scan every target at least the requirements, lexicographically
    std::vector<long> target(inst.requirements.begin(), inst.requirements.end());
    bool more = true;
    std::uint64_t target_idx = 0;
    while (more) {
      if (table.achievable(target)) {
        const std::uint64_t rec_seed = base.derive("recover").derive(k_eff).derive(target_idx).key;
        if (stats) ++stats->recover_calls;
        const auto matched = recover(g, target, rec_seed, &class_sizes);
        if (matched) {
          std::vector<int> centers;
          std::vector<long> covered_counts(c, 0);
          for (int idx : *matched) {
            if (idx >= static_cast<int>(mi.grid_edges.size())) continue;  // auxiliary edge
            centers.push_back(mi.members[idx].front());
            for (int p : mi.members[idx]) ++covered_counts[inst.colors[p]];
          }
          for (int color = 0; color < c; ++color)
            if (covered_counts[color] != target[color])
              throw Error("matched regions do not add up to the target");
          Solution sol = make_solution(inst, std::move(centers), ball_radius);
          if (!sol.feasible || static_cast<int>(sol.centers.size()) > inst.k)
            throw Error("separated cover failed verification");
          return sol;
        }
      }
      ++target_idx;
      int axis = c - 1;
      while (axis >= 0) {
        if (++target[axis] <= class_sizes[axis]) break;
        target[axis] = inst.requirements[axis];
        --axis;
      }
      if (axis < 0) more = false;
    }
  }
  return std::nullopt;
}

}  // namespace ckc
