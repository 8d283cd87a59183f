#include "ckc/instance.hpp"

#include <algorithm>
#include <set>

#include "ckc/errors.hpp"
#include "ckc/prng.hpp"

namespace ckc {

long Instance::color_size(int color) const {
  long cnt = 0;
  for (int c : colors)
    if (c == color) ++cnt;
  return cnt;
}

Rat Instance::dist_sq(int i, int j) const {
  if (metric == MetricKind::EuclideanPlane) {
    const Rat dx = coords[i].first - coords[j].first;
    const Rat dy = coords[i].second - coords[j].second;
    return dx * dx + dy * dy;
  }
  return dist[i][j] * dist[i][j];
}

void Instance::validate() const {
  const int nn = n();
  const int c = num_colors();
  if (nn <= 0) throw Error("instance has no points");
  if (c <= 0) throw Error("instance has no color classes");
  if (k < 1 || k > nn) throw Error("k out of range");
  for (int col : colors)
    if (col < 0 || col >= c) throw Error("point color out of range");
  for (int color = 0; color < c; ++color) {
    const long size = color_size(color);
    if (size == 0) throw Error("empty color class");
    if (requirements[color] < 0 || requirements[color] > size)
      throw Error("coverage requirement exceeds class size");
  }
  if (metric == MetricKind::EuclideanPlane) {
    if (static_cast<int>(coords.size()) != nn) throw Error("coords size mismatch");
  } else {
    if (static_cast<int>(dist.size()) != nn) throw Error("distance matrix size mismatch");
    for (int i = 0; i < nn; ++i) {
      if (static_cast<int>(dist[i].size()) != nn) throw Error("distance matrix not square");
      if (sgn(dist[i][i]) != 0) throw Error("distance matrix diagonal not zero");
      for (int j = 0; j < nn; ++j) {
        if (sgn(dist[i][j]) < 0) throw Error("negative distance");
        if (dist[i][j] != dist[j][i]) throw Error("distance matrix not symmetric");
      }
    }
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j)
        for (int m = 0; m < nn; ++m)
          if (dist[i][j] > dist[i][m] + dist[m][j]) throw Error("triangle inequality violated");
  }
}

std::vector<Length> candidate_radii(const Instance& inst) {
  std::set<Rat> squares;
  squares.insert(Rat(0));
  const int n = inst.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) squares.insert(inst.dist_sq(i, j));
  std::vector<Length> out;
  out.reserve(squares.size());
  for (const Rat& s : squares) out.push_back(Length::from_sq(s));
  return out;
}

CoverageReport verify(const Instance& inst, const Solution& sol) {
  const int n = inst.n();
  for (int c : sol.centers)
    if (c < 0 || c >= n) throw Error("unknown center id");

  CoverageReport rep;
  rep.radius = sol.radius;
  std::vector<int> unique_centers(sol.centers);
  std::sort(unique_centers.begin(), unique_centers.end());
  unique_centers.erase(std::unique(unique_centers.begin(), unique_centers.end()), unique_centers.end());
  rep.num_centers = static_cast<int>(unique_centers.size());
  rep.covered.assign(inst.num_colors(), 0);
  for (int j = 0; j < n; ++j) {
    for (int c : unique_centers) {
      if (inst.dist_sq(j, c) <= sol.radius.sq) {  // closed balls
        ++rep.covered[inst.colors[j]];
        break;
      }
    }
  }
  bool coverage = true;
  for (int color = 0; color < inst.num_colors(); ++color)
    if (rep.covered[color] < inst.requirements[color]) coverage = false;
  rep.feasible = coverage && rep.num_centers <= inst.k;
  return rep;
}

Solution make_solution(const Instance& inst, std::vector<int> centers, Length radius) {
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  Solution sol;
  sol.centers = std::move(centers);
  sol.radius = std::move(radius);
  const CoverageReport rep = verify(inst, sol);
  sol.covered = rep.covered;
  sol.feasible = true;
  for (int color = 0; color < inst.num_colors(); ++color)
    if (sol.covered[color] < inst.requirements[color]) sol.feasible = false;
  return sol;
}

Instance gen_example_2_5(const Rat& scale) {
  if (sgn(scale) <= 0) throw Error("scale must be positive");
  Instance inst;
  inst.metric = MetricKind::EuclideanPlane;
  inst.k = 1;
  inst.requirements = {2, 2};
  const Rat q = scale / 4;
  const Rat off = 101 * scale;
  // cluster 1: 3 red + 1 blue
  inst.coords = {{Rat(0), Rat(0)}, {q, Rat(0)}, {Rat(0), q}, {q, q},
                 // cluster 2: 3 blue + 1 red
                 {off, Rat(0)}, {off + q, Rat(0)}, {off, q}, {off + q, q}};
  inst.colors = {0, 0, 0, 1, 1, 1, 1, 0};
  inst.validate();
  return inst;
}

namespace {

Rat rat_pick(Prng& rng, long lo_num, long hi_num, long den) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi_num - lo_num + 1);
  Rat q(static_cast<long>(lo_num + static_cast<long>(rng.below(span))), den);
  q.canonicalize();
  return q;
}

void assign_colors_and_requirements(Instance& inst, int c, int usable, Prng& rng) {
  const int n = inst.n();
  inst.colors.assign(n, 0);
  for (int i = 0; i < n; ++i) inst.colors[i] = (i < c) ? i : static_cast<int>(rng.below(c));
  inst.requirements.assign(c, 0);
  for (int color = 0; color < c; ++color) {
    long size = 0;
    for (int i = 0; i < usable; ++i)
      if (inst.colors[i] == color) ++size;
    inst.requirements[color] = size > 0 ? 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(size))) : 0;
  }
}

}  // namespace

Instance gen_separated(const SeparatedParams& p) {
  if (p.k < 1 || p.c < 1 || sgn(p.alpha) <= 0 || sgn(p.rho) <= 0) throw Error("bad generator parameters");
  if (p.outliers < 0 || p.n - p.outliers < p.k || p.n - p.outliers < p.c)
    throw Error("not enough non-outlier points");

  Prng rng = Prng(p.seed).derive("gen_separated");
  // Disk centers on the lattice rho*Z^2 inside a box wide enough for k
  // separated disks; separation is checked exactly on integer offsets.
  const long box = 4 * p.k * (1 + static_cast<long>(rat_to_double(p.alpha)) + 1);
  const Rat alpha_sq = p.alpha * p.alpha;
  std::vector<std::pair<long, long>> cells;
  int attempts = 0;
  while (static_cast<int>(cells.size()) < p.k) {
    if (++attempts > 1000 * p.k) throw Error("could not place separated centers");
    const long cx = static_cast<long>(rng.below(static_cast<std::uint64_t>(box)));
    const long cy = static_cast<long>(rng.below(static_cast<std::uint64_t>(box)));
    bool ok = true;
    for (const auto& [ox, oy] : cells) {
      const Rat d2((cx - ox) * (cx - ox) + (cy - oy) * (cy - oy));
      if (d2 <= alpha_sq) {  // need strict > alpha*rho between centers
        ok = false;
        break;
      }
    }
    if (ok) cells.emplace_back(cx, cy);
  }

  Instance inst;
  inst.metric = MetricKind::EuclideanPlane;
  inst.k = p.k;
  inst.coords.reserve(p.n);
  for (const auto& [cx, cy] : cells) inst.coords.emplace_back(Rat(cx) * p.rho, Rat(cy) * p.rho);
  const int interior = p.n - p.k - p.outliers;
  for (int i = 0; i < interior; ++i) {
    const int disk = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.k)));
    const Rat dx = rat_pick(rng, -50, 50, 144) * p.rho;
    const Rat dy = rat_pick(rng, -50, 50, 144) * p.rho;
    inst.coords.emplace_back(Rat(cells[disk].first) * p.rho + dx, Rat(cells[disk].second) * p.rho + dy);
  }
  for (int i = 0; i < p.outliers; ++i) {
    const Rat far = -1000 * p.alpha * p.rho * (i + 1);
    inst.coords.emplace_back(far, far);
  }
  inst.colors.assign(p.n, 0);
  const int usable = p.n - p.outliers;
  {
    Prng crng = rng.derive("colors");
    for (int i = 0; i < p.n; ++i) inst.colors[i] = (i < p.c) ? i : static_cast<int>(crng.below(p.c));
  }
  inst.requirements.assign(p.c, 0);
  for (int i = 0; i < usable; ++i) ++inst.requirements[inst.colors[i]];

  PlantedInfo planted;
  for (int i = 0; i < p.k; ++i) planted.centers.push_back(i);
  planted.radius = Length::from_value(p.rho);
  inst.planted = std::move(planted);
  inst.validate();
  return inst;
}

Instance gen_random_planar(int n, int k, int c, std::uint64_t seed) {
  if (n < 1 || k < 1 || k > n || c < 1 || c > n) throw Error("bad generator parameters");
  Prng rng = Prng(seed).derive("gen_random_planar");
  Instance inst;
  inst.metric = MetricKind::EuclideanPlane;
  inst.k = k;
  std::set<std::pair<long, long>> used;
  for (int i = 0; i < n; ++i) {
    std::pair<long, long> cell;
    for (int tries = 0; tries < 200; ++tries) {
      cell = {static_cast<long>(rng.below(100001)), static_cast<long>(rng.below(100001))};
      if (used.insert(cell).second) break;
    }
    Rat x(cell.first, 100), y(cell.second, 100);
    x.canonicalize();
    y.canonicalize();
    inst.coords.emplace_back(std::move(x), std::move(y));
  }
  inst.colors.assign(n, 0);
  assign_colors_and_requirements(inst, c, n, rng);
  inst.validate();
  return inst;
}

Instance gen_random_metric(int n, int k, int c, std::uint64_t seed) {
  if (n < 1 || k < 1 || k > n || c < 1 || c > n) throw Error("bad generator parameters");
  Prng rng = Prng(seed).derive("gen_random_metric");
  Instance inst;
  inst.metric = MetricKind::Matrix;
  inst.k = k;
  inst.dist.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat d(1 + static_cast<long>(rng.below(1000)), 10);
      d.canonicalize();
      inst.dist[i][j] = d;
      inst.dist[j][i] = std::move(d);
    }
  // shortest-path closure restores the triangle inequality
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (inst.dist[i][m] + inst.dist[m][j] < inst.dist[i][j])
          inst.dist[i][j] = inst.dist[i][m] + inst.dist[m][j];
  inst.colors.assign(n, 0);
  assign_colors_and_requirements(inst, c, n, rng);
  inst.validate();
  return inst;
}

}  // namespace ckc
