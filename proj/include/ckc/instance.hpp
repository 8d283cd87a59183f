#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ckc/rational.hpp"

namespace ckc {

enum class MetricKind { EuclideanPlane, Matrix };

struct PlantedInfo {
  std::vector<int> centers;
  Length radius;
};

/// A colorful k-center instance. Point ids are indices into the point list.
/// Coordinates and matrix entries are exact rationals; distances between
/// planar points are handled through their squares (see Length).
struct Instance {
  MetricKind metric = MetricKind::EuclideanPlane;
  int k = 1;
  std::vector<int> colors;                    // per point, in [0, c)
  std::vector<long> requirements;             // t_0 .. t_{c-1}
  std::vector<std::pair<Rat, Rat>> coords;    // planar metric only
  std::vector<std::vector<Rat>> dist;         // matrix metric only
  std::optional<PlantedInfo> planted;         // generator bookkeeping

  int n() const { return static_cast<int>(colors.size()); }
  int num_colors() const { return static_cast<int>(requirements.size()); }
  long color_size(int color) const;

  Rat dist_sq(int i, int j) const;
  Length distance(int i, int j) const { return Length::from_sq(dist_sq(i, j)); }

  /// Full invariant check for external inputs; internal residual instances
  /// are allowed to skip it (their requirements may exceed class sizes).
  void validate() const;
};

struct Solution {
  std::vector<int> centers;  // point ids, deduplicated and sorted
  Length radius;
  std::vector<long> covered;  // per color, recomputed from centers+radius
  bool feasible = false;      // coverage requirements met (center count reported, not capped)
};

struct CoverageReport {
  std::vector<long> covered;
  bool feasible = false;  // coverage met AND num_centers <= k
  int num_centers = 0;
  Length radius;
};

/// Ascending deduplicated interpoint distances with 0 prepended. Contains the
/// optimal radius: balls are closed and centered at input points.
std::vector<Length> candidate_radii(const Instance& inst);

/// Recomputes coverage from scratch; throws on unknown center ids.
CoverageReport verify(const Instance& inst, const Solution& sol);

/// Builds a Solution with covered/feasible filled in from verify().
Solution make_solution(const Instance& inst, std::vector<int> centers, Length radius);

/// Two far-apart clusters (3 red + 1 blue and 1 red + 3 blue), k = 1,
/// requirements (2, 2). The fractional/integral gap showcase.
Instance gen_example_2_5(const Rat& scale);

struct SeparatedParams {
  int n = 10;
  int k = 2;
  int c = 2;
  Rat alpha = Rat(33, 4);
  Rat rho = 1;
  std::uint64_t seed = 0;
  int outliers = 0;
};

/// Plants k disks of radius rho with pairwise center distance > alpha*rho and
/// sprinkles colored points inside them (plus optional far outliers). The
/// planted cover (disk centers at radius rho) is recorded on the instance.
Instance gen_separated(const SeparatedParams& params);

Instance gen_random_planar(int n, int k, int c, std::uint64_t seed);

/// Random general metric via shortest-path closure of a random symmetric matrix.
Instance gen_random_metric(int n, int k, int c, std::uint64_t seed);

}  // namespace ckc
