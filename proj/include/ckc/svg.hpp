#pragma once

#include <optional>
#include <string>

#include "ckc/instance.hpp"

namespace ckc {

struct PlotOptions {
  std::optional<Rat> alpha;      // with rho: draws the grid and occupied regions
  std::optional<Length> rho;
  std::optional<Solution> solution;
  std::uint64_t seed = 0;        // echoed in a comment
};

/// Static SVG of the instance: colored points, optional solution balls, and
/// optionally the triangular grid with the occupied edge regions.
/// Planar instances only. Output is byte-deterministic.
std::string render_svg(const Instance& inst, const PlotOptions& opts);

}  // namespace ckc
