#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace ckc {

namespace modp {

// Mersenne prime field used by the randomized matching engine.
inline constexpr std::uint64_t P = (std::uint64_t(1) << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s >= P) s -= P;
  return s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(t & P);
  std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
  std::uint64_t s = lo + hi;
  s = (s & P) + (s >> 61);
  if (s >= P) s -= P;
  return s;
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);

}  // namespace modp

/// Undirected simple graph whose edges carry per-color non-negative integer
/// weights (point counts in the grid reduction).
struct WeightedGraph {
  int n = 0;
  int colors = 0;

  struct Edge {
    int u = 0, v = 0;
    std::vector<long> w;
  };
  std::vector<Edge> edges;

  void check() const;  // throws on loops, duplicates, bad weights
};

/// Achievability table over all weight vectors within per-color bounds: one
/// randomized Pfaffian-interpolation pass answers every target at once.
/// A set flag certifies a matching exists (the coefficient is a nonzero
/// polynomial evaluation); a clear flag is wrong with probability at most
/// degree/P per coefficient.
struct SupportTable {
  std::vector<long> bounds;
  std::uint64_t seed = 0;
  std::uint64_t prime = modp::P;
  std::vector<std::uint8_t> flags;  // row-major over (bounds[0]+1) x ... grid

  bool achievable(std::span<const long> w) const;
  std::vector<std::vector<long>> achievable_list() const;
};

/// Per-color degree bounds must dominate every perfect matching's weight
/// vector (the caller guarantees this; the grid reduction gets it from region
/// disjointness). Any single edge weight exceeding the bounds is an error.
SupportTable support(const WeightedGraph& g, const std::vector<long>& bounds, std::uint64_t seed);

/// Finds a perfect matching with exactly the target weight vector by
/// edge-deletion self-reduction, then verifies it deterministically; retries
/// with derived seeds on (improbable) verification failure. Returns edge
/// indices, or nullopt when the target is not achievable as far as the
/// randomized test can tell.
std::optional<std::vector<int>> recover(const WeightedGraph& g, const std::vector<long>& target,
                                        std::uint64_t seed,
                                        const std::vector<long>* degree_bounds = nullptr);

/// Exhaustive enumeration for small graphs (|V| <= 12): every achievable
/// weight vector with one witness matching (edge indices).
std::map<std::vector<long>, std::vector<int>> brute_force_matchings(const WeightedGraph& g);

/// Safe default degree bounds: per color, the sum of the floor(n/2) largest
/// edge weights.
std::vector<long> default_degree_bounds(const WeightedGraph& g);

/// Integer packing of a weight vector as sum w_i * N^(2i); injective while
/// every component stays below N^2.
mpz_class pack_weight(std::span<const long> w, const mpz_class& n_bound);
std::vector<long> unpack_weight(const mpz_class& packed, const mpz_class& n_bound, int colors);

namespace detail {
/// Pfaffian of a skew-symmetric matrix over F_P (row-major n*n), by
/// congruence elimination. Exposed for tests.
std::uint64_t pfaffian(std::vector<std::uint64_t> mat, int n);
}  // namespace detail

}  // namespace ckc
