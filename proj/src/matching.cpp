#include "ckc/matching.hpp"

#include <algorithm>
#include <set>

#include "ckc/errors.hpp"
#include "ckc/prng.hpp"

namespace ckc {

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  a %= P;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw Error("division by zero mod p");
  return pow(a, P - 2);
}

}  // namespace modp

void WeightedGraph::check() const {
  if (n < 0 || colors < 0) throw Error("bad graph sizes");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw Error("edge endpoint out of range");
    if (e.u == e.v) throw Error("self-loop");
    if (static_cast<int>(e.w.size()) != colors) throw Error("edge weight length mismatch");
    for (long w : e.w)
      if (w < 0) throw Error("negative edge weight");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second) throw Error("duplicate edge");
  }
}

namespace detail {

std::uint64_t pfaffian(std::vector<std::uint64_t> a, int n) {
  using namespace modp;
  if (n % 2) return 0;
  auto at = [&](int r, int c) -> std::uint64_t& { return a[static_cast<size_t>(r) * n + c]; };
  std::uint64_t pf = 1;
  for (int i = 0; i < n; i += 2) {
    int piv_col = -1;
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) != 0) {
        piv_col = j;
        break;
      }
    if (piv_col < 0) return 0;
    if (piv_col != i + 1) {
      for (int t = 0; t < n; ++t) std::swap(at(i + 1, t), at(piv_col, t));
      for (int t = 0; t < n; ++t) std::swap(at(t, i + 1), at(t, piv_col));
      pf = sub(0, pf);
    }
    const std::uint64_t piv = at(i, i + 1);
    pf = mul(pf, piv);
    const std::uint64_t piv_inv = inv(piv);
    for (int r = i + 2; r < n; ++r) {
      // congruence ops zeroing A[i][r] and A[i+1][r]
      const std::uint64_t alpha = mul(at(i, r), piv_inv);
      if (alpha != 0) {
        for (int t = i; t < n; ++t) at(t, r) = sub(at(t, r), mul(alpha, at(t, i + 1)));
        for (int t = i; t < n; ++t) at(r, t) = sub(at(r, t), mul(alpha, at(i + 1, t)));
      }
      const std::uint64_t beta = mul(at(i + 1, r), piv_inv);
      if (beta != 0) {
        for (int t = i; t < n; ++t) at(t, r) = add(at(t, r), mul(beta, at(t, i)));
        for (int t = i; t < n; ++t) at(r, t) = add(at(r, t), mul(beta, at(i, t)));
      }
    }
  }
  return pf;
}

}  // namespace detail

namespace {

using modp::P;

// Rows of the inverse Vandermonde on nodes 1..d+1:
// coeff[k] = sum_t rows[k][t] * value_at_node(t).
std::vector<std::vector<std::uint64_t>> lagrange_rows(long d) {
  const long m = d + 1;
  std::vector<std::vector<std::uint64_t>> rows(m, std::vector<std::uint64_t>(m, 0));
  for (long t = 0; t < m; ++t) {
    // expand prod_{s != t} (x - x_s), nodes x_s = s+1
    std::vector<std::uint64_t> num(1, 1);
    std::uint64_t denom = 1;
    for (long s = 0; s < m; ++s) {
      if (s == t) continue;
      const std::uint64_t xs = static_cast<std::uint64_t>(s + 1);
      num.push_back(0);
      for (long k = static_cast<long>(num.size()) - 1; k >= 1; --k)
        num[k] = modp::sub(num[k - 1], modp::mul(num[k], xs));
      num[0] = modp::sub(0, modp::mul(num[0], xs));
      const std::uint64_t xt = static_cast<std::uint64_t>(t + 1);
      denom = modp::mul(denom, xt >= xs ? xt - xs : P - (xs - xt));
    }
    const std::uint64_t dinv = modp::inv(denom);
    for (long k = 0; k < m; ++k) rows[k][t] = modp::mul(num[k], dinv);
  }
  return rows;
}

struct GridShape {
  std::vector<long> dims;      // bounds[i] + 1
  std::vector<size_t> stride;  // row-major, last axis fastest
  size_t total = 1;

  explicit GridShape(const std::vector<long>& bounds) {
    const size_t c = bounds.size();
    dims.resize(c);
    stride.assign(c, 1);
    for (size_t i = 0; i < c; ++i) dims[i] = bounds[i] + 1;
    for (size_t i = c; i-- > 0;) {
      stride[i] = total;
      total *= static_cast<size_t>(dims[i]);
    }
  }
};

// Pfaffian of the weighted Tutte-style matrix at every grid node. Edges and
// vertices can be masked out; random field coefficients come from rng in edge
// order, so results replay from the seed.
std::vector<std::uint64_t> pf_grid_evals(const WeightedGraph& g, const std::vector<char>& edge_alive,
                                         const std::vector<char>& vert_alive,
                                         const std::vector<long>& bounds, Prng& rng) {
  const int c = g.colors;
  const GridShape shape(bounds);

  std::vector<int> vmap(g.n, -1);
  int na = 0;
  for (int v = 0; v < g.n; ++v)
    if (vert_alive[v]) vmap[v] = na++;

  struct LiveEdge {
    int u, v;
    const std::vector<long>* w;
    std::uint64_t rho;
  };
  std::vector<LiveEdge> live;
  for (size_t idx = 0; idx < g.edges.size(); ++idx) {
    const auto& e = g.edges[idx];
    const bool in = edge_alive[idx] && vert_alive[e.u] && vert_alive[e.v];
    const std::uint64_t rho = 1 + rng.below(P - 1);  // draw even for masked edges: stable streams
    if (in) live.push_back({vmap[e.u], vmap[e.v], &e.w, rho});
  }

  if (na % 2) return std::vector<std::uint64_t>(shape.total, 0);

  // per-axis power tables: pw[i][exp][node]
  std::vector<long> max_exp(c, 0);
  for (const auto& le : live)
    for (int i = 0; i < c; ++i) max_exp[i] = std::max(max_exp[i], (*le.w)[i]);
  std::vector<std::vector<std::vector<std::uint64_t>>> pw(c);
  for (int i = 0; i < c; ++i) {
    pw[i].assign(max_exp[i] + 1, std::vector<std::uint64_t>(shape.dims[i], 1));
    for (long exp = 1; exp <= max_exp[i]; ++exp)
      for (long t = 0; t < shape.dims[i]; ++t)
        pw[i][exp][t] = modp::mul(pw[i][exp - 1][t], static_cast<std::uint64_t>(t + 1));
  }

  std::vector<std::uint64_t> out(shape.total, 0);
  std::vector<long> idx(c, 0);
  std::vector<std::uint64_t> mat(static_cast<size_t>(na) * na);
  for (size_t flat = 0; flat < shape.total; ++flat) {
    std::fill(mat.begin(), mat.end(), 0);
    for (const auto& le : live) {
      std::uint64_t val = le.rho;
      for (int i = 0; i < c; ++i) val = modp::mul(val, pw[i][(*le.w)[i]][idx[i]]);
      mat[static_cast<size_t>(le.u) * na + le.v] = val;
      mat[static_cast<size_t>(le.v) * na + le.u] = modp::sub(0, val);
    }
    out[flat] = detail::pfaffian(mat, na);
    for (int i = c - 1; i >= 0; --i) {
      if (++idx[i] < shape.dims[i]) break;
      idx[i] = 0;
    }
  }
  return out;
}

}  // namespace

bool SupportTable::achievable(std::span<const long> w) const {
  if (w.size() != bounds.size()) throw Error("weight vector arity mismatch");
  size_t flat = 0;
  for (size_t i = 0; i < bounds.size(); ++i) {
    if (w[i] < 0 || w[i] > bounds[i]) return false;
    flat = flat * static_cast<size_t>(bounds[i] + 1) + static_cast<size_t>(w[i]);
  }
  return flags[flat] != 0;
}

std::vector<std::vector<long>> SupportTable::achievable_list() const {
  const GridShape shape(bounds);
  std::vector<std::vector<long>> out;
  std::vector<long> idx(bounds.size(), 0);
  for (size_t flat = 0; flat < shape.total; ++flat) {
    if (flags[flat]) out.push_back(idx);
    for (size_t i = bounds.size(); i-- > 0;) {
      if (++idx[i] < shape.dims[i]) break;
      idx[i] = 0;
    }
  }
  return out;
}

SupportTable support(const WeightedGraph& g, const std::vector<long>& bounds, std::uint64_t seed) {
  g.check();
  if (g.n % 2) throw Error("perfect matching needs an even number of vertices");
  if (static_cast<int>(bounds.size()) != g.colors) throw Error("bounds arity mismatch");
  for (long b : bounds)
    if (b < 0) throw Error("negative bound");
  for (const auto& e : g.edges)
    for (int i = 0; i < g.colors; ++i)
      if (e.w[i] > bounds[i]) throw Error("edge weight exceeds declared bounds");

  Prng rng = Prng(seed).derive("support");
  std::vector<char> edge_alive(g.edges.size(), 1), vert_alive(g.n, 1);
  std::vector<std::uint64_t> vals = pf_grid_evals(g, edge_alive, vert_alive, bounds, rng);

  // per-axis interpolation: evaluations -> coefficients
  const GridShape shape(bounds);
  const int c = g.colors;
  for (int axis = 0; axis < c; ++axis) {
    const auto rows = lagrange_rows(bounds[axis]);
    const long dim = shape.dims[axis];
    const size_t stride = shape.stride[axis];
    const size_t block = stride * static_cast<size_t>(dim);
    std::vector<std::uint64_t> slice(dim), coef(dim);
    for (size_t base = 0; base < shape.total; base += block) {
      for (size_t off = 0; off < stride; ++off) {
        for (long t = 0; t < dim; ++t) slice[t] = vals[base + off + stride * static_cast<size_t>(t)];
        for (long k = 0; k < dim; ++k) {
          std::uint64_t acc = 0;
          for (long t = 0; t < dim; ++t) acc = modp::add(acc, modp::mul(rows[k][t], slice[t]));
          coef[k] = acc;
        }
        for (long k = 0; k < dim; ++k) vals[base + off + stride * static_cast<size_t>(k)] = coef[k];
      }
    }
  }

  SupportTable table;
  table.bounds = bounds;
  table.seed = seed;
  table.flags.assign(shape.total, 0);
  for (size_t i = 0; i < shape.total; ++i) table.flags[i] = vals[i] != 0;
  return table;
}

std::vector<long> default_degree_bounds(const WeightedGraph& g) {
  std::vector<long> out(g.colors, 0);
  for (int i = 0; i < g.colors; ++i) {
    std::vector<long> ws;
    ws.reserve(g.edges.size());
    for (const auto& e : g.edges) ws.push_back(e.w[i]);
    std::sort(ws.rbegin(), ws.rend());
    long sum = 0;
    for (int t = 0; t < std::min<long>(g.n / 2, static_cast<long>(ws.size())); ++t) sum += ws[t];
    out[i] = sum;
  }
  return out;
}

namespace {

// Upper bound on any matching weight of the masked subgraph: per color, the
// sum of the floor(alive/2) largest live edge weights.
std::vector<long> live_weight_cap(const WeightedGraph& g, const std::vector<char>& edge_alive,
                                  const std::vector<char>& vert_alive) {
  int alive_verts = 0;
  for (int v = 0; v < g.n; ++v)
    if (vert_alive[v]) ++alive_verts;
  std::vector<long> out(g.colors, 0);
  for (int i = 0; i < g.colors; ++i) {
    std::vector<long> ws;
    for (size_t idx = 0; idx < g.edges.size(); ++idx) {
      const auto& e = g.edges[idx];
      if (edge_alive[idx] && vert_alive[e.u] && vert_alive[e.v]) ws.push_back(e.w[i]);
    }
    std::sort(ws.rbegin(), ws.rend());
    long sum = 0;
    for (int t = 0; t < std::min<long>(alive_verts / 2, static_cast<long>(ws.size())); ++t) sum += ws[t];
    out[i] = sum;
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> recover(const WeightedGraph& g, const std::vector<long>& target,
                                        std::uint64_t seed, const std::vector<long>* degree_bounds) {
  g.check();
  if (g.n % 2) throw Error("perfect matching needs an even number of vertices");
  if (static_cast<int>(target.size()) != g.colors) throw Error("target arity mismatch");
  for (long t : target)
    if (t < 0) throw Error("negative target");
  const std::vector<long> bounds = degree_bounds ? *degree_bounds : default_degree_bounds(g);
  for (int i = 0; i < g.colors; ++i)
    if (target[i] > bounds[i]) return std::nullopt;

  const Prng base = Prng(seed).derive("recover");
  constexpr int kAttempts = 4;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Prng arng = base.derive(static_cast<std::uint64_t>(attempt));
    std::uint64_t qctr = 0;

    std::vector<char> edge_alive(g.edges.size(), 1), vert_alive(g.n, 1);
    std::vector<long> cur(target);

    auto query = [&](const std::vector<long>& want) -> bool {
      std::vector<long> bq = live_weight_cap(g, edge_alive, vert_alive);
      for (int i = 0; i < g.colors; ++i) {
        bq[i] = std::min(bq[i], bounds[i]);
        if (want[i] > bq[i]) return false;
      }
      Prng qrng = arng.derive(++qctr);
      const std::vector<std::uint64_t> vals = pf_grid_evals(g, edge_alive, vert_alive, bq, qrng);
      const GridShape shape(bq);
      std::vector<std::vector<std::uint64_t>> wrow(g.colors);
      for (int i = 0; i < g.colors; ++i) wrow[i] = lagrange_rows(bq[i])[want[i]];
      std::uint64_t acc = 0;
      std::vector<long> idx(g.colors, 0);
      for (size_t flat = 0; flat < shape.total; ++flat) {
        std::uint64_t weight = 1;
        for (int i = 0; i < g.colors; ++i) weight = modp::mul(weight, wrow[i][idx[i]]);
        acc = modp::add(acc, modp::mul(weight, vals[flat]));
        for (int i = g.colors - 1; i >= 0; --i) {
          if (++idx[i] < shape.dims[i]) break;
          idx[i] = 0;
        }
      }
      return acc != 0;
    };

    if (!query(cur)) {
      if (attempt == 0) return std::nullopt;  // not flagged, trusted one-sided
      continue;
    }

    std::vector<int> matched;
    for (size_t idx = 0; idx < g.edges.size(); ++idx) {
      if (!edge_alive[idx]) continue;
      const auto& e = g.edges[idx];
      if (!vert_alive[e.u] || !vert_alive[e.v]) continue;
      bool over = false;
      for (int i = 0; i < g.colors; ++i)
        if (e.w[i] > cur[i]) over = true;
      if (over) {  // cannot sit in any remaining witness
        edge_alive[idx] = 0;
        continue;
      }
      edge_alive[idx] = 0;
      if (query(cur)) continue;  // deletable
      edge_alive[idx] = 1;
      matched.push_back(static_cast<int>(idx));
      vert_alive[e.u] = vert_alive[e.v] = 0;
      for (int i = 0; i < g.colors; ++i) cur[i] -= e.w[i];
    }

    bool all_dead = true;
    for (int v = 0; v < g.n; ++v)
      if (vert_alive[v]) all_dead = false;
    bool zero = true;
    for (long t : cur)
      if (t != 0) zero = false;
    if (all_dead && zero) return matched;  // deterministically verified
  }
  throw Error("exact-matching recovery failed after retries (unlucky field points)");
}

std::map<std::vector<long>, std::vector<int>> brute_force_matchings(const WeightedGraph& g) {
  g.check();
  if (g.n > 12) throw GuardError("brute-force matching enumeration capped at 12 vertices");
  std::map<std::vector<long>, std::vector<int>> out;
  if (g.n % 2) return out;

  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge idx)
  for (size_t i = 0; i < g.edges.size(); ++i) {
    adj[g.edges[i].u].push_back({g.edges[i].v, static_cast<int>(i)});
    adj[g.edges[i].v].push_back({g.edges[i].u, static_cast<int>(i)});
  }
  std::vector<char> used(g.n, 0);
  std::vector<int> picked;
  std::vector<long> weight(g.colors, 0);

  auto rec = [&](auto&& self) -> void {
    int u = -1;
    for (int v = 0; v < g.n; ++v)
      if (!used[v]) {
        u = v;
        break;
      }
    if (u < 0) {
      auto it = out.find(weight);
      if (it == out.end()) out.emplace(weight, picked);
      return;
    }
    used[u] = 1;
    for (const auto& [v, idx] : adj[u]) {
      if (used[v]) continue;
      used[v] = 1;
      picked.push_back(idx);
      for (int i = 0; i < g.colors; ++i) weight[i] += g.edges[idx].w[i];
      self(self);
      for (int i = 0; i < g.colors; ++i) weight[i] -= g.edges[idx].w[i];
      picked.pop_back();
      used[v] = 0;
    }
    used[u] = 0;
  };
  rec(rec);
  return out;
}

mpz_class pack_weight(std::span<const long> w, const mpz_class& n_bound) {
  const mpz_class n2 = n_bound * n_bound;
  mpz_class acc = 0;
  for (size_t i = w.size(); i-- > 0;) acc = acc * n2 + w[i];
  return acc;
}

std::vector<long> unpack_weight(const mpz_class& packed, const mpz_class& n_bound, int colors) {
  const mpz_class n2 = n_bound * n_bound;
  mpz_class rest = packed;
  std::vector<long> out(colors, 0);
  for (int i = 0; i < colors; ++i) {
    mpz_class digit = rest % n2;
    out[i] = digit.get_si();
    rest /= n2;
  }
  return out;
}

}  // namespace ckc
