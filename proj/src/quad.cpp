#include "ckc/quad.hpp"

#include <cmath>

namespace ckc {

int Quad3::sign() const {
  const int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(3) decides, compare squares.
  const Rat d = a * a - 3 * b * b;
  const int sd = sgn(d);
  return sd == 0 ? 0 : sa * sd;
}

int Ext::sign() const {
  if (sgn(s) == 0) return u.sign();
  const int su = u.sign(), sv = v.sign();
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  const Quad3 d = u * u - (v * v) * s;
  const int sd = d.sign();
  return sd == 0 ? 0 : su * sd;
}

double Ext::approx() const {
  const double sq3 = std::sqrt(3.0);
  return rat_to_double(u.a) + rat_to_double(u.b) * sq3 +
         (rat_to_double(v.a) + rat_to_double(v.b) * sq3) * std::sqrt(rat_to_double(s));
}

bool point_in_convex(std::span<const Vec2E> poly, const Vec2E& p) {
  bool has_pos = false, has_neg = false;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2E& a = poly[i];
    const Vec2E& b = poly[(i + 1) % n];
    const int s = cross(b - a, p - a).sign();
    if (s > 0) has_pos = true;
    if (s < 0) has_neg = true;
    if (has_pos && has_neg) return false;
  }
  return true;
}

bool seg_dist_le(const Vec2E& p, const Vec2E& a, const Vec2E& b, const Ext& t2) {
  const Vec2E d = b - a;
  const Vec2E ap = p - a;
  const Ext u = dot(ap, d);
  if (u.sign() <= 0) return (norm2(ap) - t2).sign() <= 0;
  const Ext den = dot(d, d);
  if ((u - den).sign() >= 0) return (norm2(p - b) - t2).sign() <= 0;
  // interior projection: dist^2 = |ap|^2 - u^2/den
  return ((norm2(ap) - t2) * den - u * u).sign() <= 0;
}

bool seg_dist_ge(const Vec2E& p, const Vec2E& a, const Vec2E& b, const Ext& t2, bool strict) {
  const Vec2E d = b - a;
  const Vec2E ap = p - a;
  const Ext u = dot(ap, d);
  auto ok = [&](const Ext& diff) { return strict ? diff.sign() > 0 : diff.sign() >= 0; };
  if (u.sign() <= 0) return ok(norm2(ap) - t2);
  const Ext den = dot(d, d);
  if ((u - den).sign() >= 0) return ok(norm2(p - b) - t2);
  return ok((norm2(ap) - t2) * den - u * u);
}

bool polys_intersect(std::span<const Vec2E> pa, std::span<const Vec2E> pb) {
  // SAT on both polygons' edge normals. Convexity makes this exact and
  // complete; closed polygons, so touching counts as intersecting.
  auto separated = [](std::span<const Vec2E> pa_, std::span<const Vec2E> pb_) {
    const size_t n = pa_.size();
    for (size_t i = 0; i < n; ++i) {
      const Vec2E& a = pa_[i];
      const Vec2E& b = pa_[(i + 1) % n];
      const Vec2E d = b - a;
      int amin = 2, amax = -2, bmin = 2, bmax = -2;
      for (const Vec2E& q : pa_) {
        const int s = cross(d, q - a).sign();
        amin = std::min(amin, s);
        amax = std::max(amax, s);
      }
      for (const Vec2E& q : pb_) {
        const int s = cross(d, q - a).sign();
        bmin = std::min(bmin, s);
        bmax = std::max(bmax, s);
      }
      // all of pa on side <= 0 while all of pb strictly > 0 (or mirrored)
      if (amax <= 0 && bmin > 0) return true;
      if (amin >= 0 && bmax < 0) return true;
    }
    return false;
  };
  return !separated(pa, pb) && !separated(pb, pa);
}

bool poly_dist_ge(std::span<const Vec2E> pa, std::span<const Vec2E> pb, const Ext& t2, bool strict) {
  if (polys_intersect(pa, pb)) {
    const int st = t2.sign();
    return strict ? st < 0 : st <= 0;
  }
  const size_t na = pa.size(), nb = pb.size();
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j)
      if (!seg_dist_ge(pa[i], pb[j], pb[(j + 1) % nb], t2, strict)) return false;
  for (size_t j = 0; j < nb; ++j)
    for (size_t i = 0; i < na; ++i)
      if (!seg_dist_ge(pb[j], pa[i], pa[(i + 1) % na], t2, strict)) return false;
  return true;
}

bool poly_dist_le(std::span<const Vec2E> pa, std::span<const Vec2E> pb, const Ext& t2) {
  if (t2.sign() < 0) return false;
  if (polys_intersect(pa, pb)) return true;
  const size_t na = pa.size(), nb = pb.size();
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j)
      if (seg_dist_le(pa[i], pb[j], pb[(j + 1) % nb], t2)) return true;
  for (size_t j = 0; j < nb; ++j)
    for (size_t i = 0; i < na; ++i)
      if (seg_dist_le(pb[j], pa[i], pa[(i + 1) % na], t2)) return true;
  return false;
}

}  // namespace ckc
