#pragma once

#include <array>
#include <span>
#include <vector>

#include "ckc/rational.hpp"

namespace ckc {

/// Element of Q(sqrt(3)): a + b*sqrt(3). Sign is decidable exactly.
struct Quad3 {
  Rat a, b;

  Quad3() : a(0), b(0) {}
  Quad3(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit Quad3(Rat a_) : a(std::move(a_)), b(0) {}

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  int sign() const;

  friend Quad3 operator+(const Quad3& x, const Quad3& y) { return {x.a + y.a, x.b + y.b}; }
  friend Quad3 operator-(const Quad3& x, const Quad3& y) { return {x.a - y.a, x.b - y.b}; }
  friend Quad3 operator-(const Quad3& x) { return {-x.a, -x.b}; }
  friend Quad3 operator*(const Quad3& x, const Quad3& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend Quad3 operator*(const Quad3& x, const Rat& f) { return {x.a * f, x.b * f}; }
};

/// Element of Q(sqrt(3), sqrt(s)): u + v*sqrt(s) with u, v in Q(sqrt(3)) and
/// a fixed rational s >= 0 shared by all values mixed in an expression.
/// Grid geometry lives here: grid coordinates are (rational + rational*sqrt3)
/// multiples of the side length sqrt(s), input points are plain rationals.
struct Ext {
  Quad3 u, v;
  Rat s;

  Ext() : s(0) {}
  Ext(Quad3 u_, Quad3 v_, Rat s_) : u(std::move(u_)), v(std::move(v_)), s(std::move(s_)) {}

  static Ext rational(Rat q, Rat s) { return {Quad3(std::move(q)), Quad3(), std::move(s)}; }
  static Ext sqrt_s(Quad3 coef, Rat s) { return {Quad3(), std::move(coef), std::move(s)}; }

  bool is_zero() const { return u.is_zero() && v.is_zero(); }
  int sign() const;

  friend Ext operator+(const Ext& x, const Ext& y) { return {x.u + y.u, x.v + y.v, x.s}; }
  friend Ext operator-(const Ext& x, const Ext& y) { return {x.u - y.u, x.v - y.v, x.s}; }
  friend Ext operator-(const Ext& x) { return {-x.u, -x.v, x.s}; }
  friend Ext operator*(const Ext& x, const Ext& y) {
    return {x.u * y.u + (x.v * y.v) * x.s, x.u * y.v + x.v * y.u, x.s};
  }

  double approx() const;
};

inline int cmp(const Ext& x, const Ext& y) { return (x - y).sign(); }

struct Vec2E {
  Ext x, y;

  friend Vec2E operator-(const Vec2E& p, const Vec2E& q) { return {p.x - q.x, p.y - q.y}; }
};

inline Ext dot(const Vec2E& p, const Vec2E& q) { return p.x * q.x + p.y * q.y; }
inline Ext cross(const Vec2E& p, const Vec2E& q) { return p.x * q.y - p.y * q.x; }
inline Ext norm2(const Vec2E& p) { return dot(p, p); }

/// Closed convex polygon membership (vertices in either rotational order).
bool point_in_convex(std::span<const Vec2E> poly, const Vec2E& p);

/// dist(p, segment ab)^2 <= t2, exactly.
bool seg_dist_le(const Vec2E& p, const Vec2E& a, const Vec2E& b, const Ext& t2);

/// dist(p, segment ab)^2 >= t2 (or > when strict), exactly.
bool seg_dist_ge(const Vec2E& p, const Vec2E& a, const Vec2E& b, const Ext& t2, bool strict);

/// Closed convex polygons share a point (separating-axis test, exact).
bool polys_intersect(std::span<const Vec2E> pa, std::span<const Vec2E> pb);

/// dist(A, B)^2 >= t2 (or > when strict) for disjoint-or-touching convex polygons.
bool poly_dist_ge(std::span<const Vec2E> pa, std::span<const Vec2E> pb, const Ext& t2, bool strict);

/// dist(A, B)^2 <= t2.
bool poly_dist_le(std::span<const Vec2E> pa, std::span<const Vec2E> pb, const Ext& t2);

}  // namespace ckc
