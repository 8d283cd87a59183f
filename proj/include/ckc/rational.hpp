#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ckc {

// All exact arithmetic in the library runs on GMP rationals.
using Rat = mpq_class;

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

/// Parses "12.5", "-3e-2", "7" or "num/den" into an exact rational.
/// Throws ParseError on anything else.
Rat rat_from_string(const std::string& s);

/// Exact terminating decimal, if the denominator is of the form 2^a*5^b.
std::optional<std::string> rat_to_decimal(const Rat& q);

/// Exact string form: terminating decimal when one exists, "num/den" otherwise.
std::string rat_to_string(const Rat& q);

/// Shortest-ish decimal approximation for display (17 significant digits).
std::string rat_approx(const Rat& q);

double rat_to_double(const Rat& q);

/// A non-negative length stored by its exact square. Euclidean interpoint
/// distances are irrational in general, but their squares are rational, and
/// every comparison the solver needs can be done on squares.
struct Length {
  Rat sq;  // value = sqrt(sq), sq >= 0

  Length() : sq(0) {}
  static Length from_sq(Rat s);
  static Length from_value(const Rat& v);  // v >= 0

  bool is_zero() const { return sgn(sq) == 0; }
  /// Length scaled by a non-negative rational factor.
  Length scaled(const Rat& f) const;
  double value() const;

  friend bool operator==(const Length& x, const Length& y) { return x.sq == y.sq; }
  friend bool operator<(const Length& x, const Length& y) { return x.sq < y.sq; }
  friend bool operator<=(const Length& x, const Length& y) { return x.sq <= y.sq; }
  friend bool operator>(const Length& x, const Length& y) { return x.sq > y.sq; }
  friend bool operator>=(const Length& x, const Length& y) { return x.sq >= y.sq; }
};

/// Exact decimal if the squared value has a rational square root with a
/// terminating decimal, otherwise a 17-digit approximation.
std::string length_display(const Length& l);

}  // namespace ckc
