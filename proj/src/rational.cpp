#include "ckc/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "ckc/errors.hpp"

namespace ckc {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Rat parse_fraction(const std::string& s) {
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, s.c_str(), 10) != 0) {
    mpq_clear(q);
    throw ParseError("bad rational literal: " + s);
  }
  if (mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    throw ParseError("zero denominator: " + s);
  }
  mpq_canonicalize(q);
  Rat out(q);
  mpq_clear(q);
  return out;
}

}  // namespace

Rat rat_from_string(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty numeric literal");
  if (s.find('/') != std::string::npos) return parse_fraction(s);

  size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = (s[pos] == '-');
    ++pos;
  }
  std::string int_part, frac_part, exp_part;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) int_part.push_back(s[pos++]);
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac_part.push_back(s[pos++]);
  }
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      eneg = (s[pos] == '-');
      ++pos;
    }
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) exp_part.push_back(s[pos++]);
    if (!all_digits(exp_part)) throw ParseError("bad exponent: " + raw);
    exp10 = std::stol(exp_part);
    if (eneg) exp10 = -exp10;
  }
  if (pos != s.size() || (int_part.empty() && frac_part.empty()))
    throw ParseError("bad decimal literal: " + raw);

  mpz_class mant((int_part.empty() ? std::string("0") : int_part) + frac_part, 10);
  if (neg) mant = -mant;
  long shift = exp10 - static_cast<long>(frac_part.size());

  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
  Rat out;
  if (shift >= 0) {
    out = Rat(mant * pow10);
  } else {
    out = Rat(mant, pow10);
    out.canonicalize();
  }
  return out;
}

std::optional<std::string> rat_to_decimal(const Rat& q) {
  mpz_class den = q.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_even_p(den.get_mpz_t())) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;

  unsigned long k = std::max(twos, fives);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, k);
  mpz_class scaled = q.get_num() * pow10 / q.get_den();  // exact

  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  std::string out;
  if (k == 0) {
    out = digits;
  } else {
    out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (neg && out != "0") out.insert(out.begin(), '-');
  return out;
}

std::string rat_to_string(const Rat& q) {
  if (auto dec = rat_to_decimal(q)) return *dec;
  return q.get_str();
}

std::string rat_approx(const Rat& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", mpq_get_d(q.get_mpq_t()));
  return buf;
}

double rat_to_double(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }

Length Length::from_sq(Rat s) {
  if (sgn(s) < 0) throw Error("negative squared length");
  Length l;
  l.sq = std::move(s);
  return l;
}

Length Length::from_value(const Rat& v) {
  if (sgn(v) < 0) throw Error("negative length");
  Length l;
  l.sq = v * v;
  return l;
}

Length Length::scaled(const Rat& f) const {
  if (sgn(f) < 0) throw Error("negative length scale");
  Length l;
  l.sq = sq * f * f;
  return l;
}

double Length::value() const { return std::sqrt(rat_to_double(sq)); }

namespace {

// Exact rational square root if one exists.
std::optional<Rat> rat_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

std::string length_display(const Length& l) {
  if (auto root = rat_sqrt(l.sq)) {
    if (auto dec = rat_to_decimal(*root)) return *dec;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", l.value());
  return buf;
}

}  // namespace ckc
