#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace embedlb {

// Exact rational scalar used by the LP, flow and tail computations.
using Rat = mpq_class;
using Int = mpz_class;

// Exact conversion; every finite double is a dyadic rational.
inline Rat rat_from_double(double x) {
  Rat r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

// Parses "p/q", a plain integer, or a decimal string ("1.25", "-0.5")
// into an exact rational.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.find('/') != std::string::npos) {
    Rat r(s);
    r.canonicalize();
    return r;
  }
  const size_t dot = s.find('.');
  if (dot == std::string::npos) {
    Rat r(s);
    r.canonicalize();
    return r;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad decimal literal: " + s);
  Int num(digits, 10);
  Int den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" (or plain "p" when the denominator is 1).
inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Decimal rendering with 17 significant digits.
inline std::string decimal17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int pow2(unsigned e) {
  Int r = 1;
  r <<= e;
  return r;
}

}  // namespace embedlb
