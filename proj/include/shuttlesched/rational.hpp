#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shuttle {

// Exact rational arithmetic for curve queries, pseudo-inverses and the DP
// solvers. Conversions to double happen only at reporting boundaries.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

// floor(n/d) for a rational, exact.
inline BigInt rat_floor(const Rat& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline BigInt rat_ceil(const Rat& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;
  if (n > 0 && q * d != n) ++q;
  return q;
}

// Round-to-nearest double. Goes through a scaled integer quotient so huge
// numerators/denominators cannot overflow the conversion.
inline double to_double(const Rat& r) {
  if (r == 0) return 0.0;
  BigInt n = numerator(r), d = denominator(r);
  bool neg = n < 0;
  if (neg) n = -n;
  long nb = static_cast<long>(msb(n));
  long db = static_cast<long>(msb(d));
  // Keep ~64 significant bits in the quotient.
  long shift = 64 - (nb - db);
  if (shift > 0)
    n <<= shift;
  else if (shift < 0)
    d <<= -shift;
  BigInt q = n / d;
  double lead = q.convert_to<double>();
  double val = std::ldexp(lead, static_cast<int>(-shift));
  return neg ? -val : val;
}

// Parse a plain decimal literal ("12", "-0.625", "3.") into an exact rational.
inline Rat rat_from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty decimal literal");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  BigInt num = 0;
  BigInt den = 1;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal literal");
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      seen_digit = true;
    } else {
      throw std::invalid_argument("bad decimal literal");
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal literal");
  Rat r(num, den);
  return neg ? Rat(-r) : r;
}

}  // namespace shuttle
