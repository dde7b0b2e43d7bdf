// Copyright 2026 The cgf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers and rationals, the canonical "p/q" text form, and the few
// rational -> double conversions that must stay accurate for huge operands
// (factorials in the thousands of digits, products of hundreds of values).

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "cgf/error.hpp"

namespace cgf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) fail(ErrorCode::kParse, "zero denominator");
  return Rational(Integer(num), Integer(den));
}

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

// Largest integer <= r.
inline Integer floor_of(const Rational& r) {
  Integer n = numerator_of(r);
  const Integer d = denominator_of(r);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

// Representative of r in [0, 1), i.e. r viewed as a point of the circle.
inline Rational frac(const Rational& r) { return r - Rational(floor_of(r)); }

inline Rational ipow(Rational base, unsigned exponent) {
  Rational result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    fail(ErrorCode::kParse, "malformed rational '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      fail(ErrorCode::kParse, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace detail

// Accepts "p", "p/q" and signed variants. Decimal points are rejected so that
// every value read back is exactly the value that was written.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_integer(text, text));
  }
  Integer num = detail::parse_integer(text.substr(0, slash), text);
  Integer den = detail::parse_integer(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  // Boost rejects a negative denominator outright.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// Correctly rounded (round-to-nearest) for results in the normal double
// range; operands may have any size.
inline double to_double(const Rational& r) {
  Integer n = numerator_of(r);
  if (n == 0) return 0.0;
  const bool negative = n < 0;
  if (negative) n = -n;
  const Integer d = denominator_of(r);
  const long shift = static_cast<long>(boost::multiprecision::msb(n)) -
                     static_cast<long>(boost::multiprecision::msb(d));
  // Scale so the integer quotient lies in [2^62, 2^64).
  const long k = 63 - shift;
  Integer quotient;
  Integer remainder;
  if (k >= 0) {
    const Integer scaled = n << static_cast<unsigned>(k);
    boost::multiprecision::divide_qr(scaled, d, quotient, remainder);
  } else {
    const Integer scaled = d << static_cast<unsigned>(-k);
    boost::multiprecision::divide_qr(n, scaled, quotient, remainder);
  }
  if (remainder != 0) quotient |= 1;  // sticky bit, far below double precision
  const auto mantissa = quotient.convert_to<std::uint64_t>();
  const double value = std::ldexp(static_cast<double>(mantissa), static_cast<int>(-k));
  return negative ? -value : value;
}

// Natural logarithm of a positive rational whose magnitude may be far outside
// the double range. Returns -inf for zero.
inline double log_rational(const Rational& r) {
  if (r < 0) fail(ErrorCode::kOutOfRange, "logarithm of a negative value");
  if (r == 0) return -std::numeric_limits<double>::infinity();
  const Integer n = numerator_of(r);
  const Integer d = denominator_of(r);
  const long e = static_cast<long>(boost::multiprecision::msb(n)) -
                 static_cast<long>(boost::multiprecision::msb(d));
  Rational mantissa = r;
  if (e > 0) {
    mantissa /= Rational(Integer(1) << static_cast<unsigned>(e));
  } else if (e < 0) {
    mantissa *= Rational(Integer(1) << static_cast<unsigned>(-e));
  }
  // mantissa is now in (1/2, 2)
  return std::log(to_double(mantissa)) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace cgf
