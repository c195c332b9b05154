#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zeromoments/error.hpp"

namespace zm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) fail(Errc::InvalidParameter, "zero denominator");
  if (den < 0) return Rational(-BigInt(num), -BigInt(den));
  return Rational(BigInt(num), BigInt(den));
}

namespace detail {

// cpp_int reads a leading 0 as an octal prefix.
inline BigInt decimal_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

}  // namespace detail

/// Canonical "p/q" form; integers render as "p/1".
inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact value of a finite double (every double is a dyadic rational).
inline Rational from_double(double x) {
  if (!std::isfinite(x)) fail(Errc::InvalidParameter, "non-finite value");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 2^53 * mantissa is an integer for every double.
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result{BigInt(scaled)};
  BigInt power = BigInt(1) << std::abs(exponent);
  if (exponent >= 0) {
    result *= Rational(power);
  } else {
    result /= Rational(power);
  }
  return result;
}

/// Parses "p/q", "p", or a decimal literal such as "-0.25" or "1.5e-3", exactly.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) fail(Errc::EmptyInput, "empty rational literal");

  auto parse_integer = [&](std::string_view s) -> BigInt {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) fail(Errc::InvalidParameter, "malformed number '" + std::string(text) + "'");
    for (char c : digits) {
      if (c < '0' || c > '9') fail(Errc::InvalidParameter, "malformed number '" + std::string(text) + "'");
    }
    BigInt v = detail::decimal_digits(digits);
    return (s.front() == '-') ? BigInt(-v) : v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(trim(text.substr(0, slash)));
    BigInt den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) fail(Errc::InvalidParameter, "zero denominator in '" + std::string(text) + "'");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
  }

  std::string_view mantissa = text;
  long long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    BigInt ev = parse_integer(text.substr(e + 1));
    if (abs(ev) > 4000) fail(Errc::InvalidParameter, "exponent out of range in '" + std::string(text) + "'");
    exp10 = ev.convert_to<long long>();
  }
  std::string digits;
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  long long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      fail(Errc::InvalidParameter, "malformed number '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) fail(Errc::InvalidParameter, "malformed number '" + std::string(text) + "'");
  BigInt num = detail::decimal_digits(digits);
  if (negative) num = -num;
  long long shift = exp10 - frac_digits;
  BigInt ten_power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(shift)));
  return shift >= 0 ? Rational(num * ten_power) : Rational(num, ten_power);
}

inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

/// Integer power with the convention 0^0 = 1.
template <class T>
T ipow(const T& base, unsigned exponent) {
  T result(1);
  T b(base);
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (unsigned j = 1; j <= k; ++j) {
    b *= (n - k + j);
    b /= j;
  }
  return b;
}

inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

inline bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && q <= 0; }

}  // namespace zm
