#pragma once

#include <cmath>
#include <optional>
#include <type_traits>

#include "zeromoments/error.hpp"
#include "zeromoments/rational.hpp"

namespace zm {

namespace detail {

template <class T>
T param_as(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else {
    return T(to_double(q));
  }
}

/// Number of terms after which (a)_k vanishes, if a is a non-positive integer.
inline std::optional<unsigned> termination_length(const Rational& a) {
  if (!is_nonpositive_integer(a)) return std::nullopt;
  return static_cast<unsigned>((-a).convert_to<long long>());
}

inline void check_lower_parameter(const Rational& c, unsigned terms) {
  // (c)_k must stay nonzero for k < terms.
  if (is_nonpositive_integer(c) && (-c).convert_to<long long>() < static_cast<long long>(terms)) {
    fail(Errc::DomainError, "lower parameter " + to_string(c) + " hits a pole before termination");
  }
}

}  // namespace detail

/// 2F1(a, b; c; x) for a (or b) a non-positive integer, as a finite sum.
template <class T>
T terminating_2f1(const Rational& a, const Rational& b, const Rational& c, const T& x) {
  auto na = detail::termination_length(a);
  auto nb = detail::termination_length(b);
  if (!na && !nb) fail(Errc::DomainError, "2F1 series does not terminate");
  const unsigned terms = std::min(na.value_or(~0u), nb.value_or(~0u));
  detail::check_lower_parameter(c, terms);
  T sum(1);
  T term(1);
  for (unsigned k = 0; k < terms; ++k) {
    const Rational kk(k);
    term *= detail::param_as<T>((a + kk) * (b + kk) / ((c + kk) * (kk + 1)));
    term *= x;
    sum += term;
  }
  return sum;
}

/// Confluent 1F1(a; c; x) = F(a, c; x) for a a non-positive integer.
template <class T>
T terminating_1f1(const Rational& a, const Rational& c, const T& x) {
  auto na = detail::termination_length(a);
  if (!na) fail(Errc::DomainError, "1F1 series does not terminate");
  detail::check_lower_parameter(c, *na);
  T sum(1);
  T term(1);
  for (unsigned k = 0; k < *na; ++k) {
    const Rational kk(k);
    term *= detail::param_as<T>((a + kk) / ((c + kk) * (kk + 1)));
    term *= x;
    sum += term;
  }
  return sum;
}

/// 1/Gamma(a); exactly 0 at the poles a = 0, -1, -2, ...
inline double reciprocal_gamma(const Rational& a) {
  if (is_nonpositive_integer(a)) return 0.0;
  return 1.0 / std::tgamma(to_double(a));
}

}  // namespace zm
