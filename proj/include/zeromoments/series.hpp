#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "zeromoments/error.hpp"
#include "zeromoments/rational.hpp"

namespace zm {

/// Formal power series known through z^order.
///
/// Arithmetic tracks how far coefficients are trustworthy: a sum or product
/// is known through the smaller order of its operands, a derivative loses one
/// order, and multiplication by z^k gains k. Multiplying by a polynomial
/// (an exactly known factor) keeps the order.
template <class T>
class TruncatedSeries {
 public:
  using value_type = T;
  static constexpr bool exact = std::is_same_v<T, Rational>;

  TruncatedSeries() : coeffs_(1, T(0)) {}

  /// Zero series known through z^order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, T(0)) {}

  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(Errc::EmptyInput, "series needs at least one coefficient");
  }

  /// Polynomial p(z) (ascending coefficients) viewed as a series through z^order.
  static TruncatedSeries from_polynomial(std::span<const T> poly, std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i < poly.size() && i <= order; ++i) s.coeffs_[i] = poly[i];
    return s;
  }

  static TruncatedSeries constant(const T& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const T& operator[](std::size_t i) const { return coeffs_.at(i); }
  T& operator[](std::size_t i) { return coeffs_.at(i); }
  std::span<const T> coeffs() const noexcept { return coeffs_; }

  std::optional<std::size_t> first_nonzero() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != T(0)) return i;
    }
    return std::nullopt;
  }

  bool is_zero() const { return !first_nonzero().has_value(); }

  TruncatedSeries truncated(std::size_t order) const {
    TruncatedSeries s(std::min(order, this->order()));
    std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
    return s;
  }

  TruncatedSeries derivative() const {
    if (order() == 0) fail(Errc::OrderTooSmall, "derivative of an order-0 series has no known coefficients");
    TruncatedSeries d(order() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.coeffs_[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return d;
  }

  /// z^k times this series.
  TruncatedSeries shifted(std::size_t k) const {
    TruncatedSeries s(order() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), s.coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
    return s;
  }

  /// Product with an exactly known polynomial (ascending coefficients).
  TruncatedSeries times_polynomial(std::span<const T> poly) const {
    TruncatedSeries s(order());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == T(0)) continue;
      for (std::size_t j = 0; i + j <= order(); ++j) s.coeffs_[i + j] += poly[i] * coeffs_[j];
    }
    return s;
  }

  TruncatedSeries times_polynomial(std::initializer_list<T> poly) const {
    std::vector<T> p(poly);
    return times_polynomial(std::span<const T>(p));
  }

  TruncatedSeries& operator*=(const T& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }

  friend TruncatedSeries operator*(TruncatedSeries s, const T& c) { return s *= c; }
  friend TruncatedSeries operator*(const T& c, TruncatedSeries s) { return s *= c; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= s.order(); ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return s;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= s.order(); ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return s;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries s(a);
    for (auto& v : s.coeffs_) v = -v;
    return s;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= s.order(); ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (std::size_t j = 0; i + j <= s.order(); ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return s;
  }

  /// Long division a/b; requires b[0] != 0.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.coeffs_[0] == T(0)) fail(Errc::DomainError, "series division by a series with zero constant term");
    TruncatedSeries q(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= q.order(); ++n) {
      T acc = a.coeffs_[n];
      for (std::size_t j = 1; j <= n; ++j) {
        if (b.coeffs_[j] != T(0)) acc -= b.coeffs_[j] * q.coeffs_[n - j];
      }
      q.coeffs_[n] = acc / b.coeffs_[0];
    }
    return q;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<T> coeffs_;
};

using ExactSeries = TruncatedSeries<Rational>;

/// Formal square root of a series with constant term 1.
template <class T>
TruncatedSeries<T> series_sqrt(const TruncatedSeries<T>& a) {
  if (a[0] != T(1)) fail(Errc::DomainError, "series_sqrt requires constant term 1");
  TruncatedSeries<T> s(a.order());
  s[0] = T(1);
  // (s^2)_n = a_n  =>  2 s_0 s_n = a_n - sum_{j=1}^{n-1} s_j s_{n-j}
  for (std::size_t n = 1; n <= a.order(); ++n) {
    T acc = a[n];
    for (std::size_t j = 1; j < n; ++j) acc -= s[j] * s[n - j];
    s[n] = acc / T(2);
  }
  return s;
}

/// Partial sum of the stored coefficients at a numeric point.
template <class T, class X>
X partial_sum(const TruncatedSeries<T>& s, const X& z) {
  X acc(0);
  for (std::size_t i = s.order() + 1; i-- > 0;) {
    if constexpr (std::is_same_v<T, Rational>) {
      acc = acc * z + X(to_double(s[i]));
    } else {
      acc = acc * z + X(s[i]);
    }
  }
  return acc;
}

inline TruncatedSeries<double> to_float(const ExactSeries& s) {
  std::vector<double> c;
  c.reserve(s.order() + 1);
  for (const auto& v : s.coeffs()) c.push_back(to_double(v));
  return TruncatedSeries<double>(std::move(c));
}

}  // namespace zm
