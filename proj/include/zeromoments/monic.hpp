#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "zeromoments/error.hpp"
#include "zeromoments/rational.hpp"
#include "zeromoments/series.hpp"

namespace zm {

/// Monic polynomial of degree N >= 1 stored through the elementary symmetric
/// functions of its zeros:
///
///   P(x) = sum_{k=0}^{N} (-1)^k sigma_k x^{N-k} = prod_i (x - x_i),  sigma_0 = 1.
///
/// Zeros may repeat; no square-free check is made.
class MonicPolynomial {
 public:
  static MonicPolynomial from_sigma(std::vector<Rational> sigma) {
    if (sigma.empty()) fail(Errc::EmptyInput, "sigma list is empty");
    if (sigma.size() < 2) fail(Errc::InvalidDegree, "degree-0 polynomial has no zeros");
    if (sigma.front() != 1) fail(Errc::InvalidParameter, "sigma_0 must be 1");
    return MonicPolynomial(std::move(sigma));
  }

  /// The polynomial prod_i (x - roots[i]).
  static MonicPolynomial from_roots(std::span<const Rational> roots) {
    if (roots.empty()) fail(Errc::InvalidDegree, "degree-0 polynomial has no zeros");
    // e_k of the roots, built one factor at a time.
    std::vector<Rational> e(roots.size() + 1, Rational(0));
    e[0] = 1;
    for (std::size_t n = 0; n < roots.size(); ++n) {
      for (std::size_t k = n + 1; k >= 1; --k) e[k] += roots[n] * e[k - 1];
    }
    return MonicPolynomial(std::move(e));
  }

  std::size_t degree() const noexcept { return sigma_.size() - 1; }
  const Rational& sigma(std::size_t k) const { return sigma_.at(k); }
  std::span<const Rational> sigmas() const noexcept { return sigma_; }

  /// Ordinary coefficients, leading first: a_k = (-1)^k sigma_k multiplies x^{N-k}.
  std::vector<Rational> coefficients() const {
    std::vector<Rational> c(sigma_.size());
    for (std::size_t k = 0; k < sigma_.size(); ++k) c[k] = (k % 2 == 0) ? sigma_[k] : Rational(-sigma_[k]);
    return c;
  }

  /// Polynomial whose zeros are c * x_i.
  MonicPolynomial scaled_zeros(const Rational& c) const {
    std::vector<Rational> s(sigma_);
    Rational power = 1;
    for (auto& v : s) {
      v *= power;
      power *= c;
    }
    return MonicPolynomial(std::move(s));
  }

  /// Polynomial whose zeros are 1/x_i; sigma'_k = sigma_{N-k} / sigma_N.
  MonicPolynomial reciprocal() const {
    const std::size_t n = degree();
    if (sigma_[n] == 0) fail(Errc::VanishingZero, "polynomial has a zero at the origin");
    std::vector<Rational> s(n + 1);
    for (std::size_t k = 0; k <= n; ++k) s[k] = sigma_[n - k] / sigma_[n];
    return MonicPolynomial(std::move(s));
  }

  friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

 private:
  explicit MonicPolynomial(std::vector<Rational> sigma) : sigma_(std::move(sigma)) {}

  std::vector<Rational> sigma_;
};

/// Normalizes a_N x^N + ... + a_0 (leading coefficient first) to monic form.
inline MonicPolynomial make_monic(std::span<const Rational> raw_coeffs) {
  if (raw_coeffs.empty()) fail(Errc::EmptyInput, "no coefficients given");
  if (raw_coeffs.front() == 0) fail(Errc::ZeroLeadingCoefficient, "leading coefficient is zero");
  if (raw_coeffs.size() == 1) fail(Errc::InvalidDegree, "degree-0 polynomial has no zeros");
  std::vector<Rational> sigma(raw_coeffs.size());
  for (std::size_t k = 0; k < raw_coeffs.size(); ++k) {
    Rational a = raw_coeffs[k] / raw_coeffs.front();
    sigma[k] = (k % 2 == 0) ? a : Rational(-a);
  }
  return MonicPolynomial::from_sigma(std::move(sigma));
}

/// E(z) = prod_i (1 - x_i z) = z^N P(1/z), through z^K.
inline ExactSeries reversed_E(const MonicPolynomial& poly, std::size_t order) {
  ExactSeries e(order);
  for (std::size_t r = 0; r <= std::min(order, poly.degree()); ++r) {
    e[r] = (r % 2 == 0) ? poly.sigma(r) : Rational(-poly.sigma(r));
  }
  return e;
}

enum class Parity { Definite, None };

/// P(-x) = (-1)^N P(x) holds iff every odd-index sigma vanishes.
inline Parity parity_of(const MonicPolynomial& poly) {
  for (std::size_t k = 1; k <= poly.degree(); k += 2) {
    if (poly.sigma(k) != 0) return Parity::None;
  }
  return Parity::Definite;
}

namespace detail {

template <class T>
T coefficient_as(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else {
    return T(to_double(q));
  }
}

}  // namespace detail

/// Horner evaluation of P at x (Rational, double or std::complex<double>).
template <class T>
T evaluate(const MonicPolynomial& poly, const T& x) {
  T acc(1);
  for (std::size_t k = 1; k <= poly.degree(); ++k) {
    T a = detail::coefficient_as<T>(poly.sigma(k));
    acc = acc * x + ((k % 2 == 0) ? a : T(-a));
  }
  return acc;
}

/// P(x) and P'(x) by a single Horner pass.
template <class T>
std::pair<T, T> evaluate_with_derivative(const MonicPolynomial& poly, const T& x) {
  T p(1);
  T dp(0);
  for (std::size_t k = 1; k <= poly.degree(); ++k) {
    T a = detail::coefficient_as<T>(poly.sigma(k));
    dp = dp * x + p;
    p = p * x + ((k % 2 == 0) ? a : T(-a));
  }
  return {p, dp};
}

}  // namespace zm
