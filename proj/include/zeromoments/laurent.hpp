#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "zeromoments/rational.hpp"

namespace zm {

/// Finite sum of c_e z^e with integer (possibly negative) exponents e.
/// Stored trimmed: first and last stored coefficients are nonzero unless the
/// polynomial is zero.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  LaurentPolynomial(int min_degree, std::vector<Rational> coeffs)
      : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
    trim();
  }

  static LaurentPolynomial monomial(Rational c, int exponent) { return LaurentPolynomial(exponent, {std::move(c)}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_degree() const noexcept { return min_degree_; }
  int max_degree() const noexcept { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  Rational coefficient(int exponent) const {
    const int idx = exponent - min_degree_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(idx)];
  }

  LaurentPolynomial derivative() const {
    if (is_zero()) return {};
    std::vector<Rational> d(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) d[i] = coeffs_[i] * (min_degree_ + static_cast<int>(i));
    return LaurentPolynomial(min_degree_ - 1, std::move(d));
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int lo = std::min(a.min_degree_, b.min_degree_);
    const int hi = std::max(a.max_degree(), b.max_degree());
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = a.coefficient(e) + b.coefficient(e);
    return LaurentPolynomial(lo, std::move(c));
  }

  friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial n(a);
    for (auto& v : n.coeffs_) v = -v;
    return n;
  }

  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPolynomial(a.min_degree_ + b.min_degree_, std::move(c));
  }

  friend LaurentPolynomial operator*(const Rational& s, const LaurentPolynomial& a) {
    LaurentPolynomial n(a);
    for (auto& v : n.coeffs_) v *= s;
    n.trim();
    return n;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      min_degree_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    coeffs_ = std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                    coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    min_degree_ += static_cast<int>(first);
  }

  int min_degree_ = 0;
  std::vector<Rational> coeffs_;
};

/// Builds c(z) from ascending coefficients c_0 + c_1 z + ...
inline LaurentPolynomial laurent_from_ascending(std::initializer_list<Rational> c) {
  return LaurentPolynomial(0, std::vector<Rational>(c));
}

}  // namespace zm
