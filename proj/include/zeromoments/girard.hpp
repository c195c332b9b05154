#pragma once

// Explicit Girard-Waring evaluation of power sums of zeros.
//
// For n variables (sigma_1..sigma_n) and weight r >= 1 the normalized power
// sum t_r^{(n)} is a signed sum over index vectors (i_1..i_{n-1}) where i_j is
// the exponent of sigma_{n+1-j}. The nested bounds are
//
//   i_1 <= floor(r / n),
//   i_k <= floor((r - sum_{j<k} (n+1-j) i_j) / (n+1-k)),   k = 2..n-1,
//
// and what is left of the weight, e1 = r - sum_j (n+1-j) i_j, is the exponent
// of sigma_1. Each term is
//
//   (1/n) prod_j (-1)^{(n-j) i_j} / i_j!  *  r (e1 + t - 1)! / e1!
//         * sigma_1^{e1} prod_j sigma_{n+1-j}^{i_j},        t = sum_j i_j.
//
// Evaluating the monomial with its sigma_1 exponent already cancelled keeps the
// formula regular at sigma_1 = 0 (0^0 = 1).

#include <cmath>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "zeromoments/error.hpp"
#include "zeromoments/monic.hpp"
#include "zeromoments/rational.hpp"

namespace zm {

struct GirardIndexVector {
  std::vector<unsigned> i;      // i_1..i_{n-1}
  unsigned weight = 0;          // sum_j (n+1-j) i_j
  unsigned count = 0;           // sum_j i_j
  unsigned sigma1_exponent = 0; // r - weight
};

namespace detail {

template <class Visit>
void enumerate_girard(unsigned n, unsigned r, std::size_t k, unsigned remaining, GirardIndexVector& v,
                      Visit& visit) {
  // k is the 0-based position; coefficient of i_{k+1} is n - k.
  if (k + 1 == n) {
    v.sigma1_exponent = remaining;
    v.weight = r - remaining;
    visit(static_cast<const GirardIndexVector&>(v));
    return;
  }
  const unsigned coefficient = n - static_cast<unsigned>(k);
  const unsigned bound = remaining / coefficient;
  for (unsigned value = 0; value <= bound; ++value) {
    v.i[k] = value;
    v.count += value;
    enumerate_girard(n, r, k + 1, remaining - coefficient * value, v, visit);
    v.count -= value;
  }
  v.i[k] = 0;
}

}  // namespace detail

/// Visits every admissible index vector for n variables and weight r, in the
/// order of the nested sums (i_1 outermost).
template <class Visit>
void for_each_girard_index(unsigned n, unsigned r, Visit&& visit) {
  if (n == 0) fail(Errc::InvalidDegree, "need at least one variable");
  GirardIndexVector v;
  v.i.assign(n - 1, 0u);
  detail::enumerate_girard(n, r, 0, r, v, visit);
}

/// Exact rational coefficient of one Girard term:
/// (1/n) sign * r (e1+t-1)! / (e1! prod i_j!).
inline Rational girard_coefficient(unsigned n, unsigned r, const GirardIndexVector& v) {
  BigInt numerator = BigInt(r) * factorial(v.sigma1_exponent + v.count - 1);
  BigInt denominator = factorial(v.sigma1_exponent) * BigInt(n);
  unsigned parity = 0;
  for (std::size_t j = 0; j < v.i.size(); ++j) {
    denominator *= factorial(v.i[j]);
    // 1-based index k = j+1: sign (-1)^{(n-k) i_k}
    parity += (n - static_cast<unsigned>(j + 1)) * v.i[j];
  }
  Rational c(numerator, denominator);
  return (parity % 2 == 0) ? c : Rational(-c);
}

/// t_r^{(n)}(args), the normalized power sum (1/n) sum x_i^r of the n numbers
/// whose elementary symmetric functions are args[0..n-1] = sigma_1..sigma_n.
/// T is Rational (exact) or double.
template <class T>
T girard_t(std::span<const T> args, unsigned r) {
  const unsigned n = static_cast<unsigned>(args.size());
  if (n == 0) fail(Errc::InvalidDegree, "need at least one variable");
  if (r == 0) return T(1);
  T total(0);
  for_each_girard_index(n, r, [&](const GirardIndexVector& v) {
    if (v.sigma1_exponent > 0 && args[0] == T(0)) return;
    T monomial = ipow(args[0], v.sigma1_exponent);
    for (std::size_t j = 0; j < v.i.size(); ++j) {
      if (v.i[j] == 0) continue;
      const T& s = args[n - 1 - j];  // sigma_{n-j} in 1-based terms is args[n-1-j]
      if (s == T(0)) return;
      monomial *= ipow(s, v.i[j]);
    }
    Rational c = girard_coefficient(n, r, v);
    if constexpr (std::is_same_v<T, Rational>) {
      total += c * monomial;
    } else {
      total += to_double(c) * monomial;
    }
  });
  return total;
}

/// m_r(N) = (1/N) sum x_i^r, by the explicit Girard formula.
inline Rational power_sum_moment(const MonicPolynomial& poly, unsigned r) {
  auto s = poly.sigmas().subspan(1);
  return girard_t<Rational>(s, r);
}

/// m_{-r}(N) = (1/N) sum x_i^{-r}: t_r evaluated at sigma_{N-k}/sigma_N,
/// with the arguments past r set to zero when r < N.
inline Rational negative_moment(const MonicPolynomial& poly, unsigned r) {
  const std::size_t n = poly.degree();
  if (poly.sigma(n) == 0) fail(Errc::VanishingZero, "polynomial has a zero at the origin");
  if (r == 0) return 1;
  std::vector<Rational> args(n, Rational(0));
  const std::size_t filled = (r >= n) ? n : r;
  for (std::size_t k = 1; k <= filled; ++k) args[k - 1] = poly.sigma(n - k) / poly.sigma(n);
  return girard_t<Rational>(std::span<const Rational>(args), r);
}

/// s_k or e_k: elementary symmetric functions rescaled so that the last one is 1.
struct ScaledSymmetricVector {
  std::vector<double> values;  // N-1 entries (s_1..s_{N-1}) or M-1 entries (e_1..e_{M-1})
  double normalizer = 1.0;     // sigma_N, or sigma_{2M} for the parity-reduced variant
  unsigned root_degree = 1;    // N, or M
};

/// s_k = sigma_k / sigma_N^{k/N}. Only sigma_N > 0 is accepted (principal real root).
inline ScaledSymmetricVector scaled_symmetric(const MonicPolynomial& poly) {
  const std::size_t n = poly.degree();
  if (poly.sigma(n) <= 0) {
    fail(Errc::NormalizationUndefined, "sigma_N must be positive for the real root sigma_N^{1/N}");
  }
  ScaledSymmetricVector s;
  s.normalizer = to_double(poly.sigma(n));
  s.root_degree = static_cast<unsigned>(n);
  for (std::size_t k = 1; k < n; ++k) {
    s.values.push_back(to_double(poly.sigma(k)) / std::pow(s.normalizer, double(k) / double(n)));
  }
  return s;
}

/// e_k = sigma_{2k} / sigma_{2M}^{k/M}, M = floor(N/2), for definite-parity input.
inline ScaledSymmetricVector parity_scaled_symmetric(const MonicPolynomial& poly) {
  if (parity_of(poly) != Parity::Definite) fail(Errc::NotDefiniteParity, "odd sigma_k present");
  const std::size_t m = poly.degree() / 2;
  if (m == 0) fail(Errc::InvalidDegree, "parity reduction needs N >= 2");
  if (poly.sigma(2 * m) <= 0) {
    fail(Errc::NormalizationUndefined, "sigma_{2M} must be positive for the real root");
  }
  ScaledSymmetricVector e;
  e.normalizer = to_double(poly.sigma(2 * m));
  e.root_degree = static_cast<unsigned>(m);
  for (std::size_t k = 1; k < m; ++k) {
    e.values.push_back(to_double(poly.sigma(2 * k)) / std::pow(e.normalizer, double(k) / double(m)));
  }
  return e;
}

/// Generalized Chebyshev polynomial of the first kind T_r^{(N-1)}(s_1..s_{N-1}).
/// By weighted homogeneity it equals t_r^{(N)}(s_1, ..., s_{N-1}, 1).
inline double gen_chebyshev_first(const ScaledSymmetricVector& s, unsigned r) {
  if (!std::isfinite(s.normalizer) || s.normalizer == 0.0) {
    fail(Errc::NormalizationUndefined, "normalizing sigma vanishes");
  }
  std::vector<double> args(s.values);
  args.push_back(1.0);
  return girard_t<double>(std::span<const double>(args), r);
}

/// m_{2l}(N) for P(-x) = (-1)^N P(x), from the floor(N/2)-variable reduction
///   m_{2l}(N) = (2/N) M (-1)^l t_l^{(M)}(sigma_2, sigma_4, ..., sigma_{2M}).
inline Rational even_moment_parity(const MonicPolynomial& poly, unsigned l) {
  if (parity_of(poly) != Parity::Definite) fail(Errc::NotDefiniteParity, "odd sigma_k present");
  if (l == 0) return 1;
  const std::size_t n = poly.degree();
  const std::size_t m = n / 2;
  if (m == 0) return 0;  // N = 1: the single zero is 0
  std::vector<Rational> args;
  args.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) args.push_back(poly.sigma(2 * k));
  Rational t = girard_t<Rational>(std::span<const Rational>(args), l);
  Rational factor(BigInt(2 * m), BigInt(n));
  return (l % 2 == 0) ? Rational(factor * t) : Rational(-factor * t);
}

/// Moment of any order for a definite-parity polynomial: odd orders vanish.
inline Rational parity_moment(const MonicPolynomial& poly, unsigned r) {
  if (parity_of(poly) != Parity::Definite) fail(Errc::NotDefiniteParity, "odd sigma_k present");
  if (r % 2 == 1) return 0;
  return even_moment_parity(poly, r / 2);
}

/// m_{2l}^{(T)}(N) for Chebyshev T_N through the closed-form scaled arguments
///   N = 2M:   T_l^{(M-1)}(e(2M)) / 2^{(2 - 1/M) l},
///             e_k(2M) = (2M/k) 2^{-k/M} C(2M-k-1, k-1);
///   N = 2M+1: (2M/(2M+1)) ((2M+1)^{1/M}/4)^l T_l^{(M-1)}(e(2M+1)),
///             e_k(2M+1) = ((2M+1)/k) (2M+1)^{-k/M} C(2M-k, k-1).
inline double chebyshev_T_moments_explicit(unsigned n, unsigned l) {
  if (n == 0) fail(Errc::InvalidDegree, "N must be positive");
  if (l == 0) return 1.0;
  if (n == 1) return 0.0;
  const unsigned m = n / 2;
  ScaledSymmetricVector e;
  e.root_degree = m;
  const double dm = m;
  if (n % 2 == 0) {
    for (unsigned k = 1; k < m; ++k) {
      e.values.push_back((2.0 * dm / k) * std::pow(2.0, -double(k) / dm) *
                         binomial(2 * m - k - 1, k - 1).convert_to<double>());
    }
    return gen_chebyshev_first(e, l) / std::pow(2.0, (2.0 - 1.0 / dm) * l);
  }
  const double dn = n;
  for (unsigned k = 1; k < m; ++k) {
    e.values.push_back((dn / k) * std::pow(dn, -double(k) / dm) * binomial(2 * m - k, k - 1).convert_to<double>());
  }
  return (2.0 * dm / dn) * std::pow(std::pow(dn, 1.0 / dm) / 4.0, double(l)) * gen_chebyshev_first(e, l);
}

}  // namespace zm
