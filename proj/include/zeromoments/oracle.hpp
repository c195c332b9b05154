#pragma once

// Brute-force ground truth: companion-matrix roots and direct power sums.
// Shares no code path with the Girard or generating-function routes.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "zeromoments/error.hpp"
#include "zeromoments/monic.hpp"

#include <unsupported/Eigen/Polynomials>

namespace zm {

struct RootSet {
  std::vector<std::complex<double>> roots;
  /// max_i |P(x_i)| / sum_k |a_k| max(1, |x_i|)^(N-k)
  double residual_bound = 0.0;
};

namespace detail {

using Extended = long double;
using ExtendedComplex = std::complex<Extended>;

inline Extended scaled_residual(const std::vector<Extended>& a, ExtendedComplex x) {
  ExtendedComplex p = 0.0L;
  Extended scale = 0.0L;
  const Extended ax = std::max(Extended(1), std::abs(x));
  for (Extended c : a) {
    p = p * x + c;
    scale = scale * ax + std::abs(c);
  }
  return scale == 0.0L ? 0.0L : std::abs(p) / scale;
}

}  // namespace detail

/// Eigenvalues of the balanced companion matrix, then one Newton step for
/// each isolated root, all in extended precision. Members of a cluster
/// (relative separation below 1e-2) are left unpolished: moving them one at a
/// time spoils the symmetric splitting that keeps their power sums accurate.
inline RootSet roots_numeric(const MonicPolynomial& poly, double threshold = 1e-10) {
  using detail::Extended;
  using detail::ExtendedComplex;
  const std::size_t n = poly.degree();
  std::vector<Extended> a;  // leading-first, a[0] = 1
  for (const auto& c : poly.coefficients()) a.push_back(c.convert_to<Extended>());

  std::vector<ExtendedComplex> raw;
  if (n == 1) {
    raw.push_back(-a[1]);
  } else {
    using Vector = Eigen::Matrix<Extended, Eigen::Dynamic, 1>;
    Vector ascending(static_cast<Eigen::Index>(n + 1));
    for (std::size_t k = 0; k <= n; ++k) ascending[static_cast<Eigen::Index>(k)] = a[n - k];
    Eigen::PolynomialSolver<Extended, Eigen::Dynamic> solver(ascending);
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) raw.push_back(solver.roots()[i]);
  }

  RootSet out;
  Extended bound = 0.0L;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    ExtendedComplex x = raw[i];
    Extended separation = std::numeric_limits<Extended>::infinity();
    for (std::size_t j = 0; j < raw.size(); ++j) {
      if (j != i) separation = std::min(separation, std::abs(raw[j] - x));
    }
    if (separation > 1e-2L * std::max(Extended(1), std::abs(x))) {
      ExtendedComplex p = 0.0L;
      ExtendedComplex dp = 0.0L;
      for (Extended c : a) {
        dp = dp * x + p;
        p = p * x + c;
      }
      if (dp != 0.0L) {
        const ExtendedComplex polished = x - p / dp;
        if (detail::scaled_residual(a, polished) < detail::scaled_residual(a, x)) x = polished;
      }
    }
    bound = std::max(bound, detail::scaled_residual(a, x));
    out.roots.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  }
  out.residual_bound = static_cast<double>(bound);
  if (!(out.residual_bound <= threshold)) fail(Errc::IllConditioned, "root residual above threshold");
  return out;
}

inline std::complex<double> oracle_moment_complex(const RootSet& roots, int r) {
  std::complex<double> sum = 0.0;
  for (const auto& x : roots.roots) {
    if (r < 0 && std::abs(x) < 1e-12) fail(Errc::NearZeroRoot, "negative power of a vanishing root");
    sum += r >= 0 ? std::pow(x, r) : 1.0 / std::pow(x, -r);
  }
  return sum / static_cast<double>(roots.roots.size());
}

/// (1/N) sum x_i^r; the imaginary part is dropped.
inline double oracle_moment(const RootSet& roots, int r) { return std::real(oracle_moment_complex(roots, r)); }

/// Magnitude (1/N) sum |x_i|^r against which oracle errors are measured.
inline double oracle_moment_scale(const RootSet& roots, int r) {
  double sum = 0.0;
  for (const auto& x : roots.roots) sum += std::pow(std::abs(x), r);
  return sum / static_cast<double>(roots.roots.size());
}

/// (2/N) sum_{k=1}^{floor(N/2)} cos((2k-1) pi / 2N)^(2l), for l >= 1; 1 for l = 0.
inline double chebyshev_cos_moment(unsigned n, unsigned l) {
  if (n == 0) fail(Errc::InvalidDegree, "degree must be positive");
  if (l == 0) return 1.0;
  double sum = 0.0;
  for (unsigned k = 1; k <= n / 2; ++k) {
    sum += std::pow(std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n)), 2.0 * l);
  }
  return 2.0 * sum / n;
}

}  // namespace zm
