#pragma once

// Exact coefficient-wise checks of the differential structure of G(N, z):
// the Riccati equation each family's generating function satisfies, and the
// linear second-order equation satisfied by U(N, z) = P_N(1/z), for which
// G = -(z/N) d/dz ln U.

#include <cstddef>
#include <optional>
#include <variant>

#include "zeromoments/classical.hpp"
#include "zeromoments/error.hpp"
#include "zeromoments/genfun.hpp"
#include "zeromoments/laurent.hpp"
#include "zeromoments/limits.hpp"
#include "zeromoments/rational.hpp"
#include "zeromoments/series.hpp"

namespace zm {

struct ResidualReport {
  FamilySpec family;
  unsigned degree = 0;
  /// Highest series index whose residual coefficient is fully determined by
  /// the input (series residuals only).
  std::size_t order = 0;
  std::variant<ExactSeries, LaurentPolynomial> residual;
  bool is_zero = false;
  /// Series index, or Laurent exponent, of the first nonzero coefficient.
  std::optional<int> first_nonzero_index;
};

namespace detail {

inline ResidualReport series_report(const FamilySpec& family, unsigned n, ExactSeries residual) {
  ResidualReport report;
  report.family = family;
  report.degree = n;
  report.order = residual.order();
  if (auto idx = residual.first_nonzero()) report.first_nonzero_index = static_cast<int>(*idx);
  report.is_zero = !report.first_nonzero_index.has_value();
  report.residual = std::move(residual);
  return report;
}

}  // namespace detail

/// LHS - RHS of the family's Riccati equation evaluated on the series G
/// (the Q-series for the scaled families).
inline ResidualReport riccati_residual(const FamilySpec& family, unsigned n, const ExactSeries& g) {
  family.validate();
  if (n == 0) fail(Errc::InvalidDegree, "degree must be positive");
  const std::size_t k = g.order();
  if (k < 2) fail(Errc::OrderTooSmall, "Riccati check needs series order >= 2");

  const Rational nn(n);
  const Rational inv_n = Rational(1) / nn;
  const Rational a = family.alpha;
  const Rational b = family.beta;
  const ExactSeries zdg = g.derivative().shifted(1);  // z G', known through z^K
  const ExactSeries g2 = g * g;
  auto constant = [&](const Rational& c) { return ExactSeries::constant(c, k + 2); };

  ExactSeries residual;
  switch (family.kind) {
    case FamilyKind::Jacobi: {
      // (1-z^2) z G'/N = (z^2 + (a-b) z + a+b+1) G/N + (1-z^2) G^2 - (1 + (1+a+b)/N)
      const Rational s = a + b;
      ExactSeries lhs = zdg.times_polynomial({Rational(1), Rational(0), Rational(-1)}) * inv_n;
      ExactSeries rhs = g.times_polynomial({s + 1, a - b, Rational(1)}) * inv_n +
                        g2.times_polynomial({Rational(1), Rational(0), Rational(-1)}) -
                        constant(1 + (1 + s) * inv_n);
      residual = lhs - rhs;
      break;
    }
    case FamilyKind::ChebyshevT: {
      // (1-z^2) z G'/N = z^2 G/N + (1-z^2) G^2 - 1
      ExactSeries lhs = zdg.times_polynomial({Rational(1), Rational(0), Rational(-1)}) * inv_n;
      ExactSeries rhs = g.shifted(2) * inv_n + g2.times_polynomial({Rational(1), Rational(0), Rational(-1)}) -
                        constant(1);
      residual = lhs - rhs;
      break;
    }
    case FamilyKind::ChebyshevU: {
      // (1-z^2) z G'/N = (2+z^2) G/N + (1-z^2) G^2 - (N+2)/N
      ExactSeries lhs = zdg.times_polynomial({Rational(1), Rational(0), Rational(-1)}) * inv_n;
      ExactSeries rhs = g.times_polynomial({Rational(2), Rational(0), Rational(1)}) * inv_n +
                        g2.times_polynomial({Rational(1), Rational(0), Rational(-1)}) - constant((nn + 2) * inv_n);
      residual = lhs - rhs;
      break;
    }
    case FamilyKind::GenLaguerre: {
      // z^2 G' = N z G^2 + (a z - 1) G + 1
      ExactSeries lhs = zdg.shifted(1);
      ExactSeries rhs = g2.shifted(1) * nn + g.times_polynomial({Rational(-1), a}) + constant(1);
      residual = lhs - rhs;
      break;
    }
    case FamilyKind::ScaledGenLaguerre: {
      // z^2 Q'/N = z Q^2 + (a z/N - 1) Q + 1
      ExactSeries lhs = zdg.shifted(1) * inv_n;
      ExactSeries rhs = g2.shifted(1) + g.times_polynomial({Rational(-1), a * inv_n}) + constant(1);
      residual = lhs - rhs;
      break;
    }
    case FamilyKind::Hermite: {
      // (z^3/2) G' = (z^2/2) N G^2 - (1 + z^2/2) G + 1
      const Rational half = make_rational(1, 2);
      ExactSeries lhs = zdg.shifted(2) * half;
      ExactSeries rhs = g2.shifted(2) * (half * nn) - g.times_polynomial({Rational(1), Rational(0), half}) +
                        constant(1);
      residual = lhs - rhs;
      break;
    }
    case FamilyKind::ScaledHermite: {
      // (z^3/(2N)) Q' = (z^2/2) Q^2 - (1 + z^2/(2N)) Q + 1
      const Rational half = make_rational(1, 2);
      ExactSeries lhs = zdg.shifted(2) * (half * inv_n);
      ExactSeries rhs = g2.shifted(2) * half - g.times_polynomial({Rational(1), Rational(0), half * inv_n}) +
                        constant(1);
      residual = lhs - rhs;
      break;
    }
  }
  return detail::series_report(family, n, std::move(residual));
}

/// U(N, z) = P_N(1/z) for the family's (scaled) monic polynomial.
inline LaurentPolynomial reversed_laurent(const MonicPolynomial& poly) {
  const int n = static_cast<int>(poly.degree());
  std::vector<Rational> c(poly.degree() + 1);
  // exponent k - N carries (-1)^k sigma_k; stored from exponent -N upward
  for (std::size_t k = 0; k <= poly.degree(); ++k) c[k] = (k % 2 == 0) ? poly.sigma(k) : Rational(-poly.sigma(k));
  return LaurentPolynomial(-n, std::move(c));
}

/// Substitutes U(N, z) = P_N(1/z) into the family's second-order linear
/// equation in exact Laurent arithmetic.
inline ResidualReport lde_check(const FamilySpec& family, unsigned n) {
  family.validate();
  if (family.kind == FamilyKind::GenLaguerre || family.kind == FamilyKind::Hermite) {
    fail(Errc::UnsupportedFamily, "the linear equation is stated for the scaled " + family.name() + " family");
  }
  const LaurentPolynomial u = reversed_laurent(classical_monic(family, n));
  const LaurentPolynomial du = u.derivative();
  const LaurentPolynomial d2u = du.derivative();
  const Rational nn(n);
  const Rational a = family.alpha;
  const Rational b = family.beta;
  auto poly = [](std::initializer_list<Rational> c) { return laurent_from_ascending(c); };
  const Rational zero(0);
  const Rational one(1);

  LaurentPolynomial residual;
  switch (family.kind) {
    case FamilyKind::Jacobi:
      // z^2(1-z^2) U'' - z(2z^2 + (a-b) z + a+b) U' - N(N+1+a+b) U
      residual = poly({zero, zero, one, zero, Rational(-1)}) * d2u -
                 poly({zero, a + b, a - b, Rational(2)}) * du - (nn * (nn + 1 + a + b)) * u;
      break;
    case FamilyKind::ChebyshevT:
      // z^2(1-z^2) U'' + z(1-2z^2) U' - N^2 U
      residual = poly({zero, zero, one, zero, Rational(-1)}) * d2u + poly({zero, one, zero, Rational(-2)}) * du -
                 (nn * nn) * u;
      break;
    case FamilyKind::ChebyshevU:
      // z^2(1-z^2) U'' - z(1+2z^2) U' - N(N+2) U
      residual = poly({zero, zero, one, zero, Rational(-1)}) * d2u - poly({zero, one, zero, Rational(2)}) * du -
                 (nn * (nn + 2)) * u;
      break;
    case FamilyKind::ScaledGenLaguerre:
      // z^3 U'' + z(N + (1-a) z) U' + N^2 U
      residual = poly({zero, zero, zero, one}) * d2u + poly({zero, nn, 1 - a}) * du + (nn * nn) * u;
      break;
    case FamilyKind::ScaledHermite:
      // z^4 U'' + 2z(z^2 + N) U' + 2N^2 U
      residual = poly({zero, zero, zero, zero, one}) * d2u + poly({zero, 2 * nn, zero, Rational(2)}) * du +
                 (2 * nn * nn) * u;
      break;
    default:
      fail(Errc::UnsupportedFamily, family.name());
  }

  ResidualReport report;
  report.family = family;
  report.degree = n;
  report.is_zero = residual.is_zero();
  if (!residual.is_zero()) report.first_nonzero_index = residual.min_degree();
  report.residual = std::move(residual);
  return report;
}

/// Series of -(z/N) d/dz ln U(z) through z^K, for U = z^d V(z), V(0) != 0:
/// -d/N - (z/N) V'/V.
inline ExactSeries moment_series_from_laurent(const LaurentPolynomial& u, unsigned n, std::size_t order) {
  if (u.is_zero()) fail(Errc::DomainError, "ln of the zero polynomial");
  const auto v = u.coeffs();
  std::vector<Rational> dv;
  for (std::size_t i = 1; i < v.size(); ++i) dv.push_back(v[i] * Rational(i));
  ExactSeries vs = ExactSeries::from_polynomial(v, order);
  ExactSeries dvs = ExactSeries::from_polynomial(std::span<const Rational>(dv), order);
  ExactSeries ratio = dvs / vs;
  const Rational nn(n);
  ExactSeries out(order);
  out[0] = Rational(-u.min_degree()) / nn;
  for (std::size_t r = 1; r <= order; ++r) out[r] = -ratio[r - 1] / nn;
  return out;
}

struct OneOverNReport {
  bool riccati_residual_zero = false;
  /// First index where the N -> infinity series differs from G^{(T)}(N, z).
  std::optional<std::size_t> series_mismatch_index;
  Rational limit_value = 0;
  Rational true_value = 0;
};

/// Checks that G_0(z) = 1/sqrt(1 - z^2) zeroes the Chebyshev-T Riccati
/// residual at this N and locates where it departs from the true G^{(T)}.
inline OneOverNReport one_over_N_failure(unsigned n, std::size_t order) {
  if (n == 0) fail(Errc::InvalidDegree, "degree must be positive");
  if (order < 2 * static_cast<std::size_t>(n)) fail(Errc::OrderTooSmall, "need order >= 2N");
  const FamilySpec t = FamilySpec::chebyshev_t();
  const ExactSeries g0 = limit_G0_series(t, order);
  const ExactSeries g = moment_series(classical_monic(t, n), order);
  OneOverNReport report;
  report.riccati_residual_zero = riccati_residual(t, n, g0).is_zero;
  for (std::size_t r = 0; r <= order; ++r) {
    if (g0[r] != g[r]) {
      report.series_mismatch_index = r;
      report.limit_value = g0[r];
      report.true_value = g[r];
      break;
    }
  }
  return report;
}

}  // namespace zm
