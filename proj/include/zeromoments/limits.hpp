#pragma once

// N -> infinity limits of the (scaled) moment generating functions and the
// limit zero densities:
//
//   Jacobi type:      G_0(z) = 1/sqrt(1 - z^2),       m_{0,2l} = C(2l,l)/4^l
//   scaled Laguerre:  Q_0(z) = (1 - sqrt(1 - 4z))/2z, q_{0,r}  = Catalan C_r
//   scaled Hermite:   Q_0^H(z) = Q_0(z^2/2),          q_{0,2l} = C_l / 2^l
//
// and the densities 1/(pi sqrt(1-x^2)) on (-1,1), (1/2pi) sqrt(4/x - 1) on
// (0,4], (1/pi) sqrt(2 - x^2) on (-sqrt2, sqrt2). Family parameters do not
// enter any of these.

#include <cmath>
#include <complex>
#include <numbers>

#include "zeromoments/classical.hpp"
#include "zeromoments/error.hpp"
#include "zeromoments/rational.hpp"
#include "zeromoments/series.hpp"

namespace zm {

namespace detail {

inline void require_limit_family(const FamilySpec& family) {
  if (!family.is_jacobi_type() && family.kind != FamilyKind::ScaledGenLaguerre &&
      family.kind != FamilyKind::ScaledHermite) {
    fail(Errc::UnsupportedFamily, family.name() + " has no finite N -> infinity limit (use the scaled family)");
  }
}

inline Rational catalan(unsigned r) { return Rational(binomial(2 * r, r), BigInt(r + 1)); }

}  // namespace detail

inline Rational limit_moment(const FamilySpec& family, unsigned r) {
  detail::require_limit_family(family);
  if (family.kind == FamilyKind::ScaledGenLaguerre) return detail::catalan(r);
  if (r % 2 == 1) return 0;
  const unsigned l = r / 2;
  if (family.kind == FamilyKind::ScaledHermite) return detail::catalan(l) / Rational(BigInt(1) << l);
  return Rational(binomial(2 * l, l), BigInt(1) << (2 * l));
}

/// Exact expansion of the limit generating function through z^K, computed by
/// formal square roots of the closed forms.
inline ExactSeries limit_G0_series(const FamilySpec& family, std::size_t order) {
  detail::require_limit_family(family);
  if (family.is_jacobi_type()) {
    // 1/sqrt(1 - z^2)
    ExactSeries inner = ExactSeries::constant(1, order);
    if (order >= 2) inner[2] = -1;
    return ExactSeries::constant(1, order) / series_sqrt(inner);
  }
  // c(w) = (1 - sqrt(1 - 4w)) / 2w, by dividing out w after the subtraction.
  ExactSeries inner = ExactSeries::constant(1, order + 1);
  inner[1] = -4;
  ExactSeries root = series_sqrt(inner);
  ExactSeries catalan_series(order);
  for (std::size_t r = 0; r <= order; ++r) catalan_series[r] = -root[r + 1] / 2;
  if (family.kind == FamilyKind::ScaledGenLaguerre) return catalan_series;
  // c(z^2/2)
  ExactSeries out(order);
  for (std::size_t l = 0; 2 * l <= order; ++l) out[2 * l] = catalan_series[l] / Rational(BigInt(1) << l);
  return out;
}

inline double limit_density(const FamilySpec& family, double x) {
  detail::require_limit_family(family);
  using std::numbers::pi;
  if (family.is_jacobi_type()) {
    return std::abs(x) < 1.0 ? 1.0 / (pi * std::sqrt(1.0 - x * x)) : 0.0;
  }
  if (family.kind == FamilyKind::ScaledGenLaguerre) {
    return (x > 0.0 && x <= 4.0) ? std::sqrt(4.0 / x - 1.0) / (2.0 * pi) : 0.0;
  }
  return std::abs(x) < std::sqrt(2.0) ? std::sqrt(2.0 - x * x) / pi : 0.0;
}

/// Support of the limit density as a closed interval.
inline std::pair<double, double> limit_support(const FamilySpec& family) {
  detail::require_limit_family(family);
  if (family.is_jacobi_type()) return {-1.0, 1.0};
  if (family.kind == FamilyKind::ScaledGenLaguerre) return {0.0, 4.0};
  return {-std::sqrt(2.0), std::sqrt(2.0)};
}

/// chi(z) = (1/z) G_0(1/z) with principal square roots.
inline std::complex<double> limit_stieltjes(const FamilySpec& family, std::complex<double> z) {
  detail::require_limit_family(family);
  if (z == 0.0) fail(Errc::PoleHit, "chi is singular at the origin");
  const std::complex<double> one(1.0, 0.0);
  if (family.is_jacobi_type()) return (one / z) / std::sqrt(one - one / (z * z));
  if (family.kind == FamilyKind::ScaledGenLaguerre) return (one - std::sqrt(one - 4.0 / z)) / 2.0;
  return z * (one - std::sqrt(one - 2.0 / (z * z)));
}

}  // namespace zm
