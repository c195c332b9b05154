#pragma once

// Stieltjes transforms of zero-counting measures and their Perron-Stieltjes
// inversion,
//
//   rho(t2) - rho(t1) = -(1/pi) lim_{eta -> +0} int_{t1}^{t2} Im chi(t + i eta) dt.
//
// chi is analytic off the real axis, so the segment at height eta is replaced
// by the path t1+i*eta -> t1+iH -> t2+iH -> t2+i*eta. The integrand on that
// path is smooth however narrow the Lorentzians at the zeros are; the vertical
// legs are integrated in log(s).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "zeromoments/classical.hpp"
#include "zeromoments/error.hpp"
#include "zeromoments/limits.hpp"
#include "zeromoments/monic.hpp"
#include "zeromoments/quadrature.hpp"

namespace zm {

using ComplexPoint = std::complex<double>;

inline const std::vector<double>& default_eta_schedule() {
  static const std::vector<double> schedule{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  return schedule;
}

/// chi(N, z) = (1/N) P'(z)/P(z).
inline ComplexPoint stieltjes_chi(const MonicPolynomial& poly, ComplexPoint z) {
  const auto [p, dp] = evaluate_with_derivative(poly, z);
  double scale = 0.0;
  double power = 1.0;
  const double az = std::abs(z);
  for (std::size_t k = poly.degree() + 1; k-- > 0;) {
    scale += std::abs(to_double(poly.sigma(k))) * power;
    power *= az;
  }
  if (std::abs(p) <= 1e-15 * scale) fail(Errc::PoleHit, "chi evaluated at a zero of the polynomial");
  return dp / (static_cast<double>(poly.degree()) * p);
}

struct DistributionIncrement {
  double t1 = 0.0;
  double t2 = 0.0;
  /// Extrapolated and clamped mass rho(t2) - rho(t1).
  double mass = 0.0;
  std::vector<double> eta;
  /// Unextrapolated mass at each eta.
  std::vector<double> mass_at_eta;
};

namespace detail {

inline void check_eta_schedule(std::span<const double> schedule) {
  if (schedule.empty()) fail(Errc::InvalidParameter, "eta schedule is empty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0) || !std::isfinite(schedule[i])) fail(Errc::InvalidParameter, "eta must be positive");
    if (i > 0 && !(schedule[i] < schedule[i - 1])) fail(Errc::InvalidParameter, "eta schedule must decrease");
  }
}

/// Linear extrapolation to eta = 0 through the last two samples.
inline double richardson_last_two(std::span<const double> eta, std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 1) return values[0];
  const double ea = eta[n - 2];
  const double eb = eta[n - 1];
  return (ea * values[n - 1] - eb * values[n - 2]) / (ea - eb);
}

}  // namespace detail

template <class Chi>
DistributionIncrement perron_stieltjes_invert(Chi&& chi, double t1, double t2,
                                              std::span<const double> eta_schedule = default_eta_schedule(),
                                              const QuadratureSpec& spec = {}) {
  if (!(t1 < t2)) fail(Errc::InvalidParameter, "need t1 < t2");
  detail::check_eta_schedule(eta_schedule);
  const double height = std::max(spec.height, eta_schedule.front());
  const double log_top = std::log(height);

  auto leg = [&](double t, double eta) {
    // int_eta^H Re chi(t + i s) ds with s = e^u
    return integrate_adaptive(
        [&](double u) {
          const double s = std::exp(u);
          return std::real(chi(ComplexPoint(t, s))) * s;
        },
        std::log(eta), log_top, spec);
  };
  const double top = integrate_adaptive([&](double t) { return std::imag(chi(ComplexPoint(t, height))); }, t1, t2, spec);

  DistributionIncrement out;
  out.t1 = t1;
  out.t2 = t2;
  out.eta.assign(eta_schedule.begin(), eta_schedule.end());
  for (double eta : eta_schedule) {
    const double im_integral = leg(t1, eta) + top - leg(t2, eta);
    out.mass_at_eta.push_back(-im_integral / std::numbers::pi);
  }
  out.mass = std::clamp(detail::richardson_last_two(out.eta, out.mass_at_eta), 0.0, 1.0);
  return out;
}

/// rho(x) = -(1/pi) lim Im chi(x + i eta), extrapolated over the schedule.
template <class Chi>
double density_from_transform(Chi&& chi, double x, std::span<const double> eta_schedule = default_eta_schedule()) {
  detail::check_eta_schedule(eta_schedule);
  std::vector<double> values;
  for (double eta : eta_schedule) values.push_back(-std::imag(chi(ComplexPoint(x, eta))) / std::numbers::pi);
  return std::max(0.0, detail::richardson_last_two(eta_schedule, values));
}

struct DensityTable {
  std::vector<double> grid;
  /// Closed-form limit density.
  std::vector<double> values;
  /// Density recovered from the limit Stieltjes transform.
  std::vector<double> inverted;
  std::pair<double, double> support;
};

/// Closed-form and inverted limit densities on n equally spaced points of [a, b].
inline DensityTable limit_density_table(const FamilySpec& family, double a, double b, std::size_t n,
                                        std::span<const double> eta_schedule = default_eta_schedule()) {
  if (n == 0 || !(a <= b) || (n == 1 && a != b)) fail(Errc::InvalidParameter, "grid needs a <= b and n >= 1");
  DensityTable table;
  table.support = limit_support(family);
  auto chi = [&](ComplexPoint z) { return limit_stieltjes(family, z); };
  for (std::size_t i = 0; i < n; ++i) {
    const double x = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    table.grid.push_back(x);
    table.values.push_back(limit_density(family, x));
    table.inverted.push_back(density_from_transform(chi, x, eta_schedule));
  }
  return table;
}

/// int x^r rho(x) dx over the limit density. Each density is pulled back to
/// an angle variable where rho(x) dx is smooth up to the endpoints:
///   Jacobi           x = sin(t):        (1/pi) dt
///   scaled Laguerre  x = 4 sin(t)^2:    (4/pi) cos(t)^2 dt, t in [0, pi/2]
///   scaled Hermite   x = sqrt2 sin(t):  (2/pi) cos(t)^2 dt
inline double density_moment(const FamilySpec& family, unsigned r, const QuadratureSpec& spec = {}) {
  detail::require_limit_family(family);
  using std::numbers::pi;
  const double rr = static_cast<double>(r);
  if (family.is_jacobi_type()) {
    return integrate_adaptive([&](double t) { return std::pow(std::sin(t), rr) / pi; }, -pi / 2, pi / 2, spec);
  }
  if (family.kind == FamilyKind::ScaledGenLaguerre) {
    return integrate_adaptive(
        [&](double t) {
          const double s = std::sin(t);
          const double c = std::cos(t);
          return std::pow(4.0 * s * s, rr) * 4.0 * c * c / pi;
        },
        0.0, pi / 2, spec);
  }
  return integrate_adaptive(
      [&](double t) {
        const double c = std::cos(t);
        return std::pow(std::sqrt(2.0) * std::sin(t), rr) * 2.0 * c * c / pi;
      },
      -pi / 2, pi / 2, spec);
}

}  // namespace zm
