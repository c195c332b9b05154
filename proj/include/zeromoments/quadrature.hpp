#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "zeromoments/error.hpp"

namespace zm {

struct QuadratureSpec {
  /// Relative accuracy target handed to the adaptive integrator.
  double tolerance = 1e-12;
  /// Maximum bisection depth.
  unsigned max_depth = 20;
  /// Error estimate, relative to max(1, int |f|), above which the result is
  /// rejected.
  double error_budget = 1e-10;
  /// Height of the horizontal leg used by the contour inversion.
  double height = 1.0;
};

/// Adaptive 15-point Gauss-Kronrod over [a, b]. Throws QuadratureFailure when
/// the final error estimate exceeds the budget.
template <class F>
double integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  double error = 0.0;
  double l1 = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, spec.max_depth, spec.tolerance, &error, &l1);
  if (!std::isfinite(value) || !(error <= spec.error_budget * std::max(1.0, l1))) {
    std::ostringstream msg;
    msg << "adaptive quadrature on [" << a << ", " << b << "] stopped with error estimate " << error;
    fail(Errc::QuadratureFailure, msg.str());
  }
  return value;
}

}  // namespace zm
