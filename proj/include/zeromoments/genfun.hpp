#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "zeromoments/error.hpp"
#include "zeromoments/girard.hpp"
#include "zeromoments/monic.hpp"
#include "zeromoments/rational.hpp"
#include "zeromoments/series.hpp"

namespace zm {

enum class MomentDirection { Positive, Negative, Scaled };
enum class MomentMethod { Girard, NewtonRecurrence, SeriesDivision, Case, Oracle };

constexpr std::string_view method_name(MomentMethod m) noexcept {
  switch (m) {
    case MomentMethod::Girard: return "girard";
    case MomentMethod::NewtonRecurrence: return "newton";
    case MomentMethod::SeriesDivision: return "series";
    case MomentMethod::Case: return "case";
    case MomentMethod::Oracle: return "oracle";
  }
  return "unknown";
}

constexpr std::string_view direction_name(MomentDirection d) noexcept {
  switch (d) {
    case MomentDirection::Positive: return "positive";
    case MomentDirection::Negative: return "negative";
    case MomentDirection::Scaled: return "scaled";
  }
  return "unknown";
}

/// Moments indexed from r = 0. Negative direction stores m_{-r} at index r.
struct MomentSequence {
  std::size_t degree = 0;
  MomentDirection direction = MomentDirection::Positive;
  MomentMethod method = MomentMethod::Girard;
  std::vector<Rational> values;
  /// Indices whose value was supplied from the series route because the
  /// producing recurrence degenerated there.
  std::vector<std::size_t> degenerate_steps;
};

/// G(N,z) = sum_r m_r z^r through z^K, as
///   sum_{r<N} (-1)^r (1 - r/N) sigma_r z^r  /  sum_{r<=N} (-1)^r sigma_r z^r.
inline ExactSeries moment_series(const MonicPolynomial& poly, std::size_t order) {
  const std::size_t n = poly.degree();
  ExactSeries numerator(order);
  for (std::size_t r = 0; r < n && r <= order; ++r) {
    Rational weight(BigInt(n - r), BigInt(n));
    numerator[r] = (r % 2 == 0) ? Rational(weight * poly.sigma(r)) : Rational(-weight * poly.sigma(r));
  }
  return numerator / reversed_E(poly, order);
}

/// Unnormalized power sum p_r = N m_r.
inline Rational power_sum(const MonicPolynomial& poly, unsigned r) {
  return Rational(BigInt(poly.degree())) * power_sum_moment(poly, r);
}

/// Extends t_0..t_{N-1} to t_0..t_K with sum_{j=0}^{N} (-1)^j sigma_j t_{n-j} = 0, n >= N.
inline MomentSequence newton_recurrence_extend(const MonicPolynomial& poly, const MomentSequence& seed,
                                               std::size_t target) {
  const std::size_t n = poly.degree();
  if (seed.values.size() < n) fail(Errc::SeedTooShort, "recurrence needs t_0..t_{N-1}");
  MomentSequence out;
  out.degree = n;
  out.direction = MomentDirection::Positive;
  out.method = MomentMethod::NewtonRecurrence;
  out.values.assign(seed.values.begin(), seed.values.begin() + static_cast<std::ptrdiff_t>(std::min(seed.values.size(), target + 1)));
  for (std::size_t k = out.values.size(); k <= target; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational term = poly.sigma(j) * out.values[k - j];
      if (j % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    out.values.push_back(acc);
  }
  return out;
}

/// Seeds t_0..t_{N-1} by series division, then extends with the recurrence.
inline MomentSequence newton_moments(const MonicPolynomial& poly, std::size_t max_r) {
  const std::size_t n = poly.degree();
  ExactSeries g = moment_series(poly, n - 1);
  MomentSequence seed;
  seed.degree = n;
  seed.method = MomentMethod::SeriesDivision;
  seed.values.assign(g.coeffs().begin(), g.coeffs().end());
  MomentSequence out = newton_recurrence_extend(poly, seed, max_r);
  out.values.resize(max_r + 1);
  return out;
}

inline MomentSequence girard_moments(const MonicPolynomial& poly, std::size_t max_r) {
  MomentSequence out;
  out.degree = poly.degree();
  out.method = MomentMethod::Girard;
  for (std::size_t r = 0; r <= max_r; ++r) out.values.push_back(power_sum_moment(poly, static_cast<unsigned>(r)));
  return out;
}

inline MomentSequence series_moments(const MonicPolynomial& poly, std::size_t max_r) {
  MomentSequence out;
  out.degree = poly.degree();
  out.method = MomentMethod::SeriesDivision;
  ExactSeries g = moment_series(poly, max_r);
  out.values.assign(g.coeffs().begin(), g.coeffs().end());
  return out;
}

/// G_<(N,z) = sum_{r>=1} m_{-r} z^r = -(z/N) P'(z)/P(z), through z^K.
inline ExactSeries negative_moment_series(const MonicPolynomial& poly, std::size_t order) {
  const std::size_t n = poly.degree();
  if (poly.sigma(n) == 0) fail(Errc::VanishingZero, "polynomial has a zero at the origin");
  // P(z) in ascending powers: coefficient of z^j is (-1)^{N-j} sigma_{N-j}.
  std::vector<Rational> ascending(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t k = n - j;
    ascending[j] = (k % 2 == 0) ? poly.sigma(k) : Rational(-poly.sigma(k));
  }
  std::vector<Rational> derivative(n);
  for (std::size_t j = 1; j <= n; ++j) derivative[j - 1] = ascending[j] * Rational(BigInt(j));

  ExactSeries p = ExactSeries::from_polynomial(std::span<const Rational>(ascending), order);
  ExactSeries dp = ExactSeries::from_polynomial(std::span<const Rational>(derivative), order);
  ExactSeries ratio = dp / p;
  ExactSeries out(order);
  const Rational scale = Rational(-1) / Rational(BigInt(n));
  for (std::size_t r = 1; r <= order; ++r) out[r] = scale * ratio[r - 1];
  return out;
}

inline MomentSequence negative_moments(const MonicPolynomial& poly, std::size_t max_r, MomentMethod method) {
  MomentSequence out;
  out.degree = poly.degree();
  out.direction = MomentDirection::Negative;
  out.method = method;
  if (method == MomentMethod::Girard) {
    for (std::size_t r = 0; r <= max_r; ++r) out.values.push_back(negative_moment(poly, static_cast<unsigned>(r)));
  } else if (method == MomentMethod::SeriesDivision) {
    ExactSeries g = negative_moment_series(poly, max_r);
    out.values.assign(g.coeffs().begin(), g.coeffs().end());
    out.values[0] = 1;  // m_0; the generating function itself starts at r = 1
  } else {
    fail(Errc::InvalidParameter, "negative moments are available from the girard and series routes");
  }
  return out;
}

}  // namespace zm
