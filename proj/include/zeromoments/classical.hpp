#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zeromoments/error.hpp"
#include "zeromoments/genfun.hpp"
#include "zeromoments/hypergeometric.hpp"
#include "zeromoments/monic.hpp"
#include "zeromoments/rational.hpp"

namespace zm {

enum class FamilyKind { Jacobi, ChebyshevT, ChebyshevU, GenLaguerre, Hermite, ScaledGenLaguerre, ScaledHermite };

/// A classical orthogonal polynomial family. Chebyshev T and U are the Jacobi
/// cases alpha = beta = -1/2 and +1/2; the scaled families are
/// Ls_N(x) = L_N^{(alpha)}(N x) and Hs_N(x) = H_N(sqrt(N) x).
struct FamilySpec {
  FamilyKind kind = FamilyKind::Jacobi;
  Rational alpha = 0;
  Rational beta = 0;

  static FamilySpec jacobi(Rational a, Rational b) { return {FamilyKind::Jacobi, std::move(a), std::move(b)}; }
  static FamilySpec chebyshev_t() { return {FamilyKind::ChebyshevT, make_rational(-1, 2), make_rational(-1, 2)}; }
  static FamilySpec chebyshev_u() { return {FamilyKind::ChebyshevU, make_rational(1, 2), make_rational(1, 2)}; }
  static FamilySpec laguerre(Rational a) { return {FamilyKind::GenLaguerre, std::move(a), 0}; }
  static FamilySpec hermite() { return {FamilyKind::Hermite, 0, 0}; }
  static FamilySpec scaled_laguerre(Rational a) { return {FamilyKind::ScaledGenLaguerre, std::move(a), 0}; }
  static FamilySpec scaled_hermite() { return {FamilyKind::ScaledHermite, 0, 0}; }

  bool is_jacobi_type() const noexcept {
    return kind == FamilyKind::Jacobi || kind == FamilyKind::ChebyshevT || kind == FamilyKind::ChebyshevU;
  }
  bool is_laguerre_type() const noexcept {
    return kind == FamilyKind::GenLaguerre || kind == FamilyKind::ScaledGenLaguerre;
  }
  bool is_hermite_type() const noexcept {
    return kind == FamilyKind::Hermite || kind == FamilyKind::ScaledHermite;
  }
  bool is_scaled() const noexcept {
    return kind == FamilyKind::ScaledGenLaguerre || kind == FamilyKind::ScaledHermite;
  }

  void validate() const {
    if ((is_jacobi_type() || is_laguerre_type()) && alpha <= -1) {
      fail(Errc::InvalidParameter, "alpha must exceed -1");
    }
    if (is_jacobi_type() && beta <= -1) fail(Errc::InvalidParameter, "beta must exceed -1");
    if (kind == FamilyKind::ChebyshevT && (alpha != make_rational(-1, 2) || beta != make_rational(-1, 2))) {
      fail(Errc::InvalidParameter, "chebyshev-t has alpha = beta = -1/2");
    }
    if (kind == FamilyKind::ChebyshevU && (alpha != make_rational(1, 2) || beta != make_rational(1, 2))) {
      fail(Errc::InvalidParameter, "chebyshev-u has alpha = beta = 1/2");
    }
  }

  std::string name() const {
    switch (kind) {
      case FamilyKind::Jacobi: return "jacobi";
      case FamilyKind::ChebyshevT: return "chebyshev-t";
      case FamilyKind::ChebyshevU: return "chebyshev-u";
      case FamilyKind::GenLaguerre: return "laguerre";
      case FamilyKind::Hermite: return "hermite";
      case FamilyKind::ScaledGenLaguerre: return "scaled-laguerre";
      case FamilyKind::ScaledHermite: return "scaled-hermite";
    }
    return "unknown";
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Family from its kebab-case token; alpha/beta are ignored where the family has none.
inline FamilySpec parse_family(std::string_view token, const Rational& alpha = 0, const Rational& beta = 0) {
  FamilySpec f;
  if (token == "jacobi") {
    f = FamilySpec::jacobi(alpha, beta);
  } else if (token == "chebyshev-t") {
    f = FamilySpec::chebyshev_t();
  } else if (token == "chebyshev-u") {
    f = FamilySpec::chebyshev_u();
  } else if (token == "laguerre") {
    f = FamilySpec::laguerre(alpha);
  } else if (token == "hermite") {
    f = FamilySpec::hermite();
  } else if (token == "scaled-laguerre") {
    f = FamilySpec::scaled_laguerre(alpha);
  } else if (token == "scaled-hermite") {
    f = FamilySpec::scaled_hermite();
  } else {
    fail(Errc::UnsupportedFamily, "unknown family '" + std::string(token) + "'");
  }
  f.validate();
  return f;
}

namespace detail {

// Monic three-term recurrence p_{n+1} = (x - b_n) p_n - a_n p_{n-1}, ascending coefficients.
template <class B, class A>
std::vector<Rational> monic_three_term(unsigned degree, B&& b_of, A&& a_of) {
  std::vector<Rational> prev{Rational(1)};
  std::vector<Rational> cur{Rational(-b_of(0u)), Rational(1)};
  for (unsigned n = 1; n < degree; ++n) {
    const Rational bn = b_of(n);
    const Rational an = a_of(n);
    std::vector<Rational> next(n + 2, Rational(0));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i];
      next[i] -= bn * cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= an * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline MonicPolynomial from_ascending(const std::vector<Rational>& asc) {
  std::vector<Rational> leading_first(asc.rbegin(), asc.rend());
  return make_monic(std::span<const Rational>(leading_first));
}

inline std::vector<Rational> jacobi_ascending(unsigned n, const Rational& a, const Rational& b) {
  const Rational s = a + b;
  auto b_of = [&](unsigned k) -> Rational {
    if (k == 0) return (b - a) / (s + 2);
    const Rational t = Rational(2 * k) + s;
    return (b * b - a * a) / (t * (t + 2));
  };
  auto a_of = [&](unsigned k) -> Rational {
    const Rational kk(k);
    if (k == 1) {
      // (k + s)/(2k + s - 1) = 1 at k = 1, which also covers s = -1.
      return Rational(4) * (1 + a) * (1 + b) / ((2 + s) * (2 + s) * (3 + s));
    }
    const Rational t = Rational(2 * k) + s;
    return Rational(4) * kk * (kk + a) * (kk + b) * (kk + s) / (t * t * (t + 1) * (t - 1));
  };
  return monic_three_term(n, b_of, a_of);
}

inline std::vector<Rational> laguerre_ascending(unsigned n, const Rational& a) {
  return monic_three_term(
      n, [&](unsigned k) { return Rational(2 * k + 1) + a; },
      [&](unsigned k) { return Rational(k) * (Rational(k) + a); });
}

inline std::vector<Rational> hermite_ascending(unsigned n) {
  return monic_three_term(
      n, [](unsigned) { return Rational(0); }, [](unsigned k) { return make_rational(k, 2); });
}

}  // namespace detail

/// Exact monic polynomial of degree N of the family. Scaled families have
/// their zeros divided by N (Laguerre) or sqrt(N) (Hermite).
inline MonicPolynomial classical_monic(const FamilySpec& family, unsigned n) {
  family.validate();
  if (n == 0) fail(Errc::InvalidDegree, "degree must be positive");
  switch (family.kind) {
    case FamilyKind::Jacobi:
    case FamilyKind::ChebyshevT:
    case FamilyKind::ChebyshevU:
      return detail::from_ascending(detail::jacobi_ascending(n, family.alpha, family.beta));
    case FamilyKind::GenLaguerre:
      return detail::from_ascending(detail::laguerre_ascending(n, family.alpha));
    case FamilyKind::ScaledGenLaguerre:
      return detail::from_ascending(detail::laguerre_ascending(n, family.alpha))
          .scaled_zeros(Rational(1) / Rational(n));
    case FamilyKind::Hermite:
      return detail::from_ascending(detail::hermite_ascending(n));
    case FamilyKind::ScaledHermite: {
      // Odd sigma vanish, so sigma_{2j} / N^j stays rational.
      MonicPolynomial h = detail::from_ascending(detail::hermite_ascending(n));
      std::vector<Rational> s(h.sigmas().begin(), h.sigmas().end());
      Rational power = 1;
      for (std::size_t k = 0; k < s.size(); k += 2) {
        s[k] /= power;
        power *= n;
      }
      return MonicPolynomial::from_sigma(std::move(s));
    }
  }
  fail(Errc::UnsupportedFamily, family.name());
}

namespace detail {

inline void check_unit_disc(double z) {
  if (!(std::abs(z) < 1.0)) fail(Errc::DomainError, "closed form needs 0 < |z| < 1");
}

inline double chebyshev_closed_form(unsigned n, double z, bool u_entry, bool corrected) {
  check_unit_disc(z);
  z = std::abs(z);  // both generating functions are even in z
  const double root = std::sqrt(1.0 - z * z);
  const double theta = std::log(z / (1.0 - root));
  if (!u_entry) return std::tanh(n * theta) / root;
  const double hyperbolic = corrected ? 1.0 / std::tanh((n + 1) * theta) : std::tanh((n + 1) * theta);
  const double dn = n;
  return ((1.0 + 1.0 / dn) * hyperbolic - 1.0 / (dn * root)) / root;
}

inline Rational jacobi_closed_form(unsigned n, const Rational& a, const Rational& b, const Rational& z) {
  const Rational s = a + b;
  const Rational w = (z - 1) / (2 * z);
  const Rational nn(n);
  Rational num = terminating_2f1<Rational>(1 - nn, nn + s + 2, a + 2, w);
  Rational den = terminating_2f1<Rational>(-nn, nn + s + 1, a + 1, w);
  if (den == 0) fail(Errc::DomainError, "z is a pole of G");
  return (nn + s + 1) / (2 * (a + 1)) / z * num / den;
}

inline Rational laguerre_closed_form(unsigned n, const Rational& a, const Rational& z) {
  const Rational y = 1 / z;
  const Rational nn(n);
  Rational den = terminating_1f1<Rational>(-nn, a + 1, y);
  if (den == 0) fail(Errc::DomainError, "z is a pole of G");
  return 1 - terminating_1f1<Rational>(1 - nn, a + 1, y) / den;
}

// One term F(a, c; y) / Gamma(g): zero when 1/Gamma(g) = 0, without evaluating
// F (which need not terminate there).
inline std::optional<double> pole_killed_term(const Rational& a, const Rational& c, const Rational& y,
                                              const Rational& g) {
  const double rg = reciprocal_gamma(g);
  if (rg == 0.0) return std::nullopt;
  return to_double(terminating_1f1<Rational>(a, c, y)) * rg;
}

inline double hermite_closed_form(unsigned n, double z) {
  const Rational zq = from_double(z);
  const Rational y = 1 / (zq * zq);
  const Rational nn(n);
  const Rational half = make_rational(1, 2);
  const Rational three_halves = make_rational(3, 2);
  auto a1 = pole_killed_term(-(nn - 1) / 2, half, y, (2 - nn) / 2);
  auto a2 = pole_killed_term((2 - nn) / 2, three_halves, y, (1 - nn) / 2);
  auto b1 = pole_killed_term(-nn / 2, half, y, (1 - nn) / 2);
  auto b2 = pole_killed_term((1 - nn) / 2, three_halves, y, -nn / 2);
  if (!a1 && !a2) fail(Errc::GammaPoleAmbiguity, "both numerator terms are pole-killed");
  if (!b1 && !b2) fail(Errc::GammaPoleAmbiguity, "both denominator terms are pole-killed");
  const double num = a1.value_or(0.0) - (2.0 / z) * a2.value_or(0.0);
  const double den = b1.value_or(0.0) - (2.0 / z) * b2.value_or(0.0);
  if (den == 0.0) fail(Errc::DomainError, "z is a pole of G");
  return num / (z * den);
}

}  // namespace detail

/// Closed-form moment generating function G(N, z) of the family (Q(N, z) for
/// the scaled families). `corrected` selects coth in the Chebyshev-U entry; the
/// tanh form is kept for comparison and does not reproduce the power sums.
inline double closed_form_G(const FamilySpec& family, unsigned n, double z, bool corrected = true) {
  family.validate();
  if (n == 0) fail(Errc::InvalidDegree, "degree must be positive");
  if (!std::isfinite(z)) fail(Errc::DomainError, "z must be finite");
  if (z == 0.0) return 1.0;
  switch (family.kind) {
    case FamilyKind::ChebyshevT:
      return detail::chebyshev_closed_form(n, z, false, corrected);
    case FamilyKind::ChebyshevU:
      return detail::chebyshev_closed_form(n, z, true, corrected);
    case FamilyKind::Jacobi:
      detail::check_unit_disc(z);
      return to_double(detail::jacobi_closed_form(n, family.alpha, family.beta, from_double(z)));
    case FamilyKind::GenLaguerre:
      return to_double(detail::laguerre_closed_form(n, family.alpha, from_double(z)));
    case FamilyKind::ScaledGenLaguerre:
      return to_double(detail::laguerre_closed_form(n, family.alpha, from_double(z) / Rational(n)));
    case FamilyKind::Hermite:
      return detail::hermite_closed_form(n, z);
    case FamilyKind::ScaledHermite:
      return detail::hermite_closed_form(n, z / std::sqrt(double(n)));
  }
  fail(Errc::UnsupportedFamily, family.name());
}

/// Leading coefficient of the Jacobi-type Case step producing m_{r+1}:
/// alpha + beta + 2N - r.
inline Rational case_step_coefficient(const FamilySpec& family, unsigned n, unsigned r) {
  return family.alpha + family.beta + Rational(2 * n) - Rational(r);
}

/// Right-hand side of the Jacobi-type Case step producing m_{r+1}:
///   (beta - alpha) m_r - r m_{r-1} + N sum_{s<r} (m_{r-1-s} m_s - m_{r-s} m_{s+1}).
/// Needs m[0..r].
inline Rational case_step_rhs(const FamilySpec& family, unsigned n, std::span<const Rational> m, unsigned r) {
  if (m.size() < r + 1) fail(Errc::SeedTooShort, "Case step needs m_0..m_r");
  Rational rhs = (family.beta - family.alpha) * m[r];
  if (r >= 1) rhs -= Rational(r) * m[r - 1];
  Rational sum = 0;
  for (unsigned s = 0; s < r; ++s) sum += m[r - 1 - s] * m[s] - m[r - s] * m[s + 1];
  return rhs + Rational(n) * sum;
}

/// Moments from the Case recurrences. Jacobi-type rows give m_r; the
/// Laguerre and Hermite rows give the scaled q_r (returned as q_r for the
/// scaled families and converted back to m_r for the unscaled ones). A step
/// whose leading coefficient vanishes must have a zero right-hand side; its
/// moment is then taken from the series route and the index is flagged.
inline MomentSequence case_moments(const FamilySpec& family, unsigned n, unsigned max_r) {
  family.validate();
  if (n == 0) fail(Errc::InvalidDegree, "degree must be positive");
  MomentSequence out;
  out.degree = n;
  out.method = MomentMethod::Case;
  const Rational nn(n);

  if (family.is_jacobi_type()) {
    out.direction = MomentDirection::Positive;
    std::vector<Rational>& m = out.values;
    m.push_back(1);
    if (max_r >= 1) m.push_back((family.beta - family.alpha) / (Rational(2 * n) + family.alpha + family.beta));
    std::optional<ExactSeries> fallback;
    for (unsigned r = 1; r + 1 <= max_r; ++r) {
      const Rational lead = case_step_coefficient(family, n, r);
      const Rational rhs = case_step_rhs(family, n, std::span<const Rational>(m), r);
      if (lead == 0) {
        if (rhs != 0) {
          fail(Errc::InconsistentDegenerateStep,
               "step r = " + std::to_string(r) + " has vanishing coefficient but RHS " + to_string(rhs));
        }
        if (!fallback) fallback = moment_series(classical_monic(family, n), max_r);
        m.push_back((*fallback)[r + 1]);
        out.degenerate_steps.push_back(r + 1);
      } else {
        m.push_back(rhs / lead);
      }
    }
    return out;
  }

  std::vector<Rational> q;
  if (family.is_laguerre_type()) {
    // q_{r+1} = ((alpha - r)/N) q_r + sum_{s<=r} q_{r-s} q_s
    q.push_back(1);
    for (unsigned r = 0; r + 1 <= max_r; ++r) {
      Rational next = (family.alpha - Rational(r)) / nn * q[r];
      for (unsigned s = 0; s <= r; ++s) next += q[r - s] * q[s];
      q.push_back(next);
    }
  } else {
    // q_{r+2} = -((r+1)/(2N)) q_r + (1/2) sum_{s<=r} q_{r-s} q_s
    q.push_back(1);
    if (max_r >= 1) q.push_back(0);
    for (unsigned r = 0; r + 2 <= max_r; ++r) {
      Rational next = -Rational(r + 1) / (2 * nn) * q[r];
      Rational sum = 0;
      for (unsigned s = 0; s <= r; ++s) sum += q[r - s] * q[s];
      q.push_back(next + sum / 2);
    }
  }

  if (family.is_scaled()) {
    out.direction = MomentDirection::Scaled;
    out.values = std::move(q);
    return out;
  }
  out.direction = MomentDirection::Positive;
  for (std::size_t r = 0; r < q.size(); ++r) {
    if (family.is_laguerre_type()) {
      out.values.push_back(q[r] * ipow(nn, static_cast<unsigned>(r)));
    } else {
      // odd q vanish; even ones scale by N^{r/2}
      out.values.push_back(r % 2 == 0 ? Rational(q[r] * ipow(nn, static_cast<unsigned>(r / 2))) : Rational(0));
    }
  }
  return out;
}

/// q_r = m_r / N^r (Laguerre) or m_r / N^{r/2} (Hermite).
inline MomentSequence scale_moments(const FamilySpec& family, unsigned n, const MomentSequence& m) {
  if (family.kind != FamilyKind::GenLaguerre && family.kind != FamilyKind::Hermite) {
    fail(Errc::UnsupportedFamily, family.name() + " has no scaled variant");
  }
  if (m.direction != MomentDirection::Positive) fail(Errc::InvalidParameter, "expected positive-direction moments");
  MomentSequence out = m;
  out.direction = MomentDirection::Scaled;
  const Rational nn(n);
  for (std::size_t r = 0; r < out.values.size(); ++r) {
    if (family.kind == FamilyKind::GenLaguerre) {
      out.values[r] /= ipow(nn, static_cast<unsigned>(r));
    } else if (r % 2 == 0) {
      out.values[r] /= ipow(nn, static_cast<unsigned>(r / 2));
    } else if (out.values[r] != 0) {
      fail(Errc::InvalidParameter, "odd Hermite moment is nonzero");
    }
  }
  return out;
}

}  // namespace zm
