#pragma once

// The acceptance suite: ten end-to-end criteria, each reduced to one
// pass/fail verdict with a short detail line. Used by the `selftest`
// subcommand and the acceptance test binary.

#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zeromoments/classical.hpp"
#include "zeromoments/error.hpp"
#include "zeromoments/genfun.hpp"
#include "zeromoments/girard.hpp"
#include "zeromoments/limits.hpp"
#include "zeromoments/oracle.hpp"
#include "zeromoments/stieltjes.hpp"
#include "zeromoments/verify.hpp"

namespace zm::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

namespace detail {

/// Collects checks; keeps the first failure message.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++count_;
    if (!ok && first_failure_.empty()) first_failure_ = what();
    if (!ok) ++failures_;
  }
  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    if (failures_ == 0) {
      s << count_ << " checks";
    } else {
      s << failures_ << "/" << count_ << " checks failed; first: " << first_failure_;
    }
    return s.str();
  }

 private:
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

inline std::string fmt(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

inline std::vector<FamilySpec> jacobi_parameter_sets() {
  return {FamilySpec::jacobi(make_rational(-1, 2), make_rational(-1, 2)),
          FamilySpec::jacobi(make_rational(1, 2), make_rational(1, 2)), FamilySpec::jacobi(0, 0),
          FamilySpec::jacobi(1, 2)};
}

inline std::vector<Rational> laguerre_alphas() { return {0, 1, make_rational(3, 2)}; }

/// Every family with every tested parameter value.
inline std::vector<FamilySpec> all_families() {
  std::vector<FamilySpec> out = jacobi_parameter_sets();
  out.push_back(FamilySpec::chebyshev_t());
  out.push_back(FamilySpec::chebyshev_u());
  for (const auto& a : laguerre_alphas()) out.push_back(FamilySpec::laguerre(a));
  out.push_back(FamilySpec::hermite());
  for (const auto& a : laguerre_alphas()) out.push_back(FamilySpec::scaled_laguerre(a));
  out.push_back(FamilySpec::scaled_hermite());
  return out;
}

inline std::string label(const FamilySpec& f, unsigned n) {
  std::string s = f.name();
  if (f.kind == FamilyKind::Jacobi) s += "(" + to_string(f.alpha) + "," + to_string(f.beta) + ")";
  if (f.is_laguerre_type()) s += "(" + to_string(f.alpha) + ")";
  return s + " N=" + std::to_string(n);
}

/// exact (1/N) sum x^r over integer roots, x^-r for negative r
inline Rational root_moment(const std::vector<Rational>& roots, int r) {
  Rational sum = 0;
  for (const auto& x : roots) {
    if (r >= 0) {
      sum += ipow(x, static_cast<unsigned>(r));
    } else {
      Rational inv = Rational(1) / x;
      sum += ipow(inv, static_cast<unsigned>(-r));
    }
  }
  return sum / Rational(static_cast<long long>(roots.size()));
}

}  // namespace detail

// Chebyshev-T golden values of m_2, m_4, m_6 for N = 1..7.
inline CriterionResult criterion_golden_table() {
  detail::Tally tally;
  const std::vector<std::vector<Rational>> golden = {
      {0, make_rational(1, 2), make_rational(1, 2), make_rational(1, 2), make_rational(1, 2), make_rational(1, 2),
       make_rational(1, 2)},
      {0, make_rational(1, 4), make_rational(3, 8), make_rational(3, 8), make_rational(3, 8), make_rational(3, 8),
       make_rational(3, 8)},
      {0, make_rational(1, 8), make_rational(9, 32), make_rational(5, 16), make_rational(5, 16), make_rational(5, 16),
       make_rational(5, 16)}};
  for (unsigned n = 1; n <= 7; ++n) {
    const MonicPolynomial t = classical_monic(FamilySpec::chebyshev_t(), n);
    const ExactSeries g = moment_series(t, 6);
    const MomentSequence rec = newton_moments(t, 6);
    for (unsigned l = 1; l <= 3; ++l) {
      const Rational& want = golden[l - 1][n - 1];
      const Rational routes[4] = {power_sum_moment(t, 2 * l), even_moment_parity(t, l), g[2 * l], rec.values[2 * l]};
      const char* names[4] = {"girard", "parity", "series", "recurrence"};
      for (int k = 0; k < 4; ++k) {
        tally.check(routes[k] == want, [&] {
          return std::string(names[k]) + " N=" + std::to_string(n) + " m_" + std::to_string(2 * l) + " = " +
                 to_string(routes[k]) + ", want " + to_string(want);
        });
      }
    }
  }
  return {1, "Chebyshev-T golden table m_2, m_4, m_6 for N = 1..7 by four routes", tally.passed(), tally.summary()};
}

// Small-N values differ from the stable central-binomial value; N >= r/2 + 1 agree.
inline CriterionResult criterion_case_correction() {
  detail::Tally tally;
  const FamilySpec t = FamilySpec::chebyshev_t();
  const Rational m4_2 = power_sum_moment(classical_monic(t, 2), 4);
  const Rational m6_3 = power_sum_moment(classical_monic(t, 3), 6);
  tally.check(m4_2 == make_rational(1, 4) && m4_2 != make_rational(3, 8),
              [&] { return "m_4(2) = " + to_string(m4_2); });
  tally.check(m6_3 == make_rational(9, 32) && m6_3 != make_rational(5, 16),
              [&] { return "m_6(3) = " + to_string(m6_3); });
  for (unsigned r = 2; r <= 10; r += 2) {
    const Rational stable(binomial(r, r / 2), BigInt(1) << r);
    for (unsigned n = 1; n <= 12; ++n) {
      const Rational m = power_sum_moment(classical_monic(t, n), r);
      const bool stable_range = 2 * n >= r + 2;
      tally.check((m == stable) == stable_range, [&] {
        return "N=" + std::to_string(n) + " m_" + std::to_string(r) + " = " + to_string(m) + " vs stable " +
               to_string(stable);
      });
    }
  }
  return {2, "Small-N Chebyshev-T moments differ from the stable value exactly when N < r/2 + 1", tally.passed(),
          tally.summary()};
}

// 200 random integer-root polynomials against exact root sums and the float oracle.
inline CriterionResult criterion_oracle_equivalence() {
  detail::Tally tally;
  std::mt19937 rng(20261014u);
  std::uniform_int_distribution<int> degree_dist(1, 8);
  std::uniform_int_distribution<int> root_dist(-10, 10);
  double worst_relative = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> roots;
    const int n = degree_dist(rng);
    for (int i = 0; i < n; ++i) roots.emplace_back(root_dist(rng));
    const MonicPolynomial p = MonicPolynomial::from_roots(roots);
    const MomentSequence gir = girard_moments(p, 12);
    const MomentSequence rec = newton_moments(p, 12);
    const RootSet numeric = roots_numeric(p);
    for (int r = 0; r <= 12; ++r) {
      const Rational exact = detail::root_moment(roots, r);
      tally.check(gir.values[r] == exact && rec.values[r] == exact, [&] {
        return "trial " + std::to_string(trial) + " r=" + std::to_string(r) + ": girard " + to_string(gir.values[r]) +
               ", newton " + to_string(rec.values[r]) + ", exact " + to_string(exact);
      });
      // relative to (1/N) sum |x_i|^r; absolute 1e-12 when that scale vanishes
      const double err = std::abs(oracle_moment(numeric, r) - to_double(exact));
      const double scale = oracle_moment_scale(numeric, r);
      const double rel = err <= 1e-12 ? 0.0 : err / scale;
      worst_relative = std::max(worst_relative, rel);
      tally.check(rel <= 1e-9, [&] {
        return "trial " + std::to_string(trial) + " r=" + std::to_string(r) + " oracle relative error " +
               detail::fmt(rel);
      });
    }
    if (p.sigma(p.degree()) == 0) continue;
    const MomentSequence neg_girard = negative_moments(p, 12, MomentMethod::Girard);
    const MomentSequence neg_series = negative_moments(p, 12, MomentMethod::SeriesDivision);
    const MonicPolynomial rec_poly = p.reciprocal();
    for (int r = 1; r <= 12; ++r) {
      const Rational exact = detail::root_moment(roots, -r);
      const Rational via_reciprocal = power_sum_moment(rec_poly, static_cast<unsigned>(r));
      tally.check(neg_girard.values[r] == exact && neg_series.values[r] == exact && via_reciprocal == exact, [&] {
        return "trial " + std::to_string(trial) + " m_-" + std::to_string(r) + " mismatch";
      });
    }
  }
  CriterionResult out{3, "Random integer-root polynomials: exact routes agree, float oracle within 1e-9", tally.passed(),
                      tally.summary()};
  out.detail += "; worst oracle relative error " + detail::fmt(worst_relative);
  return out;
}

// Riccati residuals vanish exactly through order 12.
inline CriterionResult criterion_riccati() {
  detail::Tally tally;
  for (const FamilySpec& f : detail::all_families()) {
    for (unsigned n = 1; n <= 6; ++n) {
      const ExactSeries g = moment_series(classical_monic(f, n), 12);
      const ResidualReport rep = riccati_residual(f, n, g);
      tally.check(rep.is_zero, [&] {
        return detail::label(f, n) + " residual nonzero at z^" + std::to_string(*rep.first_nonzero_index);
      });
    }
  }
  return {4, "Riccati equations hold exactly to order 12 for all families, N = 1..6", tally.passed(), tally.summary()};
}

// U = P(1/z) solves each second-order linear equation exactly.
inline CriterionResult criterion_lde() {
  detail::Tally tally;
  std::vector<FamilySpec> families = detail::jacobi_parameter_sets();
  families.push_back(FamilySpec::chebyshev_t());
  families.push_back(FamilySpec::chebyshev_u());
  for (const auto& a : detail::laguerre_alphas()) families.push_back(FamilySpec::scaled_laguerre(a));
  families.push_back(FamilySpec::scaled_hermite());
  for (const FamilySpec& f : families) {
    for (unsigned n = 1; n <= 6; ++n) {
      const ResidualReport rep = lde_check(f, n);
      tally.check(rep.is_zero, [&] {
        return detail::label(f, n) + " residual nonzero at z^" + std::to_string(*rep.first_nonzero_index);
      });
    }
  }
  return {5, "Linear equations for U = P(1/z) hold exactly, five rows, N = 1..6", tally.passed(), tally.summary()};
}

// Closed-form generating functions against series partial sums.
inline CriterionResult criterion_closed_forms() {
  detail::Tally tally;
  auto against_series = [&](const FamilySpec& f, unsigned n, double z, double tol, bool corrected = true) {
    const ExactSeries g = moment_series(classical_monic(f, n), 60);
    const double series_value = partial_sum(to_float(g), z);
    const double closed = closed_form_G(f, n, z, corrected);
    const double err = std::abs(closed - series_value);
    tally.check(err <= tol, [&] {
      return detail::label(f, n) + " z=" + detail::fmt(z) + ": closed " + detail::fmt(closed) + ", series " +
             detail::fmt(series_value);
    });
  };
  for (unsigned n = 1; n <= 6; ++n) {
    for (double z : {0.1, 0.3, 0.5}) {
      against_series(FamilySpec::chebyshev_t(), n, z, 1e-10);
      against_series(FamilySpec::chebyshev_u(), n, z, 1e-10);
      for (const FamilySpec& f : detail::jacobi_parameter_sets()) against_series(f, n, z, 1e-10);
    }
    for (const auto& a : detail::laguerre_alphas()) {
      for (double z : {0.01, 0.02}) against_series(FamilySpec::laguerre(a), n, z, 1e-10);
      for (double z : {0.1, 0.15}) against_series(FamilySpec::scaled_laguerre(a), n, z, 1e-10);
    }
    for (double z : {0.1, 0.2}) against_series(FamilySpec::hermite(), n, z, 1e-10);
    for (double z : {0.1, 0.3}) against_series(FamilySpec::scaled_hermite(), n, z, 1e-10);
  }
  const FamilySpec u = FamilySpec::chebyshev_u();
  const double corrected = closed_form_G(u, 3, 0.5, true);
  const double verbatim = closed_form_G(u, 3, 0.5, false);
  tally.check(std::abs(corrected - 23.0 / 21.0) <= 1e-12, [&] { return "U(3,1/2) corrected " + detail::fmt(corrected); });
  tally.check(std::abs(verbatim - 23.0 / 21.0) > 1e-4, [&] { return "U(3,1/2) verbatim " + detail::fmt(verbatim); });
  const double verbatim_n1 = closed_form_G(u, 1, 0.5, false);
  tally.check(std::abs(verbatim_n1 - 1.0) > 1e-2, [&] { return "verbatim U(1,1/2) = " + detail::fmt(verbatim_n1); });
  for (double z : {0.1, 0.3, 0.5, 0.7}) {
    const double v = closed_form_G(u, 1, z, true);
    tally.check(std::abs(v - 1.0) <= 1e-12, [&] { return "corrected U(1," + detail::fmt(z) + ") = " + detail::fmt(v); });
  }
  return {6, "Closed-form generating functions match series; U entry only in coth form", tally.passed(), tally.summary()};
}

// Case recurrences reproduce the Girard moments.
inline CriterionResult criterion_case() {
  detail::Tally tally;
  for (const FamilySpec& f : detail::all_families()) {
    for (unsigned n = 1; n <= 6; ++n) {
      const MomentSequence c = case_moments(f, n, 10);
      const MonicPolynomial p = classical_monic(f, n);
      for (unsigned r = 0; r <= 10; ++r) {
        if (std::find(c.degenerate_steps.begin(), c.degenerate_steps.end(), r) != c.degenerate_steps.end()) continue;
        const Rational want = power_sum_moment(p, r);
        tally.check(c.values[r] == want, [&] {
          return detail::label(f, n) + " r=" + std::to_string(r) + ": case " + to_string(c.values[r]) + ", girard " +
                 to_string(want);
        });
      }
    }
  }
  const FamilySpec t = FamilySpec::chebyshev_t();
  const std::vector<Rational> m = girard_moments(classical_monic(t, 2), 4).values;
  const Rational lead = case_step_coefficient(t, 2, 3);
  const Rational rhs = case_step_rhs(t, 2, m, 3);
  tally.check(lead == 0 && rhs == 0, [&] { return "T N=2 r=3: lead " + to_string(lead) + ", rhs " + to_string(rhs); });
  const MomentSequence c2 = case_moments(t, 2, 6);
  tally.check(c2.degenerate_steps == std::vector<std::size_t>{4} && c2.values[4] == make_rational(1, 4),
              [&] { return "T N=2 degenerate step not flagged at index 4"; });
  return {7, "Case recurrences reproduce Girard moments, degenerate T step consistent", tally.passed(), tally.summary()};
}

// Limit moments: Catalan, central binomial and halved Catalan sequences.
inline CriterionResult criterion_limit_moments() {
  detail::Tally tally;
  std::vector<BigInt> catalan{1};
  for (unsigned k = 0; k < 10; ++k) {
    BigInt next = 0;
    for (unsigned i = 0; i <= k; ++i) next += catalan[i] * catalan[k - i];
    catalan.push_back(next);
  }
  const std::vector<long long> known{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  const ExactSeries q0 = limit_G0_series(FamilySpec::scaled_laguerre(0), 10);
  for (unsigned r = 0; r <= 10; ++r) {
    tally.check(q0[r] == Rational(catalan[r]) && catalan[r] == known[r] &&
                    limit_moment(FamilySpec::scaled_laguerre(make_rational(3, 2)), r) == Rational(catalan[r]),
                [&] { return "Catalan index " + std::to_string(r) + ": series " + to_string(q0[r]); });
  }
  // central binomials by Pascal's rule
  std::vector<std::vector<BigInt>> pascal{{1}};
  for (unsigned k = 1; k <= 10; ++k) {
    std::vector<BigInt> row(k + 1, BigInt(1));
    for (unsigned i = 1; i < k; ++i) row[i] = pascal[k - 1][i - 1] + pascal[k - 1][i];
    pascal.push_back(row);
  }
  for (const FamilySpec& f : {FamilySpec::jacobi(1, 2), FamilySpec::chebyshev_t(), FamilySpec::chebyshev_u()}) {
    const ExactSeries g0 = limit_G0_series(f, 10);
    for (unsigned r = 0; r <= 10; ++r) {
      const Rational want = r % 2 ? Rational(0) : Rational(pascal[r][r / 2], BigInt(1) << r);
      tally.check(g0[r] == want && limit_moment(f, r) == want,
                  [&] { return f.name() + " limit moment " + std::to_string(r) + " = " + to_string(g0[r]); });
    }
  }
  const ExactSeries h0 = limit_G0_series(FamilySpec::scaled_hermite(), 10);
  for (unsigned r = 0; r <= 10; ++r) {
    const Rational want = r % 2 ? Rational(0) : Rational(catalan[r / 2], BigInt(1) << (r / 2));
    tally.check(h0[r] == want && limit_moment(FamilySpec::scaled_hermite(), r) == want,
                [&] { return "scaled Hermite limit moment " + std::to_string(r) + " = " + to_string(h0[r]); });
  }
  return {8, "Limit moments are Catalan, central-binomial and C_l/2^l sequences", tally.passed(), tally.summary()};
}

// Limit densities recovered by inversion, and their moments by quadrature.
inline CriterionResult criterion_limit_densities() {
  detail::Tally tally;
  double worst_density = 0.0;
  double worst_moment = 0.0;
  for (const FamilySpec& f : {FamilySpec::jacobi(0, 0), FamilySpec::scaled_laguerre(0), FamilySpec::scaled_hermite()}) {
    const auto [lo, hi] = limit_support(f);
    const DensityTable table = limit_density_table(f, lo + 0.05, hi - 0.05, 101);
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
      const double err = std::abs(table.inverted[i] - table.values[i]);
      worst_density = std::max(worst_density, err);
      tally.check(err <= 1e-6, [&] {
        return f.name() + " x=" + detail::fmt(table.grid[i]) + ": inverted " + detail::fmt(table.inverted[i]) +
               ", closed " + detail::fmt(table.values[i]);
      });
    }
    for (unsigned r = 0; r <= 10; ++r) {
      const double err = std::abs(density_moment(f, r) - to_double(limit_moment(f, r)));
      worst_moment = std::max(worst_moment, err);
      tally.check(err <= 1e-8, [&] { return f.name() + " density moment " + std::to_string(r) + " error " + detail::fmt(err); });
    }
  }
  CriterionResult out{9, "Inverted limit transforms match the limit densities; density moments match", tally.passed(),
                      tally.summary()};
  out.detail += "; worst density error " + detail::fmt(worst_density) + ", worst moment error " + detail::fmt(worst_moment);
  return out;
}

// Finite-N masses for the Chebyshev-T polynomial of degree 5.
inline CriterionResult criterion_finite_inversion() {
  detail::Tally tally;
  const MonicPolynomial t5 = classical_monic(FamilySpec::chebyshev_t(), 5);
  auto chi = [&](ComplexPoint z) { return stieltjes_chi(t5, z); };
  for (int k = 1; k <= 5; ++k) {
    const double x = std::cos((2.0 * k - 1.0) * std::numbers::pi / 10.0);
    const DistributionIncrement inc = perron_stieltjes_invert(chi, x - 0.05, x + 0.05);
    tally.check(std::abs(inc.mass - 0.2) <= 1e-3,
                [&] { return "window at " + detail::fmt(x) + " mass " + detail::fmt(inc.mass); });
  }
  const DistributionIncrement all = perron_stieltjes_invert(chi, -2.0, 2.0);
  tally.check(std::abs(all.mass - 1.0) <= 1e-3, [&] { return "bracket mass " + detail::fmt(all.mass); });
  return {10, "Perron-Stieltjes windows around the zeros of T_5 carry mass 1/5 each", tally.passed(), tally.summary()};
}

inline std::vector<CriterionResult> run_acceptance() {
  using Criterion = CriterionResult (*)();
  const Criterion criteria[] = {criterion_golden_table, criterion_case_correction, criterion_oracle_equivalence,
                                criterion_riccati,      criterion_lde,             criterion_closed_forms,
                                criterion_case,         criterion_limit_moments,   criterion_limit_densities,
                                criterion_finite_inversion};
  std::vector<CriterionResult> results;
  int id = 0;
  for (Criterion c : criteria) {
    ++id;
    try {
      results.push_back(c());
    } catch (const std::exception& e) {
      results.push_back({id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what()});
    }
  }
  return results;
}

inline std::string format_line(const CriterionResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + " (" + r.detail + ")";
}

}  // namespace zm::acceptance
