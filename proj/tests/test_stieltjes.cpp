#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "zeromoments/classical.hpp"
#include "zeromoments/genfun.hpp"
#include "zeromoments/girard.hpp"
#include "zeromoments/limits.hpp"
#include "zeromoments/oracle.hpp"
#include "zeromoments/stieltjes.hpp"

using namespace zm;
using zmtest::q;
using zmtest::qs;
using std::numbers::pi;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidParameter;
}

std::vector<FamilySpec> limit_families() {
  return {FamilySpec::chebyshev_t(), FamilySpec::chebyshev_u(), FamilySpec::jacobi(q(1, 2), 3),
          FamilySpec::scaled_laguerre(0), FamilySpec::scaled_laguerre(q(3, 2)), FamilySpec::scaled_hermite()};
}

std::vector<FamilySpec> all_families() {
  return {FamilySpec::chebyshev_t(), FamilySpec::chebyshev_u(),   FamilySpec::jacobi(q(1, 2), q(-1, 3)),
          FamilySpec::laguerre(1),   FamilySpec::hermite(),       FamilySpec::scaled_laguerre(q(1, 2)),
          FamilySpec::scaled_hermite()};
}

auto chi_of(const MonicPolynomial& p) {
  return [p](ComplexPoint z) { return stieltjes_chi(p, z); };
}

const MonicPolynomial& t2() {
  static const MonicPolynomial p = classical_monic(FamilySpec::chebyshev_t(), 2);
  return p;
}

}  // namespace

TEST(LimitMoment, Examples) {
  EXPECT_EQ(limit_moment(FamilySpec::scaled_laguerre(0), 3), 5);
  EXPECT_EQ(limit_moment(FamilySpec::jacobi(2, 5), 2), q(1, 2));
  EXPECT_EQ(limit_moment(FamilySpec::scaled_hermite(), 2), q(1, 2));
  EXPECT_EQ(limit_moment(FamilySpec::chebyshev_u(), 3), 0);
  EXPECT_EQ(code_of([] { limit_moment(FamilySpec::laguerre(0), 1); }), Errc::UnsupportedFamily);
  EXPECT_EQ(code_of([] { limit_moment(FamilySpec::hermite(), 1); }), Errc::UnsupportedFamily);
}

TEST(LimitSeries, Examples) {
  EXPECT_EQ(limit_G0_series(FamilySpec::scaled_laguerre(0), 4), ExactSeries(qs({1, 1, 2, 5, 14})));
  EXPECT_EQ(limit_G0_series(FamilySpec::chebyshev_t(), 4), ExactSeries(qs({1, 0, q(1, 2), 0, q(3, 8)})));
  EXPECT_EQ(limit_G0_series(FamilySpec::scaled_hermite(), 0)[0], 1);
}

TEST(LimitSeries, CoefficientsAreLimitMoments) {
  for (const auto& f : limit_families()) {
    const ExactSeries g = limit_G0_series(f, 16);
    for (unsigned r = 0; r <= 16; ++r) EXPECT_EQ(g[r], limit_moment(f, r)) << f.name() << " r=" << r;
  }
}

TEST(LimitMoment, ParameterIndependent) {
  const std::vector<FamilySpec> laguerre{FamilySpec::scaled_laguerre(0), FamilySpec::scaled_laguerre(7)};
  for (unsigned r = 0; r <= 10; ++r) {
    EXPECT_EQ(limit_moment(FamilySpec::jacobi(q(-1, 2), 4), r), limit_moment(FamilySpec::chebyshev_t(), r));
    EXPECT_EQ(limit_moment(laguerre[0], r), limit_moment(laguerre[1], r));
  }
}

TEST(LimitMoment, ChebyshevMomentsAreExactForLargeN) {
  const auto t = FamilySpec::chebyshev_t();
  for (unsigned l = 1; l <= 6; ++l) {
    bool some_small_n_differs = false;
    for (unsigned n = 1; n <= 2 * l + 4; ++n) {
      const Rational m = even_moment_parity(classical_monic(t, n), l);
      if (n >= l + 1) {
        EXPECT_EQ(m, limit_moment(t, 2 * l)) << "N=" << n << " l=" << l;
      } else if (m != limit_moment(t, 2 * l)) {
        some_small_n_differs = true;
      }
    }
    EXPECT_TRUE(some_small_n_differs) << "l=" << l;
  }
}

TEST(LimitDensity, Examples) {
  EXPECT_NEAR(limit_density(FamilySpec::scaled_hermite(), 0.0), std::sqrt(2.0) / pi, 1e-15);
  EXPECT_EQ(limit_density(FamilySpec::jacobi(0, 0), 1.5), 0.0);
  EXPECT_EQ(limit_density(FamilySpec::scaled_laguerre(0), 4.0), 0.0);
  EXPECT_EQ(limit_density(FamilySpec::scaled_laguerre(0), -0.5), 0.0);
  EXPECT_NEAR(limit_density(FamilySpec::chebyshev_t(), 0.0), 1.0 / pi, 1e-15);
  EXPECT_NEAR(limit_density(FamilySpec::scaled_laguerre(0), 2.0), 1.0 / (2.0 * pi), 1e-15);
  EXPECT_EQ(code_of([] { limit_density(FamilySpec::hermite(), 0.0); }), Errc::UnsupportedFamily);
}

TEST(LimitDensity, RecoveredFromTransform) {
  for (const auto& f : limit_families()) {
    const auto [lo, hi] = limit_support(f);
    const DensityTable table = limit_density_table(f, lo + 0.05, hi - 0.05, 101);
    ASSERT_EQ(table.grid.size(), 101u);
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
      EXPECT_GE(table.values[i], 0.0);
      EXPECT_NEAR(table.inverted[i], table.values[i], 1e-6) << f.name() << " x=" << table.grid[i];
      if (i > 0) {
        EXPECT_GT(table.grid[i], table.grid[i - 1]);
      }
    }
  }
}

TEST(LimitDensity, VanishesOutsideSupport) {
  for (const auto& f : limit_families()) {
    const auto [lo, hi] = limit_support(f);
    const DensityTable table = limit_density_table(f, hi + 0.1, hi + 3.0, 20);
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
      EXPECT_EQ(table.values[i], 0.0);
      EXPECT_NEAR(table.inverted[i], 0.0, 1e-6);
    }
    EXPECT_EQ(limit_density(f, lo - 0.25), 0.0);
  }
  EXPECT_EQ(code_of([] { limit_density_table(FamilySpec::chebyshev_t(), 0.5, 0.1, 5); }), Errc::InvalidParameter);
  EXPECT_EQ(code_of([] { limit_density_table(FamilySpec::chebyshev_t(), 0.0, 0.1, 0); }), Errc::InvalidParameter);
}

TEST(LimitDensity, MomentsMatchLimitMoments) {
  for (const auto& f : limit_families()) {
    for (unsigned r = 0; r <= 10; ++r) {
      const double want = to_double(limit_moment(f, r));
      EXPECT_NEAR(density_moment(f, r), want, 1e-8 * std::max(1.0, want)) << f.name() << " r=" << r;
    }
  }
}

TEST(StieltjesChi, Examples) {
  const ComplexPoint v = stieltjes_chi(t2(), ComplexPoint(2.0, 0.0));
  EXPECT_NEAR(v.real(), 4.0 / 7.0, 1e-15);
  EXPECT_EQ(v.imag(), 0.0);
  for (double y : {1e3, 1e5, 1e7}) {
    const ComplexPoint w = stieltjes_chi(classical_monic(FamilySpec::laguerre(1), 5), ComplexPoint(0.0, y));
    EXPECT_NEAR(std::abs(w) * y, 1.0, 10.0 / y);
  }
  const auto p = MonicPolynomial::from_sigma(qs({1, 3, 2}));
  EXPECT_EQ(code_of([&] { stieltjes_chi(p, ComplexPoint(1.0, 0.0)); }), Errc::PoleHit);
}

TEST(StieltjesChi, ConjugateSymmetry) {
  std::mt19937 rng(909);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (const auto& f : all_families()) {
    const auto p = classical_monic(f, 6);
    for (int i = 0; i < 20; ++i) {
      const ComplexPoint z(u(rng), u(rng));
      const ComplexPoint a = stieltjes_chi(p, std::conj(z));
      const ComplexPoint b = std::conj(stieltjes_chi(p, z));
      EXPECT_NEAR(std::abs(a - b), 0.0, 1e-13 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST(StieltjesChi, AgreesWithRootSum) {
  std::mt19937 rng(1001);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const auto& f : all_families()) {
    for (unsigned n = 1; n <= 8; ++n) {
      const auto p = classical_monic(f, n);
      const RootSet roots = roots_numeric(p);
      for (int i = 0; i < 5; ++i) {
        const ComplexPoint z(u(rng), 0.1 + std::abs(u(rng)));
        ComplexPoint sum = 0.0;
        for (const auto& x : roots.roots) sum += 1.0 / (z - x);
        sum /= static_cast<double>(n);
        EXPECT_NEAR(std::abs(stieltjes_chi(p, z) - sum), 0.0, 1e-10 * std::max(1.0, std::abs(sum)));
      }
    }
  }
}

TEST(StieltjesChi, ReciprocalGeneratingFunction) {
  // chi(z) = (1/z) G(1/z), checked against the exact series far from the zeros
  const auto p = classical_monic(FamilySpec::chebyshev_u(), 5);
  const ExactSeries g = moment_series(p, 60);
  for (double x : {4.0, -5.0, 7.5}) {
    EXPECT_NEAR(stieltjes_chi(p, ComplexPoint(x, 0.0)).real(), partial_sum(to_float(g), 1.0 / x) / x, 1e-14);
  }
}

TEST(Inversion, Examples) {
  const auto inside = perron_stieltjes_invert(chi_of(t2()), 0.5, 0.9);
  EXPECT_NEAR(inside.mass, 0.5, 1e-3);
  EXPECT_EQ(inside.eta, default_eta_schedule());
  EXPECT_EQ(inside.mass_at_eta.size(), default_eta_schedule().size());
  EXPECT_NEAR(perron_stieltjes_invert(chi_of(t2()), 2.0, 3.0).mass, 0.0, 1e-6);
  const auto t5 = classical_monic(FamilySpec::chebyshev_t(), 5);
  EXPECT_NEAR(perron_stieltjes_invert(chi_of(t5), -2.0, 2.0).mass, 1.0, 1e-3);
}

TEST(Inversion, UnextrapolatedMassApproachesLimit) {
  const auto d = perron_stieltjes_invert(chi_of(t2()), 0.5, 0.9);
  for (std::size_t i = 1; i < d.mass_at_eta.size(); ++i) {
    EXPECT_LE(std::abs(d.mass_at_eta[i] - 0.5), std::abs(d.mass_at_eta[i - 1] - 0.5) + 1e-12);
  }
}

TEST(Inversion, NormalizationForAllFamilies) {
  for (const auto& f : all_families()) {
    for (unsigned n = 1; n <= 8; ++n) {
      const auto p = classical_monic(f, n);
      double bound = 0.0;
      for (const auto& x : roots_numeric(p).roots) bound = std::max(bound, std::abs(x));
      const auto d = perron_stieltjes_invert(chi_of(p), -bound - 1.0, bound + 1.0);
      EXPECT_NEAR(d.mass, 1.0, 1e-3) << f.name() << " N=" << n;
    }
  }
}

TEST(Inversion, EachSimpleZeroCarriesOneOverN) {
  const unsigned n = 5;
  const auto t5 = classical_monic(FamilySpec::chebyshev_t(), n);
  for (unsigned k = 1; k <= n; ++k) {
    const double x = std::cos((2.0 * k - 1.0) * pi / (2.0 * n));
    EXPECT_NEAR(perron_stieltjes_invert(chi_of(t5), x - 0.05, x + 0.05).mass, 0.2, 1e-3);
  }
}

TEST(Inversion, EndpointOnZeroGivesHalfJump) {
  // zero of T_2 at 1/sqrt2 sits exactly on the right endpoint
  const double x = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(perron_stieltjes_invert(chi_of(t2()), 0.2, x).mass, 0.25, 1e-3);
}

TEST(Inversion, LimitTransform) {
  auto chi = [](ComplexPoint z) { return limit_stieltjes(FamilySpec::scaled_hermite(), z); };
  // the semicircle puts half its mass on each side of 0
  EXPECT_NEAR(perron_stieltjes_invert(chi, 0.0, 3.0).mass, 0.5, 1e-3);
  auto arcsine = [](ComplexPoint z) { return limit_stieltjes(FamilySpec::chebyshev_t(), z); };
  // int_{-1/2}^{1/2} dx / (pi sqrt(1 - x^2)) = 1/3
  EXPECT_NEAR(perron_stieltjes_invert(arcsine, -0.5, 0.5).mass, 1.0 / 3.0, 1e-3);
}

TEST(Inversion, InvalidParameters) {
  auto chi = chi_of(t2());
  EXPECT_EQ(code_of([&] { perron_stieltjes_invert(chi, 1.0, 0.5); }), Errc::InvalidParameter);
  const std::vector<double> rising{1e-3, 1e-2};
  EXPECT_EQ(code_of([&] { perron_stieltjes_invert(chi, 0.0, 1.0, rising); }), Errc::InvalidParameter);
  const std::vector<double> negative{1e-2, -1e-3};
  EXPECT_EQ(code_of([&] { perron_stieltjes_invert(chi, 0.0, 1.0, negative); }), Errc::InvalidParameter);
  const std::vector<double> empty;
  EXPECT_EQ(code_of([&] { perron_stieltjes_invert(chi, 0.0, 1.0, empty); }), Errc::InvalidParameter);
  EXPECT_EQ(code_of([&] { density_from_transform(chi, 0.0, empty); }), Errc::InvalidParameter);
}

TEST(Quadrature, BudgetIsEnforced) {
  QuadratureSpec tight;
  tight.max_depth = 1;
  tight.error_budget = 1e-16;
  EXPECT_EQ(code_of([&] { integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, tight); }),
            Errc::QuadratureFailure);
  EXPECT_NEAR(integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0), std::exp(1.0) - 1.0, 1e-14);
}

TEST(Oracle, Examples) {
  const RootSet r = roots_numeric(MonicPolynomial::from_sigma(qs({1, 3, 2})));
  ASSERT_EQ(r.roots.size(), 2u);
  std::vector<double> re{r.roots[0].real(), r.roots[1].real()};
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], 1.0, 1e-12);
  EXPECT_NEAR(re[1], 2.0, 1e-12);
  EXPECT_LE(r.residual_bound, 1e-10);
  EXPECT_NEAR(oracle_moment(r, 2), 2.5, 1e-12);
  EXPECT_NEAR(oracle_moment(r, -1), 0.75, 1e-12);
  EXPECT_NEAR(oracle_moment(roots_numeric(t2()), 2), 0.5, 1e-12);

  const RootSet d = roots_numeric(MonicPolynomial::from_sigma(qs({1, 2, 1})));
  ASSERT_EQ(d.roots.size(), 2u);
  for (const auto& x : d.roots) EXPECT_NEAR(std::abs(x - 1.0), 0.0, 1e-7);

  const RootSet zero = roots_numeric(MonicPolynomial::from_roots(qs({0, 3})));
  EXPECT_EQ(code_of([&] { oracle_moment(zero, -2); }), Errc::NearZeroRoot);
}

TEST(Oracle, ChebyshevZeros) {
  for (unsigned n = 1; n <= 10; ++n) {
    const RootSet r = roots_numeric(classical_monic(FamilySpec::chebyshev_t(), n));
    std::vector<double> got;
    for (const auto& x : r.roots) got.push_back(x.real());
    std::sort(got.begin(), got.end());
    for (unsigned k = 1; k <= n; ++k) {
      EXPECT_NEAR(got[n - k], std::cos((2.0 * k - 1.0) * pi / (2.0 * n)), 1e-10) << "N=" << n;
    }
  }
}

TEST(Oracle, CosineMoments) {
  EXPECT_NEAR(chebyshev_cos_moment(2, 1), 0.5, 1e-15);
  EXPECT_EQ(chebyshev_cos_moment(1, 3), 0.0);
  EXPECT_NEAR(chebyshev_cos_moment(3, 3), 9.0 / 32.0, 1e-15);
  for (unsigned n = 1; n <= 10; ++n) {
    const auto t = classical_monic(FamilySpec::chebyshev_t(), n);
    for (unsigned l = 0; l <= 8; ++l) {
      EXPECT_NEAR(chebyshev_cos_moment(n, l), chebyshev_T_moments_explicit(n, l), 1e-10);
      EXPECT_NEAR(chebyshev_cos_moment(n, l), to_double(even_moment_parity(t, l)), 1e-12);
    }
  }
}

TEST(Oracle, AgreesWithGirard) {
  std::mt19937 rng(1111);
  for (int trial = 0; trial < 200; ++trial) {
    const auto roots = zmtest::random_integer_roots(rng, 1, 8, -9, 9);
    const auto p = MonicPolynomial::from_roots(roots);
    const RootSet r = roots_numeric(p);
    ASSERT_EQ(r.roots.size(), roots.size());
    for (int k = 0; k <= 12; ++k) {
      const double want = to_double(power_sum_moment(p, static_cast<unsigned>(k)));
      const double got = oracle_moment(r, k);
      const double scale = oracle_moment_scale(r, k);
      const double err = std::abs(got - want);
      EXPECT_TRUE(err <= 1e-12 || err <= 1e-9 * scale) << "trial " << trial << " r=" << k << " err " << err;
      EXPECT_NEAR(oracle_moment_complex(r, k).imag(), 0.0, 1e-9 * std::max(1.0, scale));
    }
    if (p.sigma(p.degree()) != 0) {
      for (int k = 1; k <= 6; ++k) {
        const double want = to_double(negative_moment(p, static_cast<unsigned>(k)));
        const double err = std::abs(oracle_moment(r, -k) - want);
        EXPECT_TRUE(err <= 1e-12 || err <= 1e-9 * oracle_moment_scale(r, -k)) << "trial " << trial << " r=-" << k;
      }
    }
  }
}
