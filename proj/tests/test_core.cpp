#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "zeromoments/error.hpp"
#include "zeromoments/laurent.hpp"
#include "zeromoments/monic.hpp"
#include "zeromoments/rational.hpp"
#include "zeromoments/series.hpp"

using namespace zm;
using zmtest::q;

namespace {

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::EmptyInput;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), q(1, 2));
  EXPECT_EQ(parse_rational(" -7 "), q(-7));
  EXPECT_EQ(parse_rational("0.125"), q(1, 8));
  EXPECT_EQ(parse_rational("-1.5e-2"), q(-3, 200));
  EXPECT_EQ(parse_rational("2E3"), q(2000));
  EXPECT_EQ(parse_rational_list("1,0,-1/2"), zmtest::qs({1, 0, q(-1, 2)}));
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_EQ(error_code([] { parse_rational(""); }), Errc::EmptyInput);
  EXPECT_EQ(error_code([] { parse_rational("1/0"); }), Errc::InvalidParameter);
  EXPECT_EQ(error_code([] { parse_rational("abc"); }), Errc::InvalidParameter);
  EXPECT_EQ(error_code([] { parse_rational("1.2.3"); }), Errc::InvalidParameter);
  EXPECT_EQ(error_code([] { parse_rational_list("1,,2"); }), Errc::EmptyInput);
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(from_double(0.375), q(3, 8));
  EXPECT_EQ(from_double(-2.0), q(-2));
  EXPECT_EQ(to_double(from_double(0.1)), 0.1);
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(factorial(5), BigInt(120));
  EXPECT_EQ(binomial(6, 3), BigInt(20));
  EXPECT_EQ(ipow(Rational(0), 0u), Rational(1));
  EXPECT_EQ(ipow(q(-1, 2), 3u), q(-1, 8));
  EXPECT_TRUE(is_nonpositive_integer(Rational(-3)));
  EXPECT_FALSE(is_nonpositive_integer(q(-1, 2)));
}

TEST(MakeMonic, SignMap) {
  const auto p = make_monic(zmtest::qs({1, -3, 2}));
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ(std::vector<Rational>(p.sigmas().begin(), p.sigmas().end()), zmtest::qs({1, 3, 2}));
}

TEST(MakeMonic, NormalizesLeadingCoefficient) {
  const auto p = make_monic(zmtest::qs({2, 0, -1}));
  EXPECT_EQ(std::vector<Rational>(p.sigmas().begin(), p.sigmas().end()), zmtest::qs({1, 0, q(-1, 2)}));
}

TEST(MakeMonic, Errors) {
  EXPECT_EQ(error_code([] { make_monic(zmtest::qs({5})); }), Errc::InvalidDegree);
  EXPECT_EQ(error_code([] { make_monic(std::vector<Rational>{}); }), Errc::EmptyInput);
  EXPECT_EQ(error_code([] { make_monic(zmtest::qs({0, 1, 2})); }), Errc::ZeroLeadingCoefficient);
  EXPECT_EQ(error_code([] { MonicPolynomial::from_sigma(zmtest::qs({2, 1})); }), Errc::InvalidParameter);
}

TEST(MakeMonic, RoundTripAgainstSubsetExpansion) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> roots;
    std::uniform_int_distribution<int> deg(1, 7);
    for (int i = deg(rng); i > 0; --i) roots.push_back(zmtest::random_rational(rng));
    // expand prod (x - x_i) into leading-first coefficients by hand
    std::vector<Rational> coeffs{1};
    for (const auto& x : roots) {
      std::vector<Rational> next(coeffs.size() + 1, Rational(0));
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i] += coeffs[i];
        next[i + 1] -= x * coeffs[i];
      }
      coeffs = next;
    }
    const auto p = make_monic(coeffs);
    const auto want = zmtest::sigma_by_subsets(roots);
    EXPECT_EQ(std::vector<Rational>(p.sigmas().begin(), p.sigmas().end()), want);
    EXPECT_EQ(MonicPolynomial::from_roots(roots), p);
  }
}

TEST(ReversedE, Coefficients) {
  const auto t2 = MonicPolynomial::from_sigma(zmtest::qs({1, 0, q(-1, 2)}));
  const ExactSeries e = reversed_E(t2, 4);
  EXPECT_EQ(e, ExactSeries(zmtest::qs({1, 0, q(-1, 2), 0, 0})));
  const auto p = MonicPolynomial::from_sigma(zmtest::qs({1, 3, 2}));
  EXPECT_EQ(reversed_E(p, 2), ExactSeries(zmtest::qs({1, -3, 2})));
  EXPECT_EQ(reversed_E(p, 0), ExactSeries(zmtest::qs({1})));
}

TEST(ReversedE, VanishesBeyondDegree) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto roots = zmtest::random_integer_roots(rng, 1, 6, -5, 5);
    const auto e = reversed_E(MonicPolynomial::from_roots(roots), 12);
    for (std::size_t r = roots.size() + 1; r <= 12; ++r) EXPECT_EQ(e[r], 0);
  }
}

TEST(Parity, Examples) {
  EXPECT_EQ(parity_of(MonicPolynomial::from_sigma(zmtest::qs({1, 0, q(-1, 2)}))), Parity::Definite);
  EXPECT_EQ(parity_of(MonicPolynomial::from_sigma(zmtest::qs({1, 3, 2}))), Parity::None);
  EXPECT_EQ(parity_of(MonicPolynomial::from_sigma(zmtest::qs({1, 0, q(-1, 2), 0, q(1, 16)}))), Parity::Definite);
}

TEST(Parity, MatchesReflectionSymmetry) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> deg(1, 7);
    const int n = deg(rng);
    std::vector<Rational> sigma{1};
    const bool make_definite = trial % 2 == 0;
    for (int k = 1; k <= n; ++k) sigma.push_back(make_definite && k % 2 == 1 ? Rational(0) : zmtest::random_rational(rng));
    const auto p = MonicPolynomial::from_sigma(sigma);
    bool symmetric = true;
    for (int i = 0; i < 20; ++i) {
      const Rational x = zmtest::random_rational(rng);
      const Rational sign = n % 2 == 0 ? 1 : -1;
      symmetric = symmetric && evaluate(p, Rational(-x)) == sign * evaluate(p, x);
    }
    EXPECT_EQ(parity_of(p) == Parity::Definite, symmetric) << "trial " << trial;
  }
}

TEST(Evaluate, Examples) {
  const auto p = MonicPolynomial::from_sigma(zmtest::qs({1, 3, 2}));
  EXPECT_EQ(evaluate(p, Rational(1)), 0);
  EXPECT_EQ(evaluate(p, Rational(0)), 2);
  const auto t2 = MonicPolynomial::from_sigma(zmtest::qs({1, 0, q(-1, 2)}));
  EXPECT_NEAR(evaluate(t2, 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  const auto [v, dv] = evaluate_with_derivative(p, 3.0);
  EXPECT_DOUBLE_EQ(v, 2.0);
  EXPECT_DOUBLE_EQ(dv, 3.0);
}

TEST(MonicPolynomial, ReciprocalAndScaling) {
  const auto p = MonicPolynomial::from_roots(zmtest::qs({1, 2}));
  EXPECT_EQ(p.reciprocal(), MonicPolynomial::from_roots(zmtest::qs({1, q(1, 2)})));
  EXPECT_EQ(p.scaled_zeros(q(1, 2)), MonicPolynomial::from_roots(zmtest::qs({q(1, 2), 1})));
  EXPECT_EQ(error_code([] { MonicPolynomial::from_roots(zmtest::qs({0, 3})).reciprocal(); }), Errc::VanishingZero);
}

TEST(Series, ArithmeticTracksOrder) {
  const ExactSeries a(zmtest::qs({1, 1, 1, 1}));
  const ExactSeries b(zmtest::qs({1, -1, 0}));
  EXPECT_EQ((a + b).order(), 2u);
  EXPECT_EQ(a * b, ExactSeries(zmtest::qs({1, 0, 0})));
  EXPECT_EQ(a.derivative(), ExactSeries(zmtest::qs({1, 2, 3})));
  EXPECT_EQ(a.shifted(2).order(), 5u);
  EXPECT_EQ(a.times_polynomial({Rational(1), Rational(-1)}), ExactSeries(zmtest::qs({1, 0, 0, 0})));
}

TEST(Series, DivisionInvertsMultiplication) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> ca, cb;
    for (int i = 0; i <= 8; ++i) ca.push_back(zmtest::random_rational(rng));
    for (int i = 0; i <= 8; ++i) cb.push_back(zmtest::random_rational(rng));
    if (cb[0] == 0) cb[0] = 1;
    const ExactSeries a(ca), b(cb);
    EXPECT_EQ((a / b) * b, a);
  }
  EXPECT_EQ(error_code([] { ExactSeries(zmtest::qs({1, 1})) / ExactSeries(zmtest::qs({0, 1})); }), Errc::DomainError);
}

TEST(Series, SquareRoot) {
  ExactSeries one_minus_4z(zmtest::qs({1, -4, 0, 0, 0}));
  const ExactSeries s = series_sqrt(one_minus_4z);
  EXPECT_EQ(s * s, one_minus_4z);
  EXPECT_EQ(s, ExactSeries(zmtest::qs({1, -2, -2, -4, -10})));
  EXPECT_EQ(error_code([] { series_sqrt(ExactSeries(zmtest::qs({2, 1}))); }), Errc::DomainError);
}

TEST(Series, DerivativeOfOrderZeroThrows) {
  EXPECT_EQ(error_code([] { ExactSeries(zmtest::qs({1})).derivative(); }), Errc::OrderTooSmall);
}

TEST(Series, PartialSum) {
  const ExactSeries s(zmtest::qs({1, 2, 3}));
  EXPECT_DOUBLE_EQ(partial_sum(s, 0.5), 1.0 + 1.0 + 0.75);
}

TEST(Laurent, CanonicalTrimming) {
  const LaurentPolynomial p(-3, zmtest::qs({0, 0, 1, 2, 0}));
  EXPECT_EQ(p.min_degree(), -1);
  EXPECT_EQ(p.max_degree(), 0);
  EXPECT_TRUE(LaurentPolynomial(-2, zmtest::qs({0, 0})).is_zero());
  EXPECT_EQ(p.coefficient(0), 2);
  EXPECT_EQ(p.coefficient(5), 0);
}

TEST(Laurent, Arithmetic) {
  // U = z^-2 - 1/2
  const LaurentPolynomial u(-2, zmtest::qs({1, 0, q(-1, 2)}));
  EXPECT_EQ(u.derivative(), LaurentPolynomial::monomial(-2, -3));
  EXPECT_EQ(u.derivative().derivative(), LaurentPolynomial::monomial(6, -4));
  EXPECT_TRUE((u - u).is_zero());
  const LaurentPolynomial z2 = LaurentPolynomial::monomial(1, 2);
  EXPECT_EQ(z2 * u, laurent_from_ascending({Rational(1), Rational(0), q(-1, 2)}));
  EXPECT_EQ(q(2) * u, LaurentPolynomial(-2, zmtest::qs({2, 0, -1})));
}
