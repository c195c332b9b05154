#pragma once

#include <random>
#include <vector>

#include "zeromoments/monic.hpp"
#include "zeromoments/rational.hpp"

namespace zmtest {

using zm::Rational;

inline Rational q(long long num, long long den = 1) { return zm::make_rational(num, den); }

inline std::vector<Rational> qs(std::initializer_list<Rational> v) { return std::vector<Rational>(v); }

/// Elementary symmetric functions by summing over all k-subsets.
inline std::vector<Rational> sigma_by_subsets(const std::vector<Rational>& roots) {
  const std::size_t n = roots.size();
  std::vector<Rational> e(n + 1, Rational(0));
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Rational prod = 1;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ul << i)) {
        prod *= roots[i];
        ++k;
      }
    }
    e[k] += prod;
  }
  return e;
}

/// (1/N) sum x_i^r, with x^-r for r < 0.
inline Rational root_power_mean(const std::vector<Rational>& roots, int r) {
  Rational sum = 0;
  for (const auto& x : roots) {
    Rational base = r >= 0 ? x : Rational(1) / x;
    Rational p = 1;
    for (int i = 0; i < std::abs(r); ++i) p *= base;
    sum += p;
  }
  return sum / Rational(static_cast<long long>(roots.size()));
}

inline std::vector<Rational> random_integer_roots(std::mt19937& rng, int min_degree, int max_degree, int lo, int hi) {
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  std::uniform_int_distribution<int> val(lo, hi);
  std::vector<Rational> roots(static_cast<std::size_t>(deg(rng)));
  for (auto& x : roots) x = val(rng);
  return roots;
}

inline Rational random_rational(std::mt19937& rng, int range = 20, int max_den = 9) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  return q(num(rng), den(rng));
}

}  // namespace zmtest
