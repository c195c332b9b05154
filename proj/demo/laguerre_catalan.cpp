// Scaled Laguerre moments q_r(N) = m_r / N^r from the Case recurrence,
// approaching the Catalan numbers as N grows.

#include <iomanip>
#include <iostream>

#include "zeromoments/classical.hpp"
#include "zeromoments/limits.hpp"

int main() {
  const zm::FamilySpec ls = zm::FamilySpec::scaled_laguerre(zm::make_rational(1, 2));
  const unsigned max_r = 6;
  std::cout << std::setw(6) << "N";
  for (unsigned r = 0; r <= max_r; ++r) std::cout << std::setw(12) << ("q_" + std::to_string(r));
  std::cout << "\n";
  for (unsigned n : {1u, 2u, 5u, 10u, 100u, 1000u}) {
    const zm::MomentSequence q = zm::case_moments(ls, n, max_r);
    std::cout << std::setw(6) << n;
    for (const auto& v : q.values) std::cout << std::setw(12) << std::setprecision(6) << zm::to_double(v);
    std::cout << "\n";
  }
  std::cout << std::setw(6) << "limit";
  for (unsigned r = 0; r <= max_r; ++r) std::cout << std::setw(12) << zm::to_double(zm::limit_moment(ls, r));
  std::cout << "\n";
}
