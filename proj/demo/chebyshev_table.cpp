// Prints m_2, m_4, m_6 of the Chebyshev-T zeros for N = 1..8, next to the
// N -> infinity values, showing where small N departs from the stable value.

#include <iomanip>
#include <iostream>

#include "zeromoments/classical.hpp"
#include "zeromoments/girard.hpp"
#include "zeromoments/limits.hpp"

int main() {
  const zm::FamilySpec t = zm::FamilySpec::chebyshev_t();
  std::cout << std::left << std::setw(6) << "N" << std::setw(8) << "m_2" << std::setw(8) << "m_4" << "m_6\n";
  for (unsigned n = 1; n <= 8; ++n) {
    const zm::MonicPolynomial p = zm::classical_monic(t, n);
    std::cout << std::setw(6) << n;
    for (unsigned r = 2; r <= 6; r += 2) std::cout << std::setw(8) << zm::to_string(zm::power_sum_moment(p, r));
    std::cout << "\n";
  }
  std::cout << std::setw(6) << "inf";
  for (unsigned r = 2; r <= 6; r += 2) std::cout << std::setw(8) << zm::to_string(zm::limit_moment(t, r));
  std::cout << "\n";
}
