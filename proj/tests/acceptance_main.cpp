#include <iostream>

#include "zeromoments/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& result : zm::acceptance::run_acceptance()) {
    std::cout << zm::acceptance::format_line(result) << "\n";
    if (!result.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
