// Runs the ten acceptance criteria and prints one line per criterion.

#include "weylhom/acceptance.hpp"

#include <iostream>

int main() {
  bool all = true;
  for (const auto& r : weylhom::run_acceptance()) {
    std::cout << weylhom::format_line(r) << "\n";
    all = all && r.passed();
  }
  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
