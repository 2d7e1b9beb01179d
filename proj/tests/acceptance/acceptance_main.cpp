#include <iostream>

#include "brokenstick/cli/acceptance.hpp"

int main() {
  using namespace brokenstick::cli::acceptance;
  const auto results = run_all(Options{.quick = false, .seed = kAcceptanceSeed}, std::cout);
  return all_passed(results) ? 0 : 1;
}
