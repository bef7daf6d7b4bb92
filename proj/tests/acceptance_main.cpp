#include <cstring>
#include <iostream>

#include "grothkit/acceptance.hpp"

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
int main(int argc, char** argv) {
  grothkit::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
    if (std::strcmp(argv[i], "--extended") == 0) options.extended = true;
  }
  int failed = 0;
  grothkit::run_acceptance(options, [&](const grothkit::CriterionResult& r) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << "  ("
              << r.detail << ")" << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (grothkit::kCriterionCount - failed) << "/" << grothkit::kCriterionCount
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
