// Runs the acceptance checklist and prints one line per criterion.
// Usage: acceptance_main [--quick] [path-to-cli]
#include <cstdio>
#include <cstring>
#include <string>

#include "rblab/acceptance.hpp"

int main(int argc, char** argv) {
  bool quick = false;
  std::string cli_path;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      quick = true;
    } else {
      cli_path = argv[i];
    }
  }

  auto results = rblab::run_acceptance(quick, cli_path);
  int passed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    std::printf("[%2d/10] %s %s: %s [%.2fs]\n", r.id, r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.details.c_str(), r.seconds);
  }
  std::printf("acceptance: %d/10 criteria passed\n", passed);
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
