// One line per criterion; exits non-zero if any criterion fails.
//   acceptance [--seed N] [--golden-dir DIR] [--only ID]...

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "mu2forge/acceptance.hpp"

int main(int argc, char** argv) {
  mu2forge::AcceptanceConfig cfg;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (i + 1 >= argc) {
      std::cerr << "missing value for " << a << "\n";
      return 2;
    }
    if (a == "--seed") cfg.seed = std::stoull(argv[++i]);
    else if (a == "--golden-dir") cfg.golden_dir = argv[++i];
    else if (a == "--only") only.push_back(std::stoi(argv[++i]));
    else {
      std::cerr << "unknown argument " << a << "\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto& r : mu2forge::run_acceptance(cfg, only)) {
    std::cout << mu2forge::format_line(r) << std::endl;
    for (std::size_t k = 1; k < r.failures.size() && k < 10; ++k) std::cout << "    " << r.failures[k] << "\n";
    failed += !r.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
