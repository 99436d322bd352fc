#include <dirhyp/acceptance.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

// One line per criterion; exit status 1 when any fails.
// Optional arguments: criterion ids to run.
int main(int argc, char** argv) {
  dirhyp::AcceptanceOptions opt;
  if (const char* w = std::getenv("DIRHYP_WORKERS")) opt.workers = static_cast<unsigned>(std::stoul(w));
  else opt.workers = 4;
  for (int i = 1; i < argc; ++i) opt.only.emplace_back(argv[i]);
  bool all = true;
  for (const auto& r : dirhyp::run_acceptance(opt)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.detail << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
