// Acceptance suite: one PASS/FAIL line per criterion. Exit status 1 if any fails.
#include "flop/verify.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  flop::VerifyOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  double total = 0;
  for (const auto& r : flop::run_all(opt)) {
    std::printf("%s\n", flop::format_line(r).c_str());
    std::fflush(stdout);
    failed += !r.pass();
    total += r.seconds;
  }
  std::printf("%d/%d criteria passed in %.2f s\n", flop::kCriteria - failed, flop::kCriteria, total);
  return failed ? 1 : 0;
}
