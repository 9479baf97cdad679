#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "brauer/suites.hpp"

using namespace brauer;

int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "-v") == 0 || std::strcmp(argv[i], "--verbose") == 0) verbose = true;
  }

  SuiteOptions opt;
  opt.extended = true;
  int failed = 0;
  int index = 0;
  for (const auto& suite : suites()) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    const Report report = suite.run(opt);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = all_pass(report);
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s (%zu checks, %.2fs)\n", pass ? "PASS" : "FAIL", index, suite.title.c_str(),
                report.size(), seconds);
    for (const auto& c : report) {
      if (!c.pass || verbose) {
        std::printf("    %s %s: expected %s, computed %s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(),
                    c.expected.c_str(), c.computed.c_str());
      }
    }
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria failed\n", failed, index);
  return failed == 0 ? 0 : 1;
}
