// Acceptance gate. Runs the full verification suite against the bundled
// corpus and prints one line per criterion; any failure makes the process
// exit nonzero.
//
// Usage: acceptance [--corpus DIR]

#include <cstdio>
#include <cstring>
#include <string>

#include "leibniz/verify.hpp"

int main(int argc, char** argv) {
  std::string dir = "corpus";
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--corpus") && i + 1 < argc) {
      dir = argv[++i];
    } else {
      std::fprintf(stderr, "usage: acceptance [--corpus DIR]\n");
      return 2;
    }
  }

  const leibniz::VerifyReport rep = leibniz::verify_paper(dir);
  std::size_t criterion = 0;
  std::size_t passed = 0;
  for (const auto& c : rep.checks) {
    std::string label;
    if (criterion == 0)
      label = "corpus";
    else
      label = "criterion " + std::to_string(criterion);
    std::printf("[%s] %s %s: %s\n",
                c.status == leibniz::CheckResult::Status::pass      ? "PASS"
                : c.status == leibniz::CheckResult::Status::skipped ? "SKIP"
                                                                    : "FAIL",
                label.c_str(), c.id.c_str(), c.details.c_str());
    if (c.status == leibniz::CheckResult::Status::pass) ++passed;
    ++criterion;
  }
  std::printf("%zu/%zu checks passed\n", passed, rep.checks.size());
  return rep.all_passed() ? 0 : 1;
}
