// Acceptance suite: runs every verification suite at its pinned geometry
// (window knob 6) and prints one pass/fail line per criterion.  Exits
// non-zero if any law has a counterexample.

#include <cstdio>
#include <thread>

#include <bicyclic/bicyclic.hpp>

int main() {
  bicyclic::VerifyOptions opts;
  opts.window = 6;
  opts.jobs = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));

  auto const& catalog = bicyclic::suite_catalog();
  int failures = 0;
  std::size_t index = 1;
  for (auto const& info : catalog) {
    auto const result =
        bicyclic::run_suite<bicyclic::CheckedInt64>(info.key, opts);
    std::printf("[%2zu/%zu] %-12s %-52s %s  (%llu checks, %llu failures, %.2fs)\n",
                index++, catalog.size(), result.key.c_str(),
                result.title.c_str(), result.passed() ? "PASS" : "FAIL",
                static_cast<unsigned long long>(result.checks),
                static_cast<unsigned long long>(result.failures),
                result.seconds);
    for (auto const& sample : result.failure_samples) {
      std::printf("        %s\n", sample.c_str());
    }
    if (!result.passed()) {
      ++failures;
    }
  }
  std::printf("%s\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return failures == 0 ? 0 : 1;
}
