// Runs every acceptance suite once and prints one line per criterion.
// The exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>

#include "qdr/checks.hpp"

int main() {
  const auto& suites = qdr::available_suites();
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int id = 1; id <= static_cast<int>(suites.size()); ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string title = suites[id - 1], summary;
    try {
      const auto r = qdr::run_criterion(id);
      pass = r.pass;
      title = r.title;
      summary = r.summary;
    } catch (const std::exception& e) {
      summary = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !pass;
    std::printf("%s %2d %-28s %6.2fs  %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), secs, summary.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1fs\n", static_cast<int>(suites.size()) - failed, suites.size(), total);
  return failed == 0 ? 0 : 1;
}
