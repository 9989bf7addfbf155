#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qdr {

// Named invariant suites. Each one samples or enumerates exact cases and
// returns a verdict plus the facts it established, as printable strings.
struct CheckOptions {
  std::uint64_t seed = 42;
  int dim = 0;         // restrict to one dimension where the suite allows it (0 = all)
  int n = 0;           // restrict to one half-dimension (0 = all)
  int truncation = 0;  // Fourier truncation N for torus suites (0 = suite default)
  int max_dim = 8;     // hard cap on the real dimension
  int scale = 1;       // divides the sample counts (for quick runs)
};

struct CheckResult {
  std::string suite;
  std::string title;
  bool pass = false;
  std::string summary;
  std::vector<std::pair<std::string, std::string>> facts;

  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
};

/// Suite names in acceptance order; suite k (1-based) is acceptance criterion k.
const std::vector<std::string>& available_suites();
bool is_suite(const std::string& name);
/// std::invalid_argument for unknown names (the message lists the known ones).
CheckResult run_check(const std::string& suite, const CheckOptions& opts = {});
CheckResult run_criterion(int id, const CheckOptions& opts = {});

}  // namespace qdr
