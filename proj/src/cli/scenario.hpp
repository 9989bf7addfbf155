#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/report.hpp"
#include "qdr/poisson.hpp"

namespace qdr::cli {

// Scenario files are JSON objects with the keys
//
//   model       "flat" | "torus" | "lie_poisson_so3" | "heisenberg" | "custom"
//   dim, n      real dimension / half-dimension (flat, torus); 3 for the R^3 models
//   truncation  Fourier bound N for tori (default 1)
//   omega       custom model: rows of "p/q" strings, nondegenerate and antisymmetric
//   seed        random seed for sampled suites (default 42)
//   tasks       list of {"task": <type>, ...}
//
// Task types and their keys (all optional unless noted):
//   product    expr (required)         evaluates an expression
//   power      expr, k (required)      (expr)^k with the quantum product
//   operator   op, expr (required)     op in d, delta, dh, L, K, Lstar, A, Lh, Lhstar, Ah, star, iota_w
//   spectrum   n, parity               Lefschetz matrix, characteristic polynomial, determinant
//   cohomology mode                    "laurent" (default) or "polynomial"; torus only
//   integral   expr (required)         quantum integral; torus only
//   chern      theta (required), N     connection: an expression or a square array of them
//   cpn_table  n                       ring structure constants of CP^n
//   <suite>    -                       any check suite name (see --list)
// Unknown keys are rejected.

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TaskSpec {
  std::string type;
  Json args;
};

struct Scenario {
  std::string model = "flat";
  int dim = 0;
  int n = 0;
  int truncation = 1;
  std::optional<RMatrix> omega;
  std::uint64_t seed = 42;
  std::vector<TaskSpec> tasks;
};

/// Parses and validates; ScenarioError carries line/column for syntax errors.
Scenario parse_scenario(const std::string& text, int max_dim = 8);
Scenario load_scenario(const std::string& path, int max_dim = 8);

PoissonModel build_model(const Scenario& s);
Report run_scenario(const Scenario& s);

/// QDR_MAX_DIM, default 8.
int max_dim_from_env();

}  // namespace qdr::cli
