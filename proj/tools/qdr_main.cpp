// Command-line driver: runs a scenario file or a single check suite.
//
// Exit status: 0 when every check passes, 1 when a check fails,
// 2 for usage errors, malformed scenarios and unknown suites.

#include <CLI11.hpp>

#include <iostream>

#include "cli/report.hpp"
#include "cli/scenario.hpp"

namespace {

void list_suites(std::ostream& os) {
  os << "available suites:";
  for (const auto& s : qdr::available_suites()) os << " " << s;
  os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qdr::cli;

  CLI::App app{"Exact computations with quantum differential forms"};
  std::string scenario_path, suite, format = "text";
  qdr::CheckOptions opts;
  bool list = false;

  auto* scen = app.add_option("--scenario", scenario_path, "JSON scenario file")->check(CLI::ExistingFile);
  auto* check = app.add_option("--check", suite, "run one named check suite");
  scen->excludes(check);
  app.add_option("--dim", opts.dim, "restrict a suite to one real dimension")->check(CLI::Range(1, 16));
  app.add_option("--n", opts.n, "restrict a suite to one half-dimension")->check(CLI::Range(1, 8));
  app.add_option("--truncation", opts.truncation, "Fourier truncation for torus suites")->check(CLI::Range(0, 8));
  app.add_option("--seed", opts.seed, "random seed for sampled suites");
  app.add_option("--scale", opts.scale, "divide sample counts (quick runs)")->check(CLI::Range(1, 1000));
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--list", list, "list the check suites and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (list) {
    list_suites(std::cout);
    return 0;
  }
  if (scenario_path.empty() && suite.empty()) {
    std::cerr << "error: give --scenario FILE or --check SUITE\n" << app.help();
    return 2;
  }

  Report report;
  try {
    const int max_dim = max_dim_from_env();
    if (!scenario_path.empty()) {
      report = run_scenario(load_scenario(scenario_path, max_dim));
    } else {
      if (!qdr::is_suite(suite)) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        list_suites(std::cerr);
        return 2;
      }
      opts.max_dim = max_dim;
      const auto r = qdr::run_check(suite, opts);
      report.tasks.push_back(TaskResult{suite, r.pass, check_to_json(r)});
    }
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << (format == "machine" ? emit_machine(report) : emit_text(report));
  return report.ok() ? 0 : 1;
}
