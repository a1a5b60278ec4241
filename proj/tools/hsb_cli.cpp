#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "hsb.h"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Settings {
  std::vector<int> rank{1, 1};
  int epsilon = -1;
  int trials = 50;
  uint64_t seed = 42;
  double tol = 1e-9;
  std::string json_path;
  std::string datum_path;
  bool quiet = false;
};

int report_error(hsb_status status) {
  std::fprintf(stderr, "hsb: %s: %s\n", hsb_status_string(status), hsb_last_error());
  return status == HSB_ERR_INTERNAL ? exit_fail : exit_usage;
}

int finish(const Settings& cfg, hsb_report* report) {
  if (!cfg.quiet) {
    const size_t n = hsb_report_check_count(report);
    for (size_t k = 0; k < n; ++k) {
      const char* name = nullptr;
      double residual = 0.0;
      double tolerance = 0.0;
      int pass = 0;
      hsb_report_check(report, k, &name, &residual, &tolerance, &pass);
      std::printf("%-4s %-40s residual %.3e  tol %.1e\n", pass ? "ok" : "FAIL", name, residual, tolerance);
    }
    std::printf("%s\n", hsb_report_passed(report) ? "PASS" : "FAIL");
  }
  int code = hsb_report_passed(report) ? exit_pass : exit_fail;
  if (!cfg.json_path.empty()) {
    const hsb_status st = hsb_report_write(report, cfg.json_path.c_str());
    if (st != HSB_OK) code = report_error(st);
  }
  hsb_report_free(report);
  return code;
}

template <class Run>
int with_datum(const Settings& cfg, Run&& run) {
  hsb_datum* datum = nullptr;
  hsb_status st = hsb_datum_load(cfg.datum_path.c_str(), &datum);
  if (st != HSB_OK) return report_error(st);
  hsb_report* report = nullptr;
  st = run(datum, &report);
  hsb_datum_free(datum);
  if (st != HSB_OK) return report_error(st);
  return finish(cfg, report);
}

void add_common(CLI::App* cmd, Settings& cfg) {
  cmd->add_option("--tol", cfg.tol, "absolute tolerance, scaled by (1 + input norm)")->check(CLI::PositiveNumber);
  cmd->add_option("--json", cfg.json_path, "write the report as JSON to PATH");
  cmd->add_flag("--quiet", cfg.quiet, "suppress the per-check listing");
}

void add_epsilon(CLI::App* cmd, Settings& cfg) {
  cmd->add_option("--epsilon", cfg.epsilon, "curvature sign: -1 noncompact, 0 flat, 1 compact")
      ->check(CLI::IsMember({-1, 0, 1}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan-triple calculus and invariant bundle classification checks"};
  app.require_subcommand(1);
  Settings cfg;

  auto* verify = app.add_subcommand("verify", "run the seeded identity battery on C^{r x s}");
  verify->add_option("--rank", cfg.rank, "matrix shape R S")->expected(2);
  verify->add_option("--trials", cfg.trials, "random samples per check");
  verify->add_option("--seed", cfg.seed, "PRNG seed");
  add_common(verify, cfg);

  auto* classify = app.add_subcommand("classify", "check a classification datum for one curvature sign");
  classify->add_option("datum", cfg.datum_path, "datum JSON file")->required();
  add_epsilon(classify, cfg);
  add_common(classify, cfg);

  auto* dualize = app.add_subcommand("dualize", "compare verdicts across all three curvature signs");
  dualize->add_option("datum", cfg.datum_path, "datum JSON file")->required();
  add_common(dualize, cfg);

  auto* curvature = app.add_subcommand("curvature", "tabulate base-point curvature forms of a datum");
  curvature->add_option("datum", cfg.datum_path, "datum JSON file")->required();
  add_epsilon(curvature, cfg);
  add_common(curvature, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (verify->parsed()) {
    hsb_report* report = nullptr;
    const hsb_status st = hsb_verify(cfg.rank[0], cfg.rank[1], cfg.trials, cfg.seed, cfg.tol, &report);
    if (st != HSB_OK) return report_error(st);
    return finish(cfg, report);
  }
  if (classify->parsed())
    return with_datum(cfg, [&](hsb_datum* d, hsb_report** out) { return hsb_classify(d, cfg.epsilon, cfg.tol, out); });
  if (dualize->parsed())
    return with_datum(cfg, [&](hsb_datum* d, hsb_report** out) { return hsb_dualize(d, cfg.tol, out); });
  return with_datum(cfg, [&](hsb_datum* d, hsb_report** out) { return hsb_curvature(d, cfg.epsilon, cfg.tol, out); });
}
