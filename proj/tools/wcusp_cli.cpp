// Batch front-end: parse parameters, run the selected verification suite,
// emit a text or JSON report. Exit status 0 iff no check failed; malformed
// input exits 2 with a specific diagnostic.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wcusp/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "wcusp: exact construction of gl_n modules, their W-algebra structure, "
      "and truncated cuspidal realizations over sl_{n+1}"};

  wcusp::RunConfig cfg;
  std::string lambda_str, mu_str;
  app.add_option("--n", cfg.n, "rank of gl_n (2..4)")->default_val(2)->check(CLI::Range(2, 4));
  app.add_option("--lambda", lambda_str,
                 "highest weight, comma-separated rationals p/q (default 1,0,...,0)");
  app.add_option("--mu", mu_str, "weight support base, comma-separated rationals p/q");
  app.add_option("--radius", cfg.radius, "lattice box radius for cuspidal suites")->default_val(3);
  app.add_option("--suite", cfg.suite, "identities | glrep | wstructure | cuspidal | all")
      ->default_val("all")
      ->check(CLI::IsMember({"identities", "glrep", "wstructure", "cuspidal", "all"}));
  app.add_option("--format", cfg.format, "text | json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for randomized property sweeps")->default_val(0);
  std::string out_file;
  app.add_option("--out", out_file, "write the report to FILE as well as stdout");

  CLI11_PARSE(app, argc, argv);

  if (!lambda_str.empty()) {
    auto parsed = wcusp::parse_rat_list(lambda_str);
    if (!parsed) {
      std::cerr << "error: malformed rational list for --lambda: '" << lambda_str
                << "' (expected p or p/q, comma-separated)\n";
      return 2;
    }
    cfg.lambda = std::move(*parsed);
  }
  if (!mu_str.empty()) {
    auto parsed = wcusp::parse_rat_list(mu_str);
    if (!parsed) {
      std::cerr << "error: malformed rational list for --mu: '" << mu_str
                << "' (expected p or p/q, comma-separated)\n";
      return 2;
    }
    cfg.mu = std::move(*parsed);
  }
  if (cfg.lambda && static_cast<int>(cfg.lambda->size()) != cfg.n) {
    std::cerr << "error: --lambda must have exactly " << cfg.n << " entries\n";
    return 2;
  }
  if (cfg.mu && static_cast<int>(cfg.mu->size()) != cfg.n) {
    std::cerr << "error: --mu must have exactly " << cfg.n << " entries\n";
    return 2;
  }
  const bool builds_module = cfg.suite != "identities";
  if (builds_module && cfg.lambda && !wcusp::is_dominant(*cfg.lambda)) {
    std::cerr << "error: non-dominant highest weight " << wcusp::weight_str(*cfg.lambda)
              << " (consecutive differences must be non-negative integers)\n";
    return 2;
  }
  const bool runs_cuspidal = cfg.suite == "cuspidal" || cfg.suite == "all";
  if (runs_cuspidal && cfg.radius < 3) {
    std::cerr << "error: radius " << cfg.radius
              << " too small for the cuspidal suite (need >= 3 for a nonempty interior)\n";
    return 2;
  }
  if (!out_file.empty()) cfg.out = out_file;

  wcusp::SuiteReport report = wcusp::run_config(cfg);
  std::string body;
  if (cfg.format == "json") {
    body = wcusp::suite_report_json(report).dump(2);
    body += "\n";
  } else {
    body = wcusp::suite_report_text(report);
  }
  std::cout << body;
  if (cfg.out) {
    std::ofstream f(*cfg.out);
    if (!f) {
      std::cerr << "error: cannot open output file '" << *cfg.out << "'\n";
      return 2;
    }
    f << body;
  }
  return report.violations() == 0 ? 0 : 1;
}
