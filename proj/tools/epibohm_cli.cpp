// epibohm command line: probability tables, the variational solve, metric
// scans, deterministic sampling, estimation, and the acceptance suite.
// Machine-readable results go to stdout as JSON (CSV for tables on request);
// argument errors exit 2, domain errors exit 1 with a structured record on
// stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "epibohm/errors.hpp"
#include "epibohm/reports.hpp"
#include "epibohm/types.hpp"
#include "epibohm/verify.hpp"

namespace {

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const epibohm::UnsupportedModelError*>(&e)) return "unsupported-model";
  if (dynamic_cast<const epibohm::SingularCellError*>(&e)) return "singular-cell";
  if (dynamic_cast<const epibohm::BoundaryError*>(&e)) return "boundary-of-simplex";
  if (dynamic_cast<const epibohm::SingularBranchError*>(&e)) return "singular-branch";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid-argument";
  if (dynamic_cast<const std::domain_error*>(&e)) return "domain-error";
  return "error";
}

struct CommonArgs {
  int n = 1;
  double theta = 0.0;
  bool degrees = false;
  std::string output;
};

double theta_radians(const CommonArgs& args) {
  return args.degrees ? args.theta * epibohm::kPi / 180.0 : args.theta;
}

void write_result(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + output_path);
  out << text;
}

void add_model_option(CLI::App* cmd, CommonArgs& args) {
  // Validity of n is a domain rule (SpinModel throws), not flag syntax, so an
  // unsupported quantum number reports as a structured error with exit 1.
  cmd->add_option("--n", args.n, "quantum number (+/-1 spin-1/2, +/-2 spin-1)")->required();
}

void add_theta_options(CLI::App* cmd, CommonArgs& args, bool required = true) {
  auto* opt = cmd->add_option("--theta", args.theta, "relative analyzer angle");
  if (required) opt->required();
  cmd->add_flag("--degrees", args.degrees, "interpret --theta in degrees");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epibohm: information analysis of the two-particle spin correlation model"};
  app.set_version_flag("--version", std::string("epibohm ") + epibohm::reports::kLibraryVersion);
  app.require_subcommand(1);

  CommonArgs args;
  int grid_points = 0;    // probabilities: 0 means single angle
  int metric_grid = 512;  // metric scan resolution
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string estimator = "mle";
  std::string result;

  auto* probabilities = app.add_subcommand(
      "probabilities", "joint outcome probabilities at one angle or on a grid");
  add_model_option(probabilities, args);
  add_theta_options(probabilities, args, /*required=*/false);
  probabilities->add_option("--grid", grid_points,
                            "emit a table on this many grid angles over [0, 2pi)")
      ->check(CLI::NonNegativeNumber);
  probabilities->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  probabilities->add_option("--output", args.output, "write to file instead of stdout");
  probabilities->callback([&] {
    result = format == "csv"
                 ? epibohm::reports::probabilities_csv(args.n, theta_radians(args), grid_points)
                 : epibohm::reports::serialize(epibohm::reports::probabilities_report(
                       args.n, theta_radians(args), grid_points));
  });

  auto* solve = app.add_subcommand("solve", "amplitude constants from the information principles");
  add_model_option(solve, args);
  solve->add_option("--output", args.output, "write to file instead of stdout");
  solve->callback([&] {
    result = epibohm::reports::serialize(epibohm::reports::solve_report(args.n));
  });

  auto* metric = app.add_subcommand("metric", "constancy scan of the induced Rao-Fisher metric");
  add_model_option(metric, args);
  // capture_default_str, not default_val: the latter assigns through the bound
  // pointer at option construction and would leak into other subcommands.
  metric->add_option("--grid", metric_grid, "scan grid size")->capture_default_str();
  metric->add_option("--output", args.output, "write to file instead of stdout");
  metric->callback([&] {
    result = epibohm::reports::serialize(epibohm::reports::metric_report(args.n, metric_grid));
  });

  auto* simulate = app.add_subcommand("simulate", "draw outcome counts with the deterministic stream");
  add_model_option(simulate, args);
  add_theta_options(simulate, args);
  simulate->add_option("--samples", samples, "number of draws")->capture_default_str();
  simulate->add_option("--seed", seed, "stream seed")->required();
  simulate->add_option("--output", args.output, "write to file instead of stdout");
  simulate->callback([&] {
    result = epibohm::reports::serialize(
        epibohm::reports::simulate_report(args.n, theta_radians(args), samples, seed));
  });

  auto* estimate = app.add_subcommand("estimate", "estimate the angle from a sampled experiment");
  add_model_option(estimate, args);
  add_theta_options(estimate, args);
  estimate->add_option("--samples", samples, "number of draws")->capture_default_str();
  estimate->add_option("--seed", seed, "stream seed")->required();
  estimate->add_option("--estimator", estimator, "pp, mm, pm, mp, or mle")
      ->check(CLI::IsMember({"pp", "mm", "pm", "mp", "mle"}));
  estimate->add_option("--output", args.output, "write to file instead of stdout");
  estimate->callback([&] {
    const auto kind = epibohm::reports::estimator_from_name(estimator);
    result = epibohm::reports::serialize(epibohm::reports::estimate_report(
        args.n, theta_radians(args), samples, seed, *kind));
  });

  int verify_failures = 0;
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->callback([&] { verify_failures = epibohm::verify::run_and_report(std::cout); });

  try {
    app.parse(argc, argv);
    if (!result.empty()) write_result(result, args.output);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean; any usage error is 2
  } catch (const std::exception& e) {
    epibohm::reports::Json record;
    record["error"]["type"] = error_kind(e);
    record["error"]["message"] = e.what();
    std::cerr << record.dump(2) << '\n';
    return 1;
  }
  return verify_failures == 0 ? 0 : 1;
}
