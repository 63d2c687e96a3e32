#include "epibohm/reports.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "epibohm/geometry.hpp"
#include "epibohm/model.hpp"
#include "epibohm/solver.hpp"

namespace epibohm::reports {

namespace {

Json envelope(const char* command, Json inputs, Json outputs, Json seed = nullptr) {
  Json report;
  report["command"] = command;
  report["inputs"] = std::move(inputs);
  report["outputs"] = std::move(outputs);
  report["versions"] = versions();
  report["seed"] = std::move(seed);
  return report;
}

Json cells_object(const std::array<double, 4>& values) {
  Json object;
  for (Outcome o : kOutcomes) object[to_label(o)] = values[index_of(o)];
  return object;
}

Json probability_row(double theta, const JointDistribution& joint) {
  Json row;
  row["theta"] = theta;
  row["p"] = cells_object(joint.values());
  return row;
}

const char* estimator_name(estimation::EstimatorKind kind) {
  using estimation::EstimatorKind;
  switch (kind) {
    case EstimatorKind::CellPP: return "pp";
    case EstimatorKind::CellMM: return "mm";
    case EstimatorKind::CellPM: return "pm";
    case EstimatorKind::CellMP: return "mp";
    case EstimatorKind::PooledMLE: return "mle";
  }
  return "?";
}

}  // namespace

Json versions() {
  Json v;
  v["epibohm"] = kLibraryVersion;
  v["schema"] = kSchemaVersion;
  return v;
}

Json probabilities_report(int n, double theta, int grid_points) {
  const SpinModel model(n);
  Json rows = Json::array();
  if (grid_points > 0) {
    for (int k = 0; k < grid_points; ++k) {
      const double t = kTwoPi * k / grid_points;
      rows.push_back(probability_row(t, model::joint_distribution(Angle(t), model)));
    }
  } else {
    const Angle angle(theta);
    rows.push_back(probability_row(angle.radians(), model::joint_distribution(angle, model)));
  }

  Json inputs;
  inputs["n"] = n;
  if (grid_points > 0)
    inputs["grid_points"] = grid_points;
  else
    inputs["theta"] = theta;

  Json outputs;
  outputs["rows"] = std::move(rows);
  return envelope("probabilities", std::move(inputs), std::move(outputs));
}

Json solve_report(int n) {
  const solver::ConstantSolveResult constants = solver::solve_amplitude_constants(n);
  const SpinModel model(n);

  // Worst principle residuals of the solved amplitudes over a check grid.
  double structural = 0.0, euler = 0.0;
  for (int k = 0; k < 128; ++k) {
    const Angle t(kTwoPi * k / 128);
    for (double r : solver::structural_principle_residual(t, model))
      structural = std::max(structural, std::fabs(r));
    for (double r : solver::euler_lagrange_residual(t, model))
      euler = std::max(euler, std::fabs(r));
  }

  Json inputs;
  inputs["n"] = n;

  Json outputs;
  outputs["B"] = cells_object(constants.B);
  outputs["C"] = cells_object(constants.C);
  outputs["a"] = solver::admissible_a(n);
  outputs["a_squared"] = -4.0 / (static_cast<double>(n) * n);
  outputs["constraint_residual"] = constants.residual;
  outputs["structural_residual_max"] = structural;
  outputs["euler_lagrange_residual_max"] = euler;
  return envelope("solve", std::move(inputs), std::move(outputs));
}

Json metric_report(int n, int grid_points) {
  const SpinModel model(n);
  const auto [lo, hi] =
      geometry::metric_constancy_scan(geometry::epr_curve(model), grid_points);

  Json inputs;
  inputs["n"] = n;
  inputs["grid_points"] = grid_points;

  Json outputs;
  outputs["min"] = lo;
  outputs["max"] = hi;
  outputs["spread"] = hi - lo;
  outputs["fisher_information"] = model::fisher_information_closed(model);
  return envelope("metric", std::move(inputs), std::move(outputs));
}

Json simulate_report(int n, double theta, std::uint64_t samples, std::uint64_t seed) {
  const SpinModel model(n);
  const Angle angle(theta);
  const estimation::OuterSample s = estimation::sample(angle, model, samples, seed);
  const estimation::FrequencyVector freq = estimation::frequencies(s);

  Json inputs;
  inputs["n"] = n;
  inputs["theta"] = theta;
  inputs["samples"] = samples;

  Json counts, lambda;
  for (Outcome o : kOutcomes) {
    counts[to_label(o)] = s.counts[index_of(o)];
    lambda[to_label(o)] = freq.lambda_hat[index_of(o)];
  }
  Json outputs;
  outputs["counts"] = std::move(counts);
  outputs["frequencies"] = std::move(lambda);
  return envelope("simulate", std::move(inputs), std::move(outputs), seed);
}

Json estimate_report(int n, double theta, std::uint64_t samples, std::uint64_t seed,
                     estimation::EstimatorKind kind) {
  const SpinModel model(n);
  const Angle angle(theta);
  const estimation::OuterSample s = estimation::sample(angle, model, samples, seed);
  const estimation::EstimationReport report = estimation::estimate_report(s, kind);

  Json inputs;
  inputs["n"] = n;
  inputs["theta"] = theta;
  inputs["samples"] = samples;
  inputs["estimator"] = estimator_name(kind);

  Json outputs;
  outputs["theta_hat"] = report.theta_hat;
  outputs["std_error"] = report.std_error;
  outputs["lrcb"] = report.lrcb;
  outputs["ci_low"] = report.ci_low;
  outputs["ci_high"] = report.ci_high;
  outputs["branch_endpoint"] = report.branch_endpoint;
  return envelope("estimate", std::move(inputs), std::move(outputs), seed);
}

std::string probabilities_csv(int n, double theta, int grid_points) {
  const SpinModel model(n);
  std::string csv = "theta,p_pp,p_mm,p_pm,p_mp\n";
  char line[192];
  auto append_row = [&](double t) {
    const JointDistribution joint = model::joint_distribution(Angle(t), model);
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g\n", t,
                  joint[Outcome::PP], joint[Outcome::MM], joint[Outcome::PM],
                  joint[Outcome::MP]);
    csv += line;
  };
  if (grid_points > 0) {
    for (int k = 0; k < grid_points; ++k) append_row(kTwoPi * k / grid_points);
  } else {
    append_row(Angle(theta).radians());
  }
  return csv;
}

std::string serialize(const Json& report) { return report.dump(2) + "\n"; }

std::optional<estimation::EstimatorKind> estimator_from_name(const std::string& name) {
  using estimation::EstimatorKind;
  if (name == "pp") return EstimatorKind::CellPP;
  if (name == "mm") return EstimatorKind::CellMM;
  if (name == "pm") return EstimatorKind::CellPM;
  if (name == "mp") return EstimatorKind::CellMP;
  if (name == "mle") return EstimatorKind::PooledMLE;
  return std::nullopt;
}

}  // namespace epibohm::reports
