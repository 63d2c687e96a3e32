#include "epibohm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "epibohm/estimation.hpp"
#include "epibohm/geometry.hpp"
#include "epibohm/model.hpp"
#include "epibohm/reports.hpp"
#include "epibohm/solver.hpp"
#include "epibohm/types.hpp"

namespace epibohm::verify {

namespace {

const std::vector<int> kQuantumNumbers = {1, -1, 2, -2};

std::string format(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

/// Uniform angle in [0, 2 pi) from the deterministic stream.
double random_angle(std::uint64_t seed, std::uint64_t index) {
  return estimation::stream_uniform01(seed, index) * kTwoPi;
}

/// Angle whose four cells all stay above `floor` for the given model; angles
/// within ~1e-4 rad of a cell zero are rejected (there the log/ratio forms
/// are effectively singular).
double random_regular_angle(std::uint64_t seed, std::uint64_t& index, const SpinModel& model,
                            double floor) {
  for (;;) {
    const double t = random_angle(seed, index++);
    bool ok = true;
    for (Outcome o : kOutcomes)
      ok = ok && model::probability(o, Angle(t), model) > floor;
    if (ok) return t;
  }
}

// --------------------------------------------------------------------------
// Criterion bodies: each returns pass/fail and fills a short detail string.
// --------------------------------------------------------------------------

bool criterion_probability_table(std::string& detail) {
  // Boundary values must be bit-exact, not merely close.
  for (int n : kQuantumNumbers) {
    const SpinModel model(n);
    if (model::probability(Outcome::PP, Angle(0.0), model) != 0.0) return false;
    if (model::probability(Outcome::MM, Angle(0.0), model) != 0.0) return false;
    if (model::probability(Outcome::PM, Angle(0.0), model) != 0.5) return false;
    if (model::probability(Outcome::MP, Angle(0.0), model) != 0.5) return false;
  }
  for (int n : {1, -1}) {
    const SpinModel model(n);
    if (model::probability(Outcome::PM, Angle(kPi), model) != 0.0) return false;
    if (model::probability(Outcome::PP, Angle(kPi), model) != 0.5) return false;
  }
  for (int n : {2, -2}) {
    const SpinModel model(n);
    if (model::probability(Outcome::PM, Angle(kPi / 2), model) != 0.0) return false;
    if (model::probability(Outcome::PP, Angle(kPi / 2), model) != 0.5) return false;
  }

  // Normalization and range over 1000 random angles per model.
  double worst = 0.0;
  for (int n : kQuantumNumbers) {
    const SpinModel model(n);
    for (std::uint64_t k = 0; k < 1000; ++k) {
      const Angle theta(random_angle(0xC1u ^ static_cast<std::uint64_t>(n + 8), k));
      const JointDistribution joint = model::joint_distribution(theta, model);
      worst = std::max(worst, std::fabs(joint.sum() - 1.0));
      for (Outcome o : kOutcomes)
        if (joint[o] < 0.0 || joint[o] > 0.5) return false;
    }
  }
  detail = format("max |sum P - 1| = %.3g", worst);
  return worst <= 1e-12;
}

bool criterion_fisher_constancy(std::string& detail) {
  const std::array<model::FisherForm, 3> forms = {
      model::FisherForm::Analytical, model::FisherForm::Metric, model::FisherForm::Epi};
  double worst = 0.0;
  for (int n : kQuantumNumbers) {
    const SpinModel model(n);
    std::uint64_t index = 0;
    for (int k = 0; k < 100; ++k) {
      const double t = random_regular_angle(0xC2u, index, model, 1e-8);
      for (model::FisherForm form : forms) {
        const double info = model::fisher_information_numeric(Angle(t), model, form, 1e-4);
        worst = std::max(worst, std::fabs(info - model.n_squared()));
      }
    }
  }
  detail = format("max |I_F - n^2| = %.3g", worst);
  return worst <= 1e-6;
}

bool criterion_capacity(std::string& detail) {
  double worst_capacity = 0.0, worst_norm = 0.0, worst_budget = 0.0;
  for (int n : kQuantumNumbers) {
    const SpinModel model(n);
    const double capacity = model::channel_capacity(model, 1024);
    worst_capacity = std::max(worst_capacity, std::fabs(capacity - kTwoPi * model.n_squared()));
    for (Outcome o : kOutcomes)
      worst_norm = std::max(
          worst_norm, std::fabs(model::amplitude_norm_integral(o, model, 1024) - kTwoPi));
    const InformationBudget budget = model::information_budget(model, 1024);
    worst_budget = std::max(worst_budget, std::fabs(budget.total));
    worst_budget = std::max(worst_budget, std::fabs(budget.bound + budget.channel));
  }
  detail = format("capacity err %.3g, norm err %.3g", worst_capacity, worst_norm);
  return worst_capacity <= 1e-8 && worst_norm <= 1e-10 && worst_budget <= 1e-8;
}

bool criterion_solver_pipeline(std::string& detail) {
  const double root2 = std::sqrt(2.0);
  double worst_ode = 0.0, worst_residual = 0.0, weakest_rejection = 1e300;

  for (int n : kQuantumNumbers) {
    const SpinModel model(n);

    // Constants recovered by the elimination, with a tight constraint residual.
    const solver::ConstantSolveResult constants = solver::solve_amplitude_constants(n);
    for (Outcome o : kOutcomes) {
      const double b_want = is_sine_cell(o) ? root2 : 0.0;
      const double c_want = is_sine_cell(o) ? 0.0 : root2;
      if (std::fabs(constants.B[index_of(o)] - b_want) > 1e-15) return false;
      if (std::fabs(constants.C[index_of(o)] - c_want) > 1e-15) return false;
    }
    if (constants.residual > 1e-10) return false;
    if (solver::regularity_scan(root2, 0.0, root2, n, 256) > 1e-10) return false;

    // RK4 against the closed-form family over the full grid, one run per
    // branch (sine cell and cosine cell initial data).
    const solver::GeneratingEquation eq{-4.0 / model.n_squared()};
    const solver::OdeSolution sine_run = solver::solve_generating_ode(eq, 0.0, root2 * model.n() / 2.0, 4097);
    const solver::OdeSolution cosine_run = solver::solve_generating_ode(eq, root2, 0.0, 4097);
    for (std::size_t i = 0; i < sine_run.grid.size(); ++i) {
      const double u = 0.5 * model.n() * sine_run.grid[i];
      worst_ode = std::max(worst_ode, std::fabs(sine_run.values[i] - root2 * std::sin(u)));
      worst_ode = std::max(worst_ode, std::fabs(cosine_run.values[i] - root2 * std::cos(u)));
    }

    // Principle residuals: negligible on the solution...
    for (int k = 0; k < 64; ++k) {
      const Angle t(kTwoPi * k / 64);
      for (double r : solver::structural_principle_residual(t, model))
        worst_residual = std::max(worst_residual, std::fabs(r));
      for (double r : solver::euler_lagrange_residual(t, model))
        worst_residual = std::max(worst_residual, std::fabs(r));
    }

    // ... and clearly nonzero for a 5% frequency dilation of the amplitude.
    auto dilated = [&](double t) { return root2 * std::sin(1.05 * 0.5 * model.n() * t); };
    double structural_peak = 0.0, euler_peak = 0.0;
    for (int k = 0; k < 64; ++k) {
      const double t = kTwoPi * k / 64;
      structural_peak = std::max(
          structural_peak, std::fabs(solver::structural_residual(dilated, eq.a_squared, t)));
      euler_peak = std::max(
          euler_peak, std::fabs(solver::euler_lagrange_residual(dilated, eq.a_squared, t)));
    }
    weakest_rejection = std::min({weakest_rejection, structural_peak, euler_peak});
  }

  detail = format("ode err %.3g, residual %.3g", worst_ode, worst_residual);
  return worst_ode <= 1e-6 && worst_residual <= 1e-6 && weakest_rejection > 1e-3;
}

bool criterion_geometry(std::string& detail) {
  double worst_spread = 0.0, worst_value = 0.0;
  for (int n : kQuantumNumbers) {
    const SpinModel model(n);
    const auto [lo, hi] = geometry::metric_constancy_scan(geometry::epr_curve(model), 512);
    worst_spread = std::max(worst_spread, hi - lo);
    worst_value = std::max(worst_value, std::fabs(hi - model.n_squared()));
  }

  // Amplitude map onto the radius-2 sphere, and the coordinate identity
  // between the two metric expressions, on random interior simplex points.
  double worst_norm = 0.0;
  for (int k = 0; k < 100; ++k) {
    std::vector<double> p(4);
    double total = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      const double u = estimation::stream_uniform01(0xC5u, 4 * k + j);
      p[j] = 1e-9 - std::log1p(-u);
      total += p[j];
    }
    for (double& v : p) v /= total;
    const geometry::SimplexPoint point(p);

    const geometry::AmplitudePoint image = geometry::to_amplitudes(point, {1, -1, 1, -1});
    double norm = 0.0;
    for (double q : image.q()) norm += q * q;
    worst_norm = std::max(worst_norm, std::fabs(norm - 4.0));

    const std::vector<double> g = geometry::simplex_metric(point);
    const std::vector<double> g_lambda = geometry::metric_on_lambda_space(point);
    if (g != g_lambda) return false;
  }

  detail = format("scan spread %.3g, sphere err %.3g", worst_spread, worst_norm);
  return worst_spread <= 1e-8 && worst_value <= 1e-8 && worst_norm <= 1e-12;
}

bool criterion_generic_ratio(std::string& detail) {
  double worst = 0.0;
  for (int n : kQuantumNumbers) {
    const SpinModel model(n);
    for (double mass : {0.1, 0.5, 2.0, 10.0}) {
      const AmplitudeSet amps = AmplitudeSet::scaled_solution(model, mass);
      for (int k = 0; k < 64; ++k) {
        const double t = kTwoPi * k / 64;
        worst = std::max(worst,
                         std::fabs(solver::metric_mass_ratio(amps, t) - model.n_squared()));
        worst = std::max(worst, std::fabs(amps.probability_mass(t) - mass));
      }
    }
  }
  detail = format("max ratio defect %.3g", worst);
  return worst <= 1e-10;
}

bool criterion_estimation(std::string& detail) {
  using estimation::EstimatorKind;
  const Angle theta(1.0);
  const std::uint64_t m = 10000;
  const int replications = 10000;
  double worst_rel = 0.0;

  for (int n : {1, 2}) {
    const SpinModel model(n);
    const std::uint64_t seed = 0x7E57ED00u + static_cast<std::uint64_t>(n);
    const double bound = estimation::lrcb(m, model);

    const estimation::ExperimentResult pooled = estimation::unbiasedness_experiment(
        theta, model, m, replications, seed, EstimatorKind::PooledMLE);
    if (std::fabs(pooled.bias) >= 3.0 * std::sqrt(pooled.variance / replications)) return false;
    worst_rel = std::max(worst_rel, std::fabs(pooled.variance - bound) / bound);
    if (std::fabs(pooled.variance - bound) > 0.10 * bound) return false;

    const estimation::ExperimentResult cell = estimation::unbiasedness_experiment(
        theta, model, m, replications, seed + 17, EstimatorKind::CellPP);
    const double oracle = estimation::delta_variance_cell(theta, model, m, Outcome::PP);
    worst_rel = std::max(worst_rel, std::fabs(cell.variance - oracle) / oracle);
    if (std::fabs(cell.variance - oracle) > 0.10 * oracle) return false;
    if (cell.variance < bound) return false;
  }
  detail = format("worst relative variance gap %.3g", worst_rel);
  return true;
}

bool criterion_single_measurement(std::string& detail) {
  double weakest = 1e300;
  for (int n : {1, 2}) {
    const estimation::RcfReport report = estimation::rcf_inequality_report(
        Angle(1.0), SpinModel(n), 1, 100000, 0xF41Du + static_cast<std::uint64_t>(n));
    if (!report.holds) return false;
    weakest = std::min(weakest, report.sigma2_if / report.bound);
  }
  detail = format("min sigma^2 I_F / bound = %.3f", weakest);
  return true;
}

bool criterion_determinism(std::string& detail) {
  const std::string first = reports::serialize(reports::simulate_report(1, 1.0, 1000, 7));
  const std::string second = reports::serialize(reports::simulate_report(1, 1.0, 1000, 7));
  if (first != second) return false;

  const estimation::OuterSample a = estimation::sample(Angle(1.0), SpinModel(1), 100000, 7);
  const estimation::OuterSample b = estimation::sample(Angle(1.0), SpinModel(1), 100000, 7);
  if (a.counts != b.counts) return false;

  // Round trip: the serialized frequencies parse back bit-for-bit.
  const auto parsed = reports::Json::parse(first);
  const estimation::FrequencyVector freq =
      estimation::frequencies(estimation::sample(Angle(1.0), SpinModel(1), 1000, 7));
  for (Outcome o : kOutcomes) {
    const double replayed = parsed["outputs"]["frequencies"][to_label(o)].get<double>();
    if (replayed != freq.lambda_hat[index_of(o)]) return false;
  }
  detail = "byte-identical reports, bit-exact round trip";
  return true;
}

}  // namespace

std::vector<CriterionResult> run_all() {
  struct Entry {
    int id;
    const char* name;
    double limit_seconds;
    std::function<bool(std::string&)> body;
  };
  const std::vector<Entry> criteria = {
      {1, "closed-form probability table", 1.0, criterion_probability_table},
      {2, "Fisher information constancy (three numeric forms)", 5.0, criterion_fisher_constancy},
      {3, "channel capacity and information budget", 1.0, criterion_capacity},
      {4, "variational solver pipeline", 5.0, criterion_solver_pipeline},
      {5, "simplex geometry and induced metric", 2.0, criterion_geometry},
      {6, "scale-invariant metric/mass ratio", 1.0, criterion_generic_ratio},
      {7, "estimator bias and efficiency", 60.0, criterion_estimation},
      {8, "single-measurement information inequality", 30.0, criterion_single_measurement},
      {9, "deterministic simulation reports", 5.0, criterion_determinism},
  };

  std::vector<CriterionResult> results;
  results.reserve(criteria.size());
  for (const Entry& entry : criteria) {
    CriterionResult result;
    result.id = entry.id;
    result.name = entry.name;
    result.limit_seconds = entry.limit_seconds;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = entry.body(result.detail);
    } catch (const std::exception& error) {
      result.detail = std::string("exception: ") + error.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.passed = ok && result.seconds <= result.limit_seconds;
    if (ok && result.seconds > result.limit_seconds) result.detail += " [over time budget]";
    results.push_back(std::move(result));
  }
  return results;
}

int run_and_report(std::ostream& out) {
  int failures = 0;
  for (const CriterionResult& r : run_all()) {
    char line[320];
    std::snprintf(line, sizeof(line), "[%s] criterion %d: %s (%.2fs/%.0fs)%s%s\n",
                  r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                  r.limit_seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
    out << line;
    if (!r.passed) ++failures;
  }
  out << (failures == 0 ? "ACCEPTED: all criteria passed\n"
                        : "REJECTED: " + std::to_string(failures) + " criterion(s) failed\n");
  return failures;
}

}  // namespace epibohm::verify
