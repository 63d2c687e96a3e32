#include "epibohm/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "epibohm/model.hpp"

namespace epibohm::estimation {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kDerivationSalt = 0xD1B54A32D192ED03ULL;

// Open-branch guard shared by the experiment drivers: the estimators invert
// sin^2/cos^2 of |n| theta / 2, so theta must keep both factors away from 0.
void require_open_branch(Angle theta, const SpinModel& model) {
  const double u = 0.5 * model.abs_n() * theta.radians();
  if (!(std::sin(u) > 1e-9) || !(std::cos(u) > 1e-9))
    throw SingularBranchError("theta must lie inside the open branch (0, pi/|n|)");
}

double branch_scale(const SpinModel& model) { return 2.0 / model.abs_n(); }

Outcome cell_of(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::CellPP: return Outcome::PP;
    case EstimatorKind::CellMM: return Outcome::MM;
    case EstimatorKind::CellPM: return Outcome::PM;
    case EstimatorKind::CellMP: return Outcome::MP;
    case EstimatorKind::PooledMLE: break;
  }
  throw std::invalid_argument("cell_of: the pooled estimator has no single cell");
}

}  // namespace

std::uint64_t stream_value(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * kGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double stream_uniform01(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(stream_value(seed, index) >> 11) * 0x1.0p-53;
}

std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t replication) {
  return stream_value(master_seed ^ kDerivationSalt, replication);
}

OuterSample sample(Angle theta, const SpinModel& model, std::uint64_t m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("sample: m must be >= 1");

  // Cumulative thresholds in fixed cell order PP, MM, PM, MP.
  const JointDistribution joint = model::joint_distribution(theta, model);
  const double t1 = joint[Outcome::PP];
  const double t2 = t1 + joint[Outcome::MM];
  const double t3 = t2 + joint[Outcome::PM];

  std::array<std::uint64_t, 4> counts{};
  for (std::uint64_t i = 0; i < m; ++i) {
    const double u = stream_uniform01(seed, i);
    if (u < t1)
      ++counts[index_of(Outcome::PP)];
    else if (u < t2)
      ++counts[index_of(Outcome::MM)];
    else if (u < t3)
      ++counts[index_of(Outcome::PM)];
    else
      ++counts[index_of(Outcome::MP)];
  }
  return OuterSample{counts, m, seed, theta, model};
}

FrequencyVector frequencies(const OuterSample& s) {
  FrequencyVector freq;
  for (std::size_t j = 0; j < 4; ++j)
    freq.lambda_hat[j] = static_cast<double>(s.counts[j]) / static_cast<double>(s.m);
  return freq;
}

double estimate_cell(const FrequencyVector& freq, Outcome cell, const SpinModel& model) {
  const double x = std::clamp(2.0 * freq[cell], 0.0, 1.0);
  const double root = std::sqrt(x);
  return is_sine_cell(cell) ? branch_scale(model) * std::asin(root)
                            : branch_scale(model) * std::acos(root);
}

double estimate_mle(const OuterSample& s) {
  const double pooled =
      static_cast<double>(s.counts[index_of(Outcome::PP)] + s.counts[index_of(Outcome::MM)]) /
      static_cast<double>(s.m);
  return branch_scale(s.model) * std::asin(std::sqrt(std::clamp(pooled, 0.0, 1.0)));
}

double lrcb(std::uint64_t m, const SpinModel& model) {
  if (m < 1) throw std::invalid_argument("lrcb: m must be >= 1");
  return 1.0 / (static_cast<double>(m) * model.n_squared());
}

double delta_variance_cell(Angle theta, const SpinModel& model, std::uint64_t m, Outcome cell) {
  if (m < 1) throw std::invalid_argument("delta_variance_cell: m must be >= 1");
  const double u = 0.5 * model.abs_n() * theta.radians();
  const double s = std::sin(u), c = std::cos(u);
  const double denom2 = is_sine_cell(cell) ? c * c : s * s;
  if (denom2 < 1e-18)
    throw SingularBranchError(
        "delta_variance_cell: the inverse map degenerates at this endpoint");
  const double numer2 = is_sine_cell(cell) ? 1.0 + c * c : 1.0 + s * s;
  return numer2 / (static_cast<double>(m) * model.n_squared() * denom2);
}

EstimationReport estimate_report(const OuterSample& s, EstimatorKind kind) {
  EstimationReport report;
  report.kind = kind;
  report.lrcb = lrcb(s.m, s.model);

  const FrequencyVector freq = frequencies(s);
  double variance;
  if (kind == EstimatorKind::PooledMLE) {
    report.theta_hat = estimate_mle(s);
    variance = report.lrcb;  // asymptotic variance of the pooled estimator
    const double u = 0.5 * s.model.abs_n() * report.theta_hat;
    report.branch_endpoint = !(std::sin(u) > 1e-9 && std::cos(u) > 1e-9);
  } else {
    const Outcome cell = cell_of(kind);
    report.theta_hat = estimate_cell(freq, cell, s.model);
    try {
      variance = delta_variance_cell(Angle(report.theta_hat), s.model, s.m, cell);
    } catch (const SingularBranchError&) {
      // Saturated at a branch end: the plug-in formula degenerates, fall back
      // to the bound and flag the report.
      variance = report.lrcb;
      report.branch_endpoint = true;
    }
  }
  report.std_error = std::sqrt(variance);
  report.ci_low = report.theta_hat - 1.959963984540054 * report.std_error;
  report.ci_high = report.theta_hat + 1.959963984540054 * report.std_error;
  return report;
}

ExperimentResult unbiasedness_experiment(Angle theta, const SpinModel& model, std::uint64_t m,
                                         int replications, std::uint64_t seed,
                                         EstimatorKind kind) {
  if (replications < 100)
    throw std::invalid_argument("unbiasedness_experiment: replications must be >= 100");
  if (m < 1) throw std::invalid_argument("unbiasedness_experiment: m must be >= 1");
  require_open_branch(theta, model);

  // Welford accumulation keeps the variance numerically stable over 1e5+
  // replications.
  double mean = 0.0, m2 = 0.0;
  for (int r = 0; r < replications; ++r) {
    const OuterSample s = sample(theta, model, m, replication_seed(seed, r));
    const double estimate = kind == EstimatorKind::PooledMLE
                                ? estimate_mle(s)
                                : estimate_cell(frequencies(s), cell_of(kind), model);
    const double delta = estimate - mean;
    mean += delta / (r + 1);
    m2 += delta * (estimate - mean);
  }

  ExperimentResult result;
  result.bias = mean - theta.radians();
  result.variance = m2 / (replications - 1);
  result.lrcb = lrcb(m, model);
  return result;
}

RcfReport rcf_inequality_report(Angle theta, const SpinModel& model, std::uint64_t m,
                                int replications, std::uint64_t seed) {
  const ExperimentResult experiment =
      unbiasedness_experiment(theta, model, m, replications, seed, EstimatorKind::PooledMLE);
  RcfReport report;
  report.sigma2_if = experiment.variance * model.n_squared();
  report.bound =
      (1.0 / static_cast<double>(m)) * (1.0 - 3.0 / std::sqrt(static_cast<double>(replications)));
  report.holds = report.sigma2_if >= report.bound;
  return report;
}

}  // namespace epibohm::estimation
