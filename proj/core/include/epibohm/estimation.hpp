#pragma once

#include <array>
#include <cstdint>

#include "epibohm/types.hpp"

namespace epibohm::estimation {

// ---------------------------------------------------------------------------
// Counter-based deterministic random stream
// ---------------------------------------------------------------------------
// The generator is a pure function of (seed, index): element `index` of the
// stream is the splitmix64 finalizer applied to seed + (index + 1) * GAMMA,
// GAMMA = 0x9E3779B97F4A7C15.  Because there is no evolving state, draws can
// be taken in any order (or in parallel) without changing the stream, and two
// runs with the same seed produce bit-identical samples.  The exact mixing
// constants are documented in the README and pinned by known-answer tests.

/// Element `index` of the stream owned by `seed`.
std::uint64_t stream_value(std::uint64_t seed, std::uint64_t index);

/// The same element mapped to [0, 1) with 53 random mantissa bits.
double stream_uniform01(std::uint64_t seed, std::uint64_t index);

/// Seed of replication `replication` under a master seed: element
/// `replication` of the stream owned by master ^ 0xD1B54A32D192ED03.  The
/// XOR keeps the derivation stream disjoint from the sampling streams.
std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t replication);

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Outcome counts of one run of the experiment: m independent categorical
/// draws from the joint law at the true angle, taken from the seed's stream
/// in index order 0..m-1 by inversion of the cumulative cell probabilities
/// (cell order PP, MM, PM, MP).
struct OuterSample {
  std::array<std::uint64_t, 4> counts{};
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  Angle theta_true;
  SpinModel model;
};

/// Relative frequencies lambda_hat = counts / m.
struct FrequencyVector {
  std::array<double, 4> lambda_hat{};
  double operator[](Outcome o) const { return lambda_hat[index_of(o)]; }
};

OuterSample sample(Angle theta, const SpinModel& model, std::uint64_t m, std::uint64_t seed);
FrequencyVector frequencies(const OuterSample& s);

// ---------------------------------------------------------------------------
// Estimators
// ---------------------------------------------------------------------------

enum class EstimatorKind { CellPP, CellMM, CellPM, CellMP, PooledMLE };

/// Single-cell inversion estimator on the principal branch [0, pi/|n|]:
/// (2/|n|) asin(sqrt(2 lambda_hat)) for the equal-sign cells,
/// (2/|n|) acos(sqrt(2 lambda_hat)) for the mixed cells.  2 lambda_hat is
/// clamped to [0, 1], so sampling fluctuation saturates at the branch ends
/// instead of leaving the domain.
double estimate_cell(const FrequencyVector& freq, Outcome cell, const SpinModel& model);

/// Maximum-likelihood estimator pooling all four cells:
/// (2/|n|) asin(sqrt((counts_pp + counts_mm)/m)).
double estimate_mle(const OuterSample& s);

/// Rao-Cramer lower bound 1/(m n^2) on the variance at sample size m.
double lrcb(std::uint64_t m, const SpinModel& model);

/// First-order (delta-method) variance of one cell estimator:
/// (1 + cos^2)/(m n^2 cos^2) at the half angle for the equal-sign cells, the
/// sine mirror for the mixed cells.  Throws SingularBranchError where the
/// inverse map degenerates (cos -> 0, resp. sin -> 0).
double delta_variance_cell(Angle theta, const SpinModel& model, std::uint64_t m, Outcome cell);

/// Point estimate with plug-in standard error, the bound, and a 95% normal
/// interval.  branch_endpoint marks estimates that saturated at a branch end,
/// where the plug-in variance is replaced by the bound.
struct EstimationReport {
  double theta_hat = 0.0;
  EstimatorKind kind = EstimatorKind::PooledMLE;
  double std_error = 0.0;
  double lrcb = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  bool branch_endpoint = false;
};

EstimationReport estimate_report(const OuterSample& s, EstimatorKind kind);

// ---------------------------------------------------------------------------
// Monte Carlo experiments
// ---------------------------------------------------------------------------

/// Bias and variance of an estimator over `replications` independent runs of
/// the experiment; replication r uses replication_seed(seed, r), so the
/// result is independent of evaluation order.  Requires replications >= 100
/// and theta inside the open principal branch.
struct ExperimentResult {
  double bias = 0.0;
  double variance = 0.0;
  double lrcb = 0.0;
};

ExperimentResult unbiasedness_experiment(Angle theta, const SpinModel& model, std::uint64_t m,
                                         int replications, std::uint64_t seed,
                                         EstimatorKind kind);

/// Monte Carlo check of the information inequality sigma^2 * I_F >= 1/m for
/// the pooled estimator, with a 3/sqrt(replications) sampling allowance on
/// the bound.  At m = 1 this is the single-measurement form sigma^2 * I_F >= 1.
struct RcfReport {
  double sigma2_if = 0.0;  // measured variance times the Fisher information n^2
  double bound = 0.0;      // (1/m) (1 - 3/sqrt(replications))
  bool holds = false;
};

RcfReport rcf_inequality_report(Angle theta, const SpinModel& model, std::uint64_t m,
                                int replications, std::uint64_t seed);

}  // namespace epibohm::estimation
