#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "epibohm/estimation.hpp"
#include "epibohm/types.hpp"

namespace epibohm::reports {

/// All machine-readable output uses one envelope:
///   { "command", "inputs", "outputs", "versions", "seed" }
/// with seed null for commands that draw no samples.  Keys keep insertion
/// order and doubles serialize in shortest-round-trip form, so a report is a
/// pure function of its inputs: identical invocations give identical bytes,
/// and re-parsing returns the in-memory doubles bit for bit.
using Json = nlohmann::ordered_json;

inline constexpr const char* kLibraryVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

Json versions();

/// Probability table: a single row at `theta`, or `grid_points` rows covering
/// [0, 2 pi) when grid_points > 0.
Json probabilities_report(int n, double theta, int grid_points);

/// Amplitude constants selected by the information principles, with the
/// verification residuals.
Json solve_report(int n);

/// Constancy scan of the induced metric for the model's curve.
Json metric_report(int n, int grid_points);

/// Outcome counts and frequencies of one sampled experiment.
Json simulate_report(int n, double theta, std::uint64_t samples, std::uint64_t seed);

/// Point estimate with standard error, bound, and confidence interval.
Json estimate_report(int n, double theta, std::uint64_t samples, std::uint64_t seed,
                     estimation::EstimatorKind kind);

/// CSV rendering of the probability table (17 significant digits per value).
std::string probabilities_csv(int n, double theta, int grid_points);

/// Canonical serialization used everywhere a report is written out.
std::string serialize(const Json& report);

/// Parses an estimator name (pp, mm, pm, mp, mle).
std::optional<estimation::EstimatorKind> estimator_from_name(const std::string& name);

}  // namespace epibohm::reports
