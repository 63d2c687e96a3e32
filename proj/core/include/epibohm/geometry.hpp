#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "epibohm/types.hpp"

namespace epibohm::geometry {

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

/// Point of the probability simplex: nonnegative entries summing to one
/// within 1e-12, at least two cells.
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> p);

  const std::vector<double>& p() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t j) const { return p_[j]; }

 private:
  std::vector<double> p_;
};

/// Image of a simplex point under the amplitude map 4 p_j = q_j^2: a point of
/// the radius-2 sphere (sum q_j^2 = 4 within 1e-12).
class AmplitudePoint {
 public:
  explicit AmplitudePoint(std::vector<double> q);

  const std::vector<double>& q() const { return q_; }
  std::size_t size() const { return q_.size(); }

 private:
  std::vector<double> q_;
};

/// Diagonal of the Rao-Fisher metric at an interior simplex point: 1/p_j per
/// cell.  Throws BoundaryError (naming the cell) on the simplex boundary.
std::vector<double> simplex_metric(const SimplexPoint& point);

/// The metric expressed in the model's natural outcome coordinates.  The
/// coordinate change is the identity on the simplex, so this equals
/// simplex_metric componentwise; it exists as a named operation so the
/// identity stays test-visible.
std::vector<double> metric_on_lambda_space(const SimplexPoint& point);

/// Amplitude map q_j = sign_j * 2 sqrt(p_j).  signs entries must be +/-1 and
/// match the point's dimension.
AmplitudePoint to_amplitudes(const SimplexPoint& point, const std::vector<int>& signs);

// ---------------------------------------------------------------------------
// Curves and the induced scalar metric
// ---------------------------------------------------------------------------

/// The three assemblies of the scalar metric induced on a one-parameter curve:
///   Log:       sum p_j (d ln p_j / dtheta)^2
///   Ratio:     sum (d p_j / dtheta)^2 / p_j
///   Amplitude: sum (d q_j / dtheta)^2
/// Algebraically identical; Log and Ratio are singular at zero cells while the
/// amplitude form is total when signed amplitudes are available.
enum class MetricForm { Log, Ratio, Amplitude };

enum class DerivativeMode { ClosedForm, FiniteDifference };

/// One-parameter curve on the simplex.  The probability evaluator must accept
/// any real angle (the finite-difference stencils step outside [0, 2 pi)).
/// A curve may optionally carry signed amplitudes and their closed-form rates;
/// without them, amplitudes default to the positive root 2 sqrt(p_j) and all
/// derivatives fall back to central differences of step fd_step.
class CurveOnSimplex {
 public:
  using Evaluator = std::function<SimplexPoint(double)>;
  using VectorFn = std::function<std::vector<double>(double)>;

  static CurveOnSimplex with_finite_difference(Evaluator probabilities, double fd_step = 1e-4);
  static CurveOnSimplex with_closed_form(Evaluator probabilities, VectorFn amplitudes,
                                         VectorFn amplitude_rate);

  SimplexPoint at(double theta) const { return probabilities_(theta); }
  std::vector<double> amplitudes_at(double theta) const;
  std::vector<double> amplitude_rate_at(double theta) const;

  DerivativeMode derivative_mode() const { return mode_; }
  double fd_step() const { return fd_step_; }

 private:
  CurveOnSimplex() = default;

  Evaluator probabilities_;
  VectorFn amplitudes_;      // empty => positive root of the probabilities
  VectorFn amplitude_rate_;  // empty => finite differences
  DerivativeMode mode_ = DerivativeMode::FiniteDifference;
  double fd_step_ = 1e-4;
};

/// Scalar metric induced on the curve at the given angle, assembled per the
/// requested form.  Log and Ratio throw BoundaryError at zero cells.
double induced_metric(const CurveOnSimplex& curve, Angle theta, MetricForm form);

/// (min, max) of the induced metric over a uniform grid of grid_points angles
/// covering [0, 2 pi).  The default amplitude form is total, so the scan can
/// cross the zeros of individual cells.
std::pair<double, double> metric_constancy_scan(const CurveOnSimplex& curve, int grid_points,
                                                MetricForm form = MetricForm::Amplitude);

/// The model's own curve theta -> joint distribution, carrying the signed
/// closed-form amplitudes and their rates.  Its induced metric is the
/// constant n^2.
CurveOnSimplex epr_curve(const SpinModel& model);

}  // namespace epibohm::geometry
