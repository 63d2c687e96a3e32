#include "epibohm/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "epibohm/model.hpp"
#include "epibohm/numerics.hpp"

namespace epibohm::geometry {

SimplexPoint::SimplexPoint(std::vector<double> p) : p_(std::move(p)) {
  if (p_.size() < 2)
    throw std::invalid_argument("SimplexPoint: need at least two cells");
  double total = 0.0;
  for (std::size_t j = 0; j < p_.size(); ++j) {
    if (!(p_[j] >= 0.0))
      throw std::invalid_argument("SimplexPoint: cell " + std::to_string(j) +
                                  " is negative or NaN");
    total += p_[j];
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw std::invalid_argument("SimplexPoint: cells must sum to 1 within 1e-12");
}

AmplitudePoint::AmplitudePoint(std::vector<double> q) : q_(std::move(q)) {
  if (q_.size() < 2)
    throw std::invalid_argument("AmplitudePoint: need at least two cells");
  double norm = 0.0;
  for (double v : q_) norm += v * v;
  if (std::fabs(norm - 4.0) > 1e-12)
    throw std::invalid_argument("AmplitudePoint: sum of squares must be 4 within 1e-12");
}

std::vector<double> simplex_metric(const SimplexPoint& point) {
  std::vector<double> diag(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (point[j] <= 0.0) throw BoundaryError(j);
    diag[j] = 1.0 / point[j];
  }
  return diag;
}

std::vector<double> metric_on_lambda_space(const SimplexPoint& point) {
  return simplex_metric(point);
}

AmplitudePoint to_amplitudes(const SimplexPoint& point, const std::vector<int>& signs) {
  if (signs.size() != point.size())
    throw std::invalid_argument("to_amplitudes: signs must match the point dimension");
  std::vector<double> q(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (signs[j] != 1 && signs[j] != -1)
      throw std::invalid_argument("to_amplitudes: signs must be +1 or -1");
    q[j] = signs[j] * 2.0 * std::sqrt(point[j]);
  }
  return AmplitudePoint(std::move(q));
}

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

CurveOnSimplex CurveOnSimplex::with_finite_difference(Evaluator probabilities, double fd_step) {
  if (!probabilities) throw std::invalid_argument("CurveOnSimplex: missing evaluator");
  if (!(fd_step > 0.0) || fd_step > 1e-3)
    throw std::invalid_argument("CurveOnSimplex: fd_step must lie in (0, 1e-3]");
  CurveOnSimplex curve;
  curve.probabilities_ = std::move(probabilities);
  curve.mode_ = DerivativeMode::FiniteDifference;
  curve.fd_step_ = fd_step;
  return curve;
}

CurveOnSimplex CurveOnSimplex::with_closed_form(Evaluator probabilities, VectorFn amplitudes,
                                                VectorFn amplitude_rate) {
  if (!probabilities || !amplitudes || !amplitude_rate)
    throw std::invalid_argument("CurveOnSimplex: closed form requires all three evaluators");
  CurveOnSimplex curve;
  curve.probabilities_ = std::move(probabilities);
  curve.amplitudes_ = std::move(amplitudes);
  curve.amplitude_rate_ = std::move(amplitude_rate);
  curve.mode_ = DerivativeMode::ClosedForm;
  return curve;
}

std::vector<double> CurveOnSimplex::amplitudes_at(double theta) const {
  if (amplitudes_) return amplitudes_(theta);
  const SimplexPoint point = probabilities_(theta);
  std::vector<double> q(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) q[j] = 2.0 * std::sqrt(point[j]);
  return q;
}

std::vector<double> CurveOnSimplex::amplitude_rate_at(double theta) const {
  if (amplitude_rate_) return amplitude_rate_(theta);
  const std::vector<double> lo = amplitudes_at(theta - fd_step_);
  const std::vector<double> hi = amplitudes_at(theta + fd_step_);
  std::vector<double> rate(lo.size());
  for (std::size_t j = 0; j < lo.size(); ++j) rate[j] = (hi[j] - lo[j]) / (2.0 * fd_step_);
  return rate;
}

// ---------------------------------------------------------------------------
// Induced metric
// ---------------------------------------------------------------------------

double induced_metric(const CurveOnSimplex& curve, Angle theta, MetricForm form) {
  const double t = theta.radians();

  if (form == MetricForm::Amplitude) {
    double acc = 0.0;
    for (double r : curve.amplitude_rate_at(t)) acc += r * r;
    return acc;
  }

  const SimplexPoint point = curve.at(t);
  const bool closed = curve.derivative_mode() == DerivativeMode::ClosedForm;
  const double h = curve.fd_step();

  std::vector<double> q, q_rate;
  if (closed) {
    q = curve.amplitudes_at(t);
    q_rate = curve.amplitude_rate_at(t);
  }

  double acc = 0.0;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (point[j] <= 0.0) throw BoundaryError(j);
    double p_rate;
    if (closed) {
      // dP/dtheta = q dq/dtheta / 2 from 4 P = q^2.
      p_rate = 0.5 * q[j] * q_rate[j];
    } else {
      if (form == MetricForm::Log) {
        const double l_rate =
            (std::log(curve.at(t + h)[j]) - std::log(curve.at(t - h)[j])) / (2.0 * h);
        acc += point[j] * l_rate * l_rate;
        continue;
      }
      p_rate = (curve.at(t + h)[j] - curve.at(t - h)[j]) / (2.0 * h);
    }
    acc += p_rate * p_rate / point[j];
  }
  return acc;
}

std::pair<double, double> metric_constancy_scan(const CurveOnSimplex& curve, int grid_points,
                                                MetricForm form) {
  if (grid_points < 2)
    throw std::invalid_argument("metric_constancy_scan: grid_points must be >= 2");
  double lo = 0.0, hi = 0.0;
  for (int k = 0; k < grid_points; ++k) {
    const double g = induced_metric(curve, Angle(kTwoPi * k / grid_points), form);
    if (k == 0) {
      lo = hi = g;
    } else {
      if (g < lo) lo = g;
      if (g > hi) hi = g;
    }
  }
  return {lo, hi};
}

CurveOnSimplex epr_curve(const SpinModel& model) {
  const AmplitudeSet amps = AmplitudeSet::epi_solution(model);
  auto probabilities = [model](double t) {
    const JointDistribution joint = model::joint_distribution(Angle(t), model);
    return SimplexPoint(
        std::vector<double>(joint.values().begin(), joint.values().end()));
  };
  auto amplitudes = [amps](double t) {
    std::vector<double> q(4);
    for (Outcome o : kOutcomes) q[index_of(o)] = amps.value(o, t);
    return q;
  };
  auto rate = [amps](double t) {
    std::vector<double> qp(4);
    for (Outcome o : kOutcomes) qp[index_of(o)] = amps.derivative(o, t);
    return qp;
  };
  return CurveOnSimplex::with_closed_form(std::move(probabilities), std::move(amplitudes),
                                          std::move(rate));
}

}  // namespace epibohm::geometry
