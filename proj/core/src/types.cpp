#include "epibohm/types.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace epibohm {

Angle::Angle(double radians) {
  if (!std::isfinite(radians)) throw std::invalid_argument("Angle: non-finite value");
  double t = std::fmod(radians, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;  // fmod/add rounding can land exactly on 2*pi
  theta_ = t;
}

JointDistribution::JointDistribution(const std::array<double, 4>& p) : p_(p) {
  double total = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(p_[i] >= 0.0)) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "JointDistribution: cell %zu is negative (%g)", i, p_[i]);
      throw std::invalid_argument(buf);
    }
    total += p_[i];
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw std::invalid_argument("JointDistribution: cells must sum to 1 within 1e-12");
}

double JointDistribution::sum() const { return p_[0] + p_[1] + p_[2] + p_[3]; }

double AmplitudeSet::value(Outcome o, double theta) const {
  const double u = 0.5 * n * theta;
  const auto i = index_of(o);
  return B[i] * std::sin(u) + C[i] * std::cos(u);
}

double AmplitudeSet::derivative(Outcome o, double theta) const {
  const double u = 0.5 * n * theta;
  const double half_n = 0.5 * n;
  const auto i = index_of(o);
  return half_n * (B[i] * std::cos(u) - C[i] * std::sin(u));
}

double AmplitudeSet::second_derivative(Outcome o, double theta) const {
  // q'' = q / A^2 = -(n^2/4) q for every member of this family.
  return -0.25 * static_cast<double>(n * n) * value(o, theta);
}

double AmplitudeSet::probability_mass(double theta) const {
  double acc = 0.0;
  for (Outcome o : kOutcomes) {
    const double q = value(o, theta);
    acc += q * q;
  }
  return 0.25 * acc;
}

double AmplitudeSet::rao_fisher_metric(double theta) const {
  double acc = 0.0;
  for (Outcome o : kOutcomes) {
    const double qp = derivative(o, theta);
    acc += qp * qp;
  }
  return acc;
}

AmplitudeSet AmplitudeSet::epi_solution(const SpinModel& model) {
  return scaled_solution(model, 1.0);
}

AmplitudeSet AmplitudeSet::scaled_solution(const SpinModel& model, double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("AmplitudeSet: mass must be positive");
  const double r = std::sqrt(2.0 * mass);
  AmplitudeSet set;
  set.n = model.n();
  set.B[index_of(Outcome::PP)] = r;
  set.B[index_of(Outcome::MM)] = r;
  set.C[index_of(Outcome::PM)] = r;
  set.C[index_of(Outcome::MP)] = r;
  return set;
}

}  // namespace epibohm
