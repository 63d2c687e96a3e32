#include "epibohm/model.hpp"

#include <cmath>
#include <stdexcept>

#include "epibohm/numerics.hpp"

namespace epibohm::model {

namespace {

void require_even_grid(int grid_points, int minimum, const char* who) {
  if (grid_points < minimum || grid_points % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": grid_points must be even and >= " +
                                std::to_string(minimum));
}

void require_step(double h) {
  if (!(h > 0.0) || h > 1e-3)
    throw std::invalid_argument("fisher_information_numeric: h must lie in (0, 1e-3]");
}

}  // namespace

double probability(Outcome o, Angle theta, const SpinModel& model) {
  // (1 -/+ cos(n theta))/4 rather than sin^2/cos^2 of the half angle: the two
  // agree to rounding, but this form is exactly 0 and exactly 1/2 at the
  // boundary angles theta = 0, pi/|n|, 2 pi/|n|, ...
  const double c = std::cos(model.n() * theta.radians());
  return is_sine_cell(o) ? 0.25 * (1.0 - c) : 0.25 * (1.0 + c);
}

JointDistribution joint_distribution(Angle theta, const SpinModel& model) {
  std::array<double, 4> p{};
  for (Outcome o : kOutcomes) p[index_of(o)] = probability(o, theta, model);
  return JointDistribution(p);
}

double amplitude(Outcome o, Angle theta, const SpinModel& model, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("amplitude: sign must be +1 or -1");
  return sign * AmplitudeSet::epi_solution(model).value(o, theta.radians());
}

double marginal_single(Angle) { return 0.5; }

double averaged_joint(Outcome o, const SpinModel& model, int grid_points) {
  require_even_grid(grid_points, 16, "averaged_joint");
  return trapezoid_periodic(
      [&](double t) { return probability(o, Angle(t), model) / kTwoPi; }, kTwoPi,
      grid_points);
}

double conditional_given_other(const SpinModel& model, int grid_points) {
  return averaged_joint(Outcome::PP, model, grid_points) / marginal_single();
}

std::array<double, 4> dependence_gap(Angle theta, const SpinModel& model) {
  std::array<double, 4> gap{};
  for (Outcome o : kOutcomes)
    gap[index_of(o)] = probability(o, theta, model) - 0.25;
  return gap;
}

double fisher_information_closed(const SpinModel& model) {
  return static_cast<double>(model.n_squared());
}

double fisher_information_numeric(Angle theta, const SpinModel& model, FisherForm form,
                                  double h, bool richardson) {
  require_step(h);
  const double t = theta.radians();

  if (form == FisherForm::Epi) {
    // -sum q q'' on the signed amplitudes; no division, total everywhere.
    // The amplitudes are half-angle functions (4 pi periodic), so the stencil
    // must evaluate them on the unreduced line: folding x mod 2 pi would flip
    // their sign across theta = 0.
    const AmplitudeSet amps = AmplitudeSet::epi_solution(model);
    double acc = 0.0;
    for (Outcome o : kOutcomes) {
      auto q = [&](double x) { return amps.value(o, x); };
      acc -= q(t) * central_second_derivative(q, t, h, richardson);
    }
    return acc;
  }

  double acc = 0.0;
  for (Outcome o : kOutcomes) {
    auto p = [&](double x) { return probability(o, Angle(x), model); };
    const double p0 = p(t);
    if (p0 <= 0.0) throw SingularCellError(to_label(o), t);
    const double p1 = central_derivative(p, t, h, richardson);
    if (form == FisherForm::Metric) {
      acc += p1 * p1 / p0;
    } else {  // Analytical: P * (-d^2 ln P) = (P'^2 - P P'') / P
      const double p2 = central_second_derivative(p, t, h, richardson);
      acc += (p1 * p1 - p0 * p2) / p0;
    }
  }
  return acc;
}

double channel_capacity(const SpinModel& model, int grid_points) {
  require_even_grid(grid_points, 64, "channel_capacity");
  const AmplitudeSet amps = AmplitudeSet::epi_solution(model);
  return trapezoid_periodic(
      [&](double t) {
        double acc = 0.0;
        for (Outcome o : kOutcomes)
          acc -= amps.value(o, t) * amps.second_derivative(o, t);
        return acc;
      },
      kTwoPi, grid_points);
}

double amplitude_norm_integral(Outcome o, const SpinModel& model, int grid_points) {
  require_even_grid(grid_points, 64, "amplitude_norm_integral");
  const AmplitudeSet amps = AmplitudeSet::epi_solution(model);
  return trapezoid_periodic(
      [&](double t) {
        const double q = amps.value(o, t);
        return q * q;
      },
      kTwoPi, grid_points);
}

InformationBudget information_budget(const SpinModel& model, int grid_points) {
  InformationBudget budget;
  budget.channel = channel_capacity(model, grid_points);
  budget.bound = -budget.channel;
  budget.kappa = 1.0;
  budget.total = budget.channel + budget.kappa * budget.bound;
  return budget;
}

double shift_symmetry_residual(Angle theta, const SpinModel& model) {
  const double shift = kPi / model.abs_n();
  const double p_equal = probability(Outcome::PP, theta, model);
  const double p_mixed = probability(Outcome::PM, Angle(theta.radians() + shift), model);
  return std::fabs(p_equal - p_mixed);
}

SuperadditivityCheck superadditivity_check(Angle theta, const SpinModel& model) {
  SuperadditivityCheck check;
  check.joint = fisher_information_numeric(theta, model, FisherForm::Epi);
  check.marginal_sum = 0.0;  // the marginals carry no angle dependence
  check.holds = check.joint >= check.marginal_sum;
  return check;
}

}  // namespace epibohm::model
