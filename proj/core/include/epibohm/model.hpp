#pragma once

#include <array>

#include "epibohm/types.hpp"

namespace epibohm::model {

/// The three algebraically equivalent assemblies of the scalar Fisher
/// information about the analyzer angle:
///   Analytical: sum_cells P * (-d^2 ln P / dtheta^2)
///   Metric:     sum_cells (dP/dtheta)^2 / P
///   Epi:        -sum_cells q * d^2 q / dtheta^2      (q the signed amplitude)
/// The first two are singular at zero-probability cells; the amplitude form
/// is total.
enum class FisherForm { Analytical, Metric, Epi };

/// Joint probability of one outcome cell at relative analyzer angle theta.
/// Equal-sign cells follow (1 - cos(n theta))/4, mixed cells (1 + cos(n theta))/4,
/// i.e. sin^2/cos^2 half-angle laws written in the form that is exact at the
/// boundary angles.
double probability(Outcome o, Angle theta, const SpinModel& model);

/// All four cells at once, validated to sum to one.
JointDistribution joint_distribution(Angle theta, const SpinModel& model);

/// Signed real amplitude q_cell(theta) with q^2 = 4 P.  `sign` selects the
/// root branch (+1 or -1); the probabilities are sign-independent.
double amplitude(Outcome o, Angle theta, const SpinModel& model, int sign = +1);

/// Single-particle marginal along either axis: 1/2 independent of theta.
double marginal_single(Angle theta = Angle{});

/// Angle-average of one joint cell over the full rotation, by periodic
/// trapezoid quadrature of P(cell|theta)/(2 pi).  grid_points must be an even
/// count >= 16.
double averaged_joint(Outcome o, const SpinModel& model, int grid_points = 512);

/// Conditional probability of one particle's sign given the other's, after
/// angle averaging: averaged joint / marginal = 1/2.
double conditional_given_other(const SpinModel& model, int grid_points = 512);

/// Per-cell gap P(cell|theta) - 1/4 between the joint law and the product of
/// the marginals; the signature of angle-dependent correlation.
std::array<double, 4> dependence_gap(Angle theta, const SpinModel& model);

/// Closed-form Fisher information about theta: n^2, independent of the angle.
double fisher_information_closed(const SpinModel& model);

/// Fisher information assembled from central finite differences of P (or of
/// the signed amplitude for the Epi form).  h must lie in (0, 1e-3]; the
/// Richardson flag (default on) extrapolates the h and h/2 stencils, which
/// keeps the result within 1e-6 of n^2 even when a cell probability is small.
/// Analytical/Metric forms throw SingularCellError at zero cells.
double fisher_information_numeric(Angle theta, const SpinModel& model, FisherForm form,
                                  double h = 1e-4, bool richardson = true);

/// Channel information: integral over [0, 2 pi) of -sum_cells q q'' built from
/// the principle-selected amplitudes.  Equals 2 pi n^2.  grid_points must be
/// an even count >= 64.
double channel_capacity(const SpinModel& model, int grid_points = 512);

/// Integral of one cell's squared amplitude over the full rotation: 2 pi for
/// every cell, so each cell carries an equal share of the capacity.
double amplitude_norm_integral(Outcome o, const SpinModel& model, int grid_points = 512);

/// Channel, bound, and total information for the model; the budget closes
/// with kappa = 1: Q = -I, K = 0.
InformationBudget information_budget(const SpinModel& model, int grid_points = 512);

/// |P(++|theta) - P(+-|theta + pi/|n|)|: the equal-sign law is the mixed-sign
/// law shifted by half the correlation period.  Identically zero.
double shift_symmetry_residual(Angle theta, const SpinModel& model);

struct SuperadditivityCheck {
  double joint = 0.0;          // Fisher information of the joint law
  double marginal_sum = 0.0;   // information carried by the flat marginals
  bool holds = false;          // joint >= marginal_sum
};

/// Fisher information of the joint law versus the (zero) information of the
/// angle-independent marginals.
SuperadditivityCheck superadditivity_check(Angle theta, const SpinModel& model);

}  // namespace epibohm::model
