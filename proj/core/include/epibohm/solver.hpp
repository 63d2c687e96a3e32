#pragma once

#include <array>
#include <functional>
#include <vector>

#include "epibohm/types.hpp"

namespace epibohm::solver {

// ---------------------------------------------------------------------------
// Generating equation q'' = q / A^2
// ---------------------------------------------------------------------------

/// The second-order generating equation produced by the variational principle.
/// a_squared is the constant A^2; its sign selects the solution family.
struct GeneratingEquation {
  double a_squared = -4.0;
};

enum class SolutionFamily { Exponential, Trigonometric };

/// A^2 > 0 admits exponentials, A^2 < 0 oscillatory solutions; A^2 = 0 is
/// rejected (the equation degenerates).
SolutionFamily classify_family(const GeneratingEquation& eq);

/// Oscillation parameter a = 2/n of the trigonometric family member selected
/// by the probability law; the full-period orthogonality sin^2(2 pi / a) then
/// vanishes identically.  Throws UnsupportedModelError for |n| not in {1, 2}.
double admissible_a(int n);

/// Quadrature of sin(theta/a) cos(theta/a) over [0, 2 pi]; closed form
/// (a/2) sin^2(2 pi / a).  The integrand is not periodic over the window for
/// generic a, so this uses composite Simpson rather than the periodic
/// trapezoid rule.  Requires a != 0 and grid_points >= 64.
double orthogonality_integral(double a, int grid_points = 1024);

// ---------------------------------------------------------------------------
// Numerical integration of the generating equation
// ---------------------------------------------------------------------------

/// Fixed-step RK4 solution on [0, 2 pi], stored at grid_points nodes including
/// both ends.  Off-node queries interpolate with cubic Hermite segments built
/// from the stored values and derivatives.
struct OdeSolution {
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> derivative_values;
  double step = 0.0;

  double value_at(double theta) const;
  double derivative_at(double theta) const;
};

/// Integrates q'' = q / A^2 from (q0, q0') with classic RK4.  grid_points must
/// be >= 257; 4097 nodes put the global error far below 1e-6 for |A^2| >= 1/4.
OdeSolution solve_generating_ode(const GeneratingEquation& eq, double q0, double qprime0,
                                 int grid_points = 4097);

// ---------------------------------------------------------------------------
// Information-principle residuals
// ---------------------------------------------------------------------------

/// Structural-principle residual -2 q q'' + q^2 (2/A^2) for an arbitrary
/// trial amplitude; q'' is taken by central differences of step h.  Zero
/// exactly on solutions of the generating equation.
double structural_residual(const std::function<double(double)>& q, double a_squared,
                           double theta, double h = 1e-4);

/// Euler-Lagrange residual q'' - q/A^2 for an arbitrary trial amplitude.
double euler_lagrange_residual(const std::function<double(double)>& q, double a_squared,
                               double theta, double h = 1e-4);

/// Both residuals specialised to the model's principle-selected amplitudes,
/// one entry per outcome cell.
std::array<double, 4> structural_principle_residual(Angle theta, const SpinModel& model);
std::array<double, 4> euler_lagrange_residual(Angle theta, const SpinModel& model);

/// Boundary diagnostic c = (q(2 pi) q'(2 pi) - q(0) q'(0)) / (2 pi): the
/// surface term discarded when the variational integral is reduced.  Zero for
/// the selected amplitudes; reported for inspection, never enforced.
double boundary_constant(const std::function<double(double)>& q,
                         const std::function<double(double)>& qprime);

// ---------------------------------------------------------------------------
// Amplitude constants
// ---------------------------------------------------------------------------

/// Outcome of the deterministic elimination that pins the amplitude
/// coefficients: boundary values, exchange symmetry, the regularity condition
/// on d^2(sum P)/dtheta^2, and normalization, in that order.
struct ConstantSolveResult {
  std::array<double, 4> B{};
  std::array<double, 4> C{};
  int n = 1;
  double residual = 0.0;  // max over a check grid of |sum P - 1| and |(sum P)''|
};

/// Runs the elimination for the given quantum number and returns the positive
/// roots B_pp = B_mm = C_pm = C_mp = sqrt(2), rest zero, together with the
/// verification residual.  Throws UnsupportedModelError for |n| not in {1, 2}.
ConstantSolveResult solve_amplitude_constants(int n);

/// Max over a theta grid of |d^2(sum P)/dtheta^2| for the reduced coefficient
/// set (B_pp = B_mm, B_pm = B_mp, C_pm = C_mp, C_pp = C_mm = 0):
///   (n^2/4) | -2 B_pm C_pm sin(n theta) + (B_pp^2 + B_pm^2 - C_pm^2) cos(n theta) |.
/// Zero (the regularity condition) forces B_pm = 0 and B_pp^2 = C_pm^2.
double regularity_scan(double b_pp, double b_pm, double c_pm, int n, int grid_points = 256);

/// Ratio of the amplitude metric sum (dq/dtheta)^2 to the probability mass
/// sum q^2/4.  Equals n^2 for every set with B^2 = C^2 in the solution
/// pattern, independent of overall scale -- the ratio the selected law pins
/// to the Fisher information.
double metric_mass_ratio(const AmplitudeSet& amps, double theta);

}  // namespace epibohm::solver
