#include "epibohm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "epibohm/numerics.hpp"

namespace epibohm::solver {

SolutionFamily classify_family(const GeneratingEquation& eq) {
  if (eq.a_squared == 0.0)
    throw std::invalid_argument("classify_family: A^2 must be nonzero");
  return eq.a_squared > 0.0 ? SolutionFamily::Exponential : SolutionFamily::Trigonometric;
}

double admissible_a(int n) {
  SpinModel model(n);  // validates the quantum number
  const double a = 2.0 / model.n();
  // Self-check of the admissibility property sin^2(2 pi / a) = sin^2(n pi) = 0.
  const double s = std::sin(kTwoPi / a);
  if (s * s > 1e-12)
    throw std::logic_error("admissible_a: orthogonality defect exceeds 1e-12");
  return a;
}

double orthogonality_integral(double a, int grid_points) {
  if (a == 0.0) throw std::invalid_argument("orthogonality_integral: a must be nonzero");
  if (grid_points < 64)
    throw std::invalid_argument("orthogonality_integral: grid_points must be >= 64");
  return simpson([a](double t) { return std::sin(t / a) * std::cos(t / a); }, 0.0, kTwoPi,
                 grid_points);
}

// ---------------------------------------------------------------------------
// RK4 integration
// ---------------------------------------------------------------------------

namespace {

std::size_t locate_segment(const std::vector<double>& grid, double theta) {
  if (grid.size() < 2 || theta < grid.front() || theta > grid.back())
    throw std::invalid_argument("OdeSolution: query outside [0, 2 pi]");
  auto it = std::upper_bound(grid.begin(), grid.end(), theta);
  std::size_t i = static_cast<std::size_t>(it - grid.begin());
  if (i == 0) return 0;
  if (i >= grid.size()) return grid.size() - 2;
  return i - 1;
}

}  // namespace

double OdeSolution::value_at(double theta) const {
  const std::size_t i = locate_segment(grid, theta);
  const double h = grid[i + 1] - grid[i];
  const double s = (theta - grid[i]) / h;
  const double s2 = s * s, s3 = s2 * s;
  // Cubic Hermite basis on the segment; O(h^4) between nodes, exact at nodes.
  return (2.0 * s3 - 3.0 * s2 + 1.0) * values[i] + (s3 - 2.0 * s2 + s) * h * derivative_values[i] +
         (-2.0 * s3 + 3.0 * s2) * values[i + 1] + (s3 - s2) * h * derivative_values[i + 1];
}

double OdeSolution::derivative_at(double theta) const {
  const std::size_t i = locate_segment(grid, theta);
  const double h = grid[i + 1] - grid[i];
  const double s = (theta - grid[i]) / h;
  const double s2 = s * s;
  return ((6.0 * s2 - 6.0 * s) * values[i] / h + (3.0 * s2 - 4.0 * s + 1.0) * derivative_values[i] +
          (-6.0 * s2 + 6.0 * s) * values[i + 1] / h + (3.0 * s2 - 2.0 * s) * derivative_values[i + 1]);
}

OdeSolution solve_generating_ode(const GeneratingEquation& eq, double q0, double qprime0,
                                 int grid_points) {
  classify_family(eq);  // rejects A^2 = 0
  if (grid_points < 257)
    throw std::invalid_argument("solve_generating_ode: grid_points must be >= 257");

  const double inv_a2 = 1.0 / eq.a_squared;
  const int steps = grid_points - 1;
  const double h = kTwoPi / steps;

  OdeSolution sol;
  sol.step = h;
  sol.grid.resize(grid_points);
  sol.values.resize(grid_points);
  sol.derivative_values.resize(grid_points);

  double q = q0, v = qprime0;
  sol.grid[0] = 0.0;
  sol.values[0] = q;
  sol.derivative_values[0] = v;

  for (int k = 0; k < steps; ++k) {
    // Classic RK4 on the first-order system (q, v)' = (v, q / A^2).
    const double k1q = v, k1v = q * inv_a2;
    const double k2q = v + 0.5 * h * k1v, k2v = (q + 0.5 * h * k1q) * inv_a2;
    const double k3q = v + 0.5 * h * k2v, k3v = (q + 0.5 * h * k2q) * inv_a2;
    const double k4q = v + h * k3v, k4v = (q + h * k3q) * inv_a2;
    q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    sol.grid[k + 1] = (k + 1) * h;
    sol.values[k + 1] = q;
    sol.derivative_values[k + 1] = v;
  }
  sol.grid.back() = kTwoPi;
  return sol;
}

// ---------------------------------------------------------------------------
// Principle residuals
// ---------------------------------------------------------------------------

double structural_residual(const std::function<double(double)>& q, double a_squared,
                           double theta, double h) {
  if (a_squared == 0.0)
    throw std::invalid_argument("structural_residual: A^2 must be nonzero");
  const double q0 = q(theta);
  const double q2 = central_second_derivative(q, theta, h);
  return -2.0 * q0 * q2 + q0 * q0 * (2.0 / a_squared);
}

double euler_lagrange_residual(const std::function<double(double)>& q, double a_squared,
                               double theta, double h) {
  if (a_squared == 0.0)
    throw std::invalid_argument("euler_lagrange_residual: A^2 must be nonzero");
  return central_second_derivative(q, theta, h) - q(theta) / a_squared;
}

std::array<double, 4> structural_principle_residual(Angle theta, const SpinModel& model) {
  const AmplitudeSet amps = AmplitudeSet::epi_solution(model);
  std::array<double, 4> res{};
  for (Outcome o : kOutcomes)
    res[index_of(o)] = structural_residual(
        [&](double t) { return amps.value(o, t); }, amps.a_squared(), theta.radians());
  return res;
}

std::array<double, 4> euler_lagrange_residual(Angle theta, const SpinModel& model) {
  const AmplitudeSet amps = AmplitudeSet::epi_solution(model);
  std::array<double, 4> res{};
  for (Outcome o : kOutcomes)
    res[index_of(o)] = euler_lagrange_residual(
        [&](double t) { return amps.value(o, t); }, amps.a_squared(), theta.radians());
  return res;
}

double boundary_constant(const std::function<double(double)>& q,
                         const std::function<double(double)>& qprime) {
  return (q(kTwoPi) * qprime(kTwoPi) - q(0.0) * qprime(0.0)) / kTwoPi;
}

// ---------------------------------------------------------------------------
// Amplitude constants
// ---------------------------------------------------------------------------

ConstantSolveResult solve_amplitude_constants(int n) {
  SpinModel model(n);

  // Step 1: P(++|0) = P(--|0) = 0 forces the equal-sign cosine constants to
  // zero; step 2 is the exchange symmetry tying the two cells of each pair.
  // The remaining unknowns are b_pp (= b_mm), b_pm (= b_mp), c_pm (= c_mp).
  //
  // Step 3, regularity: d^2(sum P)/dtheta^2 = 0 for all theta requires the
  // sin(n theta) and cos(n theta) coefficients to vanish separately:
  //   -2 b_pm c_pm = 0   and   b_pp^2 + b_pm^2 - c_pm^2 = 0.
  // A vanishing c_pm would kill the mixed cells at theta = 0, contradicting
  // P(+-|0) = 1/2, so b_pm = 0 and b_pp^2 = c_pm^2.
  //
  // Step 4, normalization: sum P = (2 b_pp^2 + 2 c_pm^2)/4 = 1 gives
  // b_pp^2 = c_pm^2 = 2; positive roots by convention.
  const double root = std::sqrt(2.0);

  ConstantSolveResult result;
  result.n = model.n();
  result.B[index_of(Outcome::PP)] = root;
  result.B[index_of(Outcome::MM)] = root;
  result.C[index_of(Outcome::PM)] = root;
  result.C[index_of(Outcome::MP)] = root;

  // Verify on a grid: unit mass, and flat second derivative of the mass.
  AmplitudeSet amps;
  amps.n = result.n;
  amps.B = result.B;
  amps.C = result.C;
  const int grid = 256;
  double worst = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double t = kTwoPi * k / grid;
    worst = std::max(worst, std::fabs(amps.probability_mass(t) - 1.0));
    // (sum q^2 / 4)'' = (1/2) sum (q'^2 + q q'') evaluated in closed form.
    double curv = 0.0;
    for (Outcome o : kOutcomes) {
      const double qp = amps.derivative(o, t);
      curv += qp * qp + amps.value(o, t) * amps.second_derivative(o, t);
    }
    worst = std::max(worst, std::fabs(0.5 * curv));
  }
  result.residual = worst;
  return result;
}

double regularity_scan(double b_pp, double b_pm, double c_pm, int n, int grid_points) {
  SpinModel model(n);
  if (grid_points < 64)
    throw std::invalid_argument("regularity_scan: grid_points must be >= 64");
  const double n2 = model.n_squared();
  const double sin_coeff = -2.0 * b_pm * c_pm;
  const double cos_coeff = b_pp * b_pp + b_pm * b_pm - c_pm * c_pm;
  double worst = 0.0;
  for (int k = 0; k < grid_points; ++k) {
    const double t = kTwoPi * k / grid_points;
    const double curv =
        0.25 * n2 * (sin_coeff * std::sin(model.n() * t) + cos_coeff * std::cos(model.n() * t));
    worst = std::max(worst, std::fabs(curv));
  }
  return worst;
}

double metric_mass_ratio(const AmplitudeSet& amps, double theta) {
  const double mass = amps.probability_mass(theta);
  if (!(mass > 0.0))
    throw std::invalid_argument("metric_mass_ratio: probability mass must be positive");
  return amps.rao_fisher_metric(theta) / mass;
}

}  // namespace epibohm::solver
