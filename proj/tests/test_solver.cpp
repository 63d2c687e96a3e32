#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>

#include "epibohm/estimation.hpp"
#include "epibohm/model.hpp"
#include "epibohm/solver.hpp"
#include "epibohm/types.hpp"

using namespace epibohm;

namespace {

const std::array<int, 4> kAllN = {1, -1, 2, -2};
const double kRoot2 = std::sqrt(2.0);

double rand_angle(std::uint64_t seed, std::uint64_t k) {
  return estimation::stream_uniform01(seed, k) * kTwoPi;
}

}  // namespace

TEST_CASE("the sign of A^2 classifies the solution family") {
  CHECK(solver::classify_family({1.0}) == solver::SolutionFamily::Exponential);
  CHECK(solver::classify_family({0.25}) == solver::SolutionFamily::Exponential);
  CHECK(solver::classify_family({-4.0}) == solver::SolutionFamily::Trigonometric);
  CHECK(solver::classify_family({-1.0}) == solver::SolutionFamily::Trigonometric);
  CHECK_THROWS_AS(solver::classify_family({0.0}), std::invalid_argument);
}

TEST_CASE("admissible oscillation parameter a = 2/n") {
  CHECK(solver::admissible_a(1) == 2.0);
  CHECK(solver::admissible_a(-1) == -2.0);
  CHECK(solver::admissible_a(2) == 1.0);
  CHECK(solver::admissible_a(-2) == -1.0);
  CHECK_THROWS_AS(solver::admissible_a(3), UnsupportedModelError);
  CHECK_THROWS_AS(solver::admissible_a(0), UnsupportedModelError);
}

TEST_CASE("orthogonality integral vanishes at the admissible wavelengths") {
  CHECK(std::fabs(solver::orthogonality_integral(2.0, 1024)) <= 1e-9);
  CHECK(std::fabs(solver::orthogonality_integral(1.0, 1024)) <= 1e-9);
  CHECK(std::fabs(solver::orthogonality_integral(-2.0, 1024)) <= 1e-9);

  // Generic wavelength: quadrature against the closed form (a/2) sin^2(2 pi/a),
  // evaluated independently.
  for (double a : {0.8, 0.65, 1.37, 3.1}) {
    const double closed = 0.5 * a * std::sin(kTwoPi / a) * std::sin(kTwoPi / a);
    CHECK(std::fabs(solver::orthogonality_integral(a, 8192) - closed) <= 1e-9);
  }
  CHECK(solver::orthogonality_integral(0.8, 8192) == doctest::Approx(0.4).epsilon(1e-9));

  CHECK_THROWS_AS(solver::orthogonality_integral(0.0, 1024), std::invalid_argument);
  CHECK_THROWS_AS(solver::orthogonality_integral(2.0, 63), std::invalid_argument);
}

TEST_CASE("RK4 reproduces the closed-form families") {
  // Oscillatory branch, |n| = 1: A^2 = -4, start on the sine solution.
  const solver::OdeSolution sine_run = solver::solve_generating_ode({-4.0}, 0.0, kRoot2 / 2, 4097);
  CHECK(std::fabs(sine_run.value_at(kPi) - kRoot2) <= 1e-6);
  // Oscillatory branch, |n| = 2: A^2 = -1, start on the cosine solution.
  const solver::OdeSolution cosine_run = solver::solve_generating_ode({-1.0}, kRoot2, 0.0, 4097);
  CHECK(std::fabs(cosine_run.value_at(kPi) + kRoot2) <= 1e-6);
  // Exponential branch: A^2 = +1 from (1, 1) is exactly exp(theta).
  const solver::OdeSolution exp_run = solver::solve_generating_ode({1.0}, 1.0, 1.0, 4097);
  CHECK(std::fabs(exp_run.value_at(1.0) - std::exp(1.0)) <= 1e-6);

  // Node queries return the stored values exactly.
  CHECK(exp_run.value_at(exp_run.grid[100]) == exp_run.values[100]);
  CHECK(exp_run.derivative_at(exp_run.grid[100]) ==
        doctest::Approx(exp_run.derivative_values[100]).epsilon(1e-12));

  CHECK_THROWS_AS(solver::solve_generating_ode({-4.0}, 0.0, 1.0, 256), std::invalid_argument);
  CHECK_THROWS_AS(solver::solve_generating_ode({0.0}, 0.0, 1.0, 4097), std::invalid_argument);
  CHECK_THROWS_AS(exp_run.value_at(-0.5), std::invalid_argument);
}

TEST_CASE("RK4 tracks arbitrary oscillatory initial data over the whole grid") {
  for (int n : kAllN) {
    const double half_n = 0.5 * n;
    for (int trial = 0; trial < 10; ++trial) {
      const double q0 = estimation::stream_uniform01(7, 2 * trial) * 4.0 - 2.0;
      const double v0 = estimation::stream_uniform01(7, 2 * trial + 1) * 4.0 - 2.0;
      const solver::OdeSolution run =
          solver::solve_generating_ode({-4.0 / (n * n)}, q0, v0, 4097);
      double worst = 0.0;
      for (std::size_t i = 0; i < run.grid.size(); ++i) {
        const double u = half_n * run.grid[i];
        const double closed = q0 * std::cos(u) + (v0 / half_n) * std::sin(u);
        worst = std::max(worst, std::fabs(run.values[i] - closed));
      }
      CHECK(worst <= 1e-6);
    }
  }
}

TEST_CASE("principle residuals vanish on the selected amplitudes") {
  for (int n : kAllN) {
    const SpinModel m(n);
    for (std::uint64_t k = 0; k < 64; ++k) {
      const Angle t(rand_angle(13, k));
      for (double r : solver::structural_principle_residual(t, m)) CHECK(std::fabs(r) <= 1e-6);
      for (double r : solver::euler_lagrange_residual(t, m)) CHECK(std::fabs(r) <= 1e-6);
    }
  }
}

TEST_CASE("principle residuals reject detuned amplitudes") {
  // A 10% frequency dilation of the |n| = 1 sine amplitude.
  auto detuned = [](double t) { return kRoot2 * std::sin(0.9 * 0.5 * t); };
  CHECK(std::fabs(solver::structural_residual(detuned, -4.0, 1.0)) > 1e-3);

  // Both residuals stay bounded away from zero somewhere for a 5% dilation,
  // for every model.
  for (int n : kAllN) {
    const double a2 = -4.0 / (n * n);
    auto dilated = [n](double t) { return kRoot2 * std::sin(1.05 * 0.5 * n * t); };
    double structural_peak = 0.0, euler_peak = 0.0;
    for (int k = 0; k < 64; ++k) {
      const double t = kTwoPi * k / 64;
      structural_peak =
          std::max(structural_peak, std::fabs(solver::structural_residual(dilated, a2, t)));
      euler_peak =
          std::max(euler_peak, std::fabs(solver::euler_lagrange_residual(dilated, a2, t)));
    }
    CHECK(structural_peak > 1e-3);
    CHECK(euler_peak > 1e-3);
  }
  CHECK_THROWS_AS(solver::structural_residual([](double) { return 1.0; }, 0.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("boundary constant of the selected amplitudes is zero") {
  for (int n : kAllN) {
    const AmplitudeSet amps = AmplitudeSet::epi_solution(SpinModel(n));
    for (Outcome o : kOutcomes) {
      const double c = solver::boundary_constant(
          [&](double t) { return amps.value(o, t); },
          [&](double t) { return amps.derivative(o, t); });
      CHECK(std::fabs(c) <= 1e-15);
    }
  }
}

TEST_CASE("constant elimination lands on the sqrt(2) pattern") {
  for (int n : kAllN) {
    const solver::ConstantSolveResult result = solver::solve_amplitude_constants(n);
    CHECK(result.n == n);
    CHECK(result.B[index_of(Outcome::PP)] == doctest::Approx(kRoot2).epsilon(1e-15));
    CHECK(result.B[index_of(Outcome::MM)] == doctest::Approx(kRoot2).epsilon(1e-15));
    CHECK(result.B[index_of(Outcome::PM)] == 0.0);
    CHECK(result.B[index_of(Outcome::MP)] == 0.0);
    CHECK(result.C[index_of(Outcome::PP)] == 0.0);
    CHECK(result.C[index_of(Outcome::MM)] == 0.0);
    CHECK(result.C[index_of(Outcome::PM)] == doctest::Approx(kRoot2).epsilon(1e-15));
    CHECK(result.C[index_of(Outcome::MP)] == doctest::Approx(kRoot2).epsilon(1e-15));
    CHECK(result.residual <= 1e-10);

    // The solved coefficients reproduce the closed-form law: q^2/4 = P.
    AmplitudeSet amps;
    amps.n = n;
    amps.B = result.B;
    amps.C = result.C;
    const SpinModel m(n);
    for (int k = 0; k < 256; ++k) {
      const double t = kTwoPi * k / 256;
      for (Outcome o : kOutcomes) {
        const double q = amps.value(o, t);
        CHECK(std::fabs(0.25 * q * q - model::probability(o, Angle(t), m)) <= 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(solver::solve_amplitude_constants(3), UnsupportedModelError);
}

TEST_CASE("regularity scan: flat for the solution, bounded away otherwise") {
  CHECK(solver::regularity_scan(kRoot2, 0.0, kRoot2, 1, 256) <= 1e-12);
  CHECK(solver::regularity_scan(1.0, 0.0, 1.0, 2, 256) <= 1e-12);
  CHECK(solver::regularity_scan(1.0, 0.0, -1.0, 1, 256) <= 1e-12);

  // Oracle for the non-solution (1, 1, 1): rebuild the mass curvature from the
  // general coefficient set and maximize it on a much finer grid.
  AmplitudeSet amps;
  amps.n = 1;
  amps.B = {1.0, 1.0, 1.0, 1.0};
  amps.C = {0.0, 0.0, 1.0, 1.0};
  double oracle = 0.0;
  for (int k = 0; k < 16384; ++k) {
    const double t = kTwoPi * k / 16384;
    double curv = 0.0;
    for (Outcome o : kOutcomes) {
      const double qp = amps.derivative(o, t);
      curv += qp * qp + amps.value(o, t) * amps.second_derivative(o, t);
    }
    oracle = std::max(oracle, std::fabs(0.5 * curv));
  }
  const double scanned = solver::regularity_scan(1.0, 1.0, 1.0, 1, 256);
  CHECK(scanned == doctest::Approx(oracle).epsilon(5e-4));
  // Hand value: max |(-2 sin t + cos t)/4| = sqrt(5)/4.
  CHECK(scanned == doctest::Approx(std::sqrt(5.0) / 4.0).epsilon(1e-3));

  CHECK_THROWS_AS(solver::regularity_scan(1.0, 0.0, 1.0, 1, 32), std::invalid_argument);
  CHECK_THROWS_AS(solver::regularity_scan(1.0, 0.0, 1.0, 5, 256), UnsupportedModelError);
}

TEST_CASE("metric/mass ratio is n squared at every scale") {
  for (int n : kAllN) {
    const SpinModel m(n);
    for (double mass : {0.1, 0.5, 1.0, 2.0, 10.0}) {
      const AmplitudeSet amps = AmplitudeSet::scaled_solution(m, mass);
      for (std::uint64_t k = 0; k < 64; ++k) {
        const double t = rand_angle(17, k);
        CHECK(std::fabs(amps.probability_mass(t) - mass) <= 1e-12 * std::max(1.0, mass));
        CHECK(std::fabs(solver::metric_mass_ratio(amps, t) - m.n_squared()) <= 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(AmplitudeSet::scaled_solution(SpinModel(1), 0.0), std::invalid_argument);
}
