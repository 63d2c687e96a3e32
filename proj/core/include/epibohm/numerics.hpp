#pragma once

#include <stdexcept>

#include "epibohm/types.hpp"

namespace epibohm {

/// Composite trapezoid rule over one full period [0, period) with `panels`
/// uniform panels.  For a periodic integrand the endpoint weights coalesce,
/// so this is the plain equal-weight sum; it integrates trigonometric
/// polynomials of degree < panels exactly, which is what makes the capacity
/// and norm integrals machine-accurate on modest grids.
template <typename F>
double trapezoid_periodic(F&& f, double period, int panels) {
  if (panels < 2) throw std::invalid_argument("trapezoid_periodic: panels must be >= 2");
  const double h = period / panels;
  double acc = 0.0;
  for (int k = 0; k < panels; ++k) acc += f(k * h);
  return acc * h;
}

/// Composite Simpson rule on [lo, hi] with an even number of panels.  Used for
/// the one integral in the project whose integrand is not periodic over the
/// integration window (the orthogonality integral at a generic wavelength).
template <typename F>
double simpson(F&& f, double lo, double hi, int panels) {
  if (panels < 2) throw std::invalid_argument("simpson: panels must be >= 2");
  if (panels % 2 != 0) ++panels;
  const double h = (hi - lo) / panels;
  double acc = f(lo) + f(hi);
  for (int k = 1; k < panels; ++k) acc += f(lo + k * h) * (k % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

/// Central first difference, optionally Richardson-extrapolated (h and h/2
/// stencils combined to cancel the leading h^2 error term).
template <typename F>
double central_derivative(F&& f, double x, double h, bool richardson = false) {
  auto d = [&](double step) { return (f(x + step) - f(x - step)) / (2.0 * step); };
  if (!richardson) return d(h);
  return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

/// Central second difference with the same optional extrapolation.
template <typename F>
double central_second_derivative(F&& f, double x, double h, bool richardson = false) {
  auto d = [&](double step) {
    return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
  };
  if (!richardson) return d(h);
  return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

}  // namespace epibohm
