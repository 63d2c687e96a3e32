#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "epibohm/errors.hpp"

namespace epibohm {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// ---------------------------------------------------------------------------
// Outcome cells
// ---------------------------------------------------------------------------

/// Joint spin outcome of the two-particle measurement: the first sign is
/// particle 1 along its analyzer axis, the second is particle 2 along the
/// rotated axis.
enum class Outcome : int { PP = 0, MM = 1, PM = 2, MP = 3 };

inline constexpr std::array<Outcome, 4> kOutcomes = {Outcome::PP, Outcome::MM,
                                                     Outcome::PM, Outcome::MP};

constexpr std::size_t index_of(Outcome o) { return static_cast<std::size_t>(o); }

/// Equal-sign cells (++, --) carry the sine amplitude branch; the mixed cells
/// (+-, -+) carry the cosine branch.
constexpr bool is_sine_cell(Outcome o) {
  return o == Outcome::PP || o == Outcome::MM;
}

inline const char* to_label(Outcome o) {
  switch (o) {
    case Outcome::PP: return "pp";
    case Outcome::MM: return "mm";
    case Outcome::PM: return "pm";
    case Outcome::MP: return "mp";
  }
  return "??";
}

// ---------------------------------------------------------------------------
// Spin model
// ---------------------------------------------------------------------------

enum class SpinLabel { Half, One };
enum class Handedness { Right, Left };

/// The admissible quantum number n selects both the particle spin and the
/// handedness of the representation: |n| = 1 is the spin-1/2 pair, |n| = 2 the
/// spin-1 pair; the sign of n distinguishes the two rotational senses.
class SpinModel {
 public:
  explicit SpinModel(int n) : n_(n) {
    if (n_ != 1 && n_ != -1 && n_ != 2 && n_ != -2) throw UnsupportedModelError(n_);
  }

  int n() const { return n_; }
  int abs_n() const { return n_ < 0 ? -n_ : n_; }
  int n_squared() const { return n_ * n_; }

  SpinLabel spin() const { return abs_n() == 1 ? SpinLabel::Half : SpinLabel::One; }
  Handedness handedness() const { return n_ > 0 ? Handedness::Right : Handedness::Left; }

  friend bool operator==(const SpinModel& a, const SpinModel& b) { return a.n_ == b.n_; }

 private:
  int n_;
};

// ---------------------------------------------------------------------------
// Analyzer angle
// ---------------------------------------------------------------------------

/// Relative analyzer angle, reduced into [0, 2*pi) at construction.  All
/// distributions in the model are 2*pi-periodic, so the reduction is exact.
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians);

  double radians() const { return theta_; }

 private:
  double theta_ = 0.0;
};

// ---------------------------------------------------------------------------
// Joint distribution over the four cells
// ---------------------------------------------------------------------------

/// Probability vector over the outcome cells.  Construction checks that the
/// entries are nonnegative and sum to one within 1e-12.
class JointDistribution {
 public:
  explicit JointDistribution(const std::array<double, 4>& p);

  double operator[](Outcome o) const { return p_[index_of(o)]; }
  const std::array<double, 4>& values() const { return p_; }
  double sum() const;

 private:
  std::array<double, 4> p_;
};

// ---------------------------------------------------------------------------
// Amplitude coefficient set
// ---------------------------------------------------------------------------

/// Real amplitudes q_cell(theta) = B_cell sin(n theta / 2) + C_cell cos(n theta / 2).
/// The generating-equation constant A^2 = -4/n^2 is derived, not stored.
struct AmplitudeSet {
  std::array<double, 4> B{};  // sine coefficients, indexed by Outcome
  std::array<double, 4> C{};  // cosine coefficients, indexed by Outcome
  int n = 1;

  double a_squared() const { return -4.0 / static_cast<double>(n * n); }

  double value(Outcome o, double theta) const;
  double derivative(Outcome o, double theta) const;
  double second_derivative(Outcome o, double theta) const;

  /// Sum over cells of q^2/4: the total probability mass this set assigns.
  double probability_mass(double theta) const;

  /// Sum over cells of (dq/dtheta)^2: the amplitude form of the scalar metric.
  double rao_fisher_metric(double theta) const;

  /// Coefficients selected by the information principles: B_pp = B_mm = sqrt(2),
  /// C_pm = C_mp = sqrt(2), all others zero.
  static AmplitudeSet epi_solution(const SpinModel& model);

  /// Same shape with B^2 = C^2 = 2*mass, so probability_mass() == mass for all
  /// theta.  Used to exercise scale invariance of the metric/mass ratio.
  static AmplitudeSet scaled_solution(const SpinModel& model, double mass);
};

// ---------------------------------------------------------------------------
// Information budget
// ---------------------------------------------------------------------------

/// Channel information I, bound information Q, and their sum K = I + kappa*Q.
/// For this model kappa = 1 and the budget closes: Q = -I, K = 0.
struct InformationBudget {
  double channel = 0.0;  // I
  double bound = 0.0;    // Q
  double total = 0.0;    // K
  double kappa = 1.0;
};

}  // namespace epibohm
