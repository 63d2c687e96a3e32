#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>

#include "epibohm/estimation.hpp"
#include "epibohm/model.hpp"
#include "epibohm/numerics.hpp"
#include "epibohm/types.hpp"

using namespace epibohm;
using model::FisherForm;

namespace {

const std::array<int, 4> kAllN = {1, -1, 2, -2};

double rand_angle(std::uint64_t seed, std::uint64_t k) {
  return estimation::stream_uniform01(seed, k) * kTwoPi;
}

}  // namespace

TEST_CASE("spin model accepts exactly the four quantum numbers") {
  for (int n : kAllN) CHECK(SpinModel(n).n() == n);
  CHECK_THROWS_AS(SpinModel(0), UnsupportedModelError);
  CHECK_THROWS_AS(SpinModel(3), UnsupportedModelError);
  CHECK_THROWS_AS(SpinModel(-5), UnsupportedModelError);

  CHECK(SpinModel(1).spin() == SpinLabel::Half);
  CHECK(SpinModel(-1).spin() == SpinLabel::Half);
  CHECK(SpinModel(2).spin() == SpinLabel::One);
  CHECK(SpinModel(-2).spin() == SpinLabel::One);
  CHECK(SpinModel(1).handedness() == Handedness::Right);
  CHECK(SpinModel(-2).handedness() == Handedness::Left);
  CHECK(SpinModel(-2).n_squared() == 4);
}

TEST_CASE("angles reduce into [0, 2 pi)") {
  CHECK(Angle(0.0).radians() == 0.0);
  CHECK(Angle(kTwoPi).radians() == 0.0);
  CHECK(Angle(kTwoPi + 1.0).radians() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(Angle(-kPi / 2).radians() == doctest::Approx(1.5 * kPi).epsilon(1e-14));
  for (std::uint64_t k = 0; k < 200; ++k) {
    const double raw = (estimation::stream_uniform01(11, k) - 0.5) * 50.0;
    const double reduced = Angle(raw).radians();
    CHECK(reduced >= 0.0);
    CHECK(reduced < kTwoPi);
  }
  CHECK_THROWS_AS(Angle(std::nan("")), std::invalid_argument);
}

TEST_CASE("probability reproduces the landmark table values exactly") {
  for (int n : kAllN) {
    const SpinModel m(n);
    CHECK(model::probability(Outcome::PP, Angle(0.0), m) == 0.0);
    CHECK(model::probability(Outcome::MM, Angle(0.0), m) == 0.0);
    CHECK(model::probability(Outcome::PM, Angle(0.0), m) == 0.5);
    CHECK(model::probability(Outcome::MP, Angle(0.0), m) == 0.5);
  }
  // Half-period landmarks: the equal-sign and mixed cells trade places.
  for (int n : {1, -1}) {
    const SpinModel m(n);
    CHECK(model::probability(Outcome::PP, Angle(kPi), m) == 0.5);
    CHECK(model::probability(Outcome::PM, Angle(kPi), m) == 0.0);
    CHECK(model::probability(Outcome::PP, Angle(kPi / 2), m) ==
          doctest::Approx(0.25).epsilon(1e-15));
  }
  for (int n : {2, -2}) {
    const SpinModel m(n);
    CHECK(model::probability(Outcome::PP, Angle(kPi / 2), m) == 0.5);
    CHECK(model::probability(Outcome::PM, Angle(kPi / 2), m) == 0.0);
    CHECK(model::probability(Outcome::PP, Angle(kPi / 4), m) ==
          doctest::Approx(0.25).epsilon(1e-15));
  }
}

TEST_CASE("probability agrees with the half-angle square form") {
  // Independent route: 0.5 sin^2(n theta/2) and 0.5 cos^2(n theta/2).
  for (int n : kAllN) {
    const SpinModel m(n);
    for (std::uint64_t k = 0; k < 500; ++k) {
      const double t = rand_angle(21, k);
      const double u = 0.5 * n * t;
      const double sin_sq = 0.5 * std::sin(u) * std::sin(u);
      const double cos_sq = 0.5 * std::cos(u) * std::cos(u);
      CHECK(model::probability(Outcome::PP, Angle(t), m) == doctest::Approx(sin_sq).epsilon(1e-15));
      CHECK(model::probability(Outcome::MM, Angle(t), m) == doctest::Approx(sin_sq).epsilon(1e-15));
      CHECK(model::probability(Outcome::PM, Angle(t), m) == doctest::Approx(cos_sq).epsilon(1e-15));
      CHECK(model::probability(Outcome::MP, Angle(t), m) == doctest::Approx(cos_sq).epsilon(1e-15));
    }
  }
}

TEST_CASE("joint distribution is normalized, in range, and mirror symmetric") {
  for (int n : kAllN) {
    const SpinModel m(n);
    for (std::uint64_t k = 0; k < 1000; ++k) {
      const Angle t(rand_angle(33, k));
      const JointDistribution joint = model::joint_distribution(t, m);
      CHECK(std::fabs(joint.sum() - 1.0) <= 1e-12);
      for (Outcome o : kOutcomes) {
        CHECK(joint[o] >= 0.0);
        CHECK(joint[o] <= 0.5);
      }
      CHECK(joint[Outcome::PP] == joint[Outcome::MM]);
      CHECK(joint[Outcome::PM] == joint[Outcome::MP]);
    }
  }
}

TEST_CASE("joint distribution landmark rows") {
  const JointDistribution at_zero = model::joint_distribution(Angle(0.0), SpinModel(1));
  CHECK(at_zero[Outcome::PP] == 0.0);
  CHECK(at_zero[Outcome::MM] == 0.0);
  CHECK(at_zero[Outcome::PM] == 0.5);
  CHECK(at_zero[Outcome::MP] == 0.5);

  // Quarter-period: all four cells equal 1/4.
  const JointDistribution quarter = model::joint_distribution(Angle(kPi / 2), SpinModel(1));
  for (Outcome o : kOutcomes) CHECK(quarter[o] == doctest::Approx(0.25).epsilon(1e-15));
  const JointDistribution quarter2 = model::joint_distribution(Angle(kPi / 4), SpinModel(2));
  for (Outcome o : kOutcomes) CHECK(quarter2[o] == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("joint distribution validation") {
  CHECK_THROWS_AS(JointDistribution({0.5, 0.5, 0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(JointDistribution({-0.25, 0.5, 0.5, 0.25}), std::invalid_argument);
  CHECK_NOTHROW(JointDistribution({0.25, 0.25, 0.25, 0.25}));
}

TEST_CASE("amplitudes square to four times the probability") {
  for (int n : kAllN) {
    const SpinModel m(n);
    for (std::uint64_t k = 0; k < 300; ++k) {
      const Angle t(rand_angle(55, k));
      for (Outcome o : kOutcomes) {
        for (int sign : {+1, -1}) {
          const double q = model::amplitude(o, t, m, sign);
          CHECK(std::fabs(q * q - 4.0 * model::probability(o, t, m)) <= 1e-12);
        }
        CHECK(model::amplitude(o, t, m, -1) == -model::amplitude(o, t, m, +1));
      }
    }
  }
  CHECK(model::amplitude(Outcome::PP, Angle(kPi), SpinModel(1)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(model::amplitude(Outcome::PM, Angle(0.0), SpinModel(2)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(model::amplitude(Outcome::PP, Angle(1.0), SpinModel(1), 2),
                  std::invalid_argument);
}

TEST_CASE("amplitude continuation flips sign after one turn only for |n| = 1") {
  // Evaluated on the raw coefficient set: the Angle wrapper would fold the
  // second sheet back onto the first.
  for (int n : kAllN) {
    const AmplitudeSet amps = AmplitudeSet::epi_solution(SpinModel(n));
    const double expected_sign = std::abs(n) == 1 ? -1.0 : 1.0;
    for (std::uint64_t k = 0; k < 100; ++k) {
      const double t = rand_angle(77, k);
      for (Outcome o : kOutcomes) {
        CHECK(std::fabs(amps.value(o, t + kTwoPi) - expected_sign * amps.value(o, t)) <= 1e-12);
        CHECK(std::fabs(amps.value(o, t + 2 * kTwoPi) - amps.value(o, t)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("single-particle marginal is flat") {
  CHECK(model::marginal_single() == 0.5);
  CHECK(model::marginal_single(Angle(1.234)) == 0.5);
}

TEST_CASE("angle-averaged joint cells are uniform") {
  for (int n : kAllN) {
    const SpinModel m(n);
    double total = 0.0;
    for (Outcome o : kOutcomes) {
      const double avg = model::averaged_joint(o, m, 256);
      CHECK(std::fabs(avg - 0.25) <= 1e-10);
      total += avg;
    }
    CHECK(std::fabs(total - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(model::averaged_joint(Outcome::PP, SpinModel(1), 15), std::invalid_argument);
  CHECK_THROWS_AS(model::averaged_joint(Outcome::PP, SpinModel(1), 33), std::invalid_argument);
}

TEST_CASE("conditional given the other particle is one half") {
  for (int n : kAllN)
    CHECK(std::fabs(model::conditional_given_other(SpinModel(n)) - 0.5) <= 1e-10);
}

TEST_CASE("dependence gap: pointwise values and zero mean over the period") {
  const auto gap0 = model::dependence_gap(Angle(0.0), SpinModel(1));
  CHECK(gap0[index_of(Outcome::PP)] == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(gap0[index_of(Outcome::MM)] == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(gap0[index_of(Outcome::PM)] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(gap0[index_of(Outcome::MP)] == doctest::Approx(0.25).epsilon(1e-15));

  const auto gap_quarter = model::dependence_gap(Angle(kPi / 2), SpinModel(1));
  for (double g : gap_quarter) CHECK(std::fabs(g) <= 1e-15);

  // Quadrature oracle: the gap averages to zero cell by cell.
  for (int n : kAllN) {
    const SpinModel m(n);
    for (Outcome o : kOutcomes) {
      const double mean = trapezoid_periodic(
          [&](double t) { return model::dependence_gap(Angle(t), m)[index_of(o)] / kTwoPi; },
          kTwoPi, 512);
      CHECK(std::fabs(mean) <= 1e-10);
    }
  }
}

TEST_CASE("closed-form Fisher information is n squared") {
  CHECK(model::fisher_information_closed(SpinModel(1)) == 1.0);
  CHECK(model::fisher_information_closed(SpinModel(-1)) == 1.0);
  CHECK(model::fisher_information_closed(SpinModel(2)) == 4.0);
  CHECK(model::fisher_information_closed(SpinModel(-2)) == 4.0);
}

TEST_CASE("numeric Fisher information: all three forms sit on n squared") {
  const std::array<FisherForm, 3> forms = {FisherForm::Analytical, FisherForm::Metric,
                                           FisherForm::Epi};
  for (int n : kAllN) {
    const SpinModel m(n);
    std::uint64_t k = 0;
    int tested = 0;
    while (tested < 100) {
      const double t = rand_angle(99, k++);
      bool regular = true;
      for (Outcome o : kOutcomes)
        regular = regular && model::probability(o, Angle(t), m) > 1e-8;
      if (!regular) continue;
      ++tested;
      for (FisherForm form : forms) {
        const double info = model::fisher_information_numeric(Angle(t), m, form);
        CHECK(std::fabs(info - m.n_squared()) <= 1e-6);
      }
    }
  }
}

TEST_CASE("numeric Fisher information: specific angles and the plain stencil") {
  CHECK(std::fabs(model::fisher_information_numeric(Angle(1.0), SpinModel(1),
                                                    FisherForm::Metric, 1e-4) -
                  1.0) <= 1e-6);
  CHECK(std::fabs(model::fisher_information_numeric(Angle(0.3), SpinModel(2),
                                                    FisherForm::Epi, 1e-4) -
                  4.0) <= 1e-6);
  // Without Richardson extrapolation the plain h^2 stencil must still hit the
  // documented tolerance away from cell zeros.
  CHECK(std::fabs(model::fisher_information_numeric(Angle(1.0), SpinModel(1),
                                                    FisherForm::Analytical, 1e-4, false) -
                  1.0) <= 1e-6);
}

TEST_CASE("numeric Fisher information: singular cells and step validation") {
  CHECK_THROWS_AS(model::fisher_information_numeric(Angle(0.0), SpinModel(1),
                                                    FisherForm::Analytical),
                  SingularCellError);
  CHECK_THROWS_AS(model::fisher_information_numeric(Angle(0.0), SpinModel(1),
                                                    FisherForm::Metric),
                  SingularCellError);
  // The amplitude assembly has no division, so it is defined at the zeros too.
  CHECK(std::fabs(model::fisher_information_numeric(Angle(0.0), SpinModel(1),
                                                    FisherForm::Epi) -
                  1.0) <= 1e-6);
  CHECK_THROWS_AS(model::fisher_information_numeric(Angle(1.0), SpinModel(1),
                                                    FisherForm::Metric, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(model::fisher_information_numeric(Angle(1.0), SpinModel(1),
                                                    FisherForm::Metric, 2e-3),
                  std::invalid_argument);
}

TEST_CASE("channel capacity equals 2 pi n^2") {
  CHECK(std::fabs(model::channel_capacity(SpinModel(1), 1024) - kTwoPi) <= 1e-8);
  CHECK(std::fabs(model::channel_capacity(SpinModel(-1), 1024) - kTwoPi) <= 1e-8);
  CHECK(std::fabs(model::channel_capacity(SpinModel(2), 1024) - 4.0 * kTwoPi) <= 1e-8);
  CHECK(std::fabs(model::channel_capacity(SpinModel(-2), 1024) - 4.0 * kTwoPi) <= 1e-8);
  CHECK(model::channel_capacity(SpinModel(2), 1024) == doctest::Approx(25.13274123).epsilon(1e-9));

  // Independent route: integrate the metric-form density sum (dq/dtheta)^2;
  // integration by parts over the closed period makes the two integrals equal.
  for (int n : kAllN) {
    const AmplitudeSet amps = AmplitudeSet::epi_solution(SpinModel(n));
    const double via_rates =
        trapezoid_periodic([&](double t) { return amps.rao_fisher_metric(t); }, kTwoPi, 1024);
    CHECK(std::fabs(model::channel_capacity(SpinModel(n), 1024) - via_rates) <= 1e-8);
  }

  CHECK_THROWS_AS(model::channel_capacity(SpinModel(1), 62), std::invalid_argument);
  CHECK_THROWS_AS(model::channel_capacity(SpinModel(1), 127), std::invalid_argument);
}

TEST_CASE("every cell carries the same amplitude norm 2 pi") {
  for (int n : kAllN) {
    double total = 0.0;
    for (Outcome o : kOutcomes) {
      const double cell_norm = model::amplitude_norm_integral(o, SpinModel(n), 512);
      CHECK(std::fabs(cell_norm - kTwoPi) <= 1e-10);
      total += cell_norm;
    }
    CHECK(std::fabs(total - 4.0 * kTwoPi) <= 1e-9);
  }
  CHECK_THROWS_AS(model::amplitude_norm_integral(Outcome::PP, SpinModel(1), 10),
                  std::invalid_argument);
}

TEST_CASE("information budget closes at kappa = 1") {
  for (int n : kAllN) {
    const InformationBudget budget = model::information_budget(SpinModel(n));
    CHECK(budget.kappa == 1.0);
    CHECK(std::fabs(budget.channel - kTwoPi * SpinModel(n).n_squared()) <= 1e-8);
    CHECK(std::fabs(budget.bound + budget.channel) <= 1e-8);
    CHECK(std::fabs(budget.total) <= 1e-8);
  }
}

TEST_CASE("equal-sign law is the mixed law shifted by the half period") {
  for (int n : kAllN) {
    const SpinModel m(n);
    for (std::uint64_t k = 0; k < 200; ++k)
      CHECK(model::shift_symmetry_residual(Angle(rand_angle(111, k)), m) <= 1e-12);
  }
  CHECK(model::shift_symmetry_residual(Angle(0.7), SpinModel(1)) <= 1e-12);
  CHECK(model::shift_symmetry_residual(Angle(2.1), SpinModel(2)) <= 1e-12);
}

TEST_CASE("joint information dominates the flat marginals") {
  const auto check1 = model::superadditivity_check(Angle(1.0), SpinModel(1));
  CHECK(check1.joint == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(check1.marginal_sum == 0.0);
  CHECK(check1.holds);
  const auto check2 = model::superadditivity_check(Angle(0.2), SpinModel(2));
  CHECK(check2.joint == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(check2.holds);
}
