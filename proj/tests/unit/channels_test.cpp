#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <xsdyn/channels.hpp>
#include <xsdyn/concurrence.hpp>
#include <xsdyn/errors.hpp>
#include <xsdyn/events.hpp>
#include <xsdyn/states.hpp>

#include "generators.hpp"

namespace xsdyn {
namespace {

using testing::Rng;

Mat2 apply2(const KrausSet2& k, const Mat2& rho) {
  Mat2 out;
  for (const auto& e : k.operators) out += e * rho * e.adjoint();
  return out;
}

TEST(PhaseDamping, IdentityAtZero) {
  const KrausSet2 k = kraus_phase_damping(1.0, 0.0);
  ASSERT_EQ(k.operators.size(), 2u);
  EXPECT_EQ(k.operators[0], Mat2::identity());
  EXPECT_EQ(k.operators[1].max_abs(), 0.0);
}

TEST(PhaseDamping, HalfDecay) {
  const KrausSet2 k = kraus_phase_damping(2.0, std::log(2.0));
  EXPECT_NEAR(k.operators[0](1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(k.operators[1](1, 1).real(), std::sqrt(3.0) / 2.0, 1e-15);
}

TEST(PhaseDamping, KeepsPopulations) {
  Rng rng(131);
  const Mat2 rho = testing::random_qubit_density(rng);
  const Mat2 out = apply2(kraus_phase_damping(0.7, 1.1), rho);
  EXPECT_NEAR(std::abs(out(0, 0) - rho(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out(0, 1) - rho(0, 1) * std::exp(-0.35 * 1.1)), 0.0, 1e-15);
}

TEST(AmplitudeDamping, IdentityAtZero) {
  const KrausSet2 k = kraus_amplitude_damping(1.0, 0.0);
  EXPECT_EQ(k.operators[0], Mat2::identity());
  EXPECT_EQ(k.operators[1].max_abs(), 0.0);
}

TEST(AmplitudeDamping, ExcitedDecaysToGround) {
  const Mat2 excited = Mat2::diagonal({0.0, 1.0});
  const Mat2 out = apply2(kraus_amplitude_damping(2.0, 0.5), excited);
  EXPECT_NEAR(out(1, 1).real(), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(out(0, 0).real(), 1.0 - std::exp(-1.0), 1e-15);
  const Mat2 ground = Mat2::diagonal({1.0, 0.0});
  EXPECT_EQ(apply2(kraus_amplitude_damping(2.0, 0.5), ground), ground);
}

TEST(AmplitudeDamping, Semigroup) {
  Rng rng(137);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat2 rho = testing::random_qubit_density(rng);
    const double rate = rng.uniform(0.1, 3.0);
    const double t1 = rng.uniform(0.0, 2.0);
    const double t2 = rng.uniform(0.0, 2.0);
    const Mat2 twice = apply2(kraus_amplitude_damping(rate, t2), apply2(kraus_amplitude_damping(rate, t1), rho));
    const Mat2 once = apply2(kraus_amplitude_damping(rate, t1 + t2), rho);
    EXPECT_LT(max_abs_diff(once, twice), 1e-14);
  }
}

TEST(RtnDelta, UnityAtZero) {
  for (double b : {0.0, 0.25, 0.5, 2.0}) EXPECT_EQ(rtn_delta(b, 1.0, 0.0), 1.0);
}

TEST(RtnDelta, NoCouplingMeansNoDephasing) {
  for (double t : {0.1, 1.0, 10.0, 100.0}) EXPECT_NEAR(rtn_delta(0.0, 1.0, t), 1.0, 1e-12);
  for (double t : {0.1, 1.0, 10.0}) EXPECT_NEAR(rtn_delta(1e-6, 1.0, t), 1.0, 1e-9);
}

TEST(RtnDelta, RegimeFormulas) {
  const double g = 1.3;
  const double t = 0.9;
  {
    const double b = 2.0 * g;
    const double mu = std::sqrt(std::pow(2.0 * b / g, 2) - 1.0);
    EXPECT_NEAR(rtn_delta(b, g, t), std::exp(-g * t) * (std::cos(mu * g * t) + std::sin(mu * g * t) / mu), 1e-15);
  }
  {
    const double b = 0.25 * g;
    const double mu = std::sqrt(1.0 - std::pow(2.0 * b / g, 2));
    EXPECT_NEAR(rtn_delta(b, g, t), std::exp(-g * t) * (std::cosh(mu * g * t) + std::sinh(mu * g * t) / mu), 1e-15);
  }
  EXPECT_NEAR(rtn_delta(0.5 * g, g, t), std::exp(-g * t) * (1.0 + g * t), 1e-15);
}

TEST(RtnDelta, ContinuousThroughCriticalCoupling) {
  const double at = rtn_delta(0.5, 1.0, 2.0);
  for (double eps : {1e-6, 1e-8, 1e-9}) {
    EXPECT_NEAR(rtn_delta(0.5 + eps, 1.0, 2.0), at, 1e-5);
    EXPECT_NEAR(rtn_delta(0.5 - eps, 1.0, 2.0), at, 1e-5);
  }
}

TEST(RtnDelta, OscillatesWithinEnvelope) {
  const double g = 1.0;
  const double b = 2.0;
  const double mu = std::sqrt(15.0);
  double prev = rtn_delta(b, g, 0.0);
  double first_zero = -1.0;
  for (double t = 1e-3; t < 10.0; t += 1e-3) {
    const double d = rtn_delta(b, g, t);
    EXPECT_LE(std::abs(d), std::exp(-g * t) * std::sqrt(1.0 + 1.0 / (mu * mu)) + 1e-15);
    if (first_zero < 0.0 && prev > 0.0 && d <= 0.0) {
      double lo = t - 1e-3;
      double hi = t;
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (rtn_delta(b, g, mid) > 0.0 ? lo : hi) = mid;
      }
      first_zero = lo;
    }
    prev = d;
  }
  // cos + sin/mu vanishes where tan(mu t) = -mu.
  EXPECT_NEAR(first_zero, (std::numbers::pi - std::atan(mu)) / mu, 1e-10);
}

TEST(RtnDelta, MarkovianIsPositiveAndDecreasing) {
  double prev = 1.0;
  for (double t = 0.01; t < 20.0; t += 0.01) {
    const double d = rtn_delta(0.25, 1.0, t);
    EXPECT_GT(d, 0.0);
    EXPECT_LT(d, prev);
    prev = d;
  }
}

TEST(Rtn, KrausOperators) {
  const KrausSet2 k = kraus_rtn(0.0, 1.0, 1.0);
  EXPECT_LT(max_abs_diff(k.operators[0], Mat2::identity()), 1e-12);
  EXPECT_LT(k.operators[1].max_abs(), 1e-6);
  Rng rng(139);
  const Mat2 rho = testing::random_qubit_density(rng);
  const double d = rtn_delta(2.0, 1.0, 0.7);
  const Mat2 out = apply2(kraus_rtn(2.0, 1.0, 0.7), rho);
  EXPECT_NEAR(std::abs(out(0, 1) - d * rho(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out(0, 0) - rho(0, 0)), 0.0, 1e-15);
}

TEST(Rtn, FullDephasingAtZeroOfDelta) {
  const double mu = std::sqrt(15.0);
  const double t0 = (std::numbers::pi - std::atan(mu)) / mu;
  const Mat2 plus{0.5, 0.5, 0.5, 0.5};
  const Mat2 out = apply2(kraus_rtn(2.0, 1.0, t0), plus);
  EXPECT_NEAR(std::abs(out(0, 1)), 0.0, 1e-12);
}

TEST(Lift, IdentityLiftsToIdentity) {
  const KrausSet4 k = lift_two_qubit(kraus_phase_damping(1.0, 0.0));
  ASSERT_EQ(k.operators.size(), 4u);
  EXPECT_EQ(k.operators[0], Mat4::identity());
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(k.operators[i].max_abs(), 0.0);
}

TEST(Lift, PhaseDampingScalesTwoPhotonCoherence) {
  const double rate = 0.8;
  const double t = 1.7;
  const DensityMatrix4 out = apply_channel(mnms_two_photon(0.6), lift_two_qubit(kraus_phase_damping(rate, t)));
  EXPECT_NEAR(out(0, 3).real(), 0.3 * std::exp(-rate * t), 1e-15);
  EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-15);
}

TEST(Lift, RtnScalesBothCoherences) {
  const double d = rtn_delta(2.0, 1.0, 0.4);
  const KrausSet4 k = lift_two_qubit(kraus_rtn(2.0, 1.0, 0.4));
  EXPECT_NEAR(apply_channel(mnms_two_photon(0.6), k)(0, 3).real(), 0.3 * d * d, 1e-15);
  EXPECT_NEAR(apply_channel(mnms_one_photon(0.6), k)(1, 2).real(), 0.3 * d * d, 1e-15);
}

TEST(Lift, AmplitudeDampingTwoPhoton) {
  const double t = 0.9;
  const double e = std::exp(-t);
  const DensityMatrix4 out = apply_channel(mnms_two_photon(0.6), lift_two_qubit(kraus_amplitude_damping(1.0, t)));
  EXPECT_NEAR(out(3, 3).real(), 0.5 * e * e, 1e-15);
  EXPECT_NEAR(out(1, 1).real(), 0.5 * e * (1.0 - e), 1e-15);
  EXPECT_NEAR(out(2, 2).real(), 0.5 * e * (1.0 - e), 1e-15);
  EXPECT_NEAR(out(0, 3).real(), 0.3 * e, 1e-15);
  EXPECT_NEAR(out(0, 0).real(), 1.0 - 0.5 * e * e - e * (1.0 - e), 1e-15);
}

TEST(Lift, AmplitudeDampingOnePhoton) {
  const double t = 0.9;
  const double e = std::exp(-t);
  const DensityMatrix4 out = apply_channel(mnms_one_photon(0.6), lift_two_qubit(kraus_amplitude_damping(1.0, t)));
  EXPECT_NEAR(out(1, 1).real(), 0.5 * e, 1e-15);
  EXPECT_NEAR(out(2, 2).real(), 0.5 * e, 1e-15);
  EXPECT_NEAR(out(1, 2).real(), 0.3 * e, 1e-15);
  EXPECT_NEAR(out(0, 0).real(), 1.0 - e, 1e-15);
}

TEST(Lift, PreservesXShape) {
  Rng rng(149);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix4 rho = testing::random_xstate(rng);
    const double t = rng.uniform(0.0, 3.0);
    for (const KrausSet2& k : {kraus_phase_damping(1.0, t), kraus_amplitude_damping(1.0, t), kraus_rtn(2.0, 1.0, t)})
      EXPECT_LE(off_x_magnitude(apply_channel(rho, lift_two_qubit(k)).matrix()), 1e-14);
  }
}

TEST(Cptp, RandomParameters) {
  Rng rng(151);
  for (int trial = 0; trial < 100; ++trial) {
    const double rate = rng.uniform(1e-3, 10.0);
    const double t = rng.uniform(0.0, 10.0);
    const double b = rng.uniform(0.0, 5.0);
    for (const KrausSet2& k : {kraus_phase_damping(rate, t), kraus_amplitude_damping(rate, t), kraus_rtn(b, rate, t)}) {
      EXPECT_TRUE(cptp_check(k).pass) << k.label;
      EXPECT_TRUE(cptp_check(lift_two_qubit(k)).pass) << k.label;
    }
  }
}

TEST(Cptp, ScaledSetFails) {
  KrausSet2 k = kraus_phase_damping(1.0, 0.5);
  k.operators[0] *= 1.01;
  const CptpReport r = cptp_check(k);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.deviation, 0.0201, 1e-12);
  const CptpReport lifted = cptp_check(lift_two_qubit(k));
  EXPECT_FALSE(lifted.pass);
  EXPECT_LE(lifted.deviation, 3.0 * r.deviation);
}

TEST(Cptp, LiftDeviationBound) {
  Rng rng(157);
  for (int trial = 0; trial < 100; ++trial) {
    KrausSet2 k = kraus_amplitude_damping(rng.uniform(0.1, 2.0), rng.uniform(0.0, 2.0));
    k.operators[1] *= 1.0 + rng.uniform(-0.05, 0.05);
    EXPECT_LE(cptp_check(lift_two_qubit(k)).deviation, 3.0 * cptp_check(k).deviation + 1e-15);
  }
}

TEST(ChannelConcurrence, PhaseDampingClosedForm) {
  const ChannelParams p{ChannelKind::PhaseDamping, 0.7, 0.0};
  for (double x : {0.2, 0.5, 1.0}) {
    const StateAt two = channel_state_map(mnms_two_photon(x), p);
    const StateAt one = channel_state_map(mnms_one_photon(x), p);
    for (double t = 0.0; t < 5.0; t += 0.37) {
      EXPECT_NEAR(concurrence(two(t)), x * std::exp(-0.7 * t), 1e-12);
      EXPECT_NEAR(concurrence(one(t)), x * std::exp(-0.7 * t), 1e-12);
    }
  }
}

TEST(ChannelConcurrence, AmplitudeDampingClosedForm) {
  const ChannelParams p{ChannelKind::AmplitudeDamping, 1.0, 0.0};
  for (double x : {0.2, 0.5, 0.9}) {
    const StateAt two = channel_state_map(mnms_two_photon(x), p);
    const StateAt one = channel_state_map(mnms_one_photon(x), p);
    for (double t = 0.0; t < 5.0; t += 0.23) {
      const double e = std::exp(-t);
      EXPECT_NEAR(concurrence(two(t)), std::max(0.0, e * (x - 1.0 + e)), 1e-12);
      EXPECT_NEAR(concurrence(one(t)), x * e, 1e-12);
    }
  }
}

TEST(ChannelConcurrence, RtnClosedForm) {
  const ChannelParams p{ChannelKind::RandomTelegraph, 1.0, 2.0};
  for (double x : {0.3, 1.0}) {
    const StateAt two = channel_state_map(mnms_two_photon(x), p);
    const StateAt one = channel_state_map(mnms_one_photon(x), p);
    for (double t = 0.0; t < 10.0; t += 0.11) {
      const double d = rtn_delta(2.0, 1.0, t);
      EXPECT_NEAR(concurrence(two(t)), x * d * d, 1e-12);
      EXPECT_NEAR(concurrence(one(t)), concurrence(two(t)), 1e-12);
    }
  }
}

TEST(ChannelParams, Validation) {
  EXPECT_THROW(check_channel({ChannelKind::PhaseDamping, 0.0, 0.0}), ParameterOutOfRange);
  EXPECT_THROW(check_channel({ChannelKind::RandomTelegraph, 1.0, -1.0}), ParameterOutOfRange);
  EXPECT_THROW(kraus_phase_damping(1.0, -0.1), ParameterOutOfRange);
  EXPECT_TRUE((ChannelParams{ChannelKind::RandomTelegraph, 1.0, 0.25}.markovian()));
  EXPECT_TRUE((ChannelParams{ChannelKind::RandomTelegraph, 1.0, 0.5}.markovian()));
  EXPECT_FALSE((ChannelParams{ChannelKind::RandomTelegraph, 1.0, 2.0}.markovian()));
}

TEST(ChannelEvolution, SampledTrajectory) {
  const Trajectory traj = evolve_channel(mnms_two_photon(0.5), {ChannelKind::AmplitudeDamping, 1.0, 0.0}, 2.0, 1e-2);
  EXPECT_EQ(traj.size(), 201u);
  const auto ev = detect_events(traj, concurrence_along(channel_state_map(mnms_two_photon(0.5),
                                                                          {ChannelKind::AmplitudeDamping, 1.0, 0.0})));
  ASSERT_EQ(ev.deaths().size(), 1u);
  EXPECT_NEAR(ev.deaths()[0], std::log(2.0), 1e-6);
}

TEST(ChannelEvolution, PhaseDampingOneAndTwoPhotonBitwiseEqual) {
  const ChannelParams pd{ChannelKind::PhaseDamping, 1.0, 0.0};
  for (double x : {0.1, 0.37, 0.8, 1.0}) {
    const Trajectory two = evolve_channel(mnms_two_photon(x), pd, 5.0, 1e-2);
    const Trajectory one = evolve_channel(mnms_one_photon(x), pd, 5.0, 1e-2);
    for (std::size_t i = 0; i < two.size(); ++i) EXPECT_EQ(two.concurrences[i], one.concurrences[i]) << x;
  }
}

}  // namespace
}  // namespace xsdyn
