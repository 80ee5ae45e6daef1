#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "vdwshock/errors.hpp"
#include "vdwshock/thermo.hpp"

using namespace vdw;

TEST(Thermo, SoundSpeedExamples) {
  EXPECT_NEAR(sound_speed({1.0, 1.0}, {1.4, 0.0}), std::sqrt(1.4), 1e-15);
  EXPECT_NEAR(sound_speed({1.0, 1.0}, {1.4, 0.5}), std::sqrt(2.8), 1e-15);
  EXPECT_NEAR(sound_speed({2.0, 2.0}, {2.0, 0.0}), std::sqrt(2.0), 1e-15);
}

TEST(Thermo, SoundSpeedRejectsPackedOrNonPositiveStates) {
  EXPECT_THROW(sound_speed({2.0, 1.0}, {1.4, 0.5}), DomainError);
  EXPECT_THROW(sound_speed({1.0, 0.0}, {1.4, 0.1}), DomainError);
  EXPECT_THROW(sound_speed({-1.0, 1.0}, {1.4, 0.1}), DomainError);
}

TEST(Thermo, IdealReductionAndMonotonicityInCovolume) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    const ThermoState s{u(rng), u(rng)};
    const double g = 1.0 + 0.3 * u(rng);
    EXPECT_DOUBLE_EQ(sound_speed(s, {g, 0.0}, s.rho), ideal_sound_speed(s, g));
    double prev = 0.0;
    for (double bt = 0.0; bt < 0.95; bt += 0.05) {
      const double a = sound_speed(s, {g, bt}, s.rho);
      EXPECT_GT(a, prev);
      prev = a;
    }
  }
}

TEST(Thermo, EnergyAndEnthalpyExamples) {
  const ThermoState ref{1.0, 1.0};
  ThermoValues v = thermo_eval({1.0, 1.0}, {1.4, 0.0}, ref);
  EXPECT_NEAR(v.e, 2.5, 1e-14);
  EXPECT_NEAR(v.h, 3.5, 1e-14);
  v = thermo_eval({1.0, 1.0}, {1.4, 0.5}, ref);
  EXPECT_NEAR(v.e, 1.25, 1e-14);
  EXPECT_NEAR(v.h, 2.25, 1e-14);
  EXPECT_NEAR(v.s_rel, 0.0, 1e-15);
}

TEST(Thermo, EnthalpyMinusEnergyIsPV) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const GasModel gas{1.05 + u(rng), 0.9 * u(rng)};
    const ThermoState s{0.2 + 0.8 * u(rng), 0.1 + 5.0 * u(rng)};
    const ThermoValues v = thermo_eval(s, gas, {1.0, 1.0});
    EXPECT_NEAR(v.h - v.e, s.p / s.rho, 1e-12 * (1.0 + v.h));
  }
}

TEST(Thermo, EntropyOffsetVanishesOnTheReferenceAdiabat) {
  const GasModel gas{1.4, 0.3};
  const ThermoState ref{1.0, 1.0};
  const double b = covolume(gas);
  const double V = 1.0 / 0.8;
  const double p = std::pow((1.0 - b) / (V - b), gas.gamma);
  EXPECT_NEAR(thermo_eval({0.8, p}, gas, ref).s_rel, 0.0, 1e-14);
}

TEST(Thermo, ReferenceConstants) {
  ReferenceState r = reference_constants(1.0, 1.0, {1.4, 0.0});
  EXPECT_EQ(r.kappa0, 1.0);
  EXPECT_DOUBLE_EQ(r.c0, r.a0);
  r = reference_constants(1.0, 1.0, {1.4, 0.3});
  EXPECT_NEAR(r.kappa0, std::pow(0.7, -1.2), 1e-14);
  EXPECT_NEAR(r.kappa0, 1.53415, 1e-4);
  EXPECT_NEAR(r.c0 * r.kappa0, r.a0, 1e-15);
  r = reference_constants(2.0, 3.0, {1.4, 0.6});
  EXPECT_NEAR(r.kappa0, 3.00281, 5e-6);
  EXPECT_NEAR(r.a0, std::sqrt(1.4 * 3.0 / (2.0 * 0.4)), 1e-14);
  EXPECT_THROW(reference_constants(1.0, 1.0, {1.4, 1.0}), DomainError);
  EXPECT_THROW(reference_constants(0.0, 1.0, {1.4, 0.1}), DomainError);
}

TEST(Thermo, Kappa0IncreasesWithCovolumeAndGamma) {
  for (double g : {1.1, 1.4, 5.0 / 3.0}) {
    double prev = 0.0;
    for (double bt = 0.0; bt < 0.95; bt += 0.05) {
      const double k = kappa0({g, bt});
      EXPECT_GT(k, prev);
      EXPECT_GE(k, 1.0);
      if (bt > 0.0) EXPECT_GT(kappa0({g + 0.1, bt}), k);
      prev = k;
    }
  }
}

TEST(Thermo, ValidateGasNamesTheInvariant) {
  EXPECT_NO_THROW(validate_gas({1.4, 0.0}));
  try {
    validate_gas({1.0, 0.0});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "gamma must exceed 1");
  }
  try {
    validate_gas({1.4, 1.0});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "btilde must be below 1");
  }
  EXPECT_THROW(validate_gas({1.4, -0.1}), DomainError);
}
