#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "vdwshock/errors.hpp"
#include "vdwshock/linear_acoustics.hpp"
#include "vdwshock/nonlinear_front.hpp"

using namespace vdw;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(NonlinearFront, CoefficientIdentityAndSigns) {
  const double alpha = kPi / 4;
  EXPECT_NEAR(c_beta(kPi / 8, alpha), -near_front_coefficient(kPi / 8 + alpha, alpha), 1e-12);
  EXPECT_LT(c_beta(kPi / 8, alpha) * c_beta(3 * kPi / 8, alpha), 0.0);
  EXPECT_GT(c_beta(kPi / 8, alpha), 0.0);
  EXPECT_LT(matching_coefficient(kPi / 8, alpha), 0.0);
  EXPECT_THROW(c_beta(alpha, alpha), SingularityError);
  EXPECT_GT(std::abs(c_beta(alpha * (1.0 - 1e-6), alpha)), 1e4);
}

TEST(NonlinearFront, Classification) {
  const double alpha = 0.5;
  EXPECT_EQ(classify_front(0.5 * alpha, alpha).kind, FrontKind::Rarefaction);
  EXPECT_EQ(classify_front(2.0 * alpha, alpha).kind, FrontKind::Shock);
  EXPECT_THROW(classify_front(alpha, alpha), SingularityError);
}

TEST(NonlinearFront, TransportResidual) {
  const GasModel gas{1.4, 0.2};
  const AmplitudeProfile cyl = [](double r, double) { return 0.7 / std::sqrt(r); };
  const double r1 = std::abs(transport_residual(cyl, 1.3, 0.2, 1e-2, gas));
  const double r2 = std::abs(transport_residual(cyl, 1.3, 0.2, 5e-3, gas));
  EXPECT_LT(r1, 1e-3);
  EXPECT_NEAR(std::log2(r1 / r2), 2.0, 0.1);
  const AmplitudeProfile zero = [](double, double) { return 0.0; };
  EXPECT_EQ(transport_residual(zero, 1.0, 0.0, 1e-3, gas), 0.0);
  EXPECT_DOUBLE_EQ(transport_coefficient({1.4, 0.0}), 1.2);
  // a = tau: residual k a = k tau.
  const AmplitudeProfile lin = [](double, double tau) { return tau; };
  EXPECT_NEAR(transport_residual(lin, 2.0, 0.5, 1e-3, {1.4, 0.0}), 1.2 * 0.5 + 0.5 / 4.0, 1e-12);
}

TEST(NonlinearFront, AmplitudeIsConstantAlongCharacteristics) {
  // RK4 on dtau/dr = k a, da/dr = -a / (2 r) from r = 0.5 to 2.
  const GasModel gas{1.4, 0.3};
  const double k = transport_coefficient(gas);
  const double Lambda = 0.4, chi = 0.1;
  double r = 0.5;
  double tau = characteristic_tau(r, Lambda, chi, gas);
  double a = Lambda / std::sqrt(r);
  const int n = 2000;
  const double h = 1.5 / n;
  auto rhs = [k](double rr, double aa, double& dtau, double& da) {
    dtau = k * aa;
    da = -aa / (2.0 * rr);
  };
  for (int i = 0; i < n; ++i) {
    double t1, a1, t2, a2, t3, a3, t4, a4;
    rhs(r, a, t1, a1);
    rhs(r + 0.5 * h, a + 0.5 * h * a1, t2, a2);
    rhs(r + 0.5 * h, a + 0.5 * h * a2, t3, a3);
    rhs(r + h, a + h * a3, t4, a4);
    tau += h * (t1 + 2.0 * t2 + 2.0 * t3 + t4) / 6.0;
    a += h * (a1 + 2.0 * a2 + 2.0 * a3 + a4) / 6.0;
    r += h;
    EXPECT_NEAR(a * std::sqrt(r), Lambda, 1e-10);
  }
  EXPECT_NEAR(tau, characteristic_tau(2.0, Lambda, chi, gas), 1e-10);
}

TEST(NonlinearFront, PhaseRoot) {
  const GasModel gas{1.4, 0.1};
  EXPECT_DOUBLE_EQ(psi_root(0.3, 0.7, -0.5, 0.0, gas), 0.3);
  EXPECT_NEAR(psi_root(0.0, 1.0, -0.5, 0.1, gas), 0.0, 1e-30);
  const double psi = psi_root(0.1, 0.9, -0.5, 0.1, gas);
  EXPECT_LE(std::abs(phase_residual(psi, 0.1, 0.9, -0.5, 0.1, gas)), 1e-12);
  const double pi_shift = phase_shift(0.9, -0.5, 0.1, gas);
  EXPECT_NEAR(std::sqrt(psi), pi_shift + std::sqrt(0.1 + pi_shift * pi_shift), 1e-15);
  EXPECT_THROW(psi_root(-1.0, 0.9, -0.5, 0.1, gas), DomainError);
}

TEST(NonlinearFront, PhaseRootRandomGrid) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const GasModel gas{1.05 + 0.7 * u(rng), 0.7 * u(rng)};
    const double C = (u(rng) - 0.5) * 4.0;
    const double eps = 0.3 * u(rng);
    const double r = 0.2 + u(rng);
    const double phi = 0.8 * u(rng);
    const double psi = psi_root(phi, r, C, eps, gas);
    EXPECT_LE(std::abs(phase_residual(psi, phi, r, C, eps, gas)), 1e-12);
  }
}

TEST(NonlinearFront, RarefactionProfile) {
  const GasModel gas{1.4, 0.2};
  const ReferenceState ref = reference_constants(1.0, 1.0, gas);
  const double alpha = 0.6, beta = 0.3, eps = 0.05;
  const double front = ref.c0 * ref.kappa0;
  const FlowState outside = rarefaction_profile(1.2 * front, 1.0, beta, alpha, eps, gas, ref);
  const FlowState uniform = reflected_uniform_state(beta + alpha, alpha, eps, ref);
  EXPECT_EQ(outside.rho, uniform.rho);
  EXPECT_EQ(outside.U, uniform.U);
  const FlowState quiet = rarefaction_profile(0.5 * front, 1.0, beta, alpha, 0.0, gas, ref);
  EXPECT_EQ(quiet.rho, ref.rho0);
  const FlowState in = rarefaction_profile(0.9 * front, 1.0, beta, alpha, eps, gas, ref);
  EXPECT_LT(in.rho, uniform.rho);
  const FlowState a = rarefaction_profile(front * (1 - 1e-13), 1.0, beta, alpha, eps, gas, ref);
  const FlowState b = rarefaction_profile(front * (1 + 1e-13), 1.0, beta, alpha, eps, gas, ref);
  EXPECT_NEAR(a.rho, b.rho, 1e-10);
  EXPECT_NEAR(a.U, b.U, 1e-10);
  EXPECT_THROW(rarefaction_profile(0.9, 1.0, 1.5 * alpha, alpha, eps, gas, ref),
               ClassificationError);
}

TEST(NonlinearFront, RarefactionMatchesLinearFrontAsymptote) {
  // Inside the front, to first order in eps: rho - rho2 = eps C sqrt(1 - r / front).
  const GasModel gas{1.4, 0.3};
  const ReferenceState ref = reference_constants(1.0, 1.0, gas);
  const double alpha = 0.7, beta = 0.35;
  const double front = ref.c0 * ref.kappa0;
  const double r = 0.99 * front;
  const double c52 = near_front_coefficient(beta + alpha, alpha);
  double prev = 1e3;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const FlowState s = rarefaction_profile(r, 1.0, beta, alpha, eps, gas, ref);
    const double lin = eps * c52 * std::sqrt(front - r) / std::sqrt(r);
    const double err =
        std::abs(s.rho - reflected_uniform_state(beta + alpha, alpha, eps, ref).rho - lin) / eps;
    EXPECT_GT(std::log10(prev / err), 0.9);
    prev = err;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(NonlinearFront, GradientJump) {
  EXPECT_NEAR(gradient_jump(1.0, {1.4, 0.0}, 1.0), 1.0 / 2.4, 1e-15);
  EXPECT_NEAR(gradient_jump(2.0, {1.4, 0.2}, 1.0), 0.5 * gradient_jump(1.0, {1.4, 0.2}, 1.0),
              1e-15);
  double prev = INFINITY;
  for (double bt = 0.0; bt < 0.75; bt += 0.05) {
    const double j = gradient_jump(1.0, {1.4, bt}, 1.0);
    EXPECT_LT(j, prev);
    prev = j;
  }
}

TEST(NonlinearFront, ShockLocusAndStrength) {
  const GasModel air{1.4, 0.0};
  EXPECT_NEAR(1.0 + shock_locus_coefficient(1.0, 0.2, air), 1.0576, 1e-14);
  EXPECT_NEAR(shock_strength_from_c(1.0, 0.2, air), 0.048, 1e-15);
  const double alpha = 0.5, beta = 0.9;
  const ReferenceState ref = reference_constants(1.0, 1.0, air);
  EXPECT_NEAR(shock_locus(1.0, beta, alpha, 0.0, air, ref), ref.c0 * ref.kappa0, 1e-15);
  EXPECT_EQ(shock_strength(beta, alpha, 0.0, air), 0.0);
  EXPECT_THROW(shock_locus(1.0, 0.3, alpha, 0.1, air, ref), ClassificationError);
  EXPECT_THROW(shock_strength(0.3, alpha, 0.1, air), ClassificationError);
  double prev_r = 0.0, prev_s = 0.0;
  for (double bt = 0.0; bt < 0.75; bt += 0.05) {
    const GasModel gas{1.4, bt};
    const double r = shock_locus(1.0, beta, alpha, 0.1, gas, reference_constants(1.0, 1.0, gas));
    const double s = shock_strength(beta, alpha, 0.1, gas);
    EXPECT_GT(r, prev_r);
    EXPECT_GT(s, prev_s);
    prev_r = r;
    prev_s = s;
  }
}

TEST(NonlinearFront, ShockSitsAtTheFoldPoint) {
  const GasModel gas{1.4, 0.2};
  const ReferenceState ref = reference_constants(1.0, 1.0, gas);
  const double alpha = 0.5, beta = 0.9;
  const double C = c_beta(beta, alpha);
  for (double eps : {1e-2, 1e-3}) {
    const double front = ref.c0 * ref.kappa0;
    const double shift = shock_locus(1.0, beta, alpha, eps, gas, ref) - front;
    const double width = fold_radius(1.0, C, eps, gas, ref) - front;
    EXPECT_NEAR(shift / width, 1.0, 10.0 * shock_locus_coefficient(C, eps, gas));
  }
}

TEST(NonlinearFront, FrontWaveFields) {
  const GasModel gas{1.4, 0.1};
  const ReferenceState ref = reference_constants(1.0, 1.0, gas);
  const FrontWave w = front_wave(0.9 * ref.c0 * ref.kappa0, 1.0, 0.3, 0.6, 0.1, gas, ref);
  EXPECT_DOUBLE_EQ(w.delta_amp, 0.01);
  EXPECT_DOUBLE_EQ(w.Theta, 0.3);
  EXPECT_NEAR(w.phi_phase, 0.1 * ref.c0 * ref.kappa0, 1e-15);
  EXPECT_DOUBLE_EQ(w.C_match, -w.C_beta);
  if (w.tau >= 0.0) EXPECT_NEAR(w.Lambda, -w.C_beta * std::sqrt(w.tau), 1e-15);
}
