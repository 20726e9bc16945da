#include "ricci_lab/construction.hpp"
#include "ricci_lab/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ricci_lab;
using namespace ricci_lab::construction;

TEST(Psi, ConstraintsHoldAtRNine) {
  PsiBuilderConfig cfg;
  cfg.n = 3;
  cfg.R = 9.0;
  const PsiConstruction psi = build_psi_n(cfg);
  EXPECT_TRUE(psi.all_pass());
  for (const auto& c : psi.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.measured;
  EXPECT_NEAR(psi_weighted_integral(psi.psi, 3, cfg.r1()), cfg.eta(), 1e-8);
  const Jet d = psi.psi.knot_defect();
  EXPECT_LT(std::max({d.value, d.d1, d.d2}), 1e-8);
  // psi agrees with 2(n+1) r^2/R^2 past sqrt(R)
  EXPECT_NEAR(psi.psi.value(6.0), 8.0 * 36.0 / 81.0, 1e-12);
}

TEST(Psi, InvalidConfigurations) {
  PsiBuilderConfig cfg;
  cfg.R = 3.0;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg.R = 9.0;
  cfg.kappa = 9.0;
  EXPECT_THROW(build_psi_n(cfg), DomainError);
  cfg.kappa = 1.0;
  cfg.n = 1;
  EXPECT_THROW(build_psi_n(cfg), DomainError);
}

TEST(Phi, CoreAndTail) {
  PsiBuilderConfig cfg;
  cfg.R = 9.0;
  const PhiConstruction phi = build_phi_n(build_psi_n(cfg));
  EXPECT_NEAR(phi.phi_at_core, 1.0, 1e-12);
  EXPECT_LT(phi.slope_at_core, 0.0);
  EXPECT_LT(phi.tail_deviation, 1e-8);
  EXPECT_GT(minimum_of_phi(phi.phi), 0.0);
}

TEST(Glued, DefaultNuCertifies) {
  PsiBuilderConfig cfg;
  cfg.R = 9.0;
  const GluedBuild b = assemble_glued_metric(cfg);
  EXPECT_NEAR(b.metric.nu, default_nu(b.metric.c_R, 9.0, 1.0), 1e-15);
  const GluedCertificate cert = certify_bounds(b.metric, 2000);
  EXPECT_TRUE(cert.pass);
  EXPECT_GT(cert.sigma, 0.0);
  EXPECT_GT(cert.min_horizontal, 0.0);
  const SizeReport size = rescale_and_size(b.metric, cert.sigma);
  EXPECT_TRUE(size.holds);
  // the closed form on [1, 2] matches the general expression
  EXPECT_NEAR(core_shell_horizontal(b.metric, 1.5), ricci_glued(b.metric, 1.5).horizontal, 1e-8);
}

TEST(Glued, WithoutBumpTheCertificateFails) {
  PsiBuilderConfig cfg;
  cfg.R = 9.0;
  const GluedBuild b = assemble_glued_metric(cfg, 0.0);
  EXPECT_FALSE(certify_bounds(b.metric, 2000).pass);
  EXPECT_THROW(rescale_and_size(b.metric, 0.0), DomainError);
}

TEST(Glued, SizeBoundIsVacuousForNTwo) {
  PsiBuilderConfig cfg;
  cfg.n = 2;
  cfg.R = 9.0;
  const GluedBuild b = assemble_glued_metric(cfg);
  EXPECT_THROW(rescale_and_size(b.metric, 1.0), DegenerateBoundError);
}

TEST(Delta, NonIncreasingBump) {
  const DeltaProfile d = build_delta_nu(0.01, 9.0, 0.5);
  EXPECT_NEAR(d.delta.value(1.5), d.delta1, 1e-15);
  EXPECT_NEAR(d.delta.value(3.0), 0.0, 1e-15);
  for (double r = 1.0; r < 3.0; r += 0.05) EXPECT_LE(d.delta.derivative(r, 1), 1e-15);
  EXPECT_THROW(build_delta_nu(-0.1, 9.0, 0.5), DomainError);
  EXPECT_THROW(build_delta_nu(2.0, 9.0, 0.5), DomainError);
}
