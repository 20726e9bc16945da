#include "ricci_lab/cohomogeneity_charts.hpp"
#include "ricci_lab/errors.hpp"
#include "ricci_lab/oracle.hpp"
#include "ricci_lab/warped.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace ricci_lab;
using namespace ricci_lab::warped;

TEST(Warped, UnitFubiniStudyIsEinstein) {
  // h = sin t cos t, f = sin t is CP^2 with Ric = 6 g
  for (double t : {0.2, 0.7, 1.3}) {
    const Jet h{std::sin(t) * std::cos(t), std::cos(2 * t), -2 * std::sin(2 * t)};
    const Jet f{std::sin(t), std::cos(t), -std::sin(t)};
    const FrameRicci r = ricci_hf(2, h, f);
    EXPECT_NEAR(r.radial, 6.0, 1e-12);
    EXPECT_NEAR(r.vertical, 6.0, 1e-12);
    EXPECT_NEAR(r.horizontal, 6.0, 1e-12);
    EXPECT_NEAR(r.min(), 6.0, 1e-12);
  }
  EXPECT_THROW(ricci_hf(2, Jet{0.0, 1.0, 0.0}, Jet{1.0, 0.0, 0.0}), DomainError);
}

TEST(Warped, PhiFormsAreEinstein) {
  for (int n : {2, 3, 4})
    for (double R : {1.0, 3.0}) {
      const double lambda = 2.0 * (n + 1) / (R * R);
      EXPECT_LT(einstein_report(fubini_study_phi(n, R), lambda, {0.01 * R, 0.99 * R}, 200).max_deviation, 1e-9);
      EXPECT_LT(einstein_report(fubini_study_metric(R, n), lambda, {0.01 * R, 1.5 * R}, 200).max_deviation, 1e-9);
    }
}

TEST(Warped, CalabiIsRicciFlat) {
  const PhiMetric c = calabi_phi(3, 10.0);
  const PhiRicci r = ricci_phi(c, 1.5);
  EXPECT_NEAR(r.radial_vertical, 0.0, 1e-12);
  EXPECT_NEAR(r.horizontal, 0.0, 1e-12);
  const RadialProfile psi = psi_from_phi(c);
  for (double x : {1.0, 2.0, 7.5}) EXPECT_NEAR(psi.value(x), 0.0, 1e-12);
  EXPECT_THROW(calabi_phi(2, 1.0), DomainError);
}

TEST(Warped, PsiPhiRoundTrip) {
  const RadialProfile zero = RadialProfile::constant({1.0, 5.0}, 0.0);
  const PhiMetric back = phi_from_psi(zero, 2);
  for (double r : {1.0, 1.7, 4.2}) EXPECT_NEAR(back.phi().value(r), std::pow(r, -4.0), 1e-10);
  const RadialProfile fs = psi_from_phi(fubini_study_phi(3, 2.0));
  EXPECT_NEAR(fs.value(1.2), 8.0 * 1.44 / 4.0, 1e-12);
  EXPECT_THROW(phi_from_psi(RadialProfile::constant({0.5, 2.0}, 0.0), 2), DomainError);
}

TEST(Warped, ArclengthOfFubiniStudy) {
  const double R = 2.0;
  const PhiMetric p = fubini_study_phi(2, R);
  const double r = 0.999 * R;
  EXPECT_NEAR(arclength_reparam(p, 0.0, r), R * std::asin(r / R), 1e-8);
  const QuadratureCrossCheck q = arclength_cross_check(p, 0.0, 1.5);
  EXPECT_NEAR(q.high_order, q.low_order, 1e-6);
}

TEST(Warped, SmoothnessAtCollapse) {
  // Calabi bolt: h grows with slope n
  const CollapseLimits c = smoothness_limits(calabi_phi(3, 4.0));
  EXPECT_NEAR(c.dh_dt, 3.0, 1e-12);
  EXPECT_NEAR(c.df_dt, 0.0, 1e-12);
  const CollapseLimits fs = smoothness_limits(fubini_study_metric(1.0, 2));
  EXPECT_NEAR(fs.dh_dt, 1.0, 1e-12);
  EXPECT_NEAR(fs.df_dt, 1.0, 1e-12);
  EXPECT_THROW(smoothness_limits(flat_phi(2, {1.0, 2.0})), DomainError);
}

TEST(Warped, OrbitChartAgreesWithClosedForm) {
  const double R = 2.0;
  for (int n : {2, 3}) {
    const PhiMetric p = fubini_study_phi(n, R);
    const MetricChart chart = orbit_chart(n, {0.2, 1.8}, warps_of(p));
    const Eigen::VectorXd ev = curvature::richardson_eigenvalues(chart, orbit_chart_point(n, 1.0), 3e-3);
    const double lambda = 2.0 * (n + 1) / (R * R);
    EXPECT_LT((ev.array() - lambda).abs().maxCoeff(), 1e-5) << n;
  }
}
