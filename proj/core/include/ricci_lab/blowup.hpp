#pragma once

#include "ricci_lab/construction.hpp"
#include "ricci_lab/gao.hpp"
#include "ricci_lab/submersion.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ricci_lab::blowup {

// Neighbourhood of the Z_2 stratum with the S block replaced by a rescaled n = 2 glued metric.
// Base (t1, r, theta), angles (phi1, psi1, phi2, phi3, psi, phi):
//   dt1^2 + cos^2 t1 dphi1^2 + f(pi/2 - t1)^2 dpsi1^2 + dphi2^2 + dphi3^2
//   + c^2 [dr^2/w + 1/4 r^2 w (dpsi + cos theta dphi)^2 + 1/4 (1 - delta) r^2 (dtheta^2 + sin^2 theta dphi^2)]
// with w = 1 - phi(r).
class ResolvedBlockMetric : public submersion::InvariantBlockMetric {
 public:
  ResolvedBlockMetric(submersion::FProfile f, construction::GluedMetric glued, double scale, double r_max);

  int base_dim() const override { return 3; }
  int angle_dim() const override { return 6; }
  Box base_box() const override;
  std::string name() const override { return "resolved_block"; }
  void blocks(const std::vector<D2>& b, submersion::DenseMatrix<D2>& B, submersion::DenseMatrix<D2>& G) const override;

  double scale() const { return scale_; }
  double r_max() const { return r_max_; }

 private:
  submersion::FProfile f_;
  construction::GluedMetric glued_;
  double scale_;
  double r_max_;
};

// Killing columns over (phi1, psi1, phi2, psi2, phi3, psi3) rewritten over
// (phi1, psi1, phi2, phi3, psi, phi) with psi = psi2 + psi3, phi = psi2 - psi3.
Eigen::MatrixXd resolved_killing_fields(const Eigen::MatrixXd& killing);

struct BlowupConfig {
  double epsilon = 0.1;
  double R_blow = 0.0;   // 0 picks the smallest round value with sqrt(R) inside the rho2 ball
  double kappa = 1.0;
  int samples = 1000;
  int core_samples = 64;
  std::uint64_t seed = 1;
  double t1_inset = 0.05;
  double theta_inset = 0.05;
  double core_offset = 1e-6;  // core samples at r = 1 + offset
  gao::GaoConfig gao;
};

struct BlowupReport {
  BlowupConfig config;
  gao::GaoReport gao;
  construction::GluedCertificate glued;
  bool construction_psi_pass = false;
  bool construction_ricci_positive = false;
  std::string size_bound;  // message of the n = 2 size bound
  double scale = 0.0;
  double r_max = 0.0;
  submersion::QuotientScan scan;
  double core_dn_max = 0.0;      // max |(D_X N_2, X)| at core samples, unit horizontal X
  double core_kappa = 0.0;       // min Ric(X, X) over the same samples and X
  bool dn_bound_holds = false;   // core_dn_max <= core_kappa / 2
  double center_dn_unresolved = 0.0;  // same quantity on the unmodified metric near t2 = t3 = 0
  bool pass = false;
};

// Smallest R with sqrt(R) <= R sin(rho2 / R_gao), rounded up to a multiple of 100.
double default_blowup_radius(double epsilon, double rho2, double R_gao);

BlowupReport blowup_pipeline(const BlowupConfig& cfg);

}  // namespace ricci_lab::blowup
