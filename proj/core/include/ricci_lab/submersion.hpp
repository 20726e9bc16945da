#pragma once

#include "ricci_lab/invariant_metric.hpp"
#include "ricci_lab/profile.hpp"
#include "ricci_lab/toric.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ricci_lab::submersion {

// f = 1 on [0, eps], cos t on [pi/2 - eps, pi/2], and a concave decreasing bridge with
// f'' = -g, g(x) = sin(eps) x^3 + alpha x (1-x)^3 + beta x (1-x)^6 in x = (t - eps)/(pi/2 - 2 eps).
struct FProfile {
  double epsilon = 0.0;
  RadialProfile f;
  double alpha = 0.0;
  double beta = 0.0;
};

FProfile build_f_profile(double epsilon);

struct FProfileReport {
  double max_d1_bridge = 0.0;  // sup f' inside the bridge, must be < 0
  double max_d2_bridge = 0.0;  // sup f'' inside the bridge, must be < 0
  double max_knot_gap = 0.0;   // largest value/d1/d2 jump at the two knots
  double min_g = 0.0;
  bool pass = false;
};

FProfileReport verify_f_profile(const FProfile& f, int samples = 20000);

// Unit-frame Ricci of dt^2 + a^2 dphi^2 + b^2 dpsi^2.
struct FactorRicci {
  double tt = 0.0;
  double phi = 0.0;
  double psi = 0.0;
};

FactorRicci factor_ricci(const Jet& a, const Jet& b);

// Product of three doubly warped 3-spheres. Base (t1, t2, t3), angles
// (phi1, psi1, phi2, psi2, phi3, psi3) with warps
//   (cos t1, f(pi/2 - t1)), (f(t2), f(pi/2 - t2)), (f(t3), sin t3).
class TripleSphereMetric : public InvariantBlockMetric {
 public:
  explicit TripleSphereMetric(FProfile f);

  int base_dim() const override { return 3; }
  int angle_dim() const override { return 6; }
  Box base_box() const override;
  std::string name() const override { return "triple_sphere"; }
  void blocks(const std::vector<D2>& b, DenseMatrix<D2>& B, DenseMatrix<D2>& G) const override;

  const FProfile& profile() const { return f_; }
  double epsilon() const { return f_.epsilon; }

  // (a, b) warp jets of factor i in {0, 1, 2} at t.
  std::array<Jet, 2> warps(int factor, double t) const;
  FactorRicci factor(int i, double t) const;
  // Closed-form Ricci in coordinates (t1, t2, t3, phi1, ..., psi3), diagonal.
  Eigen::MatrixXd ricci(const Eigen::Vector3d& t) const;
  // Nine-dimensional chart over t_i in [inset, pi/2 - inset].
  MetricChart chart(double inset) const;

 private:
  FProfile f_;
};

// Integer Killing fields of a weight system, one column per circle factor of the torus.
Eigen::MatrixXd killing_fields(const toric::TorusWeightSystem& w);
Eigen::MatrixXd edge_cut_killing_fields();

// Angle coordinate names in chart order.
const std::array<std::string, 6>& angle_names();

struct DegenerateDirection {
  int angle = 0;          // 0..5 in angle_names order
  std::string coordinate;
  int case_id = 0;        // 1: phi2/phi3 flat, 2: psi1/psi2 flat
  bool full_case = false; // both conditions of the case hold at the point
  double ricci = 0.0;     // Ric of the unit coordinate vector
};

// Coordinate directions along which the Ricci form vanishes, read off the profile regions.
std::vector<DegenerateDirection> degenerate_directions(const TripleSphereMetric& m, const Eigen::Vector3d& t);
// Unit coordinate directions with |Ric| <= tol from the closed form.
std::vector<int> ricci_null_directions(const TripleSphereMetric& m, const Eigen::Vector3d& t, double tol = 1e-10);

struct HorizontalityCheck {
  bool horizontal = false;
  Eigen::VectorXd pairings;
};

// x has 9 components in chart order.
HorizontalityCheck horizontality_check(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                                       const Eigen::VectorXd& base_point, const Eigen::VectorXd& x);

struct QuotientRicciSample {
  Eigen::VectorXd point;
  Eigen::VectorXd x;
  OneillTerms terms;
};

QuotientRicciSample oneill_quotient_ricci(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                                          const Eigen::VectorXd& base_point, const Eigen::VectorXd& x);

// (t1, t2, t3) -> (pi/2 - t3, pi/2 - t2, pi/2 - t1) with the angle order reversed.
Eigen::VectorXd swap_point(const Eigen::VectorXd& base_point);
Eigen::MatrixXd swap_permutation();
// max |g(swap p) - P g(p) P^T| over the components.
double swap_isometry_defect(const TripleSphereMetric& m, const Eigen::Vector3d& t);

// Deterministic uniform samples in a box from a 64-bit seed.
std::vector<Eigen::VectorXd> sample_box(const Box& box, int count, std::uint64_t seed);

struct QuotientScan {
  int samples = 0;
  double min_total = 0.0;          // over the sampled X = d/dt1 lifts
  double min_eigenvalue = 0.0;     // of the full horizontal quotient Ricci matrix
  double max_sum_defect = 0.0;     // |total - sum of parts|
  double min_a_term = 0.0;
  double min_t_term = 0.0;
  Eigen::VectorXd argmin;
  std::vector<QuotientRicciSample> rows;  // one per sample, X = d/dt1
  std::vector<double> eigen_rows;         // smallest eigenvalue per sample
  bool pass = false;
};

QuotientScan quotient_scan(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                           const std::vector<Eigen::VectorXd>& points);

}  // namespace ricci_lab::submersion
