#pragma once

#include "ricci_lab/chart.hpp"
#include "ricci_lab/dual.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace ricci_lab::submersion {

// Small dense matrix over an arbitrary scalar (used with dual numbers).
template <class T>
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), T(0.0)) {}
  T& operator()(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
};

// g = B(b) db^2 + G(b) dphi^2: base coordinates b, angle coordinates phi, and no
// dependence on phi, so every constant-coefficient angular field is Killing.
class InvariantBlockMetric {
 public:
  virtual ~InvariantBlockMetric() = default;

  virtual int base_dim() const = 0;
  virtual int angle_dim() const = 0;
  virtual Box base_box() const = 0;
  virtual std::string name() const = 0;
  // Fills B (base_dim square) and G (angle_dim square) at b.
  virtual void blocks(const std::vector<D2>& b, DenseMatrix<D2>& B, DenseMatrix<D2>& G) const = 0;

  int dimension() const { return base_dim() + angle_dim(); }
};

// Full metric at a base point, coordinates ordered (b, phi).
Eigen::MatrixXd metric_at(const InvariantBlockMetric& m, const Eigen::VectorXd& base_point);

struct CurvatureTensors {
  Eigen::MatrixXd metric;
  Eigen::MatrixXd ricci;
  std::vector<double> riemann;  // R^a_{bcd} at index ((a*n + b)*n + c)*n + d
  int n = 0;

  // R(X, Y, Y, X) / (|X|^2 |Y|^2 - <X,Y>^2)
  double sectional(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
};

// Exact derivatives of the blocks by nested dual numbers; no finite differences.
CurvatureTensors curvature_tensors(const InvariantBlockMetric& m, const Eigen::VectorXd& base_point);

// Metric on the quotient by the torus spanned by the Killing columns: base block plus
// (L G^{-1} L^T)^{-1} on the transverse angles y = L phi, where L K = 0.
MetricChart quotient_chart(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing, const Eigen::MatrixXd& annihilator,
                           std::string name = "quotient");

// Integer rows annihilating the integer Killing columns.
Eigen::MatrixXd killing_annihilator(const Eigen::MatrixXd& killing);

struct OneillTerms {
  double ricci = 0.0;         // Ric(X, X) of the total space
  double a_term = 0.0;        // 2 (A_X, A_X)
  double t_term = 0.0;        // (T X, T X)
  double dn_term = 0.0;       // g(nabla_X N, X)
  double total = 0.0;         // ricci + a_term + t_term - dn_term

  double sum() const { return ricci + a_term + t_term - dn_term; }
};

// Horizontal lift pairings <X, K_j>.
Eigen::VectorXd vertical_pairings(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                                  const Eigen::VectorXd& base_point, const Eigen::VectorXd& x);

// g-orthonormal basis of the horizontal space, one column per vector.
Eigen::MatrixXd horizontal_basis(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                                 const Eigen::VectorXd& base_point);

// O'Neill decomposition of the quotient Ricci form at a horizontal X. When angle_mask is
// nonempty, the mean curvature is built from the masked angle block only.
OneillTerms oneill_terms(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                         const Eigen::VectorXd& base_point, const Eigen::VectorXd& x,
                         const std::vector<int>& angle_mask = {});
// Same, reusing curvature_tensors at the base point.
OneillTerms oneill_terms(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing, const CurvatureTensors& curvature,
                         const Eigen::VectorXd& base_point, const Eigen::VectorXd& x,
                         const std::vector<int>& angle_mask = {});

// Mean curvature vector of the orbits (base components; angle components vanish).
Eigen::VectorXd mean_curvature(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                               const Eigen::VectorXd& base_point, const std::vector<int>& angle_mask = {});

// Quotient Ricci as a symmetric matrix on the horizontal_basis, by polarization.
Eigen::MatrixXd quotient_ricci_matrix(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                                      const Eigen::VectorXd& base_point);

}  // namespace ricci_lab::submersion
