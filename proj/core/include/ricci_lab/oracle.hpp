#pragma once

#include "ricci_lab/chart.hpp"

#include <Eigen/Dense>

#include <optional>
#include <ostream>
#include <vector>

namespace ricci_lab::curvature {

// Gamma^k_{ij} stored as gamma[k](i, j).
struct Christoffel {
  std::vector<Eigen::MatrixXd> gamma;

  double operator()(int k, int i, int j) const { return gamma[k](i, j); }
};

struct CurvatureSample {
  Eigen::VectorXd point;
  Eigen::MatrixXd metric;
  Christoffel christoffel;
  Eigen::MatrixXd ricci;
  double step = 0.0;
};

Christoffel christoffel_at(const MetricChart& m, const Eigen::VectorXd& x, double step);
CurvatureSample curvature_sample(const MetricChart& m, const Eigen::VectorXd& x, double step);
Eigen::MatrixXd ricci_at(const MetricChart& m, const Eigen::VectorXd& x, double step);
// (4 Ric(step/2) - Ric(step)) / 3, fourth order in the step.
CurvatureSample richardson_sample(const MetricChart& m, const Eigen::VectorXd& x, double step);

// Ric(v, v) / g(v, v).
double ricci_quadratic_form(const MetricChart& m, const Eigen::VectorXd& x, const Eigen::VectorXd& v, double step);

// Eigenvalues of g^{-1} Ric, ascending.
Eigen::VectorXd ricci_eigenvalues(const Eigen::MatrixXd& metric, const Eigen::MatrixXd& ricci);
Eigen::VectorXd ricci_eigenvalues(const MetricChart& m, const Eigen::VectorXd& x, double step);
Eigen::VectorXd richardson_eigenvalues(const MetricChart& m, const Eigen::VectorXd& x, double step);

struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;  // count == 1 samples the midpoint

  double at(int i) const;
};

using GridSpec = std::vector<GridAxis>;

GridSpec uniform_grid(const Box& box, int count_per_axis, double inset);

struct ScanSample {
  Eigen::VectorXd point;
  double min_eigenvalue;
};

// Minimum eigenvalue of g^{-1} Ric over a grid; ties go to the lexicographically first point.
struct RicciScan {
  std::vector<ScanSample> samples;
  double min_eigenvalue = 0.0;
  Eigen::VectorXd argmin;
  double step = 0.0;

  bool positive() const { return min_eigenvalue > 0.0; }
  void write_csv(std::ostream& out) const;
};

RicciScan min_ricci_scan(const MetricChart& m, const GridSpec& grid, std::optional<double> step = std::nullopt);
RicciScan min_ricci_scan(const MetricChart& m, const std::vector<Eigen::VectorXd>& points,
                         std::optional<double> step = std::nullopt);

}  // namespace ricci_lab::curvature
