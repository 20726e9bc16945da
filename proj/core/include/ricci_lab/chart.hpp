#pragma once

#include "ricci_lab/profile.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace ricci_lab {

using Box = std::vector<Interval>;

// Coordinate chart carrying a Riemannian metric, dimension at most 9.
class MetricChart {
 public:
  using Evaluator = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;
  static constexpr int max_dimension = 9;

  MetricChart(std::string name, Box box, Evaluator metric, double margin = 0.0);

  int dimension() const { return static_cast<int>(box_.size()); }
  const std::string& name() const { return name_; }
  const Box& box() const { return box_; }
  double margin() const { return margin_; }

  Eigen::MatrixXd operator()(const Eigen::VectorXd& x) const;
  // 1e-3 times the narrowest box side.
  double default_step() const;
  // Distance from x to the nearest box face (negative outside).
  double boundary_distance(const Eigen::VectorXd& x) const;

 private:
  std::string name_;
  Box box_;
  Evaluator metric_;
  double margin_;
};

Eigen::VectorXd to_vector(const std::vector<double>& x);
std::vector<double> to_std(const Eigen::VectorXd& x);

}  // namespace ricci_lab
