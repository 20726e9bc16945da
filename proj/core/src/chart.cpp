#include "ricci_lab/chart.hpp"

#include <algorithm>
#include <limits>

namespace ricci_lab {

MetricChart::MetricChart(std::string name, Box box, Evaluator metric, double margin)
    : name_(std::move(name)), box_(std::move(box)), metric_(std::move(metric)), margin_(margin) {
  if (box_.empty() || dimension() > max_dimension)
    throw DomainError("chart dimension must be between 1 and " + std::to_string(max_dimension));
  for (const auto& side : box_)
    if (!(side.hi > side.lo)) throw DomainError("chart box sides must have positive length");
}

Eigen::MatrixXd MetricChart::operator()(const Eigen::VectorXd& x) const {
  if (x.size() != dimension()) throw DomainError("point dimension does not match chart '" + name_ + "'");
  Eigen::MatrixXd g = metric_(x);
  if (g.rows() != dimension() || g.cols() != dimension())
    throw DomainError("chart '" + name_ + "' returned a metric of the wrong size");
  return g;
}

double MetricChart::default_step() const {
  double w = std::numeric_limits<double>::infinity();
  for (const auto& side : box_) w = std::min(w, side.width());
  return 1e-3 * w;
}

double MetricChart::boundary_distance(const Eigen::VectorXd& x) const {
  double d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dimension(); ++i) d = std::min({d, x[i] - box_[i].lo, box_[i].hi - x[i]});
  return d;
}

Eigen::VectorXd to_vector(const std::vector<double>& x) {
  return Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
}

std::vector<double> to_std(const Eigen::VectorXd& x) { return {x.data(), x.data() + x.size()}; }

}  // namespace ricci_lab
