#include "ricci_lab/oracle.hpp"

#include "ricci_lab/errors.hpp"

#include <iomanip>
#include <sstream>

namespace ricci_lab::curvature {

namespace {

std::string format_point(const Eigen::VectorXd& x) {
  std::ostringstream os;
  os << std::setprecision(12) << '(';
  for (int i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ')';
  return os.str();
}

void require_interior(const MetricChart& m, const Eigen::VectorXd& x, double reach) {
  if (x.size() != m.dimension()) throw DomainError("point dimension does not match chart '" + m.name() + "'");
  if (m.boundary_distance(x) < m.margin() + reach)
    throw BoundaryError("stencil of reach " + std::to_string(reach) + " at " + format_point(x) +
                        " leaves the box of chart '" + m.name() + "'");
}

Eigen::MatrixXd checked_metric(const MetricChart& m, const Eigen::VectorXd& x) {
  Eigen::MatrixXd g = m(x);
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success || !g.allFinite())
    throw SingularMetricError("metric of chart '" + m.name() + "' is not positive definite at " + format_point(x),
                              to_std(x));
  return g;
}

Christoffel christoffel_unchecked(const MetricChart& m, const Eigen::VectorXd& x, double h) {
  const int d = m.dimension();
  Eigen::MatrixXd g = checked_metric(m, x);
  Eigen::MatrixXd ginv = g.inverse();
  std::vector<Eigen::MatrixXd> dg(d);
  for (int l = 0; l < d; ++l) {
    Eigen::VectorXd xp = x, xm = x;
    xp[l] += h;
    xm[l] -= h;
    dg[l] = (m(xp) - m(xm)) / (2.0 * h);
  }
  Christoffel c;
  c.gamma.assign(d, Eigen::MatrixXd::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      // lowered symbol Gamma_{l,ij}
      Eigen::VectorXd lowered(d);
      for (int l = 0; l < d; ++l) lowered[l] = 0.5 * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
      Eigen::VectorXd raised = ginv * lowered;
      for (int k = 0; k < d; ++k) {
        c.gamma[k](i, j) = raised[k];
        c.gamma[k](j, i) = raised[k];
      }
    }
  return c;
}

}  // namespace

Christoffel christoffel_at(const MetricChart& m, const Eigen::VectorXd& x, double step) {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  require_interior(m, x, 2.0 * step);
  return christoffel_unchecked(m, x, step);
}

CurvatureSample curvature_sample(const MetricChart& m, const Eigen::VectorXd& x, double step) {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  require_interior(m, x, 4.0 * step);
  const int d = m.dimension();
  CurvatureSample s;
  s.point = x;
  s.step = step;
  s.metric = checked_metric(m, x);
  s.christoffel = christoffel_unchecked(m, x, step);

  // dgamma[l].gamma[k](i, j) = d_l Gamma^k_{ij}, outer difference with step 2h
  const double outer = 2.0 * step;
  std::vector<Christoffel> dgamma(d);
  for (int l = 0; l < d; ++l) {
    Eigen::VectorXd xp = x, xm = x;
    xp[l] += outer;
    xm[l] -= outer;
    Christoffel plus = christoffel_unchecked(m, xp, step);
    Christoffel minus = christoffel_unchecked(m, xm, step);
    dgamma[l].gamma.resize(d);
    for (int k = 0; k < d; ++k) dgamma[l].gamma[k] = (plus.gamma[k] - minus.gamma[k]) / (2.0 * outer);
  }

  const Christoffel& G = s.christoffel;
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double r = 0.0;
      for (int k = 0; k < d; ++k) {
        r += dgamma[k].gamma[k](i, j) - dgamma[j].gamma[k](k, i);
        for (int l = 0; l < d; ++l) r += G(k, k, l) * G(l, i, j) - G(k, j, l) * G(l, k, i);
      }
      ric(i, j) = r;
    }
  s.ricci = 0.5 * (ric + ric.transpose());
  return s;
}

Eigen::MatrixXd ricci_at(const MetricChart& m, const Eigen::VectorXd& x, double step) {
  return curvature_sample(m, x, step).ricci;
}

CurvatureSample richardson_sample(const MetricChart& m, const Eigen::VectorXd& x, double step) {
  CurvatureSample coarse = curvature_sample(m, x, step);
  const CurvatureSample fine = curvature_sample(m, x, 0.5 * step);
  coarse.ricci = (4.0 * fine.ricci - coarse.ricci) / 3.0;
  coarse.christoffel = fine.christoffel;
  return coarse;
}

double ricci_quadratic_form(const MetricChart& m, const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                            double step) {
  if (v.size() != m.dimension()) throw DomainError("tangent vector dimension mismatch");
  if (v.norm() == 0.0) throw DomainError("Ricci quadratic form of the zero vector");
  CurvatureSample s = curvature_sample(m, x, step);
  return v.dot(s.ricci * v) / v.dot(s.metric * v);
}

Eigen::VectorXd ricci_eigenvalues(const Eigen::MatrixXd& metric, const Eigen::MatrixXd& ricci) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(ricci, metric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw SingularMetricError("generalized eigenproblem failed", {});
  return solver.eigenvalues();
}

Eigen::VectorXd ricci_eigenvalues(const MetricChart& m, const Eigen::VectorXd& x, double step) {
  CurvatureSample s = curvature_sample(m, x, step);
  return ricci_eigenvalues(s.metric, s.ricci);
}

Eigen::VectorXd richardson_eigenvalues(const MetricChart& m, const Eigen::VectorXd& x, double step) {
  CurvatureSample s = richardson_sample(m, x, step);
  return ricci_eigenvalues(s.metric, s.ricci);
}

double GridAxis::at(int i) const {
  if (count <= 1) return 0.5 * (lo + hi);
  return lo + (hi - lo) * static_cast<double>(i) / (count - 1);
}

GridSpec uniform_grid(const Box& box, int count_per_axis, double inset) {
  GridSpec grid;
  for (const auto& side : box) grid.push_back({side.lo + inset, side.hi - inset, count_per_axis});
  return grid;
}

namespace {

std::vector<Eigen::VectorXd> expand(const GridSpec& grid) {
  std::vector<Eigen::VectorXd> points;
  const int d = static_cast<int>(grid.size());
  std::vector<int> idx(d, 0);
  for (;;) {
    Eigen::VectorXd x(d);
    for (int a = 0; a < d; ++a) x[a] = grid[a].at(idx[a]);
    points.push_back(x);
    // last axis varies fastest so the order is lexicographic
    int pos = d;
    while (pos > 0) {
      if (++idx[pos - 1] < std::max(1, grid[pos - 1].count)) break;
      idx[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return points;
}

bool lexicographically_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace

RicciScan min_ricci_scan(const MetricChart& m, const GridSpec& grid, std::optional<double> step) {
  if (static_cast<int>(grid.size()) != m.dimension()) throw DomainError("grid dimension does not match chart");
  return min_ricci_scan(m, expand(grid), step);
}

RicciScan min_ricci_scan(const MetricChart& m, const std::vector<Eigen::VectorXd>& points,
                         std::optional<double> step) {
  if (points.empty()) throw DomainError("empty scan grid");
  RicciScan scan;
  scan.step = step.value_or(m.default_step());
  bool first = true;
  for (const auto& x : points) {
    double lowest;
    try {
      lowest = ricci_eigenvalues(m, x, scan.step)[0];
    } catch (const SingularMetricError&) {
      throw;
    } catch (const Error& e) {
      throw Error(std::string("scan failed at ") + format_point(x) + ": " + e.what());
    }
    scan.samples.push_back({x, lowest});
    if (first || lowest < scan.min_eigenvalue ||
        (lowest == scan.min_eigenvalue && lexicographically_less(x, scan.argmin))) {
      scan.min_eigenvalue = lowest;
      scan.argmin = x;
      first = false;
    }
  }
  return scan;
}

void RicciScan::write_csv(std::ostream& out) const {
  if (samples.empty()) return;
  const int d = static_cast<int>(samples.front().point.size());
  for (int i = 0; i < d; ++i) out << 'x' << i << ',';
  out << "min_eigenvalue\n" << std::setprecision(17);
  for (const auto& s : samples) {
    for (int i = 0; i < d; ++i) out << s.point[i] << ',';
    out << s.min_eigenvalue << '\n';
  }
}

}  // namespace ricci_lab::curvature
