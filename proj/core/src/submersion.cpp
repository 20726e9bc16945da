#include "ricci_lab/submersion.hpp"

#include "ricci_lab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace ricci_lab::submersion {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

Polynomial bridge_basis(int k) {
  const Polynomial x({0.0, 1.0});
  const Polynomial one_minus({1.0, -1.0});
  Polynomial p = x;
  for (int i = 0; i < k; ++i) p = p * one_minus;
  return p;
}

double integral01(const Polynomial& p) { return p.antiderivative()(1.0); }

}  // namespace

FProfile build_f_profile(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < std::numbers::pi / 8.0))
    throw DomainError("build_f_profile needs 0 < eps < pi/8");
  const double L = half_pi - 2.0 * epsilon;
  const double se = std::sin(epsilon), ce = std::cos(epsilon);
  const Polynomial cubic = se * Polynomial::monomial(3);
  const Polynomial p3 = bridge_basis(3);
  const Polynomial p6 = bridge_basis(6);
  const Polynomial one_minus({1.0, -1.0});

  // L int g = cos eps  and  L^2 int (1 - x) g = 1 - sin eps
  Eigen::Matrix2d a;
  a << L * integral01(p3), L * integral01(p6), L * L * integral01(one_minus * p3), L * L * integral01(one_minus * p6);
  Eigen::Vector2d rhs(ce - L * integral01(cubic), 1.0 - se - L * L * integral01(one_minus * cubic));
  const Eigen::Vector2d sol = a.fullPivLu().solve(rhs);
  const Polynomial g = cubic + sol[0] * p3 + sol[1] * p6;

  double min_g = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 4000; ++i) min_g = std::min(min_g, g(i / 4000.0));
  if (!(min_g > 0.0))
    throw InfeasibleError("no concave decreasing bridge in this family for eps = " + std::to_string(epsilon));

  // f = 1 - L^2 G2(x), G2'' = g, G2(0) = G2'(0) = 0
  const Polynomial g2 = g.antiderivative().antiderivative();
  const Polynomial bridge = Polynomial({1.0}) - (L * L) * g2;
  const Polynomial in_t = bridge.compose_affine(1.0 / L, -epsilon / L);
  const double lo = epsilon, hi = half_pi - epsilon;
  auto eval = [in_t, lo, hi](double t) -> Jet {
    if (t <= lo) return {1.0, 0.0, 0.0};
    if (t >= hi) return {std::cos(t), -std::sin(t), -std::cos(t)};
    return in_t.jet(t);
  };
  return {epsilon, RadialProfile({0.0, half_pi}, eval, Representation::closed_form, {lo, hi}, "f_eps"), sol[0], sol[1]};
}

FProfileReport verify_f_profile(const FProfile& f, int samples) {
  if (samples < 10) throw DomainError("verify_f_profile needs at least 10 samples");
  FProfileReport r;
  const double eps = f.epsilon, lo = eps, hi = half_pi - eps;
  r.max_d1_bridge = -std::numeric_limits<double>::infinity();
  r.max_d2_bridge = -std::numeric_limits<double>::infinity();
  r.min_g = std::numeric_limits<double>::infinity();
  for (int i = 1; i < samples; ++i) {
    const double t = lo + (hi - lo) * i / samples;
    const Jet j = f.f(t);
    r.max_d1_bridge = std::max(r.max_d1_bridge, j.d1);
    r.max_d2_bridge = std::max(r.max_d2_bridge, j.d2);
    r.min_g = std::min(r.min_g, -j.d2);
  }
  auto gap = [](const Jet& a, const Jet& b) {
    return std::max({std::abs(a.value - b.value), std::abs(a.d1 - b.d1), std::abs(a.d2 - b.d2)});
  };
  const double du = 1e-12;
  r.max_knot_gap = std::max(gap(f.f(lo), Jet{1.0, 0.0, 0.0}),
                            gap(f.f(hi - du), Jet{std::cos(hi), -std::sin(hi), -std::cos(hi)}));
  r.max_knot_gap = std::max(r.max_knot_gap, gap(f.f(lo + du), Jet{1.0, 0.0, 0.0}));
  bool ok = r.max_d1_bridge < 0.0 && r.max_d2_bridge < 0.0 && r.max_knot_gap <= 1e-9;
  ok = ok && f.f(eps / 2.0).value == 1.0 && std::abs(f.f(half_pi).value) <= 1e-15;
  r.pass = ok;
  return r;
}

FactorRicci factor_ricci(const Jet& a, const Jet& b) {
  if (!(a.value > 0.0) || !(b.value > 0.0)) throw DomainError("factor_ricci at a collapsed orbit");
  const double mixed = a.d1 * b.d1 / (a.value * b.value);
  return {-a.d2 / a.value - b.d2 / b.value, -a.d2 / a.value - mixed, -b.d2 / b.value - mixed};
}

TripleSphereMetric::TripleSphereMetric(FProfile f) : f_(std::move(f)) {}

Box TripleSphereMetric::base_box() const { return {{0.0, half_pi}, {0.0, half_pi}, {0.0, half_pi}}; }

void TripleSphereMetric::blocks(const std::vector<D2>& b, DenseMatrix<D2>& B, DenseMatrix<D2>& G) const {
  for (int i = 0; i < 3; ++i) B(i, i) = D2(1.0);
  auto sq = [](const D2& x) { return x * x; };
  const RadialProfile& f = f_.f;
  G(0, 0) = sq(cos(b[0]));
  G(1, 1) = sq(evaluate(f, half_pi - b[0]));
  G(2, 2) = sq(evaluate(f, b[1]));
  G(3, 3) = sq(evaluate(f, half_pi - b[1]));
  G(4, 4) = sq(evaluate(f, b[2]));
  G(5, 5) = sq(sin(b[2]));
}

std::array<Jet, 2> TripleSphereMetric::warps(int factor, double t) const {
  auto reflected = [this](double t) {
    const Jet j = f_.f(half_pi - t);
    return Jet{j.value, -j.d1, j.d2};
  };
  switch (factor) {
    case 0: return {Jet{std::cos(t), -std::sin(t), -std::cos(t)}, reflected(t)};
    case 1: return {f_.f(t), reflected(t)};
    case 2: return {f_.f(t), Jet{std::sin(t), std::cos(t), -std::sin(t)}};
    default: throw DomainError("factor index must be 0, 1 or 2");
  }
}

FactorRicci TripleSphereMetric::factor(int i, double t) const {
  const auto w = warps(i, t);
  return factor_ricci(w[0], w[1]);
}

Eigen::MatrixXd TripleSphereMetric::ricci(const Eigen::Vector3d& t) const {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(9, 9);
  for (int i = 0; i < 3; ++i) {
    const auto w = warps(i, t[i]);
    const FactorRicci fr = factor_ricci(w[0], w[1]);
    r(i, i) = fr.tt;
    r(3 + 2 * i, 3 + 2 * i) = fr.phi * w[0].value * w[0].value;
    r(4 + 2 * i, 4 + 2 * i) = fr.psi * w[1].value * w[1].value;
  }
  return r;
}

MetricChart TripleSphereMetric::chart(double inset) const {
  if (!(inset > 0.0) || !(inset < half_pi / 2.0)) throw DomainError("chart inset must lie in (0, pi/4)");
  Box box(3, {inset, half_pi - inset});
  for (int i = 0; i < 6; ++i) box.push_back({-std::numbers::pi, std::numbers::pi});
  const TripleSphereMetric self = *this;
  return MetricChart(name(), box, [self](const Eigen::VectorXd& x) { return metric_at(self, x.head(3)); });
}

Eigen::MatrixXd killing_fields(const toric::TorusWeightSystem& w) {
  const auto& m = w.weights();
  Eigen::MatrixXd k(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k(static_cast<int>(i), static_cast<int>(j)) = static_cast<double>(m(i, j));
  return k;
}

Eigen::MatrixXd edge_cut_killing_fields() { return killing_fields(toric::edge_cut_action()); }

const std::array<std::string, 6>& angle_names() {
  static const std::array<std::string, 6> names{"phi1", "psi1", "phi2", "psi2", "phi3", "psi3"};
  return names;
}

std::vector<DegenerateDirection> degenerate_directions(const TripleSphereMetric& m, const Eigen::Vector3d& t) {
  const double eps = m.epsilon();
  const bool t1_high = t[0] >= half_pi - eps, t2_low = t[1] <= eps, t2_high = t[1] >= half_pi - eps,
             t3_low = t[2] <= eps;
  const Eigen::MatrixXd ric = m.ricci(t);
  const Eigen::MatrixXd g = metric_at(m, t);
  std::vector<DegenerateDirection> out;
  auto add = [&](int angle, int case_id, bool full) {
    const int c = 3 + angle;
    out.push_back({angle, angle_names()[angle], case_id, full, ric(c, c) / g(c, c)});
  };
  if (t2_low) add(2, 1, t3_low);
  if (t3_low) add(4, 1, t2_low);
  if (t1_high) add(1, 2, t2_high);
  if (t2_high) add(3, 2, t1_high);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.angle < b.angle; });
  return out;
}

std::vector<int> ricci_null_directions(const TripleSphereMetric& m, const Eigen::Vector3d& t, double tol) {
  const Eigen::MatrixXd ric = m.ricci(t);
  const Eigen::MatrixXd g = metric_at(m, t);
  std::vector<int> out;
  for (int c = 0; c < 9; ++c)
    if (std::abs(ric(c, c) / g(c, c)) <= tol) out.push_back(c);
  return out;
}

HorizontalityCheck horizontality_check(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                                       const Eigen::VectorXd& base_point, const Eigen::VectorXd& x) {
  if (x.norm() == 0.0) throw DomainError("horizontality_check of the zero vector");
  HorizontalityCheck h;
  h.pairings = vertical_pairings(m, killing, base_point, x);
  h.horizontal = h.pairings.cwiseAbs().maxCoeff() <= 1e-12;
  return h;
}

QuotientRicciSample oneill_quotient_ricci(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                                          const Eigen::VectorXd& base_point, const Eigen::VectorXd& x) {
  if (!horizontality_check(m, killing, base_point, x).horizontal)
    throw DomainError("oneill_quotient_ricci needs a horizontal vector");
  return {base_point, x, oneill_terms(m, killing, base_point, x)};
}

Eigen::VectorXd swap_point(const Eigen::VectorXd& p) {
  Eigen::VectorXd out = p;
  out[0] = half_pi - p[2];
  out[1] = half_pi - p[1];
  out[2] = half_pi - p[0];
  if (p.size() == 9)
    for (int i = 0; i < 6; ++i) out[3 + i] = p[8 - i];
  return out;
}

Eigen::MatrixXd swap_permutation() {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(9, 9);
  for (int i = 0; i < 3; ++i) p(i, 2 - i) = 1.0;
  for (int i = 0; i < 6; ++i) p(3 + i, 8 - i) = 1.0;
  return p;
}

double swap_isometry_defect(const TripleSphereMetric& m, const Eigen::Vector3d& t) {
  const Eigen::MatrixXd p = swap_permutation();
  const Eigen::MatrixXd g = metric_at(m, t);
  const Eigen::MatrixXd gs = metric_at(m, swap_point(Eigen::VectorXd(t)));
  return (gs - p * g * p.transpose()).cwiseAbs().maxCoeff();
}

std::vector<Eigen::VectorXd> sample_box(const Box& box, int count, std::uint64_t seed) {
  if (count < 0) throw DomainError("negative sample count");
  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXd> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd x(static_cast<int>(box.size()));
    for (std::size_t d = 0; d < box.size(); ++d) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      x[static_cast<int>(d)] = box[d].lo + u * box[d].width();
    }
    out.push_back(x);
  }
  return out;
}

QuotientScan quotient_scan(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                           const std::vector<Eigen::VectorXd>& points) {
  QuotientScan s;
  s.samples = static_cast<int>(points.size());
  s.min_total = std::numeric_limits<double>::infinity();
  s.min_eigenvalue = std::numeric_limits<double>::infinity();
  s.min_a_term = std::numeric_limits<double>::infinity();
  s.min_t_term = std::numeric_limits<double>::infinity();
  const Eigen::VectorXd e0 = Eigen::VectorXd::Unit(m.dimension(), 0);
  for (const auto& p : points) {
    const CurvatureTensors curv = curvature_tensors(m, p);
    const Eigen::MatrixXd h = horizontal_basis(m, killing, p);
    Eigen::MatrixXd q(h.cols(), h.cols());
    auto measure = [&](const Eigen::VectorXd& x) {
      const OneillTerms t = oneill_terms(m, killing, curv, p, x);
      s.max_sum_defect = std::max(s.max_sum_defect, std::abs(t.total - (t.ricci + t.a_term + t.t_term - t.dn_term)));
      s.min_a_term = std::min(s.min_a_term, t.a_term);
      s.min_t_term = std::min(s.min_t_term, t.t_term);
      return t;
    };
    for (int i = 0; i < h.cols(); ++i) {
      q(i, i) = measure(h.col(i)).total;
      for (int j = 0; j < i; ++j)
        q(i, j) = q(j, i) = 0.25 * (measure(h.col(i) + h.col(j)).total - measure(h.col(i) - h.col(j)).total);
    }
    const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(q, Eigen::EigenvaluesOnly).eigenvalues()[0];
    s.eigen_rows.push_back(lmin);
    if (lmin < s.min_eigenvalue) {
      s.min_eigenvalue = lmin;
      s.argmin = p;
    }
    const OneillTerms t0 = measure(e0);
    s.rows.push_back({p, e0, t0});
    s.min_total = std::min(s.min_total, t0.total);
  }
  s.pass = s.samples > 0 && s.min_total > 0.0 && s.min_eigenvalue > 0.0 && s.max_sum_defect <= 1e-9 &&
           s.min_a_term >= 0.0 && s.min_t_term >= 0.0;
  return s;
}

}  // namespace ricci_lab::submersion
