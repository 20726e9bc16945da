#include "ricci_lab/blowup.hpp"

#include "ricci_lab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ricci_lab::blowup {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

double max_abs_dn(const submersion::InvariantBlockMetric& m, const Eigen::MatrixXd& killing, const Eigen::VectorXd& p,
                  const std::vector<int>& mask, double* min_ricci) {
  const submersion::CurvatureTensors curv = submersion::curvature_tensors(m, p);
  const Eigen::MatrixXd h = submersion::horizontal_basis(m, killing, p);
  double dn = 0.0;
  for (int i = 0; i < h.cols(); ++i) {
    const submersion::OneillTerms t = submersion::oneill_terms(m, killing, curv, p, h.col(i), mask);
    dn = std::max(dn, std::abs(t.dn_term));
    if (min_ricci) *min_ricci = std::min(*min_ricci, t.ricci);
  }
  return dn;
}

}  // namespace

ResolvedBlockMetric::ResolvedBlockMetric(submersion::FProfile f, construction::GluedMetric glued, double scale,
                                         double r_max)
    : f_(std::move(f)), glued_(std::move(glued)), scale_(scale), r_max_(r_max) {
  if (!(scale > 0.0)) throw DomainError("resolved block needs a positive scale");
  if (!(r_max > 1.0) || r_max > glued_.R) throw DomainError("resolved block needs 1 < r_max <= R");
}

Box ResolvedBlockMetric::base_box() const { return {{0.0, half_pi}, {1.0, r_max_}, {0.0, std::numbers::pi}}; }

void ResolvedBlockMetric::blocks(const std::vector<D2>& b, submersion::DenseMatrix<D2>& B,
                                 submersion::DenseMatrix<D2>& G) const {
  const double c2 = scale_ * scale_;
  const D2& t1 = b[0];
  const D2& r = b[1];
  const D2& th = b[2];
  const D2 w = 1.0 - evaluate(glued_.phi.phi(), r);
  const D2 k2 = 1.0 - evaluate(glued_.delta, r);
  const D2 r2 = r * r;
  B(0, 0) = D2(1.0);
  B(1, 1) = c2 / w;
  B(2, 2) = 0.25 * c2 * k2 * r2;

  const D2 ct1 = cos(t1);
  const D2 f1 = evaluate(f_.f, half_pi - t1);
  G(0, 0) = ct1 * ct1;
  G(1, 1) = f1 * f1;
  G(2, 2) = D2(1.0);
  G(3, 3) = D2(1.0);
  const D2 vert = 0.25 * c2 * r2 * w;
  const D2 hor = 0.25 * c2 * k2 * r2;
  const D2 ct = cos(th), st = sin(th);
  G(4, 4) = vert;
  G(4, 5) = vert * ct;
  G(5, 4) = vert * ct;
  G(5, 5) = vert * ct * ct + hor * st * st;
}

Eigen::MatrixXd resolved_killing_fields(const Eigen::MatrixXd& k) {
  if (k.rows() != 6) throw DomainError("resolved_killing_fields expects six angle rows");
  Eigen::MatrixXd out(6, k.cols());
  out.row(0) = k.row(0);
  out.row(1) = k.row(1);
  out.row(2) = k.row(2);
  out.row(3) = k.row(4);
  out.row(4) = k.row(3) + k.row(5);
  out.row(5) = k.row(3) - k.row(5);
  return out;
}

double default_blowup_radius(double epsilon, double rho2, double R_gao) {
  if (!(epsilon > 0.0) || !(rho2 > 0.0) || !(R_gao > 0.0)) throw DomainError("default_blowup_radius needs positive inputs");
  const double s = std::sin(rho2 / R_gao);
  return std::max(100.0, std::ceil(1.0 / (s * s) / 100.0) * 100.0);
}

BlowupReport blowup_pipeline(const BlowupConfig& cfg) {
  if (!(cfg.epsilon > 0.0) || cfg.epsilon > 0.1 + 1e-12) throw ConfigError("blowup needs 0 < eps <= 0.1");
  if (cfg.samples < 1 || cfg.core_samples < 1) throw ConfigError("blowup needs positive sample counts");
  if (!(cfg.core_offset > 0.0)) throw ConfigError("core_offset must be positive");
  BlowupReport rep;
  rep.config = cfg;

  gao::GaoConfig gc = cfg.gao;
  gc.epsilon = cfg.epsilon;
  rep.gao = gao::run_gao(gc);

  const double R_gao = gc.R;
  const double R_blow = cfg.R_blow > 0.0 ? cfg.R_blow : default_blowup_radius(cfg.epsilon, rep.gao.rho2, R_gao);
  rep.config.R_blow = R_blow;
  construction::PsiBuilderConfig pc;
  pc.n = 2;
  pc.R = R_blow;
  pc.kappa = cfg.kappa;
  const construction::GluedBuild build = construction::assemble_glued_metric(pc);
  rep.construction_psi_pass = build.psi.all_pass();
  rep.glued = construction::certify_bounds(build.metric);
  rep.construction_ricci_positive = rep.glued.sigma_scan > 0.0;
  try {
    const construction::SizeReport s = construction::rescale_and_size(build.metric, rep.glued.sigma);
    rep.size_bound = s.holds ? "holds" : "fails";
  } catch (const DegenerateBoundError& e) {
    rep.size_bound = std::string("flagged: ") + e.what();
  }

  // CP^2_{R_blow} scaled by c is CP^2_{R_gao}; geodesic radius rho maps to r = R_blow sin(rho / R_gao)
  rep.scale = R_gao / R_blow;
  rep.r_max = R_blow * std::sin(rep.gao.rho2 / R_gao);
  if (rep.r_max < build.metric.r1())
    throw ConfigError("R_blow too small: the modified region does not fit inside the rho2 ball");

  const submersion::FProfile f = submersion::build_f_profile(cfg.epsilon);
  const ResolvedBlockMetric m(f, build.metric, rep.scale, rep.r_max);
  const Eigen::MatrixXd killing = resolved_killing_fields(submersion::edge_cut_killing_fields());

  const double log_span = std::log((rep.r_max - 1.0) / cfg.core_offset);
  auto to_base = [&](const Eigen::VectorXd& u) {
    Eigen::VectorXd p(3);
    p << u[0], 1.0 + cfg.core_offset * std::exp(u[1] * log_span), u[2];
    return p;
  };
  const Box unit{{cfg.t1_inset, half_pi - cfg.t1_inset}, {0.0, 1.0}, {cfg.theta_inset, std::numbers::pi - cfg.theta_inset}};
  std::vector<Eigen::VectorXd> points;
  for (const auto& u : submersion::sample_box(unit, cfg.samples, cfg.seed)) points.push_back(to_base(u));
  rep.scan = submersion::quotient_scan(m, killing, points);

  rep.core_kappa = std::numeric_limits<double>::infinity();
  for (auto u : submersion::sample_box(unit, cfg.core_samples, cfg.seed + 1)) {
    u[1] = 0.0;
    rep.core_dn_max = std::max(rep.core_dn_max, max_abs_dn(m, killing, to_base(u), {4, 5}, &rep.core_kappa));
  }
  rep.dn_bound_holds = rep.core_dn_max <= rep.core_kappa / 2.0;

  const submersion::TripleSphereMetric original(f);
  const Eigen::MatrixXd k0 = submersion::edge_cut_killing_fields();
  Eigen::VectorXd center(3);
  center << 0.7, 1e-3, 1e-3;
  rep.center_dn_unresolved = max_abs_dn(original, k0, center, {3, 5}, nullptr);

  rep.pass = rep.gao.pass && rep.construction_psi_pass && rep.construction_ricci_positive && rep.scan.pass &&
             rep.dn_bound_holds;
  return rep;
}

}  // namespace ricci_lab::blowup
