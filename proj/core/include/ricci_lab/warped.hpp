#pragma once

#include "ricci_lab/profile.hpp"

#include <optional>

namespace ricci_lab::warped {

// Ricci values on the unit frame X0 (radial), X1 (Hopf fibre), X2 (horizontal).
struct FrameRicci {
  double radial = 0.0;
  double vertical = 0.0;
  double horizontal = 0.0;

  double min() const;
};

// dt^2 + h(t)^2 ds_v^2 + f(t)^2 ds_h^2 on an interval times S^{2n-1}.
class WarpedMetric {
 public:
  WarpedMetric(int n, RadialProfile h, RadialProfile f);

  int n() const { return n_; }
  const RadialProfile& h() const { return h_; }
  const RadialProfile& f() const { return f_; }
  const Interval& domain() const { return h_.domain(); }

 private:
  int n_;
  RadialProfile h_;
  RadialProfile f_;
};

FrameRicci ricci_hf(int n, const Jet& h, const Jet& f);
FrameRicci ricci_hf(const WarpedMetric& w, double t);

// dr^2/(1-phi) + r^2 (1-phi) ds_v^2 + r^2 ds_h^2.
class PhiMetric {
 public:
  PhiMetric(int n, RadialProfile phi);

  int n() const { return n_; }
  const RadialProfile& phi() const { return phi_; }
  const Interval& domain() const { return phi_.domain(); }

 private:
  int n_;
  RadialProfile phi_;
};

struct PhiComponents {
  double h;
  double f;
  double dt_dr;
};

PhiComponents phi_metric_components(const PhiMetric& p, double r);

// h and f as functions of arclength t, expressed through their t-jets at radius r.
struct ArclengthJets {
  Jet h;
  Jet f;
};
ArclengthJets arclength_jets(const PhiMetric& p, double r);

// Signed arclength from r_ref to r along the radial line.
double arclength_reparam(const PhiMetric& p, double r_ref, double r);

struct QuadratureCrossCheck {
  double high_order;
  double low_order;
};
QuadratureCrossCheck arclength_cross_check(const PhiMetric& p, double r_ref, double r);

// Ric(X0,X0) = Ric(X1,X1) and Ric(X2,X2).
struct PhiRicci {
  double radial_vertical;
  double horizontal;
};

PhiRicci ricci_phi(const PhiMetric& p, double r);
PhiRicci ricci_psi(const RadialProfile& psi, double r);

// psi = r phi' + 2n phi.
RadialProfile psi_from_phi(const PhiMetric& p);
// phi = (1 + int_1^r psi(s) s^{2n-1} ds) / r^{2n}; psi must live on an interval starting at 1.
PhiMetric phi_from_psi(const RadialProfile& psi, int n);

struct FubiniStudyComponents {
  double h;
  double f;
};
FubiniStudyComponents fubini_study_polar(double R, int n, double t);
WarpedMetric fubini_study_metric(double R, int n);

// First derivatives of f and h in arclength at the collapsing end of the profile.
struct CollapseLimits {
  double df_dt;
  double dh_dt;
};
CollapseLimits smoothness_limits(const PhiMetric& p);
CollapseLimits smoothness_limits(const WarpedMetric& w);

PhiMetric fubini_study_phi(int n, double R);        // phi = r^2/R^2 on [0, R]
PhiMetric calabi_phi(int n, double r_max);          // phi = r^{-2n} on [1, r_max]
PhiMetric flat_phi(int n, Interval domain);         // phi = 0

struct EinsteinReport {
  double lambda = 0.0;
  double max_deviation = 0.0;
  double worst_radius = 0.0;
};

// sup over a uniform grid of the frame deviation |Ric - lambda g| from the closed form.
EinsteinReport einstein_report(const PhiMetric& p, double lambda, Interval radii, int samples);
EinsteinReport einstein_report(const WarpedMetric& w, double lambda, Interval times, int samples);

}  // namespace ricci_lab::warped
