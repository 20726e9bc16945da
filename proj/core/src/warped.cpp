#include "ricci_lab/warped.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ricci_lab::warped {

namespace {

using std::numbers::pi;

void require_dimension(int n) {
  if (n < 2) throw DomainError("complex dimension n must be at least 2, got " + std::to_string(n));
}

double one_minus_phi(const PhiMetric& p, double r) { return 1.0 - p.phi().value(r); }

// Arclength over [a, b] with the substitution r = e + s^2 anchored at each end, which
// absorbs an inverse square-root singularity where 1 - phi vanishes linearly.
template <class Quadrature>
double substituted_length(const PhiMetric& p, double a, double b) {
  const double mid = 0.5 * (a + b);
  auto half = [&](double anchor, double sign, double length) {
    auto integrand = [&](double s) {
      if (s <= 0.0) {
        if (one_minus_phi(p, anchor) > 1e-12) return 0.0;
        const double slope = sign * p.phi().derivative(anchor, 1);
        return slope < 0.0 ? 2.0 / std::sqrt(-slope) : 0.0;
      }
      const double r = anchor + sign * s * s;
      const double w = one_minus_phi(p, r);
      return 2.0 * s / std::sqrt(w);
    };
    double err = 0.0;
    return Quadrature::integrate(integrand, 0.0, std::sqrt(length), 15, 1e-14, &err);
  };
  return half(a, 1.0, mid - a) + half(b, -1.0, b - mid);
}

void check_endpoint(const PhiMetric& p, double e) {
  const Jet j = p.phi()(e);
  const double gap = 1.0 - j.value;
  if (gap < -1e-12) throw DomainError("phi exceeds 1 at r = " + std::to_string(e));
  if (gap <= 1e-12 && std::abs(j.d1) <= 1e-9)
    throw DomainError("non-integrable endpoint at r = " + std::to_string(e) +
                      ": 1 - phi vanishes to second order");
}

void check_interval(const PhiMetric& p, double a, double b) {
  p.phi()(a);
  p.phi()(b);
  check_endpoint(p, a);
  check_endpoint(p, b);
  for (int i = 1; i < 64; ++i) {
    const double r = a + (b - a) * i / 64.0;
    if (one_minus_phi(p, r) <= 0.0)
      throw DomainError("phi >= 1 in the interior at r = " + std::to_string(r));
  }
}

}  // namespace

double FrameRicci::min() const { return std::min({radial, vertical, horizontal}); }

WarpedMetric::WarpedMetric(int n, RadialProfile h, RadialProfile f) : n_(n), h_(std::move(h)), f_(std::move(f)) {
  require_dimension(n);
  if (h_.domain().lo != f_.domain().lo || h_.domain().hi != f_.domain().hi)
    throw DomainError("h and f must share a domain");
}

FrameRicci ricci_hf(int n, const Jet& h, const Jet& f) {
  require_dimension(n);
  if (!(h.value > 0.0) || !(f.value > 0.0))
    throw DomainError("ricci_hf needs h > 0 and f > 0; use smoothness_limits at a collapsed orbit");
  const double m = 2.0 * n - 2.0;
  const double hh = h.d2 / h.value;
  const double ff = f.d2 / f.value;
  const double mixed = f.d1 * h.d1 / (f.value * h.value);
  const double f2 = f.value * f.value;
  const double twist = h.value * h.value / (f2 * f2);
  FrameRicci r;
  r.radial = -hh - m * ff;
  r.vertical = -hh - m * mixed + m * twist;
  r.horizontal = -ff - mixed - (2.0 * n - 3.0) * f.d1 * f.d1 / f2 + 2.0 * n / f2 - 2.0 * twist;
  return r;
}

FrameRicci ricci_hf(const WarpedMetric& w, double t) { return ricci_hf(w.n(), w.h()(t), w.f()(t)); }

PhiMetric::PhiMetric(int n, RadialProfile phi) : n_(n), phi_(std::move(phi)) { require_dimension(n); }

PhiComponents phi_metric_components(const PhiMetric& p, double r) {
  const double w = one_minus_phi(p, r);
  if (!(w > 0.0)) throw DomainError("phi >= 1 at r = " + std::to_string(r));
  const double u = std::sqrt(w);
  return {r * u, r, 1.0 / u};
}

ArclengthJets arclength_jets(const PhiMetric& p, double r) {
  const Jet phi = p.phi()(r);
  const double w = 1.0 - phi.value;
  if (!(w > 0.0)) throw DomainError("phi >= 1 at r = " + std::to_string(r));
  const double u = std::sqrt(w);
  ArclengthJets j;
  j.h = {r * u, w - 0.5 * r * phi.d1, -0.5 * u * (3.0 * phi.d1 + r * phi.d2)};
  j.f = {r, u, -0.5 * phi.d1};
  return j;
}

double arclength_reparam(const PhiMetric& p, double r_ref, double r) {
  if (r == r_ref) return 0.0;
  const double a = std::min(r, r_ref), b = std::max(r, r_ref);
  check_interval(p, a, b);
  const double t = substituted_length<boost::math::quadrature::gauss_kronrod<double, 31>>(p, a, b);
  return r > r_ref ? t : -t;
}

QuadratureCrossCheck arclength_cross_check(const PhiMetric& p, double r_ref, double r) {
  if (r == r_ref) return {0.0, 0.0};
  const double a = std::min(r, r_ref), b = std::max(r, r_ref);
  check_interval(p, a, b);
  const double sign = r > r_ref ? 1.0 : -1.0;
  return {sign * substituted_length<boost::math::quadrature::gauss_kronrod<double, 61>>(p, a, b),
          sign * substituted_length<boost::math::quadrature::gauss_kronrod<double, 15>>(p, a, b)};
}

PhiRicci ricci_phi(const PhiMetric& p, double r) {
  if (!(r > 0.0)) throw DomainError("ricci_phi needs r > 0");
  const Jet phi = p.phi()(r);
  const int n = p.n();
  return {0.5 * (phi.d2 + (2.0 * n + 1.0) * phi.d1 / r), phi.d1 / r + 2.0 * n * phi.value / (r * r)};
}

PhiRicci ricci_psi(const RadialProfile& psi, double r) {
  if (!(r > 0.0)) throw DomainError("ricci_psi needs r > 0");
  const Jet j = psi(r);
  return {j.d1 / (2.0 * r), j.value / (r * r)};
}

RadialProfile psi_from_phi(const PhiMetric& p) {
  const RadialProfile phi = p.phi();
  const double n2 = 2.0 * p.n();
  const Interval dom = phi.domain();
  const double h = 1e-5 * dom.width();
  auto eval = [phi, n2, dom, h](double r) {
    const Jet j = phi(r);
    // third derivative of phi by differencing the exact second derivative
    double d3;
    if (r - h < dom.lo)
      d3 = (-3.0 * j.d2 + 4.0 * phi(r + h).d2 - phi(r + 2 * h).d2) / (2.0 * h);
    else if (r + h > dom.hi)
      d3 = (3.0 * j.d2 - 4.0 * phi(r - h).d2 + phi(r - 2 * h).d2) / (2.0 * h);
    else
      d3 = (phi(r + h).d2 - phi(r - h).d2) / (2.0 * h);
    return Jet{r * j.d1 + n2 * j.value, (n2 + 1.0) * j.d1 + r * j.d2, (n2 + 2.0) * j.d2 + r * d3};
  };
  return RadialProfile(dom, eval, Representation::closed_form, phi.knots(), "psi");
}

namespace {

// Running integral of psi(s) s^{2n-1} from 1, tabulated on a refined knot grid.
class WeightedIntegral {
 public:
  WeightedIntegral(RadialProfile psi, int n) : psi_(std::move(psi)), power_(2 * n - 1) {
    const Interval d = psi_.domain();
    std::vector<double> knots{d.lo, d.hi};
    for (double k : psi_.knots())
      if (k > d.lo && k < d.hi) knots.push_back(k);
    std::sort(knots.begin(), knots.end());
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      const double a = knots[i], b = knots[i + 1];
      const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / 0.05)));
      for (int j = 0; j < pieces; ++j) breaks_.push_back(a + (b - a) * j / pieces);
    }
    breaks_.push_back(d.hi);
    cumulative_.push_back(0.0);
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
      cumulative_.push_back(cumulative_.back() + segment(breaks_[i], breaks_[i + 1]));
  }

  double operator()(double r) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end() - 1, r);
    const std::size_t i = it == breaks_.begin() ? 0 : static_cast<std::size_t>(it - breaks_.begin()) - 1;
    return cumulative_[i] + segment(breaks_[i], r);
  }

 private:
  double segment(double a, double b) const {
    if (b == a) return 0.0;
    auto f = [this](double s) { return psi_.value(s) * std::pow(s, power_); };
    return boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
  }

  RadialProfile psi_;
  int power_;
  std::vector<double> breaks_;
  std::vector<double> cumulative_;
};

}  // namespace

PhiMetric phi_from_psi(const RadialProfile& psi, int n) {
  require_dimension(n);
  if (std::abs(psi.domain().lo - 1.0) > 1e-12)
    throw DomainError("phi_from_psi fixes the constant by phi(1) = 1; the interval must start at 1");
  auto integral = std::make_shared<const WeightedIntegral>(psi, n);
  const double n2 = 2.0 * n;
  auto eval = [psi, integral, n2](double r) {
    const Jet s = psi(r);
    const double value = (1.0 + (*integral)(r)) / std::pow(r, n2);
    const double d1 = (s.value - n2 * value) / r;
    const double d2 = (s.d1 - (n2 + 1.0) * d1) / r;
    return Jet{value, d1, d2};
  };
  return PhiMetric(n, RadialProfile(psi.domain(), eval, Representation::closed_form, psi.knots(), "phi"));
}

FubiniStudyComponents fubini_study_polar(double R, int n, double t) {
  require_dimension(n);
  if (!(R > 0.0)) throw DomainError("Fubini-Study scale must be positive");
  if (!(t > 0.0 && t < R * pi / 2.0)) throw DomainError("fubini_study_polar needs 0 < t < R pi/2");
  return {R * std::sin(t / R) * std::cos(t / R), R * std::sin(t / R)};
}

WarpedMetric fubini_study_metric(double R, int n) {
  if (!(R > 0.0)) throw DomainError("Fubini-Study scale must be positive");
  const Interval dom{0.0, R * pi / 2.0};
  RadialProfile h(
      dom,
      [R](double t) {
        const double a = 2.0 * t / R;
        return Jet{0.5 * R * std::sin(a), std::cos(a), -2.0 / R * std::sin(a)};
      },
      Representation::closed_form, {}, "fubini_study_h");
  RadialProfile f(
      dom,
      [R](double t) {
        const double a = t / R;
        return Jet{R * std::sin(a), std::cos(a), -std::sin(a) / R};
      },
      Representation::closed_form, {}, "fubini_study_f");
  return WarpedMetric(n, h, f);
}

CollapseLimits smoothness_limits(const PhiMetric& p) {
  const double ra = p.domain().lo;
  const Jet phi = p.phi()(ra);
  if (std::abs(1.0 - phi.value) > 1e-9)
    throw DomainError("smoothness_limits needs phi = 1 at the left end, found " + std::to_string(phi.value));
  if (phi.d1 >= 0.0) throw DomainError("phi' >= 0 at the left end: the orbit does not collapse");
  // f_t = sqrt(1 - phi) -> 0 and h_t = (1 - phi) - r phi'/2 -> -r_a phi'(r_a)/2
  return {0.0, -0.5 * ra * phi.d1};
}

CollapseLimits smoothness_limits(const WarpedMetric& w) {
  const double a = w.domain().lo;
  const Jet h = w.h()(a);
  if (std::abs(h.value) > 1e-9) throw DomainError("h does not vanish at the left end: no collapsing orbit");
  return {w.f()(a).d1, h.d1};
}

PhiMetric fubini_study_phi(int n, double R) {
  if (!(R > 0.0)) throw DomainError("Fubini-Study scale must be positive");
  const double k = 1.0 / (R * R);
  RadialProfile phi(
      {0.0, R}, [k](double r) { return Jet{k * r * r, 2.0 * k * r, 2.0 * k}; }, Representation::closed_form, {},
      "phi_fubini_study");
  return PhiMetric(n, phi);
}

PhiMetric calabi_phi(int n, double r_max) {
  if (!(r_max > 1.0)) throw DomainError("calabi_phi needs r_max > 1");
  const double m = 2.0 * n;
  RadialProfile phi(
      {1.0, r_max},
      [m](double r) {
        const double v = std::pow(r, -m);
        return Jet{v, -m * v / r, m * (m + 1.0) * v / (r * r)};
      },
      Representation::closed_form, {}, "phi_calabi");
  return PhiMetric(n, phi);
}

PhiMetric flat_phi(int n, Interval domain) { return PhiMetric(n, RadialProfile::constant(domain, 0.0, "phi_flat")); }

EinsteinReport einstein_report(const PhiMetric& p, double lambda, Interval radii, int samples) {
  if (samples < 2) throw DomainError("einstein_report needs at least two samples");
  EinsteinReport rep{lambda, 0.0, radii.lo};
  for (int i = 0; i < samples; ++i) {
    const double r = radii.lo + radii.width() * i / (samples - 1);
    const ArclengthJets j = arclength_jets(p, r);
    const FrameRicci ric = ricci_hf(p.n(), j.h, j.f);
    const double dev = std::max({std::abs(ric.radial - lambda), std::abs(ric.vertical - lambda),
                                 std::abs(ric.horizontal - lambda)});
    if (dev > rep.max_deviation) {
      rep.max_deviation = dev;
      rep.worst_radius = r;
    }
  }
  return rep;
}

EinsteinReport einstein_report(const WarpedMetric& w, double lambda, Interval times, int samples) {
  if (samples < 2) throw DomainError("einstein_report needs at least two samples");
  EinsteinReport rep{lambda, 0.0, times.lo};
  for (int i = 0; i < samples; ++i) {
    const double t = times.lo + times.width() * i / (samples - 1);
    const FrameRicci ric = ricci_hf(w, t);
    const double dev = std::max({std::abs(ric.radial - lambda), std::abs(ric.vertical - lambda),
                                 std::abs(ric.horizontal - lambda)});
    if (dev > rep.max_deviation) {
      rep.max_deviation = dev;
      rep.worst_radius = t;
    }
  }
  return rep;
}

}  // namespace ricci_lab::warped
