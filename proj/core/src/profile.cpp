#include "ricci_lab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

namespace ricci_lab {

Polynomial::Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) c_.push_back(0.0);
}

Polynomial Polynomial::monomial(int degree, double c) {
  std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Jet Polynomial::jet(double x) const {
  double v = 0.0, d1 = 0.0, d2 = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    d2 = d2 * x + 2.0 * d1;
    d1 = d1 * x + v;
    v = v * x + c_[i];
  }
  return {v, d1, d2};
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial({0.0});
  std::vector<double> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative(double constant) const {
  std::vector<double> a(c_.size() + 1);
  a[0] = constant;
  for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / static_cast<double>(i + 1);
  return Polynomial(std::move(a));
}

Polynomial Polynomial::compose_affine(double a, double b) const {
  Polynomial result({0.0});
  Polynomial inner({b, a});
  for (std::size_t i = c_.size(); i-- > 0;) result = result * inner + Polynomial({c_[i]});
  return result;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& a) {
  std::vector<double> c = a.c_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

RadialProfile::RadialProfile(Interval domain, Evaluator evaluator, Representation representation,
                             std::vector<double> knots, std::string name) {
  if (!(domain.hi > domain.lo)) throw DomainError("profile domain must have positive length");
  auto impl = std::make_shared<Impl>();
  impl->domain = domain;
  impl->eval = std::make_shared<const Evaluator>(std::move(evaluator));
  impl->representation = representation;
  std::sort(knots.begin(), knots.end());
  impl->knots = std::move(knots);
  impl->name = std::move(name);
  impl_ = std::move(impl);
}

RadialProfile RadialProfile::constant(Interval domain, double c, std::string name) {
  return RadialProfile(
      domain, [c](double) { return Jet{c, 0.0, 0.0}; }, Representation::piecewise_polynomial,
      {domain.lo, domain.hi}, std::move(name));
}

RadialProfile RadialProfile::piecewise(std::vector<double> breaks, std::vector<Polynomial> pieces,
                                       std::string name) {
  if (breaks.size() < 2 || pieces.size() + 1 != breaks.size())
    throw DomainError("piecewise profile needs one polynomial per interval");
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (!(breaks[i] > breaks[i - 1])) throw DomainError("piecewise breaks must increase");
  auto shared_breaks = std::make_shared<const std::vector<double>>(breaks);
  auto shared_pieces = std::make_shared<const std::vector<Polynomial>>(pieces);
  Evaluator eval = [shared_breaks, shared_pieces](double x) {
    const auto& b = *shared_breaks;
    auto it = std::upper_bound(b.begin() + 1, b.end() - 1, x);
    std::size_t i = static_cast<std::size_t>(it - b.begin()) - 1;
    return (*shared_pieces)[i].jet(x - b[i]);
  };
  RadialProfile p({breaks.front(), breaks.back()}, std::move(eval), Representation::piecewise_polynomial, breaks,
                  std::move(name));
  auto impl = std::make_shared<Impl>(*p.impl_);
  impl->pieces = std::move(pieces);
  p.impl_ = std::move(impl);
  return p;
}

Jet RadialProfile::operator()(double x) const {
  const Interval& d = impl_->domain;
  const double slack = 1e-12 * std::max(1.0, std::abs(d.hi));
  if (!d.contains(x, slack) || std::isnan(x))
    throw DomainError("profile '" + impl_->name + "' evaluated at " + std::to_string(x) + " outside [" +
                      std::to_string(d.lo) + ", " + std::to_string(d.hi) + "]");
  return (*impl_->eval)(x);
}

double RadialProfile::derivative(double x, int order) const { return detail::jet_component((*this)(x), order); }

std::string RadialProfile::representation_name() const {
  return impl_->representation == Representation::closed_form ? "closed-form" : "piecewise-polynomial";
}

Jet RadialProfile::knot_defect() const {
  Jet worst;
  const auto& pieces = impl_->pieces;
  const auto& b = impl_->knots;
  for (std::size_t i = 1; i + 1 < b.size() && i < pieces.size(); ++i) {
    Jet left = pieces[i - 1].jet(b[i] - b[i - 1]);
    Jet right = pieces[i].jet(0.0);
    worst.value = std::max(worst.value, std::abs(left.value - right.value));
    worst.d1 = std::max(worst.d1, std::abs(left.d1 - right.d1));
    worst.d2 = std::max(worst.d2, std::abs(left.d2 - right.d2));
  }
  return worst;
}

void RadialProfile::write_csv(std::ostream& out, int samples, const std::string& prefix) const {
  if (samples < 2) throw DomainError("write_csv needs at least two samples");
  const Interval& d = impl_->domain;
  out << std::setprecision(17);
  for (int i = 0; i < samples; ++i) {
    double x = d.lo + d.width() * static_cast<double>(i) / (samples - 1);
    Jet j = (*this)(x);
    out << prefix << x << ',' << j.value << ',' << j.d1 << ',' << j.d2 << '\n';
  }
}

}  // namespace ricci_lab
