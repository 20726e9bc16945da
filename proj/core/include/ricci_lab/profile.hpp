#pragma once

#include "ricci_lab/dual.hpp"
#include "ricci_lab/errors.hpp"

#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace ricci_lab {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
};

// Value and first two derivatives at a point.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// Dense polynomial sum c_i x^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  static Polynomial monomial(int degree, double c = 1.0);

  double operator()(double x) const;
  Jet jet(double x) const;
  Polynomial derivative() const;
  Polynomial antiderivative(double constant = 0.0) const;
  // p(a x + b)
  Polynomial compose_affine(double a, double b) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coefficients() const { return c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& a);

 private:
  std::vector<double> c_;
};

enum class Representation { closed_form, piecewise_polynomial };

// Immutable one-variable profile with explicit first and second derivatives.
class RadialProfile {
 public:
  using Evaluator = std::function<Jet(double)>;

  RadialProfile(Interval domain, Evaluator evaluator, Representation representation = Representation::closed_form,
                std::vector<double> knots = {}, std::string name = {});

  static RadialProfile constant(Interval domain, double c, std::string name = "constant");
  // Piece i is a polynomial in the local variable (x - breaks[i]) on [breaks[i], breaks[i+1]].
  static RadialProfile piecewise(std::vector<double> breaks, std::vector<Polynomial> pieces, std::string name = {});

  Jet operator()(double x) const;
  Jet evaluate_unchecked(double x) const { return (*impl_->eval)(x); }
  double value(double x) const { return (*this)(x).value; }
  double derivative(double x, int order) const;

  const Interval& domain() const { return impl_->domain; }
  Representation representation() const { return impl_->representation; }
  std::string representation_name() const;
  const std::vector<double>& knots() const { return impl_->knots; }
  const std::string& name() const { return impl_->name; }

  // Largest jump of value/d1/d2 across interior knots of a piecewise profile.
  Jet knot_defect() const;

  // Writes rows "prefix x,value,d1,d2" on a uniform grid; the caller owns the header line.
  void write_csv(std::ostream& out, int samples, const std::string& prefix = {}) const;

 private:
  struct Impl {
    Interval domain;
    std::shared_ptr<const Evaluator> eval;
    Representation representation;
    std::vector<double> knots;
    std::string name;
    std::vector<Polynomial> pieces;
  };
  std::shared_ptr<const Impl> impl_;
};

namespace detail {

inline double jet_component(const Jet& j, int order) {
  switch (order) {
    case 0: return j.value;
    case 1: return j.d1;
    case 2: return j.d2;
    default: throw DomainError("profile derivatives above second order are not available");
  }
}

template <class T>
struct ProfileApply;

template <>
struct ProfileApply<double> {
  static double apply(const RadialProfile& p, double x, int order) { return jet_component(p(x), order); }
};

template <class U>
struct ProfileApply<Dual<U>> {
  static Dual<U> apply(const RadialProfile& p, const Dual<U>& x, int order) {
    return {ProfileApply<U>::apply(p, x.v, order), ProfileApply<U>::apply(p, x.v, order + 1) * x.d};
  }
};

}  // namespace detail

// Evaluates the order-th derivative of the profile on a (possibly nested) dual argument.
template <class T>
T evaluate(const RadialProfile& p, const T& x, int order = 0) {
  return detail::ProfileApply<T>::apply(p, x, order);
}

}  // namespace ricci_lab
