#pragma once

#include <cmath>
#include <type_traits>

namespace ricci_lab {

// Forward-mode dual number; nest Dual<Dual<double>> for mixed second derivatives.
template <class T>
struct Dual {
  T v{};
  T d{};

  Dual() = default;
  Dual(double c) : v(c), d(0.0) {}  // NOLINT: implicit lift of constants
  Dual(T value, T derivative) : v(value), d(derivative) {}

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
  Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
  friend Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
  friend Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
  friend Dual operator/(const Dual& a, const Dual& b) {
    T inv = T(1.0) / b.v;
    return {a.v * inv, (a.d * b.v - a.v * b.d) * inv * inv};
  }
  friend Dual operator+(const Dual& a, double c) { return {a.v + c, a.d}; }
  friend Dual operator+(double c, const Dual& a) { return {a.v + c, a.d}; }
  friend Dual operator-(const Dual& a, double c) { return {a.v - c, a.d}; }
  friend Dual operator-(double c, const Dual& a) { return {c - a.v, -a.d}; }
  friend Dual operator*(const Dual& a, double c) { return {a.v * c, a.d * c}; }
  friend Dual operator*(double c, const Dual& a) { return {a.v * c, a.d * c}; }
  friend Dual operator/(const Dual& a, double c) { return {a.v / c, a.d / c}; }
  friend Dual operator/(double c, const Dual& a) { return Dual(c) / a; }
};

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};

inline double value_of(double x) { return x; }
template <class T>
double value_of(const Dual<T>& x) {
  return value_of(x.v);
}

template <class T>
Dual<T> sin(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {sin(x.v), cos(x.v) * x.d};
}

template <class T>
Dual<T> cos(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {cos(x.v), -sin(x.v) * x.d};
}

template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  using std::sqrt;
  T s = sqrt(x.v);
  return {s, x.d / (2.0 * s)};
}

template <class T>
Dual<T> exp(const Dual<T>& x) {
  using std::exp;
  T e = exp(x.v);
  return {e, e * x.d};
}

template <class T>
Dual<T> log(const Dual<T>& x) {
  using std::log;
  return {log(x.v), x.d / x.v};
}

using D1 = Dual<double>;
using D2 = Dual<D1>;

}  // namespace ricci_lab
