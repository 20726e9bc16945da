#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ricci_lab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain where a routine is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Constraint system with no admissible solution.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class SingularMetricError : public Error {
 public:
  SingularMetricError(const std::string& what, std::vector<double> point)
      : Error(what), point_(std::move(point)) {}
  const std::vector<double>& point() const { return point_; }

 private:
  std::vector<double> point_;
};

// Finite-difference stencil would leave the chart box.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

class NotInLatticeError : public Error {
 public:
  using Error::Error;
};

// Two metrics that should agree to first order at a point do not.
class JetMismatchError : public Error {
 public:
  JetMismatchError(const std::string& what, double value_gap, double derivative_gap)
      : Error(what), value_gap_(value_gap), derivative_gap_(derivative_gap) {}
  double value_gap() const { return value_gap_; }
  double derivative_gap() const { return derivative_gap_; }

 private:
  double value_gap_;
  double derivative_gap_;
};

// Bound whose statement degenerates for the requested dimension.
class DegenerateBoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace ricci_lab
