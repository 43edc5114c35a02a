#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace xsdyn {

// Root of every error raised by the library. The CLI maps anything derived
// from this to the "physics" exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class ZeroSeparation : public ParameterOutOfRange {
 public:
  using ParameterOutOfRange::ParameterOutOfRange;
};

class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& what, int iterations)
      : Error(what), iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

enum class ViolationKind { NonFinite, NotHermitian, TraceNotOne, NotPositive };

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // |rho - rho^dagger|_max, |Tr rho - 1|, or the offending minimum eigenvalue.
  double magnitude;
};

class DensityViolation : public Error {
 public:
  explicit DensityViolation(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }
  bool has(ViolationKind kind) const;

 private:
  std::vector<Violation> violations_;
};

class NotXState : public Error {
 public:
  explicit NotXState(double off_x_magnitude);
  double off_x_magnitude() const { return off_x_; }

 private:
  double off_x_;
};

class WrongBasisTag : public Error {
 public:
  using Error::Error;
};

class NegativeEigenvalue : public Error {
 public:
  explicit NegativeEigenvalue(double value);
  double value() const { return value_; }

 private:
  double value_;
};

class StepRejected : public Error {
 public:
  StepRejected(double time, double trace_drift);
  double time() const { return time_; }
  double trace_drift() const { return drift_; }

 private:
  double time_;
  double drift_;
};

class DeltaOutOfRange : public Error {
 public:
  explicit DeltaOutOfRange(double delta);
  double delta() const { return delta_; }

 private:
  double delta_;
};

}  // namespace xsdyn
