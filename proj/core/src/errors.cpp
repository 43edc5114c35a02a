#include "xsdyn/errors.hpp"

#include <algorithm>
#include <sstream>

namespace xsdyn {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonFinite:
      return "NonFinite";
    case ViolationKind::NotHermitian:
      return "NotHermitian";
    case ViolationKind::TraceNotOne:
      return "TraceNotOne";
    case ViolationKind::NotPositive:
      return "NotPositive";
  }
  return "Unknown";
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid density matrix:";
  for (const auto& v : violations) os << ' ' << to_string(v.kind) << '(' << v.magnitude << ')';
  return os.str();
}

std::string with_value(const char* prefix, double value) {
  std::ostringstream os;
  os << prefix << value;
  return os.str();
}

}  // namespace

DensityViolation::DensityViolation(std::vector<Violation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

bool DensityViolation::has(ViolationKind kind) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

NotXState::NotXState(double off_x_magnitude)
    : Error(with_value("state is not an X-state; largest off-X entry ", off_x_magnitude)),
      off_x_(off_x_magnitude) {}

NegativeEigenvalue::NegativeEigenvalue(double value)
    : Error(with_value("negative eigenvalue of rho * spin-flipped rho: ", value)), value_(value) {}

StepRejected::StepRejected(double time, double trace_drift)
    : Error(with_value("integration step rejected at t = ", time) +
            with_value(", trace drift ", trace_drift)),
      time_(time),
      drift_(trace_drift) {}

DeltaOutOfRange::DeltaOutOfRange(double delta)
    : Error(with_value("telegraph-noise memory kernel outside [-1, 1]: ", delta)), delta_(delta) {}

}  // namespace xsdyn
