#pragma once

#include <ostream>
#include <string>

#include <xsdyn/density.hpp>
#include <xsdyn/events.hpp>
#include <xsdyn/trajectory.hpp>

#include "xsdyn_cli/config.hpp"

namespace xsdyn::cli {

inline constexpr const char* kCsvHeader =
    "time,x,concurrence,c1,c2,rho_gg,rho_ss,rho_aa,rho_ee,abs_rho_ge,abs_rho_sa";
inline constexpr const char* kEventsHeader = "x,event,time,refined";

/// Twelve significant digits, as every CSV number is written.
std::string format_number(double v);

/// Initial state of `family` at coherence (or Werner weight) x.
DensityMatrix4 initial_state(StateKind family, double x);

/// Trajectory of one x: RK4 for the vacuum bath, the Kraus map otherwise.
Trajectory run_single(const ScenarioConfig& cfg, double x);

/// Continuous-time concurrence used to refine events for one x.
ConcurrenceAt event_oracle(const ScenarioConfig& cfg, double x);

/// CSV rows (no header) for one trajectory.
std::string csv_block(const Trajectory& traj, double x);

// Each command writes its complete output to `out`.
void run_evolve(const ScenarioConfig& cfg, std::ostream& out);
void run_sweep(const ScenarioConfig& cfg, std::ostream& out);
void run_events(const ScenarioConfig& cfg, std::ostream& out);

struct VerifyResult {
  double max_error = 0.0;
  bool pass = false;
};

/// RK4 against the analytic propagator at every sample; passes when the
/// largest elementwise error is at most 1e-6. Requires a vacuum-bath config.
VerifyResult run_verify(const ScenarioConfig& cfg, std::ostream& out);

}  // namespace xsdyn::cli
