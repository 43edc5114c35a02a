#include "xsdyn_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <utility>

#include <xsdyn/channels.hpp>
#include <xsdyn/concurrence.hpp>
#include <xsdyn/master_equation.hpp>
#include <xsdyn/propagator.hpp>
#include <xsdyn/states.hpp>

namespace xsdyn::cli {

namespace {

constexpr double kVerifyTolerance = 1e-6;

bool is_vacuum(const ScenarioConfig& cfg) { return cfg.evolution == Evolution::VacuumBath; }

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

DensityMatrix4 initial_state(StateKind family, double x) {
  return make_state({family, x});
}

Trajectory run_single(const ScenarioConfig& cfg, double x) {
  const DensityMatrix4 rho0 = initial_state(cfg.family, x);
  if (is_vacuum(cfg)) return evolve_rk4(rho0, cfg.coupling, cfg.t_end, cfg.dt);
  return evolve_channel(rho0, cfg.channel, cfg.t_end, cfg.dt);
}

ConcurrenceAt event_oracle(const ScenarioConfig& cfg, double x) {
  const DensityMatrix4 rho0 = initial_state(cfg.family, x);
  if (is_vacuum(cfg)) return concurrence_along(analytic_state_map(rho0, cfg.coupling));
  return concurrence_along(channel_state_map(rho0, cfg.channel));
}

std::string csv_block(const Trajectory& traj, double x) {
  std::string out;
  const std::string xs = format_number(x);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const DensityMatrix4& rho = traj.states[i];
    const XConcurrenceTerms terms = xstate_terms(extract_xstate(rho));
    const Mat4 c = to_collective(rho).matrix();
    const double fields[] = {c(0, 0).real(), c(1, 1).real(), c(2, 2).real(), c(3, 3).real(),
                             std::abs(c(0, 3)), std::abs(c(1, 2))};
    out += format_number(traj.times[i]);
    out += ',';
    out += xs;
    out += ',';
    out += format_number(traj.concurrences[i]);
    out += ',';
    out += format_number(terms.c1);
    out += ',';
    out += format_number(terms.c2);
    for (double f : fields) {
      out += ',';
      out += format_number(f);
    }
    out += '\n';
  }
  return out;
}

void run_evolve(const ScenarioConfig& cfg, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (double x : cfg.coherences) out << csv_block(run_single(cfg, x), x);
}

void run_sweep(const ScenarioConfig& cfg, std::ostream& out) {
  std::vector<std::future<std::pair<double, std::string>>> jobs;
  jobs.reserve(cfg.coherences.size());
  for (double x : cfg.coherences)
    jobs.push_back(std::async(std::launch::async, [&cfg, x] {
      return std::make_pair(x, csv_block(run_single(cfg, x), x));
    }));

  std::vector<std::pair<double, std::string>> blocks;
  blocks.reserve(jobs.size());
  for (auto& job : jobs) blocks.push_back(job.get());
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  out << kCsvHeader << '\n';
  for (const auto& [x, block] : blocks) out << block;
}

void run_events(const ScenarioConfig& cfg, std::ostream& out) {
  out << kEventsHeader << '\n';
  for (double x : cfg.coherences) {
    const Trajectory traj = run_single(cfg, x);
    const EntanglementEvents found = detect_events(traj, event_oracle(cfg, x));
    for (const auto& e : found.events)
      out << format_number(x) << ',' << to_string(e.kind) << ',' << format_number(e.time) << ','
          << (e.refined ? "true" : "false") << '\n';
  }
}

VerifyResult run_verify(const ScenarioConfig& cfg, std::ostream& out) {
  if (!is_vacuum(cfg)) throw ConfigError("verify needs the vacuum evolution");
  VerifyResult result;
  for (double x : cfg.coherences) {
    const DensityMatrix4 rho0 = initial_state(cfg.family, x);
    const Trajectory traj = evolve_rk4(rho0, cfg.coupling, cfg.t_end, cfg.dt);
    double worst = 0.0;
    double worst_time = 0.0;
    std::size_t worst_r = 0;
    std::size_t worst_c = 0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
      const Mat4& numeric = traj.states[i].matrix();
      const Mat4 exact = analytic_xstate_propagate(rho0, cfg.coupling, traj.times[i]).matrix();
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
          const double err = std::abs(numeric(r, c) - exact(r, c));
          if (err > worst) {
            worst = err;
            worst_time = traj.times[i];
            worst_r = r;
            worst_c = c;
          }
        }
    }
    out << "x=" << format_number(x) << " maxerr=" << format_number(worst)
        << " worst_time=" << format_number(worst_time) << " worst_element=rho_" << worst_r + 1
        << worst_c + 1 << '\n';
    result.max_error = std::max(result.max_error, worst);
  }
  result.pass = result.max_error <= kVerifyTolerance;
  if (result.pass) {
    out << "PASS\n";
  } else {
    out << "FAIL maxerr=" << format_number(result.max_error) << '\n';
  }
  return result;
}

}  // namespace xsdyn::cli
