#include "xsdyn_cli/app.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <xsdyn/errors.hpp>

#include "xsdyn_cli/commands.hpp"
#include "xsdyn_cli/config.hpp"

namespace xsdyn::cli {

namespace {

struct Flags {
  std::string config;
  std::string family, evolution, t_end, dt, out;
  std::vector<std::string> x;
  std::string separation, mu_dot_r, omega_convention, gamma12, omega12;
  std::string rate, b;
};

void add_scenario_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "INI scenario file");
  cmd->add_option("--family", f.family, "mnms2, mnms1, mems2, mems1 or werner");
  cmd->add_option("--x", f.x, "Initial coherence; repeatable or comma-separated")->allow_extra_args(false);
  cmd->add_option("--evolution", f.evolution, "vacuum, pd, ad or rtn");
  cmd->add_option("--separation", f.separation, "Atom separation in wavelengths (default 1/6)");
  cmd->add_option("--mu-dot-r", f.mu_dot_r, "Cosine between dipole and separation axis (default 0)");
  cmd->add_option("--omega-convention", f.omega_convention, "three-quarters or three-halves");
  cmd->add_option("--gamma12", f.gamma12, "Override the collective damping");
  cmd->add_option("--omega12", f.omega12, "Override the dipole-dipole shift");
  cmd->add_option("--rate", f.rate, "Channel rate (default 1)");
  cmd->add_option("--b", f.b, "RTN coupling strength (default 2 * rate)");
  cmd->add_option("--t-end", f.t_end, "End time");
  cmd->add_option("--dt", f.dt, "Sample step");
  cmd->add_option("--out", f.out, "Output file (default stdout)");
}

RawScenario flags_to_raw(const CLI::App* cmd, const Flags& f) {
  RawScenario raw;
  auto set = [cmd](std::optional<std::string>& dst, const char* name, const std::string& value) {
    if (cmd->count(name) > 0) dst = value;
  };
  set(raw.family, "--family", f.family);
  set(raw.evolution, "--evolution", f.evolution);
  set(raw.t_end, "--t-end", f.t_end);
  set(raw.dt, "--dt", f.dt);
  set(raw.out, "--out", f.out);
  set(raw.separation, "--separation", f.separation);
  set(raw.mu_dot_r, "--mu-dot-r", f.mu_dot_r);
  set(raw.omega_convention, "--omega-convention", f.omega_convention);
  set(raw.gamma12, "--gamma12", f.gamma12);
  set(raw.omega12, "--omega12", f.omega12);
  set(raw.rate, "--rate", f.rate);
  set(raw.b, "--b", f.b);
  raw.coherences = f.x;
  return raw;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    out.flush();
    if (!out) throw IoError("failed to write output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  file << text;
  file.close();
  if (!file) throw IoError("failed to write output file '" + path + "'");
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit X-state entanglement dynamics"};
  app.name("xsdyn");
  app.require_subcommand(1);

  Flags flags;
  using Command = std::function<int(const ScenarioConfig&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Command>> commands;

  auto add = [&](const char* name, const char* help, Command run) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_scenario_options(cmd, flags);
    commands.emplace_back(cmd, std::move(run));
  };
  add("evolve", "Concurrence and collective-basis elements for each x, in config order",
      [](const ScenarioConfig& cfg, std::ostream& o) {
        run_evolve(cfg, o);
        return int{kExitOk};
      });
  add("sweep", "Like evolve, with x values run in parallel and rows ordered by (x, time)",
      [](const ScenarioConfig& cfg, std::ostream& o) {
        run_sweep(cfg, o);
        return int{kExitOk};
      });
  add("events", "Refined entanglement death and birth times",
      [](const ScenarioConfig& cfg, std::ostream& o) {
        run_events(cfg, o);
        return int{kExitOk};
      });
  add("verify", "Compare RK4 against the analytic vacuum-bath solution",
      [](const ScenarioConfig& cfg, std::ostream& o) {
        return run_verify(cfg, o).pass ? int{kExitOk} : int{kExitPhysics};
      });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    for (const auto& [cmd, run] : commands) {
      if (!cmd->parsed()) continue;
      RawScenario raw = flags.config.empty() ? RawScenario{} : read_ini_file(flags.config);
      const ScenarioConfig cfg = resolve(merge(std::move(raw), flags_to_raw(cmd, flags)));
      std::ostringstream buffer;
      const int code = run(cfg, buffer);
      emit(buffer.str(), cfg.output_path, out);
      return code;
    }
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const xsdyn::Error& e) {
    err << "physics error: " << e.what() << '\n';
    return kExitPhysics;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPhysics;
  }
}

}  // namespace xsdyn::cli
