#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <xsdyn/channels.hpp>
#include <xsdyn/coupling.hpp>
#include <xsdyn/states.hpp>

namespace xsdyn::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Evolution { VacuumBath, PhaseDamping, AmplitudeDamping, RandomTelegraph };

const char* to_string(Evolution e);

struct ScenarioConfig {
  StateKind family = StateKind::MnmsTwoPhoton;
  std::vector<double> coherences;
  Evolution evolution = Evolution::VacuumBath;
  CouplingParams coupling;
  ChannelParams channel;
  double t_end = 5.0;
  double dt = 1e-3;
  std::string output_path;  // empty: standard output
};

// Unresolved settings as written in a config file or on the command line.
// Strings are kept verbatim so numbers may be given as fractions ("1/6").
struct RawScenario {
  std::optional<std::string> family;
  std::vector<std::string> coherences;
  std::optional<std::string> evolution;
  std::optional<std::string> t_end;
  std::optional<std::string> dt;
  std::optional<std::string> out;

  std::optional<std::string> separation;
  std::optional<std::string> mu_dot_r;
  std::optional<std::string> omega_convention;
  std::optional<std::string> gamma12;
  std::optional<std::string> omega12;

  std::optional<std::string> rate;
  std::optional<std::string> b;

  bool has_vacuum_keys() const;
  bool has_channel_keys() const;
};

/// Decimal or "p/q". Throws ConfigError naming `what` on anything else.
double parse_number(const std::string& text, const std::string& what);

/// Comma-separated list of numbers; blanks between commas are errors.
std::vector<double> parse_number_list(const std::string& text, const std::string& what);

StateKind parse_family(const std::string& name);
Evolution parse_evolution(const std::string& name);
OmegaPrefactor parse_omega_convention(const std::string& name);

/// Reads the INI sections [scenario], [vacuum] and [channel].
/// Unknown sections or keys are ConfigErrors.
RawScenario read_ini(std::istream& in);
RawScenario read_ini_file(const std::string& path);

/// Values set in `overrides` replace those in `base`.
RawScenario merge(RawScenario base, const RawScenario& overrides);

/// Applies defaults and validates. Throws ConfigError for a missing or
/// empty coherence list, x outside (0, 1], keys from the block that does
/// not match the evolution, and malformed values.
ScenarioConfig resolve(const RawScenario& raw);

}  // namespace xsdyn::cli
