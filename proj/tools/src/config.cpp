#include "xsdyn_cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace xsdyn::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_plain(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

template <typename T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

}  // namespace

const char* to_string(Evolution e) {
  switch (e) {
    case Evolution::VacuumBath:
      return "vacuum";
    case Evolution::PhaseDamping:
      return "pd";
    case Evolution::AmplitudeDamping:
      return "ad";
    case Evolution::RandomTelegraph:
      return "rtn";
  }
  return "?";
}

bool RawScenario::has_vacuum_keys() const {
  return separation || mu_dot_r || omega_convention || gamma12 || omega12;
}

bool RawScenario::has_channel_keys() const { return rate || b; }

double parse_number(const std::string& text, const std::string& what) {
  const std::string s = trim(text);
  double value = 0.0;
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (parse_plain(s, value)) return value;
  } else {
    double num = 0.0;
    double den = 0.0;
    if (parse_plain(trim(s.substr(0, slash)), num) && parse_plain(trim(s.substr(slash + 1)), den) &&
        den != 0.0)
      return num / den;
  }
  throw ConfigError("invalid number for " + what + ": '" + text + "'");
}

std::vector<double> parse_number_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_number(item, what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

StateKind parse_family(const std::string& name) {
  const std::string n = trim(name);
  if (n == "mnms2") return StateKind::MnmsTwoPhoton;
  if (n == "mnms1") return StateKind::MnmsOnePhoton;
  if (n == "mems2") return StateKind::MemsTwoPhoton;
  if (n == "mems1") return StateKind::MemsOnePhoton;
  if (n == "werner") return StateKind::Werner;
  throw ConfigError("unknown family '" + name + "' (expected mnms2, mnms1, mems2, mems1 or werner)");
}

Evolution parse_evolution(const std::string& name) {
  const std::string n = trim(name);
  if (n == "vacuum") return Evolution::VacuumBath;
  if (n == "pd") return Evolution::PhaseDamping;
  if (n == "ad") return Evolution::AmplitudeDamping;
  if (n == "rtn") return Evolution::RandomTelegraph;
  throw ConfigError("unknown evolution '" + name + "' (expected vacuum, pd, ad or rtn)");
}

OmegaPrefactor parse_omega_convention(const std::string& name) {
  const std::string n = trim(name);
  if (n == "three-quarters") return OmegaPrefactor::ThreeQuarters;
  if (n == "three-halves") return OmegaPrefactor::ThreeHalves;
  throw ConfigError("unknown omega convention '" + name + "' (expected three-quarters or three-halves)");
}

RawScenario read_ini(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.message() + " (line " +
                      std::to_string(e.line()) + ")");
  }

  RawScenario raw;
  const std::map<std::string, std::map<std::string, std::optional<std::string>*>> slots = {
      {"scenario",
       {{"family", &raw.family},
        {"evolution", &raw.evolution},
        {"t_end", &raw.t_end},
        {"dt", &raw.dt},
        {"out", &raw.out}}},
      {"vacuum",
       {{"separation", &raw.separation},
        {"mu_dot_r", &raw.mu_dot_r},
        {"omega_convention", &raw.omega_convention},
        {"gamma12", &raw.gamma12},
        {"omega12", &raw.omega12}}},
      {"channel", {{"rate", &raw.rate}, {"b", &raw.b}}},
  };

  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty())
      throw ConfigError("key '" + section + "' outside any section");
    const auto known = slots.find(section);
    if (known == slots.end()) throw ConfigError("unknown config section [" + section + "]");
    for (const auto& [key, value] : body) {
      const std::string text = value.get_value<std::string>();
      if (section == "scenario" && key == "x") {
        raw.coherences.push_back(text);
        continue;
      }
      const auto slot = known->second.find(key);
      if (slot == known->second.end())
        throw ConfigError("unknown key '" + key + "' in [" + section + "]");
      *slot->second = text;
    }
  }
  return raw;
}

RawScenario read_ini_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  return read_ini(in);
}

RawScenario merge(RawScenario base, const RawScenario& o) {
  take(base.family, o.family);
  if (!o.coherences.empty()) base.coherences = o.coherences;
  take(base.evolution, o.evolution);
  take(base.t_end, o.t_end);
  take(base.dt, o.dt);
  take(base.out, o.out);
  take(base.separation, o.separation);
  take(base.mu_dot_r, o.mu_dot_r);
  take(base.omega_convention, o.omega_convention);
  take(base.gamma12, o.gamma12);
  take(base.omega12, o.omega12);
  take(base.rate, o.rate);
  take(base.b, o.b);
  return base;
}

ScenarioConfig resolve(const RawScenario& raw) {
  ScenarioConfig cfg;
  if (raw.family) cfg.family = parse_family(*raw.family);
  if (raw.evolution) cfg.evolution = parse_evolution(*raw.evolution);

  for (const auto& item : raw.coherences)
    for (double x : parse_number_list(item, "x")) cfg.coherences.push_back(x);
  if (cfg.coherences.empty()) throw ConfigError("no coherence values given (x)");
  for (double x : cfg.coherences)
    if (!(x > 0.0 && x <= 1.0)) throw ConfigError("coherence x must lie in (0, 1], got " + std::to_string(x));

  const bool vacuum = cfg.evolution == Evolution::VacuumBath;
  if (vacuum && raw.has_channel_keys())
    throw ConfigError("channel settings (rate, b) given for a vacuum-bath evolution");
  if (!vacuum && raw.has_vacuum_keys())
    throw ConfigError("vacuum-bath settings given for a channel evolution");
  if (cfg.evolution != Evolution::RandomTelegraph && raw.b)
    throw ConfigError("b applies to the rtn evolution only");

  if (vacuum) {
    const double separation = raw.separation ? parse_number(*raw.separation, "separation") : 1.0 / 6.0;
    const double mu_dot_r = raw.mu_dot_r ? parse_number(*raw.mu_dot_r, "mu_dot_r") : 0.0;
    const OmegaPrefactor prefactor =
        raw.omega_convention ? parse_omega_convention(*raw.omega_convention) : OmegaPrefactor::ThreeHalves;
    try {
      cfg.coupling = coupling_params(separation, mu_dot_r, 1.0, prefactor);
      if (raw.gamma12) cfg.coupling.gamma12 = parse_number(*raw.gamma12, "gamma12");
      if (raw.omega12) cfg.coupling.omega12 = parse_number(*raw.omega12, "omega12");
      check_coupling(cfg.coupling);
    } catch (const ParameterOutOfRange& e) {
      throw ConfigError(e.what());
    }
  } else {
    cfg.channel.kind = cfg.evolution == Evolution::PhaseDamping       ? ChannelKind::PhaseDamping
                       : cfg.evolution == Evolution::AmplitudeDamping ? ChannelKind::AmplitudeDamping
                                                                      : ChannelKind::RandomTelegraph;
    cfg.channel.rate = raw.rate ? parse_number(*raw.rate, "rate") : 1.0;
    cfg.channel.coupling_b = raw.b ? parse_number(*raw.b, "b") : 0.0;
    if (cfg.evolution == Evolution::RandomTelegraph && !raw.b) cfg.channel.coupling_b = 2.0 * cfg.channel.rate;
    try {
      check_channel(cfg.channel);
    } catch (const ParameterOutOfRange& e) {
      throw ConfigError(e.what());
    }
  }

  const double default_t_end =
      cfg.evolution == Evolution::RandomTelegraph ? 10.0 / cfg.channel.rate : 5.0;
  cfg.t_end = raw.t_end ? parse_number(*raw.t_end, "t_end") : default_t_end;
  cfg.dt = raw.dt ? parse_number(*raw.dt, "dt") : 1e-3;
  if (!(cfg.t_end >= 0.0)) throw ConfigError("t_end must be non-negative");
  if (!(cfg.dt > 0.0)) throw ConfigError("dt must be positive");
  if (raw.out) cfg.output_path = *raw.out;
  return cfg;
}

}  // namespace xsdyn::cli
