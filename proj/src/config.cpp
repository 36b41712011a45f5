#include "abmodel/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "abmodel/errors.hpp"

namespace abmodel {

namespace {

std::string trim(const std::string& s) {
  std::size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  std::size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(value, &pos);
    if (pos != value.size())
      throw ConfigError("trailing characters in value for '" + key + "'");
    return x;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse number '" + value + "' for key '" + key +
                      "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  const double x = parse_double(key, value);
  const int i = static_cast<int>(x);
  if (static_cast<double>(i) != x)
    throw ConfigError("key '" + key + "' requires an integer, got '" + value +
                      "'");
  return i;
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "solenoid.R") cfg.solenoid.R = parse_double(key, value);
  else if (key == "solenoid.n") cfg.solenoid.n = parse_double(key, value);
  else if (key == "solenoid.Z") cfg.solenoid.Z = parse_double(key, value);
  else if (key == "solenoid.q_mag") cfg.solenoid.q_mag = parse_double(key, value);
  else if (key == "solenoid.v_q") cfg.solenoid.v_q = parse_double(key, value);
  else if (key == "beam.kinetic_energy_eV") cfg.kinetic_energy_eV = parse_double(key, value);
  else if (key == "beam.v_e") cfg.v_e = parse_double(key, value);
  else if (key == "beam.b") cfg.b = parse_double(key, value);
  else if (key == "beam.side") {
    if (value == "plus_x") cfg.side = BeamSide::plus_x;
    else if (value == "minus_x") cfg.side = BeamSide::minus_x;
    else throw ConfigError("beam.side must be plus_x or minus_x, got '" + value + "'");
  } else if (key == "sweep.parameter") {
    if (!cfg.sweep) cfg.sweep.emplace();
    if (value != "b" && value != "R" && value != "v_q" && value != "B_i")
      throw ConfigError("sweep.parameter must be one of b, R, v_q, B_i");
    cfg.sweep->parameter = value;
  } else if (key == "sweep.start") {
    if (!cfg.sweep) cfg.sweep.emplace();
    cfg.sweep->start = parse_double(key, value);
  } else if (key == "sweep.stop") {
    if (!cfg.sweep) cfg.sweep.emplace();
    cfg.sweep->stop = parse_double(key, value);
  } else if (key == "sweep.points") {
    if (!cfg.sweep) cfg.sweep.emplace();
    cfg.sweep->points = parse_int(key, value);
  } else if (key == "sweep.spacing") {
    if (!cfg.sweep) cfg.sweep.emplace();
    if (value == "linear") cfg.sweep->spacing = SweepSpacing::linear;
    else if (value == "log") cfg.sweep->spacing = SweepSpacing::log;
    else throw ConfigError("sweep.spacing must be linear or log");
  } else if (key == "output.format") {
    if (value == "csv") cfg.format = OutputFormat::csv;
    else if (value == "json") cfg.format = OutputFormat::json;
    else if (value == "text") cfg.format = OutputFormat::text;
    else throw ConfigError("output.format must be csv, json or text");
  } else if (key == "output.path") {
    cfg.output_path = value;
  } else if (key == "fringes.n_periods") {
    cfg.fringes.n_periods = parse_int(key, value);
  } else if (key == "fringes.samples") {
    cfg.fringes.samples = parse_int(key, value);
  } else if (key == "constants.c0") cfg.consts.c0 = parse_double(key, value);
  else if (key == "constants.mu0") cfg.consts.mu0 = parse_double(key, value);
  else if (key == "constants.eps0") cfg.consts.eps0 = parse_double(key, value);
  else if (key == "constants.h") cfg.consts.h = parse_double(key, value);
  else if (key == "constants.e_mag") cfg.consts.e_mag = parse_double(key, value);
  else if (key == "constants.m_e") cfg.consts.m_e = parse_double(key, value);
  else throw ConfigError("unknown configuration key '" + key + "'");
}

}  // namespace

void RunConfig::validate_schema() const {
  if (kinetic_energy_eV.has_value() == v_e.has_value())
    throw ConfigError(
        "exactly one of beam.kinetic_energy_eV and beam.v_e must be given");
  if (!(solenoid.R > 0)) throw ConfigError("solenoid.R must be set and > 0");
  if (!(solenoid.n > 0)) throw ConfigError("solenoid.n must be set and > 0");
  if (!(solenoid.Z > 0)) throw ConfigError("solenoid.Z must be set and > 0");
  if (!(solenoid.q_mag > 0)) throw ConfigError("solenoid.q_mag must be set and > 0");
  if (!(b > 0)) throw ConfigError("beam.b must be set and > 0");
  if (sweep) {
    if (sweep->parameter.empty())
      throw ConfigError("sweep.parameter missing from sweep block");
    if (sweep->points < 2) throw ConfigError("sweep.points must be >= 2");
    if (sweep->spacing == SweepSpacing::log &&
        !(sweep->start > 0 && sweep->stop > 0))
      throw ConfigError("log spacing requires positive sweep bounds");
  }
  if (fringes.n_periods < 1) throw ConfigError("fringes.n_periods must be >= 1");
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << path << ":" << lineno << ": expected 'key = value'";
      throw ConfigError(msg.str());
    }
    set_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void apply_override(RunConfig& cfg, const std::string& key_value) {
  const std::size_t eq = key_value.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override '" + key_value + "' is not of the form key=value");
  set_key(cfg, trim(key_value.substr(0, eq)), trim(key_value.substr(eq + 1)));
}

std::string format_g17(double x) {
  if (x == 0.0) x = 0.0;  // print negative zero as "0"
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace abmodel
