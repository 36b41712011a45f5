#pragma once

#include <optional>
#include <string>

#include "abmodel/constants.hpp"
#include "abmodel/model.hpp"

namespace abmodel {

enum class SweepSpacing { linear, log };
enum class OutputFormat { csv, json, text };

struct SweepSpec {
  std::string parameter;  ///< one of b, R, v_q, B_i
  double start = 0;
  double stop = 0;
  int points = 0;
  SweepSpacing spacing = SweepSpacing::linear;
};

struct FringeSpec {
  int n_periods = 5;
  int samples = 1001;
};

/// Parsed run configuration. Beam energy is given either as kinetic energy
/// in eV or directly as a speed; exactly one of the two.
struct RunConfig {
  SolenoidConfig solenoid{};
  std::optional<double> kinetic_energy_eV;
  std::optional<double> v_e;
  double b = 0;
  BeamSide side = BeamSide::plus_x;
  std::optional<SweepSpec> sweep;
  OutputFormat format = OutputFormat::text;
  std::string output_path;  ///< empty = stdout
  FringeSpec fringes{};
  PhysConsts consts = PhysConsts::codata2018();

  /// Throws ConfigError on schema violations (missing required keys,
  /// both or neither of energy/speed, sweep.points < 2, ...).
  void validate_schema() const;
};

/// Flat key = value file with dotted section keys, '#' comments and blank
/// lines. Unknown keys are schema errors.
RunConfig parse_config_file(const std::string& path);

/// Apply one "key=value" override on top of a parsed config.
void apply_override(RunConfig& cfg, const std::string& key_value);

/// Format a double with 17 significant digits (round-trip exact, deterministic).
std::string format_g17(double x);

}  // namespace abmodel
