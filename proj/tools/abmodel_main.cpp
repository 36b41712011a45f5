#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "abmodel/config.hpp"
#include "abmodel/errors.hpp"
#include "abmodel/interferometry.hpp"
#include "abmodel/model.hpp"
#include "abmodel/validate.hpp"

namespace {

using nlohmann::json;
using namespace abmodel;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitDomain = 2;
constexpr int kExitRegime = 3;
constexpr int kExitIo = 4;

struct CommonArgs {
  std::string config_path;
  std::string output_path;
  std::string format;
  std::vector<std::string> overrides;
};

RunConfig load_config(const CommonArgs& args) {
  RunConfig cfg = parse_config_file(args.config_path);
  for (const auto& kv : args.overrides) apply_override(cfg, kv);
  if (!args.output_path.empty()) cfg.output_path = args.output_path;
  if (!args.format.empty()) {
    if (args.format == "csv") cfg.format = OutputFormat::csv;
    else if (args.format == "json") cfg.format = OutputFormat::json;
    else if (args.format == "text") cfg.format = OutputFormat::text;
    else throw ConfigError("--format must be csv, json or text");
  }
  cfg.validate_schema();
  return cfg;
}

void write_output(const RunConfig& cfg, const std::string& content) {
  if (cfg.output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open output file '" + cfg.output_path + "'");
  out << content;
  if (!out) throw std::ios_base::failure("write to '" + cfg.output_path + "' failed");
}

ElectronKinematics beam_kinematics(const RunConfig& cfg) {
  if (cfg.v_e) return kinematics_from_speed(*cfg.v_e, cfg.consts);
  return kinematics_from_energy(*cfg.kinetic_energy_eV * cfg.consts.e_mag,
                                cfg.consts);
}

// predict ---------------------------------------------------------------

int cmd_predict(const RunConfig& cfg) {
  const ElectronKinematics kin = beam_kinematics(cfg);
  const BeamConfig beam{kin.v_e, cfg.b, cfg.side};
  const MomentumBreakdown mb =
      total_transverse_momentum(cfg.solenoid, beam, cfg.consts);
  const FringePrediction fp =
      predict_fringes(cfg.solenoid, beam, kin, mb, cfg.consts);

  struct Row {
    const char* key;
    double value;
    const char* note;
  };
  const std::vector<Row> rows = {
      {"I", coil_current(cfg.solenoid), "coil current [A]"},
      {"B_i", cfg.solenoid.internal_field(cfg.consts), "internal field [T]"},
      {"S", cfg.solenoid.cross_section(), "coil cross-section [m^2]"},
      {"v_e", kin.v_e, "electron speed [m/s]"},
      {"gamma_e", kin.gamma, "electron Lorentz factor"},
      {"p_e", kin.p_e, "electron momentum [kg m/s]"},
      {"lambda_e", kin.lambda_e, "de Broglie wavelength [m]"},
      {"b_eff_minus", mb.b_eff_minus, "near-side effective impact parameter [m]"},
      {"b_eff_plus", mb.b_eff_plus, "far-side effective impact parameter [m]"},
      {"mean_vqy", mb.mean_vqy, "mean beam-parallel carrier speed [m/s]"},
      {"gamma", mb.gamma, "Lorentz factor at v_e"},
      {"gamma_minus", mb.gamma_minus, "Lorentz factor at v_e - 2 v_q/pi"},
      {"gamma_plus", mb.gamma_plus, "Lorentz factor at v_e + 2 v_q/pi"},
      {"dq_eff_minus", mb.dq_eff_minus, "per-turn effective charge, near side [C]"},
      {"dq_eff_plus", mb.dq_eff_plus, "per-turn effective charge, far side [C]"},
      {"q_eff_minus", mb.q_eff_minus, "winding-integrated charge, near side [C]"},
      {"q_eff_plus", mb.q_eff_plus, "winding-integrated charge, far side [C]"},
      {"p_minus", mb.p_minus, "near-side transverse momentum [kg m/s]"},
      {"p_plus", mb.p_plus, "far-side transverse momentum [kg m/s]"},
      {"p_total", mb.p_total, "total transverse momentum [kg m/s]"},
      {"p_total_closed_form", mb.p_total_closed_form,
       "closed-form total momentum [kg m/s]"},
      {"pole_proximity", mb.pole_proximity, "(pi R)^2 / (16 b^2)"},
      {"delta", fp.delta, "deflection angle [rad]"},
      {"order_shift", fp.order_shift, "fringe-order shift"},
      {"unit_shift_field", fp.unit_shift_field, "one-order field [T]"},
      {"canonical_unit_field", fp.canonical_unit_field,
       "canonical one-order field (h/e)/S [T]"},
      {"ratio", fp.ratio, "canonical / model one-order field"},
  };

  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json j;
    for (const auto& r : rows) j[r.key] = r.value;
    json warnings = json::array();
    for (const auto& w : mb.warnings) warnings.push_back(w);
    j["warnings"] = warnings;
    out << j.dump(2) << "\n";
  } else if (cfg.format == OutputFormat::csv) {
    out << "quantity,value,description\n";
    for (const auto& r : rows)
      out << r.key << "," << format_g17(r.value) << "," << r.note << "\n";
  } else {
    out << "# prediction report\n";
    for (const auto& r : rows) {
      std::ostringstream line;
      line << r.key << " = " << format_g17(r.value);
      std::string text = line.str();
      if (text.size() < 48) text.resize(48, ' ');
      out << text << "# " << r.note << "\n";
    }
    for (const auto& w : mb.warnings) out << "# warning: " << w << "\n";
  }
  write_output(cfg, out.str());
  return kExitOk;
}

// sweep -----------------------------------------------------------------

struct SweepRow {
  double value = 0;
  double p_total = 0;
  double delta = 0;
  double order_shift = 0;
  double unit_shift_field = 0;
  double ratio = 0;
  double pole_proximity = 0;
  std::string status = "ok";
};

std::vector<double> sweep_grid(const SweepSpec& spec) {
  std::vector<double> grid;
  grid.reserve(spec.points);
  for (int i = 0; i < spec.points; ++i) {
    const double t = static_cast<double>(i) / (spec.points - 1);
    if (spec.spacing == SweepSpacing::log)
      grid.push_back(spec.start * std::pow(spec.stop / spec.start, t));
    else
      grid.push_back(spec.start + (spec.stop - spec.start) * t);
  }
  return grid;
}

int cmd_sweep(const RunConfig& cfg) {
  if (!cfg.sweep) throw ConfigError("sweep subcommand requires a sweep block");
  const SweepSpec& spec = *cfg.sweep;
  const ElectronKinematics kin = beam_kinematics(cfg);

  std::vector<SweepRow> rows;
  int ok_rows = 0;
  for (const double value : sweep_grid(spec)) {
    SweepRow row;
    row.value = value;
    SolenoidConfig s = cfg.solenoid;
    BeamConfig beam{kin.v_e, cfg.b, cfg.side};
    try {
      if (spec.parameter == "b") beam.b = value;
      else if (spec.parameter == "R") s.R = value;
      else if (spec.parameter == "v_q") s.v_q = value;
      else if (spec.parameter == "B_i")
        s.v_q = drift_speed_for_field(s, value, cfg.consts);
      const MomentumBreakdown mb = total_transverse_momentum(s, beam, cfg.consts);
      row.p_total = mb.p_total;
      row.pole_proximity = mb.pole_proximity;
      row.delta = deflection_angle(mb.p_total, kin.p_e);
      row.order_shift = fringe_order_shift(row.delta, beam.b, kin.lambda_e);
      row.unit_shift_field = unit_shift_field(s, beam, kin, cfg.consts);
      row.ratio = canonical_unit_field(s.cross_section(), cfg.consts) /
                  row.unit_shift_field;
      ++ok_rows;
    } catch (const DomainError&) {
      row.status = "domain_error";
    } catch (const RegimeError&) {
      row.status = "regime_error";
    }
    rows.push_back(row);
  }
  if (ok_rows == 0) throw DomainError("sweep: every grid point is out of domain");

  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json j{{"value", r.value}, {"status", r.status}};
      if (r.status == "ok") {
        j["p_total"] = r.p_total;
        j["delta"] = r.delta;
        j["order_shift"] = r.order_shift;
        j["unit_shift_field"] = r.unit_shift_field;
        j["ratio"] = r.ratio;
        j["pole_proximity"] = r.pole_proximity;
      }
      arr.push_back(j);
    }
    out << json{{"parameter", spec.parameter}, {"rows", arr}}.dump(2) << "\n";
  } else {
    out << "# sweep parameter = " << spec.parameter << "\n";
    out << "value,p_total,delta,order_shift,unit_shift_field,ratio,"
           "pole_proximity,status\n";
    for (const auto& r : rows) {
      out << format_g17(r.value) << ",";
      if (r.status == "ok") {
        out << format_g17(r.p_total) << "," << format_g17(r.delta) << ","
            << format_g17(r.order_shift) << ","
            << format_g17(r.unit_shift_field) << "," << format_g17(r.ratio)
            << "," << format_g17(r.pole_proximity);
      } else {
        out << ",,,,,";
      }
      out << "," << r.status << "\n";
    }
  }
  write_output(cfg, out.str());
  return kExitOk;
}

// fringes ---------------------------------------------------------------

int cmd_fringes(const RunConfig& cfg) {
  const ElectronKinematics kin = beam_kinematics(cfg);
  const BeamConfig beam{kin.v_e, cfg.b, cfg.side};
  const MomentumBreakdown mb =
      total_transverse_momentum(cfg.solenoid, beam, cfg.consts);
  const double delta = deflection_angle(mb.p_total, kin.p_e);
  const double shift = fringe_order_shift(delta, cfg.b, kin.lambda_e);
  const double unit_field = unit_shift_field(cfg.solenoid, beam, kin, cfg.consts);
  const FringeProfile profile =
      fringe_profile(shift, cfg.fringes.n_periods, cfg.fringes.samples);

  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json j{{"shift_orders", profile.shift_orders},
           {"unit_shift_field", unit_field},
           {"position_orders", profile.screen_positions},
           {"intensity", profile.intensities}};
    out << j.dump(2) << "\n";
  } else {
    out << "# shift_orders = " << format_g17(profile.shift_orders) << "\n";
    out << "# unit_shift_field = " << format_g17(unit_field) << "\n";
    out << "position_orders,intensity\n";
    for (std::size_t i = 0; i < profile.screen_positions.size(); ++i)
      out << format_g17(profile.screen_positions[i]) << ","
          << format_g17(profile.intensities[i]) << "\n";
  }
  write_output(cfg, out.str());
  return kExitOk;
}

// validate --------------------------------------------------------------

int cmd_validate(const RunConfig& cfg) {
  const std::vector<CheckResult> checks = run_validation(cfg);
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.passed ? 1 : 0;

  std::ostringstream out;
  if (cfg.format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back(json{{"name", c.name},
                         {"value", c.value},
                         {"reference", c.reference},
                         {"abs_error", c.abs_error},
                         {"rel_error", c.rel_error},
                         {"tolerance", c.tolerance},
                         {"passed", c.passed}});
    out << json{{"checks", arr},
                {"passed", passed},
                {"total", checks.size()}}
               .dump(2)
        << "\n";
  } else {
    out << "# check,value,reference,abs_error,rel_error,tolerance,status\n";
    for (const auto& c : checks)
      out << c.name << "," << format_g17(c.value) << ","
          << format_g17(c.reference) << "," << format_g17(c.abs_error) << ","
          << format_g17(c.rel_error) << "," << format_g17(c.tolerance) << ","
          << (c.passed ? "pass" : "FAIL") << "\n";
    out << "validate: " << passed << "/" << checks.size() << " checks passed\n";
  }
  write_output(cfg, out.str());
  return passed == checks.size() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solenoid dipole-model momentum transfer and fringe-shift calculator"};
  app.require_subcommand(1);

  CommonArgs args;
  auto add_common = [&args](CLI::App* sub) {
    sub->add_option("--config", args.config_path, "configuration file")
        ->required();
    sub->add_option("--output", args.output_path, "output file (default: stdout)");
    sub->add_option("--format", args.format, "output format: csv|json|text");
    sub->add_option("--override", args.overrides,
                    "key=value override of a config entry (repeatable)");
  };
  CLI::App* predict = app.add_subcommand("predict", "single-configuration report");
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep table");
  CLI::App* fringes = app.add_subcommand("fringes", "fringe intensity profile");
  CLI::App* validate = app.add_subcommand("validate", "run the oracle cross-checks");
  for (CLI::App* sub : {predict, sweep, fringes, validate}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    const RunConfig cfg = load_config(args);
    if (predict->parsed()) return cmd_predict(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (fringes->parsed()) return cmd_fringes(cfg);
    return cmd_validate(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << "\n";
    return kExitRegime;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
