#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_binary() {
  const char* path = std::getenv("ABMODEL_CLI");
  REQUIRE_MESSAGE(path != nullptr, "ABMODEL_CLI must point at the cli binary");
  return path;
}

RunResult run_cli(const std::string& args) {
  const std::string command = cli_binary() + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
 public:
  TempDir() {
    root_ = fs::temp_directory_path() /
            ("abmodel_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(root_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(root_, ec);
  }
  fs::path write(const std::string& name, const std::string& content) const {
    const fs::path p = root_ / name;
    std::ofstream(p) << content;
    return p;
  }
  fs::path path(const std::string& name) const { return root_ / name; }

 private:
  fs::path root_;
};

const std::string kBaseConfig = R"(# lab-scale test configuration
solenoid.R = 0.01
solenoid.n = 1e5
solenoid.Z = 1e10
solenoid.q_mag = 1.602176634e-19
solenoid.v_q = 1e-3
beam.kinetic_energy_eV = 30000
beam.b = 0.02
beam.side = plus_x
)";

}  // namespace

TEST_CASE("predict") {
  TempDir dir;
  const auto cfg = dir.write("base.cfg", kBaseConfig);

  SUBCASE("full report in json") {
    const RunResult r =
        run_cli("predict --config " + cfg.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j.contains("p_total"));
    CHECK(j.contains("order_shift"));
    // b = 2R lab geometry: canonical/model one-order field = 1/(1 - pi^2/64)
    CHECK(std::abs(j["ratio"].get<double>() - 1.1823301731289764) < 1e-6);
    CHECK(std::abs(j["p_total"].get<double>() -
                   j["p_total_closed_form"].get<double>()) <=
          1e-12 * std::abs(j["p_total"].get<double>()));
  }
  SUBCASE("zero drift gives zero momentum and shift") {
    const RunResult r = run_cli("predict --config " + cfg.string() +
                                " --format json --override solenoid.v_q=0");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["p_total"].get<double>() == 0.0);
    CHECK(j["order_shift"].get<double>() == 0.0);
  }
  SUBCASE("text report labels every quantity") {
    const RunResult r = run_cli("predict --config " + cfg.string());
    REQUIRE(r.exit_code == 0);
    for (const char* key :
         {"I = ", "B_i = ", "b_eff_minus", "gamma_minus", "q_eff_plus",
          "p_total", "order_shift", "unit_shift_field", "ratio"})
      CHECK_MESSAGE(r.output.find(key) != std::string::npos, key);
  }
  SUBCASE("missing beam energy is a schema error") {
    const auto broken = dir.write("broken.cfg", R"(solenoid.R = 0.01
solenoid.n = 1e5
solenoid.Z = 1e10
solenoid.q_mag = 1.602176634e-19
solenoid.v_q = 1e-3
beam.b = 0.02
)");
    CHECK(run_cli("predict --config " + broken.string()).exit_code == 2);
  }
  SUBCASE("domain violation exits 2") {
    const RunResult r = run_cli("predict --config " + cfg.string() +
                                " --override beam.b=0.005");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("regime violation exits 3") {
    const RunResult r = run_cli("predict --config " + cfg.string() +
                                " --override solenoid.v_q=5e7");
    CHECK(r.exit_code == 3);
  }
  SUBCASE("unknown key exits 2") {
    const RunResult r =
        run_cli("predict --config " + cfg.string() + " --override nope=1");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("byte-identical reruns") {
    const std::string cmd = "predict --config " + cfg.string();
    CHECK(run_cli(cmd).output == run_cli(cmd).output);
  }
}

TEST_CASE("sweep") {
  TempDir dir;
  const std::string sweep_block = R"(sweep.parameter = b
sweep.start = 0.011
sweep.stop = 1.0
sweep.points = 50
sweep.spacing = log
)";
  const auto cfg = dir.write("sweep.cfg", kBaseConfig + sweep_block);

  SUBCASE("ratio column decreases monotonically towards one") {
    const RunResult r =
        run_cli("sweep --config " + cfg.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    REQUIRE(j["rows"].size() == 50);
    double previous = 10.0;
    for (const auto& row : j["rows"]) {
      REQUIRE(row["status"] == "ok");
      const double ratio = row["ratio"].get<double>();
      CHECK(ratio < previous);
      CHECK(ratio > 1.0);
      previous = ratio;
    }
  }
  SUBCASE("field sweep produces a linear order shift") {
    const auto field_cfg = dir.write("field_sweep.cfg", kBaseConfig +
                                                            R"(sweep.parameter = B_i
sweep.start = -1e-11
sweep.stop = -1e-10
sweep.points = 10
)");
    const RunResult r =
        run_cli("sweep --config " + field_cfg.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    const auto& rows = j["rows"];
    const double v0 = rows[0]["value"].get<double>();
    const double s0 = rows[0]["order_shift"].get<double>();
    for (const auto& row : rows) {
      REQUIRE(row["status"] == "ok");
      const double expected = s0 * row["value"].get<double>() / v0;
      CHECK(std::abs(row["order_shift"].get<double>() - expected) <=
            1e-9 * std::abs(expected));
    }
  }
  SUBCASE("out-of-domain grid points become marker rows") {
    const auto mixed = dir.write("mixed.cfg", kBaseConfig +
                                                  R"(sweep.parameter = b
sweep.start = 0.005
sweep.stop = 0.1
sweep.points = 20
)");
    const RunResult r = run_cli("sweep --config " + mixed.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("domain_error") != std::string::npos);
    // marker rows keep the grid complete
    std::istringstream lines(r.output);
    std::string line;
    int data_rows = 0;
    while (std::getline(lines, line))
      if (!line.empty() && line[0] != '#' && line.find("value,") != 0)
        ++data_rows;
    CHECK(data_rows == 20);
  }
  SUBCASE("single grid point exits 2") {
    const RunResult r = run_cli("sweep --config " + cfg.string() +
                                " --override sweep.points=1");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("fully out-of-domain grid exits 2") {
    const RunResult r =
        run_cli("sweep --config " + cfg.string() +
                " --override sweep.start=0.001 --override sweep.stop=0.009");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("deterministic output") {
    const std::string cmd = "sweep --config " + cfg.string();
    CHECK(run_cli(cmd).output == run_cli(cmd).output);
  }
}

TEST_CASE("fringes") {
  TempDir dir;
  const auto cfg = dir.write("base.cfg", kBaseConfig);

  SUBCASE("zero field means zero shift") {
    const RunResult r = run_cli("fringes --config " + cfg.string() +
                                " --override solenoid.v_q=0");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("# shift_orders = 0\n") != std::string::npos);
  }
  SUBCASE("driving at the one-order field shifts by one order") {
    // read the one-order field, then re-run with the drift speed that
    // realizes it
    const RunResult predict =
        run_cli("predict --config " + cfg.string() + " --format json");
    REQUIRE(predict.exit_code == 0);
    const double field =
        json::parse(predict.output)["unit_shift_field"].get<double>();
    // v_q = field * 2 pi R / (mu0 n Z q_mag) for the base geometry
    const double v_q = field * 2.0 * 3.14159265358979324 * 0.01 /
                       (1.25663706212e-6 * 1e5 * 1e10 * 1.602176634e-19);
    std::ostringstream cmd;
    cmd.precision(17);
    cmd << "fringes --config " << cfg.string() << " --override solenoid.v_q="
        << v_q;
    const RunResult r = run_cli(cmd.str());
    REQUIRE(r.exit_code == 0);
    const std::size_t pos = r.output.find("# shift_orders = ");
    REQUIRE(pos != std::string::npos);
    const double shift = std::stod(r.output.substr(pos + 17));
    CHECK(std::abs(shift - 1.0) <= 1e-9);
  }
  SUBCASE("csv output re-reads losslessly") {
    const auto out = dir.path("profile.csv");
    const RunResult r = run_cli("fringes --config " + cfg.string() +
                                " --output " + out.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);  // # shift_orders
    std::getline(in, line);  // # unit_shift_field
    std::getline(in, line);
    CHECK(line == "position_orders,intensity");
    int rows = 0;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      REQUIRE(comma != std::string::npos);
      // every number reparses and reformats to the identical string
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g",
                    std::stod(line.substr(0, comma)));
      CHECK(line.substr(0, comma) == buf);
      std::snprintf(buf, sizeof(buf), "%.17g",
                    std::stod(line.substr(comma + 1)));
      CHECK(line.substr(comma + 1) == buf);
      ++rows;
    }
    CHECK(rows == 1001);
  }
  SUBCASE("unwritable output path exits 4") {
    const RunResult r =
        run_cli("fringes --config " + cfg.string() +
                " --output /nonexistent_dir_zz/profile.csv");
    CHECK(r.exit_code == 4);
  }
}

TEST_CASE("validate") {
  TempDir dir;
  const auto cfg = dir.write("base.cfg", kBaseConfig);

  SUBCASE("default configuration passes every check") {
    const RunResult r =
        run_cli("validate --config " + cfg.string() + " --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["passed"] == j["total"]);
    for (const auto& check : j["checks"]) {
      CHECK(check["passed"].get<bool>());
      CHECK(check["abs_error"].is_number());
      CHECK(check["rel_error"].is_number());
    }
  }
  SUBCASE("inconsistent constants fail the consistency check") {
    const RunResult r = run_cli("validate --config " + cfg.string() +
                                " --override constants.mu0=1.3e-6");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL") != std::string::npos);
  }
  SUBCASE("text report carries per-check errors") {
    const RunResult r = run_cli("validate --config " + cfg.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("rel_error") != std::string::npos);
    CHECK(r.output.find("checks passed") != std::string::npos);
  }
}
