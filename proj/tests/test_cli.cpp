#include "epile/cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace epile;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("epile_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

// Drives the CLI in-process with captured streams.
int run_cli(std::vector<std::string> args, std::string* out = nullptr,
            std::string* err = nullptr) {
  args.insert(args.begin(), "epile");
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  std::ostringstream cout_buf, cerr_buf;
  std::streambuf* old_out = std::cout.rdbuf(cout_buf.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(cerr_buf.rdbuf());
  const int code =
      cli::run(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  if (out) *out = cout_buf.str();
  if (err) *err = cerr_buf.str();
  return code;
}

// Runs the installed binary for end-to-end determinism checks.
int run_binary(const std::string& args, const fs::path& capture) {
  const std::string cmd = std::string(EPILE_CLI_PATH) + " " + args + " > " +
                          capture.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string config(const std::string& name) {
  return std::string(EPILE_CONFIG_DIR) + "/" + name;
}

const std::string kMinimalConfig =
    "pile.L_m = 26\n"
    "pile.d_m = 1\n"
    "material.E_GPa = 29.2\n"
    "material.alpha_per_C = 1e-5\n"
    "soil.k_s_GPa_per_m = 0.0167\n"
    "restraints.tip = end_bearing\n"
    "load.F_kN = -1000\n"
    "load.dT_C = -10\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve writes the profile table and summary") {
  TempDir tmp;
  const fs::path out = tmp.path / "solve";
  std::string stdout_text;
  const int code =
      run_cli({"solve", "--config", config("canonical_eb_scenario_i.conf"),
               "--out", out.string()},
              &stdout_text);
  CHECK(code == cli::kExitSuccess);
  CHECK(stdout_text.find("solve: wrote") != std::string::npos);

  const std::vector<std::string> lines =
      split_lines(read_file(out / "profile.csv"));
  REQUIRE(lines.size() == 3 * 1001 + 1);
  CHECK(lines[0] == "x_m,depth_m,u_m,eps,sigma_Pa,tau_Pa,component");
  CHECK(split_csv(lines[1]).at(6) == "thermal");
  CHECK(split_csv(lines[1002]).at(6) == "mechanical");
  CHECK(split_csv(lines[2003]).at(6) == "combined");
  // First thermal row sits at the tip.
  CHECK(std::stod(split_csv(lines[1]).at(0)) == 0.0);
  CHECK(std::stod(split_csv(lines[1]).at(1)) == 26.0);

  const json summary = json::parse(read_file(out / "summary.json"));
  CHECK(summary.at("psi_per_m").get<double>() ==
        doctest::Approx(0.047829606237943384).epsilon(1e-14));
  CHECK(summary.at("equivalent_dT_C").get<double>() ==
        doctest::Approx(4.360409399777954).epsilon(1e-13));
  CHECK(summary.at("null_point_m").get<double>() == 0.0);
  CHECK(summary.at("head_displacement_m").get<double>() ==
        doctest::Approx(-0.0025414520233496742).epsilon(1e-13));
  CHECK(summary.at("tension_zone").at("lower_m").get<double>() == 0.0);
  CHECK(summary.at("tension_zone").at("upper_m").get<double>() ==
        doctest::Approx(16.011921951422082).epsilon(1e-8));
  CHECK(summary.at("max_tensile_stress_Pa").get<double>() ==
        doctest::Approx(687370.8330743468).epsilon(1e-12));
  CHECK(summary.at("case").at("grid_nodes").get<int>() == 1001);
  CHECK(summary.at("case").at("tip").get<std::string>() == "end_bearing");
  CHECK(summary.at("case").at("head_force_N").get<double>() == -1.0e6);
}

TEST_CASE("solve reports no tension zone under heating") {
  TempDir tmp;
  const fs::path out = tmp.path / "solve";
  REQUIRE(run_cli({"solve", "--config",
                   config("canonical_ff_scenario_ii.conf"), "--out",
                   out.string()}) == cli::kExitSuccess);
  const json summary = json::parse(read_file(out / "summary.json"));
  CHECK(summary.at("tension_zone").is_null());
  CHECK(summary.at("max_tensile_stress_Pa").get<double>() == 0.0);
  CHECK(summary.at("null_point_m").get<double>() == 13.0);
}

TEST_CASE("solve output is byte-stable across runs of the binary") {
  TempDir tmp;
  const int first =
      run_binary("solve --config " + config("canonical_ff_scenario_i.conf") +
                     " --out " + (tmp.path / "a").string(),
                 tmp.path / "log_a.txt");
  const int second =
      run_binary("solve --config " + config("canonical_ff_scenario_i.conf") +
                     " --out " + (tmp.path / "b").string(),
                 tmp.path / "log_b.txt");
  REQUIRE(first == 0);
  REQUIRE(second == 0);
  CHECK(read_file(tmp.path / "a" / "profile.csv") ==
        read_file(tmp.path / "b" / "profile.csv"));
  CHECK(read_file(tmp.path / "a" / "summary.json") ==
        read_file(tmp.path / "b" / "summary.json"));
}

TEST_CASE("solve rejects a case outside the model's range") {
  TempDir tmp;
  const fs::path bad = tmp.path / "zero_shear.conf";
  write_file(bad,
             "pile.L_m = 26\npile.d_m = 1\nmaterial.E_GPa = 29.2\n"
             "material.alpha_per_C = 1e-5\nsoil.k_s_GPa_per_m = 0\n"
             "restraints.tip = end_bearing\n");
  std::string stderr_text;
  const int code = run_cli(
      {"solve", "--config", bad.string(), "--out", (tmp.path / "o").string()},
      nullptr, &stderr_text);
  CHECK(code == cli::kExitValidation);
  CHECK(stderr_text.find("derived.psi_length") != std::string::npos);
  CHECK_FALSE(fs::exists(tmp.path / "o" / "summary.json"));
}

TEST_CASE("config parse problems are collected and reported") {
  TempDir tmp;
  const fs::path bad = tmp.path / "broken.conf";
  write_file(bad, kMinimalConfig +
                      "soil.k_s_GPa_per_m = 0.02\n"  // duplicate
                      "typo.key = 3\n"
                      "just some words\n");
  std::string stderr_text;
  const int code = run_cli(
      {"solve", "--config", bad.string(), "--out", (tmp.path / "o").string()},
      nullptr, &stderr_text);
  CHECK(code == cli::kExitValidation);
  CHECK(stderr_text.find("duplicate key") != std::string::npos);
  CHECK(stderr_text.find("unknown config key") != std::string::npos);
  CHECK(stderr_text.find("expected key = value") != std::string::npos);
}

TEST_CASE("missing config file is an io error") {
  TempDir tmp;
  const int code = run_cli({"solve", "--config",
                            (tmp.path / "nowhere.conf").string(), "--out",
                            (tmp.path / "o").string()});
  CHECK(code == cli::kExitIo);
}

TEST_CASE("unwritable output directory is an io error") {
  TempDir tmp;
  const fs::path blocker = tmp.path / "blocker";
  write_file(blocker, "occupied\n");
  const int code =
      run_cli({"solve", "--config", config("canonical_eb_scenario_i.conf"),
               "--out", (blocker / "out").string()});
  CHECK(code == cli::kExitIo);
}

TEST_CASE("figure writes one csv per series plus a manifest") {
  TempDir tmp;
  const fs::path out = tmp.path / "fig5";
  std::string stdout_text;
  const int code =
      run_cli({"figure", "--id", "5", "--out", out.string()}, &stdout_text);
  CHECK(code == cli::kExitSuccess);
  CHECK(stdout_text.find("figure 5: wrote 4 series") != std::string::npos);

  const json manifest = json::parse(read_file(out / "manifest.json"));
  CHECK(manifest.at("figure_id").get<int>() == 5);
  REQUIRE(manifest.at("series").size() == 4);
  CHECK(manifest.at("series").at(0).at("file").get<std::string>() ==
        "series_00_ff_k_h_0_125_gpa_m.csv");
  CHECK(manifest.at("series").at(0).at("label").get<std::string>() ==
        "FF k_h = 0.125 GPa/m");

  std::set<std::string> labels;
  for (const auto& entry : manifest.at("series")) {
    labels.insert(entry.at("label").get<std::string>());
    const fs::path csv = out / entry.at("file").get<std::string>();
    REQUIRE(fs::exists(csv));
    const std::vector<std::string> lines = split_lines(read_file(csv));
    REQUIRE(lines.size() == 1001 + 1);
    CHECK(lines[0] == "depth_m,displacement_m");
    CHECK(std::stod(split_csv(lines[1]).at(0)) == 0.0);
    CHECK(std::stod(split_csv(lines[1001]).at(0)) == 26.0);
  }
  CHECK(labels.size() == 4);
}

TEST_CASE("figure datasets are byte-stable across runs of the binary") {
  TempDir tmp;
  REQUIRE(run_binary("figure --id 7 --out " + (tmp.path / "a").string(),
                     tmp.path / "log_a.txt") == 0);
  REQUIRE(run_binary("figure --id 7 --out " + (tmp.path / "b").string(),
                     tmp.path / "log_b.txt") == 0);
  CHECK(read_file(tmp.path / "a" / "manifest.json") ==
        read_file(tmp.path / "b" / "manifest.json"));
  CHECK(read_file(tmp.path / "a" / "series_00_ff_k_h_0_125_gpa_m.csv") ==
        read_file(tmp.path / "b" / "series_00_ff_k_h_0_125_gpa_m.csv"));
}

TEST_CASE("figures without datasets are rejected") {
  TempDir tmp;
  for (const char* id : {"1", "8", "0"}) {
    std::string stderr_text;
    const int code = run_cli(
        {"figure", "--id", id, "--out", (tmp.path / "o").string()}, nullptr,
        &stderr_text);
    CHECK(code == cli::kExitValidation);
    CHECK(stderr_text.find("figures 2 through 7") != std::string::npos);
  }
  CHECK(run_cli({"figure", "--id", "five", "--out",
                 (tmp.path / "o").string()}) == cli::kExitValidation);
}

TEST_CASE("sweep over the head stiffness") {
  TempDir tmp;
  const fs::path out = tmp.path / "sweep";
  const int code =
      run_cli({"sweep", "--config", config("canonical_eb_scenario_ii.conf"),
               "--parameter", "head_stiffness", "--values", "0,0.125,2",
               "--out", out.string()});
  CHECK(code == cli::kExitSuccess);

  const std::vector<std::string> lines =
      split_lines(read_file(out / "sweep.csv"));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "parameter,value_si,head_displacement_m,tip_displacement_m,"
        "head_stress_Pa,tip_stress_Pa,null_point_m,tension_zone_lower_m,"
        "tension_zone_upper_m,max_tensile_stress_Pa");

  std::vector<double> stiffness, heads;
  for (int row = 1; row <= 3; ++row) {
    const std::vector<std::string> fields = split_csv(lines[row]);
    REQUIRE(fields.size() == 10);
    CHECK(fields[0] == "head_stiffness");
    stiffness.push_back(std::stod(fields[1]));
    heads.push_back(std::stod(fields[2]));
    // Pinned tip, and heating leaves no tension zone to report.
    CHECK(std::stod(fields[3]) == 0.0);
    CHECK(fields[7].empty());
    CHECK(fields[8].empty());
    CHECK(std::stod(fields[9]) == 0.0);
  }
  CHECK(stiffness == std::vector<double>{0.0, 0.125e9, 2.0e9});
  CHECK(heads[0] > heads[1]);
  CHECK(heads[1] > heads[2]);
  CHECK(heads[0] == doctest::Approx(9.980738391775755e-4).epsilon(1e-13));
  CHECK(heads[2] == doctest::Approx(2.832438711812693e-5).epsilon(1e-13));
}

TEST_CASE("sweep input guards") {
  TempDir tmp;
  std::string stderr_text;
  CHECK(run_cli({"sweep", "--config",
                 config("canonical_eb_scenario_ii.conf"), "--parameter",
                 "soil_stiffness", "--values", "1,2", "--out",
                 (tmp.path / "o").string()},
                nullptr, &stderr_text) == cli::kExitValidation);
  CHECK(stderr_text.find("unknown parameter") != std::string::npos);

  // A negative head stiffness fails case validation inside the sweep.
  CHECK(run_cli({"sweep", "--config",
                 config("canonical_eb_scenario_ii.conf"), "--parameter",
                 "head_stiffness", "--values", "-1", "--out",
                 (tmp.path / "o").string()}) == cli::kExitValidation);
}

TEST_CASE("validate passes the oracle gate") {
  std::string stdout_text;
  const int code =
      run_cli({"validate", "--config", config("restrained_eb_heating.conf"),
               "--compare-nodes", "5001"},
              &stdout_text);
  CHECK(code == cli::kExitSuccess);
  CHECK(stdout_text.find("validate: PASS") != std::string::npos);
  CHECK(stdout_text.find("thermal (fd nodes 5001):") != std::string::npos);
  CHECK(stdout_text.find("mechanical (fd nodes 5001):") != std::string::npos);
  CHECK(stdout_text.find("convergence order:") != std::string::npos);
}

TEST_CASE("validate fails loudly when the fields disagree") {
  std::string stdout_text;
  const int code =
      run_cli({"validate", "--config",
               config("canonical_ff_scenario_i.conf"), "--compare-nodes",
               "2001", "--inject-error", "1e-3"},
              &stdout_text);
  CHECK(code == cli::kExitGateFailure);
  CHECK(stdout_text.find("validate: FAIL") != std::string::npos);
  CHECK(stdout_text.find("max_rel") != std::string::npos);
}

TEST_CASE("validate rejects an unusable node list") {
  CHECK(run_cli({"validate", "--config",
                 config("canonical_eb_scenario_i.conf"), "--nodes",
                 "251,501", "--compare-nodes", "2001"}) ==
        cli::kExitValidation);
}

TEST_CASE("the error-injection hook stays out of the help text") {
  std::string stdout_text;
  const int code = run_cli({"validate", "--help"}, &stdout_text);
  CHECK(code == 0);
  CHECK(stdout_text.find("--nodes") != std::string::npos);
  CHECK(stdout_text.find("--compare-nodes") != std::string::npos);
  CHECK(stdout_text.find("--inject-error") == std::string::npos);
}

TEST_CASE("claims grades the reference statements and exits honestly") {
  TempDir tmp;
  const fs::path out = tmp.path / "claims";
  std::string stdout_text;
  const int code =
      run_cli({"claims", "--out", out.string()}, &stdout_text);
  // Two restraint statements do not reproduce, so the command reports
  // failure by design.
  CHECK(code == cli::kExitGateFailure);
  CHECK(stdout_text.find("claims: 21/23 pass") != std::string::npos);

  int pass_lines = 0, fail_lines = 0;
  for (const std::string& line : split_lines(stdout_text)) {
    if (line.rfind("PASS  ", 0) == 0) ++pass_lines;
    if (line.rfind("FAIL  ", 0) == 0) ++fail_lines;
  }
  CHECK(pass_lines == 21);
  CHECK(fail_lines == 2);

  const json report = json::parse(read_file(out / "claims.json"));
  REQUIRE(report.is_array());
  REQUIRE(report.size() == 23);
  std::set<std::string> failing;
  for (const auto& claim : report) {
    CHECK(claim.at("quote").is_string());
    CHECK_FALSE(claim.at("quote").get<std::string>().empty());
    CHECK(claim.at("computed").is_object());
    CHECK_FALSE(claim.at("computed").empty());
    if (!claim.at("pass").get<bool>()) {
      failing.insert(claim.at("id").get<std::string>());
    }
  }
  CHECK(failing == std::set<std::string>{
                       "head-displacement-negative-at-kh-2",
                       "head-displacement-ratio-exceeds-8",
                   });
}

TEST_CASE("claims report is byte-stable across runs of the binary") {
  TempDir tmp;
  REQUIRE(run_binary("claims --out " + (tmp.path / "a").string(),
                     tmp.path / "log_a.txt") == cli::kExitGateFailure);
  REQUIRE(run_binary("claims --out " + (tmp.path / "b").string(),
                     tmp.path / "log_b.txt") == cli::kExitGateFailure);
  CHECK(read_file(tmp.path / "a" / "claims.json") ==
        read_file(tmp.path / "b" / "claims.json"));
  CHECK(read_file(tmp.path / "log_a.txt") ==
        read_file(tmp.path / "log_b.txt"));
}

TEST_CASE("bare invocations ask for a subcommand") {
  CHECK(run_cli({}) == cli::kExitValidation);
  CHECK(run_cli({"orbit"}) == cli::kExitValidation);
  CHECK(run_cli({"solve"}) == cli::kExitValidation);
}

TEST_CASE("read_config accepts both geometry spellings") {
  TempDir tmp;
  const fs::path by_diameter = tmp.path / "d.conf";
  write_file(by_diameter, kMinimalConfig);
  const cli::RunConfig with_d = cli::read_config(by_diameter.string());
  REQUIRE(with_d.diameter_m.has_value());
  CHECK(*with_d.diameter_m == 1.0);
  CHECK_FALSE(with_d.perimeter_m.has_value());
  CHECK(with_d.grid_nodes == kDefaultGridNodes);

  const CaseDefinition def = cli::to_case(with_d);
  CHECK(def.material.elastic_modulus == 29.2e9);
  CHECK(def.restraints.shear_stiffness ==
        doctest::Approx(0.0167e9).epsilon(1e-15));
  CHECK(def.restraints.head_stiffness == 0.0);
  CHECK(def.load.head_force == -1.0e6);
  CHECK(def.load.temperature_change == -10.0);
  CHECK(def.grid.x.size() == kDefaultGridNodes);

  const CaseDefinition alt =
      cli::to_case(cli::read_config(config("restrained_eb_heating.conf")));
  CHECK(alt.section.perimeter == 3.14159265358979);
  CHECK(alt.section.area == 0.785398163397448);
  CHECK(alt.restraints.head_stiffness == 0.125e9);
}

TEST_CASE("read_config rejects mixed or missing geometry") {
  TempDir tmp;
  const fs::path mixed = tmp.path / "mixed.conf";
  write_file(mixed, kMinimalConfig + "pile.p_m = 3.14\npile.A_m2 = 0.785\n");
  CHECK_THROWS_AS(cli::read_config(mixed.string()), ValidationError);

  const fs::path partial = tmp.path / "partial.conf";
  write_file(partial,
             "pile.L_m = 26\npile.p_m = 3.14\nmaterial.E_GPa = 29.2\n"
             "material.alpha_per_C = 1e-5\nsoil.k_s_GPa_per_m = 0.0167\n"
             "restraints.tip = end_bearing\n");
  CHECK_THROWS_AS(cli::read_config(partial.string()), ValidationError);
}

TEST_CASE("read_config lists every missing required key") {
  TempDir tmp;
  const fs::path sparse = tmp.path / "sparse.conf";
  write_file(sparse, "pile.L_m = 26\npile.d_m = 1\n");
  try {
    cli::read_config(sparse.string());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    std::set<std::string> fields;
    for (const Violation& v : e.violations()) fields.insert(v.field);
    CHECK(fields.count("material.E_GPa") == 1);
    CHECK(fields.count("material.alpha_per_C") == 1);
    CHECK(fields.count("soil.k_s_GPa_per_m") == 1);
    CHECK(fields.count("restraints.tip") == 1);
  }
}

TEST_CASE("read_config flags bad values without stopping early") {
  TempDir tmp;
  const fs::path bad = tmp.path / "values.conf";
  write_file(bad,
             "pile.L_m = long\npile.d_m = 1\nmaterial.E_GPa = 29.2\n"
             "material.alpha_per_C = 1e-5\nsoil.k_s_GPa_per_m = 0.0167\n"
             "restraints.tip = sideways\nload.F_kN = -1000\n");
  try {
    cli::read_config(bad.string());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    std::set<std::string> fields;
    for (const Violation& v : e.violations()) fields.insert(v.field);
    CHECK(fields.count("pile.L_m") == 1);
    CHECK(fields.count("restraints.tip") == 1);
  }
}

TEST_CASE("config comments and spacing are ignored") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "spaced.conf";
  write_file(cfg,
             "# leading comment\n\n  pile.L_m   =  26  # trailing\n"
             "pile.d_m=1\nmaterial.E_GPa = 29.2\n"
             "material.alpha_per_C = 1e-5\n\t\n"
             "soil.k_s_GPa_per_m = 0.0167\nrestraints.tip = end_bearing\n"
             "grid.nodes = 101\n");
  const cli::RunConfig parsed = cli::read_config(cfg.string());
  CHECK(parsed.length_m == 26.0);
  CHECK(parsed.grid_nodes == 101);
  CHECK(cli::to_case(parsed).grid.x.size() == 101);
}

TEST_CASE("to_case rejects a degenerate grid request") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "grid.conf";
  write_file(cfg, kMinimalConfig + "grid.nodes = 1\n");
  CHECK_THROWS_AS(cli::to_case(cli::read_config(cfg.string())),
                  ValidationError);
}

}  // TEST_SUITE
