#include "epile/cli.hpp"

#include "epile/analytic.hpp"
#include "epile/oracle.hpp"
#include "epile/study.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

namespace epile::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

// Shortest decimal form that parses back to the identical double; keeps CSV
// and JSON output byte-stable across runs.
std::string format_double(double value) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string slug(const std::string& label) {
  std::string out;
  bool pending = false;
  for (char ch : label) {
    if (std::isalnum(static_cast<unsigned char>(ch))) {
      if (pending && !out.empty()) out.push_back('_');
      pending = false;
      out.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    } else {
      pending = true;
    }
  }
  return out;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + dir.string() + ": " +
                  ec.message());
  }
}

void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open " + tmp.string() + " for writing");
    }
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    throw IoError("cannot move " + tmp.string() + " into place: " +
                  ec.message());
  }
}

double parse_double(const std::string& text, const std::string& key,
                    std::vector<Violation>& violations) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    violations.push_back({ViolationCode::NonPositiveParameter, key,
                          "not a number: '" + text + "'"});
    return 0.0;
  }
  return value;
}

const char* tip_name(TipCondition tip) {
  return tip == TipCondition::EndBearing ? "end_bearing" : "fully_floating";
}

const char* component_name(Component component) {
  switch (component) {
    case Component::Thermal: return "thermal";
    case Component::Mechanical: return "mechanical";
    case Component::Combined: return "combined";
  }
  return "?";
}

json summary_json(const DerivedSummary& summary, const CaseDefinition& def) {
  json zone;
  if (summary.tension_zone) {
    zone = json{{"lower_m", summary.tension_zone->lower},
                {"upper_m", summary.tension_zone->upper},
                {"length_m", summary.tension_zone->length()}};
  } else {
    zone = nullptr;
  }
  return json{
      {"psi_per_m", summary.psi},
      {"psi_length", summary.psi_length},
      {"null_point_m", summary.null_point},
      {"equivalent_dT_C", summary.equivalent_dT},
      {"head_displacement_m", summary.head_displacement},
      {"tip_displacement_m", summary.tip_displacement},
      {"head_stress_Pa", summary.head_stress},
      {"tip_stress_Pa", summary.tip_stress},
      {"tension_zone", zone},
      {"max_tensile_stress_Pa", summary.max_tensile_stress},
      {"case",
       {{"length_m", def.section.length},
        {"perimeter_m", def.section.perimeter},
        {"area_m2", def.section.area},
        {"elastic_modulus_Pa", def.material.elastic_modulus},
        {"thermal_expansion_per_K", def.material.thermal_expansion},
        {"shear_stiffness_Pa_per_m", def.restraints.shear_stiffness},
        {"head_stiffness_Pa_per_m", def.restraints.head_stiffness},
        {"tip", tip_name(def.restraints.tip)},
        {"head_force_N", def.load.head_force},
        {"temperature_change_K", def.load.temperature_change},
        {"grid_nodes", def.grid.x.size()}}},
  };
}

void append_profile_rows(std::string& csv, const ResponseProfile& profile) {
  const double length = profile.definition.section.length;
  const char* name = component_name(profile.component);
  for (Eigen::Index i = 0; i < profile.grid.x.size(); ++i) {
    const double x = profile.grid.x(i);
    csv += format_double(x);
    csv += ',';
    csv += format_double(length - x);
    csv += ',';
    csv += format_double(profile.displacement(i));
    csv += ',';
    csv += format_double(profile.strain(i));
    csv += ',';
    csv += format_double(profile.stress(i));
    csv += ',';
    csv += format_double(profile.interface_shear(i));
    csv += ',';
    csv += name;
    csv += '\n';
  }
}

int cmd_solve(const std::string& config_path, const std::string& out_dir) {
  const CaseDefinition def = to_case(read_config(config_path));
  const ResponseProfile thermal = thermal_profile(def);
  const ResponseProfile mechanical = mechanical_profile(def);
  const ResponseProfile combined = superpose(thermal, mechanical);
  const DerivedSummary summary = summarize(thermal, mechanical, combined);

  std::string csv = "x_m,depth_m,u_m,eps,sigma_Pa,tau_Pa,component\n";
  append_profile_rows(csv, thermal);
  append_profile_rows(csv, mechanical);
  append_profile_rows(csv, combined);

  ensure_dir(out_dir);
  write_atomic(fs::path(out_dir) / "profile.csv", csv);
  write_atomic(fs::path(out_dir) / "summary.json",
               summary_json(summary, def).dump(2) + "\n");
  std::cout << "solve: wrote profile.csv and summary.json to " << out_dir
            << "\n";
  return kExitSuccess;
}

int cmd_figure(int figure_id, const std::string& out_dir) {
  const study::FigureDataset dataset = study::figure_dataset(figure_id);

  ensure_dir(out_dir);
  json manifest{{"figure_id", dataset.figure_id},
                {"title", dataset.title},
                {"series", json::array()}};
  int index = 0;
  for (const auto& series : dataset.series) {
    std::ostringstream name;
    name << "series_" << std::setw(2) << std::setfill('0') << index++ << "_"
         << slug(series.label) << ".csv";

    std::string column = series.quantity;
    if (series.unit != "-") column += "_" + series.unit;
    std::string csv = "depth_m," + column + "\n";
    for (Eigen::Index i = 0; i < series.depth.size(); ++i) {
      csv += format_double(series.depth(i));
      csv += ',';
      csv += format_double(series.values(i));
      csv += '\n';
    }
    write_atomic(fs::path(out_dir) / name.str(), csv);
    manifest["series"].push_back(json{{"label", series.label},
                                      {"quantity", series.quantity},
                                      {"unit", series.unit},
                                      {"file", name.str()}});
  }
  write_atomic(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
  std::cout << "figure " << figure_id << ": wrote " << dataset.series.size()
            << " series and manifest.json to " << out_dir << "\n";
  return kExitSuccess;
}

int cmd_sweep(const std::string& config_path, const std::string& parameter,
              const std::vector<double>& values, const std::string& out_dir) {
  study::SweepSpec spec;
  spec.base = to_case(read_config(config_path));

  // Sweep values arrive in the engineering unit of the parameter.
  double to_si = 1.0;
  if (parameter == "head_stiffness") {
    spec.parameter = study::SweepParameter::HeadStiffness;
    to_si = 1e9;  // GPa/m -> Pa/m
  } else if (parameter == "temperature") {
    spec.parameter = study::SweepParameter::Temperature;
  } else if (parameter == "force") {
    spec.parameter = study::SweepParameter::Force;
    to_si = 1e3;  // kN -> N
  } else {
    throw ValidationError(
        {{ViolationCode::NonPositiveParameter, "sweep.parameter",
          "unknown parameter '" + parameter +
              "' (head_stiffness | temperature | force)"}});
  }
  spec.values.reserve(values.size());
  for (double v : values) spec.values.push_back(v * to_si);

  const std::vector<DerivedSummary> summaries = study::run_sweep(spec);

  std::string csv =
      "parameter,value_si,head_displacement_m,tip_displacement_m,"
      "head_stress_Pa,tip_stress_Pa,null_point_m,tension_zone_lower_m,"
      "tension_zone_upper_m,max_tensile_stress_Pa\n";
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const DerivedSummary& s = summaries[i];
    csv += parameter;
    csv += ',';
    csv += format_double(spec.values[i]);
    csv += ',';
    csv += format_double(s.head_displacement);
    csv += ',';
    csv += format_double(s.tip_displacement);
    csv += ',';
    csv += format_double(s.head_stress);
    csv += ',';
    csv += format_double(s.tip_stress);
    csv += ',';
    csv += format_double(s.null_point);
    csv += ',';
    if (s.tension_zone) {
      csv += format_double(s.tension_zone->lower);
      csv += ',';
      csv += format_double(s.tension_zone->upper);
    } else {
      csv += ',';
    }
    csv += ',';
    csv += format_double(s.max_tensile_stress);
    csv += '\n';
  }
  ensure_dir(out_dir);
  write_atomic(fs::path(out_dir) / "sweep.csv", csv);
  std::cout << "sweep: wrote " << summaries.size() << " rows to " << out_dir
            << "/sweep.csv\n";
  return kExitSuccess;
}

void print_field(const char* name, const oracle::FieldError& err) {
  std::cout << "    " << name << ": max_rel=" << format_double(err.max_rel)
            << " rms_rel=" << format_double(err.rms_rel) << "\n";
}

int cmd_validate(const std::string& config_path,
                 const std::vector<Eigen::Index>& node_counts,
                 Eigen::Index compare_nodes, double inject_error) {
  const CaseDefinition def = to_case(read_config(config_path));

  bool pass = true;
  std::vector<std::string> failures;
  for (const Component component :
       {Component::Thermal, Component::Mechanical}) {
    const char* name = component_name(component);
    const ResponseProfile reference = component == Component::Thermal
                                          ? thermal_profile(def)
                                          : mechanical_profile(def);
    oracle::FdSolution fd = oracle::solve_fd(def, component, compare_nodes);
    if (inject_error != 0.0) {
      // Negative-control hook: corrupt the discrete solution on purpose so
      // the gate demonstrably fails.
      fd.displacement *= 1.0 + inject_error;
      fd.strain *= 1.0 + inject_error;
      fd.stress *= 1.0 + inject_error;
      fd.interface_shear *= 1.0 + inject_error;
    }
    const oracle::CompareReport report = oracle::compare(reference, fd);
    const oracle::ConvergenceReport conv =
        oracle::convergence_study(def, component, node_counts);

    std::cout << "  " << name << " (fd nodes " << compare_nodes << "):\n";
    print_field("displacement", report.displacement);
    print_field("strain", report.strain);
    print_field("stress", report.stress);
    print_field("interface_shear", report.interface_shear);
    std::cout << "    convergence order: "
              << format_double(conv.observed_order) << " (errors:";
    for (double e : conv.error_norms) std::cout << " " << format_double(e);
    std::cout << ")\n";

    if (!(report.worst_max_rel() < 1e-5)) {
      pass = false;
      failures.push_back(std::string(name) + " max_rel " +
                         format_double(report.worst_max_rel()));
    }
    if (!(conv.observed_order >= 1.8 && conv.observed_order <= 2.2)) {
      pass = false;
      failures.push_back(std::string(name) + " order " +
                         format_double(conv.observed_order));
    }
  }

  if (!pass) {
    std::cout << "validate: FAIL (";
    for (std::size_t i = 0; i < failures.size(); ++i) {
      if (i) std::cout << "; ";
      std::cout << failures[i];
    }
    std::cout << ")\n";
    return kExitGateFailure;
  }
  std::cout << "validate: PASS (max_rel < 1e-5, order within [1.8, 2.2])\n";
  return kExitSuccess;
}

int cmd_claims(const std::string& out_dir) {
  const std::vector<study::Claim> claims = study::claims_report();

  json report = json::array();
  std::size_t passed = 0;
  for (const auto& claim : claims) {
    json computed = json::object();
    for (const auto& [name, value] : claim.computed) computed[name] = value;
    report.push_back(json{{"id", claim.id},
                          {"description", claim.description},
                          {"quote", claim.quote},
                          {"tolerance", claim.tolerance},
                          {"computed", computed},
                          {"pass", claim.pass}});
    if (claim.pass) ++passed;
    std::cout << (claim.pass ? "PASS" : "FAIL") << "  " << claim.id << "\n";
  }
  std::cout << "claims: " << passed << "/" << claims.size() << " pass\n";

  ensure_dir(out_dir);
  write_atomic(fs::path(out_dir) / "claims.json", report.dump(2) + "\n");
  return passed == claims.size() ? kExitSuccess : kExitGateFailure;
}

}  // namespace

RunConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);

  RunConfig config;
  std::vector<Violation> violations;
  std::map<std::string, std::string> seen;

  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto trim = [](std::string s) {
      const auto first = s.find_first_not_of(" \t\r");
      const auto last = s.find_last_not_of(" \t\r");
      return first == std::string::npos ? std::string()
                                        : s.substr(first, last - first + 1);
    };
    if (trim(line).empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      violations.push_back({ViolationCode::NonPositiveParameter, "config",
                            "expected key = value, got '" + trim(line) +
                                "'"});
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (seen.count(key)) {
      violations.push_back({ViolationCode::NonPositiveParameter, key,
                            "duplicate key"});
      continue;
    }
    seen[key] = value;

    if (key == "pile.L_m") {
      config.length_m = parse_double(value, key, violations);
    } else if (key == "pile.d_m") {
      config.diameter_m = parse_double(value, key, violations);
    } else if (key == "pile.p_m") {
      config.perimeter_m = parse_double(value, key, violations);
    } else if (key == "pile.A_m2") {
      config.area_m2 = parse_double(value, key, violations);
    } else if (key == "material.E_GPa") {
      config.modulus_GPa = parse_double(value, key, violations);
    } else if (key == "material.alpha_per_C") {
      config.expansion_per_C = parse_double(value, key, violations);
    } else if (key == "soil.k_s_GPa_per_m") {
      config.shear_GPa_per_m = parse_double(value, key, violations);
    } else if (key == "restraints.k_h_GPa_per_m") {
      config.head_GPa_per_m = parse_double(value, key, violations);
    } else if (key == "restraints.tip") {
      if (value != "end_bearing" && value != "fully_floating") {
        violations.push_back({ViolationCode::NonPositiveParameter, key,
                              "expected end_bearing or fully_floating, got '" +
                                  value + "'"});
      }
      config.tip = value;
    } else if (key == "load.F_kN") {
      config.force_kN = parse_double(value, key, violations);
    } else if (key == "load.dT_C") {
      config.temperature_C = parse_double(value, key, violations);
    } else if (key == "grid.nodes") {
      config.grid_nodes = static_cast<Eigen::Index>(
          parse_double(value, key, violations));
    } else {
      violations.push_back({ViolationCode::NonPositiveParameter, key,
                            "unknown config key"});
    }
  }

  for (const char* required :
       {"pile.L_m", "material.E_GPa", "material.alpha_per_C",
        "soil.k_s_GPa_per_m", "restraints.tip"}) {
    if (!seen.count(required)) {
      violations.push_back({ViolationCode::NonPositiveParameter, required,
                            "missing required key"});
    }
  }
  const bool has_diameter = config.diameter_m.has_value();
  const bool has_pa =
      config.perimeter_m.has_value() && config.area_m2.has_value();
  const bool has_any_pa =
      config.perimeter_m.has_value() || config.area_m2.has_value();
  if (!(has_diameter ? !has_any_pa : has_pa)) {
    violations.push_back(
        {ViolationCode::NonPositiveParameter, "pile",
         "specify either pile.d_m or both pile.p_m and pile.A_m2"});
  }

  if (!violations.empty()) throw ValidationError(std::move(violations));
  return config;
}

CaseDefinition to_case(const RunConfig& config) {
  CaseDefinition def;
  if (config.diameter_m) {
    def.section = build_circular_section(*config.diameter_m, config.length_m);
  } else {
    def.section = PileSection{config.length_m, config.perimeter_m.value_or(0),
                              config.area_m2.value_or(0)};
  }
  def.material = PileMaterial{config.modulus_GPa * 1e9,  // GPa -> Pa
                              config.expansion_per_C};
  def.restraints =
      RestraintSet{config.shear_GPa_per_m * 1e9,  // GPa/m -> Pa/m
                   config.head_GPa_per_m * 1e9,
                   config.tip == "fully_floating" ? TipCondition::FullyFloating
                                                  : TipCondition::EndBearing};
  def.load = LoadCase{config.force_kN * 1e3,  // kN -> N
                      config.temperature_C};
  def.grid = build_uniform_grid(config.length_m, config.grid_nodes);
  validate_case(def);
  return def;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"axial thermo-mechanical response of a single energy pile"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int figure_id = 0;
  std::string parameter;
  std::vector<double> values;
  std::vector<Eigen::Index> node_counts = {251, 501, 1001};
  Eigen::Index compare_nodes = 20001;
  double inject_error = 0.0;

  auto* solve = app.add_subcommand(
      "solve", "profiles and summary for one case");
  solve->add_option("--config", config_path, "case config file")->required();
  solve->add_option("--out", out_dir, "output directory")->required();

  auto* figure = app.add_subcommand(
      "figure", "plot-ready dataset behind one reference figure (2-7)");
  figure->add_option("--id", figure_id, "figure number")->required();
  figure->add_option("--out", out_dir, "output directory")->required();

  auto* sweep = app.add_subcommand(
      "sweep", "summaries over a parameter sweep");
  sweep->add_option("--config", config_path, "base case config")->required();
  sweep->add_option("--parameter", parameter,
                    "head_stiffness | temperature | force")
      ->required();
  sweep
      ->add_option("--values", values,
                   "comma-separated values (GPa/m, degC, or kN)")
      ->required()
      ->delimiter(',');
  sweep->add_option("--out", out_dir, "output directory")->required();

  auto* validate = app.add_subcommand(
      "validate", "closed forms vs finite-difference oracle");
  validate->add_option("--config", config_path, "case config file")
      ->required();
  validate->add_option("--nodes", node_counts,
                       "convergence-study node counts")
      ->delimiter(',');
  validate->add_option("--compare-nodes", compare_nodes,
                       "fd resolution for the error gate");
  validate->add_option("--inject-error", inject_error, "")->group("");

  auto* claims = app.add_subcommand(
      "claims", "grade the reference study's quantitative statements");
  claims->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (app.got_subcommand(solve)) return cmd_solve(config_path, out_dir);
    if (app.got_subcommand(figure)) return cmd_figure(figure_id, out_dir);
    if (app.got_subcommand(sweep)) {
      return cmd_sweep(config_path, parameter, values, out_dir);
    }
    if (app.got_subcommand(validate)) {
      return cmd_validate(config_path, node_counts, compare_nodes,
                          inject_error);
    }
    if (app.got_subcommand(claims)) return cmd_claims(out_dir);
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const study::UnknownFigure& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const CaseMismatch& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const oracle::SingularSystem& e) {
    std::cerr << e.what() << "\n";
    return kExitGateFailure;
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  }
  return kExitValidation;
}

}  // namespace epile::cli
