#pragma once

#include "epile/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>

// Command-line surface. Configs carry engineering units (GPa, kN, GPa/m) in
// their key names; this module owns the one and only conversion to SI.

namespace epile::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitGateFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A config file as read, before unit conversion. Geometry comes either from
// pile.d_m or from pile.p_m + pile.A_m2.
struct RunConfig {
  double length_m = 0.0;
  std::optional<double> diameter_m;
  std::optional<double> perimeter_m;
  std::optional<double> area_m2;
  double modulus_GPa = 0.0;
  double expansion_per_C = 0.0;
  double shear_GPa_per_m = 0.0;
  double head_GPa_per_m = 0.0;
  std::string tip;  // end_bearing | fully_floating
  double force_kN = 0.0;
  double temperature_C = 0.0;
  Eigen::Index grid_nodes = kDefaultGridNodes;
};

// Parses a key=value config. Unknown, duplicate, malformed, or missing
// required keys throw ValidationError listing every problem; an unreadable
// file throws IoError.
RunConfig read_config(const std::string& path);

// Engineering units to SI, then full case validation.
CaseDefinition to_case(const RunConfig& config);

// Whole CLI: parses argv, dispatches the subcommand, maps errors onto the
// exit-code contract (0 ok, 1 gate/claim failure, 2 validation, 3 I/O).
int run(int argc, const char* const* argv);

}  // namespace epile::cli
