#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

// Problem definition for a single axially loaded pile embedded in elastic
// soil. Everything here is plain SI: metres, newtons, pascals, kelvin (a
// temperature *change*, so degrees C work too). Unit conversion from
// engineering inputs (GPa, kN, ...) is the CLI's job, not the model's.
//
// Coordinate convention: x runs from the pile tip (x = 0) up to the head
// (x = L). Displacement, force and temperature change are positive for
// upward movement, tension and heating.

namespace epile {

enum class TipCondition {
  EndBearing,    // tip rests on rigid stratum, u(0) = 0
  FullyFloating  // tip free to move, sigma(0) = 0
};

struct PileSection {
  double length;     // m
  double perimeter;  // m
  double area;       // m^2
};

struct PileMaterial {
  double elastic_modulus;    // Pa
  double thermal_expansion;  // 1/K
};

struct RestraintSet {
  double shear_stiffness;  // Pa/m, soil-shaft interface (tau = k_s * u)
  double head_stiffness;   // Pa/m, elastic head spring (sigma_head = -k_h * u_head)
  TipCondition tip;
};

struct LoadCase {
  double head_force;          // N, axial force applied at the head
  double temperature_change;  // K, uniform along the pile
};

// Node coordinates, ascending from the tip. x(0) == 0, x(last) == length.
struct Grid {
  Eigen::ArrayXd x;

  Eigen::Index size() const { return x.size(); }
  double length() const { return x.size() > 0 ? x(x.size() - 1) : 0.0; }
};

struct CaseDefinition {
  PileSection section;
  PileMaterial material;
  RestraintSet restraints;
  LoadCase load;
  Grid grid;
};

bool operator==(const PileSection& a, const PileSection& b);
bool operator==(const PileMaterial& a, const PileMaterial& b);
bool operator==(const RestraintSet& a, const RestraintSet& b);
bool operator==(const LoadCase& a, const LoadCase& b);
bool operator==(const Grid& a, const Grid& b);
bool operator==(const CaseDefinition& a, const CaseDefinition& b);

// Validation collects every violation before throwing so a bad config file
// can be fixed in one pass.
enum class ViolationCode {
  NonPositiveParameter,
  PsiOutOfRange,
  GridMalformed
};

struct Violation {
  ViolationCode code;
  std::string field;    // e.g. "material.elastic_modulus"
  std::string message;  // human-readable, includes the offending value
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Accepted range for the dimensionless pile stiffness psi*L. Below the lower
// bound the closed forms degenerate to 0/0; above the upper bound cosh/sinh
// overflow even through the scaled kernels.
inline constexpr double kMinPsiLength = 1e-8;
inline constexpr double kMaxPsiLength = 700.0;

inline constexpr Eigen::Index kDefaultGridNodes = 1001;

// Solid circular section of the given diameter.
PileSection build_circular_section(double diameter, double length);

// node_count equally spaced nodes over [0, length], endpoints exact.
Grid build_uniform_grid(double length, Eigen::Index node_count);

// Returns the case unchanged if well-posed, otherwise throws ValidationError
// listing every violation found.
const CaseDefinition& validate_case(const CaseDefinition& def);

}  // namespace epile
