#pragma once

#include "epile/model.hpp"

#include <optional>
#include <stdexcept>

// Closed-form response of the pile to thermal and mechanical head loading.
// All fields solve A*E*u'' = p*k_s*u; the two load components differ only in
// their boundary conditions, so each profile is evaluated per component and
// combined by superposition.

namespace epile {

enum class Component { Thermal, Mechanical, Combined };

struct ResponseProfile {
  Grid grid;
  Eigen::ArrayXd displacement;     // m, positive up
  Eigen::ArrayXd strain;           // dimensionless, tension positive
  Eigen::ArrayXd stress;           // Pa, tension positive
  Eigen::ArrayXd interface_shear;  // Pa, k_s * u
  Component component;
  CaseDefinition definition;
};

struct Interval {
  double lower;  // m
  double upper;  // m
  double length() const { return upper - lower; }
};

// Temperature change producing the same head response magnitude as a head
// force F on an end-bearing pile: |dT| = |F| / (A*E*alpha). The signed
// variants pair F with cooling (scenario i) or heating (scenario ii).
struct EquivalentThermalLoad {
  double magnitude;     // K
  double scenario_i;    // K, sign of +F/(A*E*alpha)
  double scenario_ii;   // K, sign of -F/(A*E*alpha)
};

struct DerivedSummary {
  double psi;                           // 1/m
  double psi_length;                    // dimensionless
  double null_point;                    // m, x of zero thermal displacement
  double equivalent_dT;                 // K, magnitude
  double head_displacement;             // m, combined, at x = L
  double tip_displacement;              // m, combined, at x = 0
  double head_stress;                   // Pa, combined, at x = L
  double tip_stress;                    // Pa, combined, at x = 0
  std::optional<Interval> tension_zone; // combined sigma > 0
  double max_tensile_stress;            // Pa, 0 when no tension anywhere
};

class CaseMismatch : public std::runtime_error {
 public:
  explicit CaseMismatch(const std::string& what) : std::runtime_error(what) {}
};

class MultipleZones : public std::runtime_error {
 public:
  explicit MultipleZones(const std::string& what)
      : std::runtime_error(what) {}
};

// psi = sqrt((p/A) * (k_s/E)), the reciprocal decay length of the response.
double compute_psi(const PileSection& section, const PileMaterial& material,
                   const RestraintSet& restraints);

EquivalentThermalLoad equivalent_thermal_load(double head_force,
                                              const PileSection& section,
                                              const PileMaterial& material);

// Location of zero thermal displacement: 0 for end-bearing, the restrained
// crossing of the hyperbolic terms for fully-floating. Always in [0, L].
double null_point(const CaseDefinition& def);

// Point evaluators behind the profile builders, exposed for root refinement
// and spot checks. x in [0, L].
double displacement_at(const CaseDefinition& def, Component component,
                       double x);
double strain_at(const CaseDefinition& def, Component component, double x);
double stress_at(const CaseDefinition& def, Component component, double x);

ResponseProfile thermal_profile(const CaseDefinition& def);
ResponseProfile mechanical_profile(const CaseDefinition& def);

// Node-wise sum; inputs must be the Thermal and Mechanical profiles of the
// same case on the same grid.
ResponseProfile superpose(const ResponseProfile& thermal,
                          const ResponseProfile& mechanical);

// tau = k_s * u for the profile's own displacement array.
Eigen::ArrayXd interface_shear(const ResponseProfile& profile);

// Maximal interval where combined stress is tensile, bracketed on the grid
// and refined by bisection on the closed form to 1e-9*L. Empty optional when
// sigma <= 0 everywhere; MultipleZones if the grid shows disjoint tensile
// runs (the closed forms admit at most one).
std::optional<Interval> tension_zone(const ResponseProfile& combined);

DerivedSummary summarize(const ResponseProfile& thermal,
                         const ResponseProfile& mechanical,
                         const ResponseProfile& combined);

}  // namespace epile
