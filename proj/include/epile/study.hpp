#pragma once

#include "epile/analytic.hpp"
#include "epile/model.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Reference-study harness: the canonical pile, the two load scenarios, head
// stiffness sweeps, plot-ready figure datasets, and machine-graded checks of
// the study's quantitative statements.

namespace epile::study {

// Canonical parameters of the reference pile.
inline constexpr double kCanonicalLength = 26.0;           // m
inline constexpr double kCanonicalDiameter = 1.0;          // m
inline constexpr double kCanonicalModulus = 29.2e9;        // Pa
inline constexpr double kCanonicalExpansion = 1.0e-5;      // 1/K
inline constexpr double kCanonicalShearStiffness = 0.0167e9;  // Pa/m
inline constexpr double kHeadStiffnessLow = 0.125e9;       // Pa/m
inline constexpr double kHeadStiffnessHigh = 2.0e9;        // Pa/m
inline constexpr double kCanonicalForce = -1.0e6;          // N
inline constexpr double kCanonicalHeating = 10.0;          // K

enum class ScenarioId { I, II };

// Scenario I pairs compression with cooling, scenario II compression with
// heating; both use a compressive head force.
struct Scenario {
  ScenarioId id;
  double head_force;          // N, < 0
  double temperature_change;  // K, < 0 for I, > 0 for II
};

Scenario scenario_i();
Scenario scenario_ii();

// Validates the sign pattern of the scenario before returning it.
Scenario make_scenario(ScenarioId id, double head_force,
                       double temperature_change);

CaseDefinition canonical_case(TipCondition tip, double head_stiffness,
                              Eigen::Index node_count = kDefaultGridNodes);

struct ScenarioResult {
  ResponseProfile thermal;
  ResponseProfile mechanical;
  ResponseProfile combined;
  DerivedSummary summary;
};

// Applies the scenario loads to the case and runs the full decomposition.
ScenarioResult run_scenario(const Scenario& scenario,
                            const CaseDefinition& def);

enum class SweepParameter { HeadStiffness, Temperature, Force };

struct SweepSpec {
  CaseDefinition base;
  SweepParameter parameter;
  std::vector<double> values;  // SI units of the swept parameter
};

// One summary per value, order preserved. values must be non-empty and
// finite.
std::vector<DerivedSummary> run_sweep(const SweepSpec& spec);

// Head-stiffness flavor of run_sweep; rejects any other parameter.
std::vector<DerivedSummary> kh_sweep(const SweepSpec& spec);

struct FigureSeries {
  std::string label;      // unique within the dataset
  std::string quantity;   // displacement | strain | stress
  std::string unit;       // SI unit tag
  Eigen::ArrayXd depth;   // m below the head, ascending from 0
  Eigen::ArrayXd values;
};

struct FigureDataset {
  int figure_id;  // 2..7
  std::string title;
  std::vector<FigureSeries> series;
};

class UnknownFigure : public std::runtime_error {
 public:
  explicit UnknownFigure(const std::string& what)
      : std::runtime_error(what) {}
};

// Deterministic dataset behind one of the reference figures (ids 2 through
// 7; 1 is a schematic with no data).
FigureDataset figure_dataset(int figure_id);

struct Claim {
  std::string id;
  std::string description;
  std::string quote;      // verbatim anchor in the reference text
  std::string tolerance;  // threshold the grade used, human-readable
  std::vector<std::pair<std::string, double>> computed;
  bool pass;
};

// Grades every machine-checkable quantitative statement of the reference
// study against this implementation. Failures are report entries, never
// exceptions.
std::vector<Claim> claims_report();

}  // namespace epile::study
