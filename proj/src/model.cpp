#include "epile/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace epile {

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << "case validation failed, " << violations.size() << " violation(s):";
  for (const auto& v : violations) {
    out << "\n  " << v.field << ": " << v.message;
  }
  return out.str();
}

void require_positive(std::vector<Violation>& out, double value,
                      const char* field) {
  if (!std::isfinite(value)) {
    out.push_back({ViolationCode::NonPositiveParameter, field,
                   "must be finite"});
  } else if (value <= 0.0) {
    std::ostringstream msg;
    msg << "must be > 0, got " << value;
    out.push_back({ViolationCode::NonPositiveParameter, field, msg.str()});
  }
}

void require_finite(std::vector<Violation>& out, double value,
                    const char* field) {
  if (!std::isfinite(value)) {
    out.push_back({ViolationCode::NonPositiveParameter, field,
                   "must be finite"});
  }
}

}  // namespace

bool operator==(const PileSection& a, const PileSection& b) {
  return a.length == b.length && a.perimeter == b.perimeter && a.area == b.area;
}

bool operator==(const PileMaterial& a, const PileMaterial& b) {
  return a.elastic_modulus == b.elastic_modulus &&
         a.thermal_expansion == b.thermal_expansion;
}

bool operator==(const RestraintSet& a, const RestraintSet& b) {
  return a.shear_stiffness == b.shear_stiffness &&
         a.head_stiffness == b.head_stiffness && a.tip == b.tip;
}

bool operator==(const LoadCase& a, const LoadCase& b) {
  return a.head_force == b.head_force &&
         a.temperature_change == b.temperature_change;
}

bool operator==(const Grid& a, const Grid& b) {
  return a.x.size() == b.x.size() && (a.x == b.x).all();
}

bool operator==(const CaseDefinition& a, const CaseDefinition& b) {
  return a.section == b.section && a.material == b.material &&
         a.restraints == b.restraints && a.load == b.load && a.grid == b.grid;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(join_messages(violations)),
      violations_(std::move(violations)) {}

PileSection build_circular_section(double diameter, double length) {
  std::vector<Violation> violations;
  require_positive(violations, diameter, "section.diameter");
  require_positive(violations, length, "section.length");
  if (!violations.empty()) throw ValidationError(std::move(violations));

  return PileSection{length, std::numbers::pi * diameter,
                     std::numbers::pi * diameter * diameter / 4.0};
}

Grid build_uniform_grid(double length, Eigen::Index node_count) {
  std::vector<Violation> violations;
  require_positive(violations, length, "grid.length");
  if (node_count < 2) {
    std::ostringstream msg;
    msg << "need at least 2 nodes, got " << node_count;
    violations.push_back({ViolationCode::GridMalformed, "grid.node_count",
                          msg.str()});
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  // LinSpaced pins both endpoints exactly, which validate_case relies on.
  return Grid{Eigen::ArrayXd::LinSpaced(node_count, 0.0, length)};
}

const CaseDefinition& validate_case(const CaseDefinition& def) {
  std::vector<Violation> violations;

  require_positive(violations, def.section.length, "section.length");
  require_positive(violations, def.section.perimeter, "section.perimeter");
  require_positive(violations, def.section.area, "section.area");
  require_positive(violations, def.material.elastic_modulus,
                   "material.elastic_modulus");
  require_positive(violations, def.material.thermal_expansion,
                   "material.thermal_expansion");
  require_finite(violations, def.load.head_force, "load.head_force");
  require_finite(violations, def.load.temperature_change,
                 "load.temperature_change");

  if (!std::isfinite(def.restraints.shear_stiffness) ||
      def.restraints.shear_stiffness < 0.0) {
    std::ostringstream msg;
    msg << "must be >= 0 and finite, got " << def.restraints.shear_stiffness;
    violations.push_back({ViolationCode::NonPositiveParameter,
                          "restraints.shear_stiffness", msg.str()});
  }
  if (!std::isfinite(def.restraints.head_stiffness) ||
      def.restraints.head_stiffness < 0.0) {
    std::ostringstream msg;
    msg << "must be >= 0 and finite, got " << def.restraints.head_stiffness;
    violations.push_back({ViolationCode::NonPositiveParameter,
                          "restraints.head_stiffness", msg.str()});
  }

  const auto& x = def.grid.x;
  if (x.size() < 2) {
    std::ostringstream msg;
    msg << "need at least 2 nodes, got " << x.size();
    violations.push_back({ViolationCode::GridMalformed, "grid.x", msg.str()});
  } else {
    if (x(0) != 0.0) {
      std::ostringstream msg;
      msg << "first node must sit at the tip (x = 0), got " << x(0);
      violations.push_back({ViolationCode::GridMalformed, "grid.x",
                            msg.str()});
    }
    if (def.section.length > 0.0 && x(x.size() - 1) != def.section.length) {
      std::ostringstream msg;
      msg << "last node must sit at the head (x = " << def.section.length
          << "), got " << x(x.size() - 1);
      violations.push_back({ViolationCode::GridMalformed, "grid.x",
                            msg.str()});
    }
    if (!((x.tail(x.size() - 1) - x.head(x.size() - 1)) > 0.0).all()) {
      violations.push_back({ViolationCode::GridMalformed, "grid.x",
                            "nodes must be strictly ascending"});
    }
  }

  // psi*L only makes sense once the ingredients themselves are sound.
  const bool ingredients_ok =
      def.section.length > 0.0 && def.section.perimeter > 0.0 &&
      def.section.area > 0.0 && def.material.elastic_modulus > 0.0 &&
      std::isfinite(def.restraints.shear_stiffness) &&
      def.restraints.shear_stiffness >= 0.0;
  if (ingredients_ok) {
    const double psi =
        std::sqrt(def.section.perimeter / def.section.area *
                  def.restraints.shear_stiffness /
                  def.material.elastic_modulus);
    const double psi_length = psi * def.section.length;
    if (!(psi_length > kMinPsiLength && psi_length < kMaxPsiLength)) {
      std::ostringstream msg;
      msg << "psi*L = " << psi_length << " outside (" << kMinPsiLength << ", "
          << kMaxPsiLength << ")";
      violations.push_back({ViolationCode::PsiOutOfRange,
                            "derived.psi_length", msg.str()});
    }
  }

  if (!violations.empty()) throw ValidationError(std::move(violations));
  return def;
}

}  // namespace epile
