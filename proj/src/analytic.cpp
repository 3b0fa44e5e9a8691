#include "epile/analytic.hpp"

#include "epile/hyperbolic.hpp"

#include <cmath>
#include <sstream>

namespace epile {

namespace {

using hyperbolic::cosh_ratio;
using hyperbolic::restrained_crossing;
using hyperbolic::sinh_ratio;

// Thermal terms. Both tip conditions share one shape once the coordinate is
// shifted to the null point x0 (0 for end-bearing): with a = psi*(x - x0)
// and c = psi*(L - x0),
//
//   u     = alpha*dT * sinh(a) / (psi*cosh(c) + beta*sinh(c))
//   eps   = alpha*dT * psi*cosh(a) / (psi*cosh(c) + beta*sinh(c))
//   sigma = E * (eps - alpha*dT)
//
// where beta = k_h/E folds the head spring into the denominator.
struct ThermalKernel {
  double psi;
  double origin;    // null point x0
  double span;      // psi*(L - x0)
  double beta;      // k_h / E
  double alpha_dT;  // free-expansion strain
  double modulus;

  double u(double x) const {
    return alpha_dT * sinh_ratio(psi * (x - origin), span, psi, beta);
  }
  double eps(double x) const {
    return alpha_dT * psi * cosh_ratio(psi * (x - origin), span, psi, beta);
  }
  double sigma(double x) const {
    return modulus * alpha_dT *
           (psi * cosh_ratio(psi * (x - origin), span, psi, beta) - 1.0);
  }
};

// Mechanical terms. The head force enters through sigma(L) = F/A; the tip
// condition picks sinh (end-bearing, u(0) = 0) or cosh (fully-floating,
// sigma(0) = 0) as the displacement shape.
struct MechanicalKernel {
  double psi;
  double span;       // psi*L
  double f_over_ae;  // F / (A*E)
  double f_over_a;   // F / A
  TipCondition tip;

  double u(double x) const {
    return tip == TipCondition::EndBearing
               ? f_over_ae * sinh_ratio(psi * x, span, psi, 0.0)
               : f_over_ae * cosh_ratio(psi * x, span, 0.0, psi);
  }
  double eps(double x) const {
    return tip == TipCondition::EndBearing
               ? f_over_ae * cosh_ratio(psi * x, span, 1.0, 0.0)
               : f_over_ae * sinh_ratio(psi * x, span, 0.0, 1.0);
  }
  double sigma(double x) const {
    return tip == TipCondition::EndBearing
               ? f_over_a * cosh_ratio(psi * x, span, 1.0, 0.0)
               : f_over_a * sinh_ratio(psi * x, span, 0.0, 1.0);
  }
};

ThermalKernel make_thermal(const CaseDefinition& def) {
  const double psi =
      compute_psi(def.section, def.material, def.restraints);
  const double x0 = null_point(def);
  return ThermalKernel{
      psi,
      x0,
      psi * (def.section.length - x0),
      def.restraints.head_stiffness / def.material.elastic_modulus,
      def.material.thermal_expansion * def.load.temperature_change,
      def.material.elastic_modulus};
}

MechanicalKernel make_mechanical(const CaseDefinition& def) {
  const double psi =
      compute_psi(def.section, def.material, def.restraints);
  const double ae = def.section.area * def.material.elastic_modulus;
  return MechanicalKernel{psi, psi * def.section.length,
                          def.load.head_force / ae,
                          def.load.head_force / def.section.area,
                          def.restraints.tip};
}

ResponseProfile build_profile(const CaseDefinition& def, Component component) {
  const auto thermal = make_thermal(def);
  const auto mech = make_mechanical(def);
  const auto& x = def.grid.x;

  ResponseProfile out;
  out.grid = def.grid;
  out.component = component;
  out.definition = def;
  switch (component) {
    case Component::Thermal:
      out.displacement = x.unaryExpr([&](double xi) { return thermal.u(xi); });
      out.strain = x.unaryExpr([&](double xi) { return thermal.eps(xi); });
      out.stress = x.unaryExpr([&](double xi) { return thermal.sigma(xi); });
      break;
    case Component::Mechanical:
      out.displacement = x.unaryExpr([&](double xi) { return mech.u(xi); });
      out.strain = x.unaryExpr([&](double xi) { return mech.eps(xi); });
      out.stress = x.unaryExpr([&](double xi) { return mech.sigma(xi); });
      break;
    case Component::Combined:
      out.displacement =
          x.unaryExpr([&](double xi) { return thermal.u(xi) + mech.u(xi); });
      out.strain = x.unaryExpr(
          [&](double xi) { return thermal.eps(xi) + mech.eps(xi); });
      out.stress = x.unaryExpr(
          [&](double xi) { return thermal.sigma(xi) + mech.sigma(xi); });
      break;
  }
  out.interface_shear = def.restraints.shear_stiffness * out.displacement;
  return out;
}

// Bisection on the closed-form combined stress. Keeps the invariant
// sigma(lo) and sigma(hi) straddle zero (one of them may be an endpoint
// known only from the grid); stops at |hi - lo| <= tol.
double refine_crossing(const CaseDefinition& def, double lo, double hi,
                       bool positive_at_lo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const bool mid_positive = stress_at(def, Component::Combined, mid) > 0.0;
    if (mid_positive == positive_at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double compute_psi(const PileSection& section, const PileMaterial& material,
                   const RestraintSet& restraints) {
  return std::sqrt(section.perimeter / section.area *
                   restraints.shear_stiffness / material.elastic_modulus);
}

EquivalentThermalLoad equivalent_thermal_load(double head_force,
                                              const PileSection& section,
                                              const PileMaterial& material) {
  const double signed_dT =
      head_force / (section.area * material.elastic_modulus *
                    material.thermal_expansion);
  return EquivalentThermalLoad{std::abs(signed_dT), signed_dT, -signed_dT};
}

double null_point(const CaseDefinition& def) {
  if (def.restraints.tip == TipCondition::EndBearing) return 0.0;
  const double psi =
      compute_psi(def.section, def.material, def.restraints);
  const double c = psi * def.section.length;
  const double r =
      def.restraints.head_stiffness / (def.material.elastic_modulus * psi);
  if (r == 0.0) return def.section.length / 2.0;
  return restrained_crossing(c, r) / psi;
}

double displacement_at(const CaseDefinition& def, Component component,
                       double x) {
  switch (component) {
    case Component::Thermal:
      return make_thermal(def).u(x);
    case Component::Mechanical:
      return make_mechanical(def).u(x);
    case Component::Combined:
      return make_thermal(def).u(x) + make_mechanical(def).u(x);
  }
  return 0.0;
}

double strain_at(const CaseDefinition& def, Component component, double x) {
  switch (component) {
    case Component::Thermal:
      return make_thermal(def).eps(x);
    case Component::Mechanical:
      return make_mechanical(def).eps(x);
    case Component::Combined:
      return make_thermal(def).eps(x) + make_mechanical(def).eps(x);
  }
  return 0.0;
}

double stress_at(const CaseDefinition& def, Component component, double x) {
  switch (component) {
    case Component::Thermal:
      return make_thermal(def).sigma(x);
    case Component::Mechanical:
      return make_mechanical(def).sigma(x);
    case Component::Combined:
      return make_thermal(def).sigma(x) + make_mechanical(def).sigma(x);
  }
  return 0.0;
}

ResponseProfile thermal_profile(const CaseDefinition& def) {
  return build_profile(validate_case(def), Component::Thermal);
}

ResponseProfile mechanical_profile(const CaseDefinition& def) {
  return build_profile(validate_case(def), Component::Mechanical);
}

ResponseProfile superpose(const ResponseProfile& thermal,
                          const ResponseProfile& mechanical) {
  if (thermal.component != Component::Thermal ||
      mechanical.component != Component::Mechanical) {
    throw CaseMismatch("superpose expects a Thermal and a Mechanical profile");
  }
  if (!(thermal.definition == mechanical.definition)) {
    throw CaseMismatch("superpose inputs solve different cases");
  }

  ResponseProfile out;
  out.grid = thermal.grid;
  out.displacement = thermal.displacement + mechanical.displacement;
  out.strain = thermal.strain + mechanical.strain;
  out.stress = thermal.stress + mechanical.stress;
  out.interface_shear = thermal.interface_shear + mechanical.interface_shear;
  out.component = Component::Combined;
  out.definition = thermal.definition;
  return out;
}

Eigen::ArrayXd interface_shear(const ResponseProfile& profile) {
  return profile.definition.restraints.shear_stiffness * profile.displacement;
}

std::optional<Interval> tension_zone(const ResponseProfile& combined) {
  if (combined.component != Component::Combined) {
    throw CaseMismatch("tension_zone expects a Combined profile");
  }
  const auto& x = combined.grid.x;
  const auto& sigma = combined.stress;
  const Eigen::Index n = x.size();

  // Contiguous runs of sigma > 0 on the grid.
  Eigen::Index first = -1;
  Eigen::Index last = -1;
  Eigen::Index runs = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const bool tensile = sigma(i) > 0.0;
    if (tensile && (i == 0 || !(sigma(i - 1) > 0.0))) {
      ++runs;
      if (runs == 1) first = i;
    }
    if (tensile && runs == 1) last = i;
  }
  if (runs == 0) return std::nullopt;
  if (runs > 1) {
    std::ostringstream msg;
    msg << "found " << runs << " disjoint tensile runs on the grid";
    throw MultipleZones(msg.str());
  }

  const double tol = 1e-9 * combined.definition.section.length;
  double lower = x(first);
  if (first > 0) {
    lower = refine_crossing(combined.definition, x(first - 1), x(first),
                            /*positive_at_lo=*/false, tol);
  }
  double upper = x(last);
  if (last < n - 1) {
    upper = refine_crossing(combined.definition, x(last), x(last + 1),
                            /*positive_at_lo=*/true, tol);
  }
  return Interval{lower, upper};
}

DerivedSummary summarize(const ResponseProfile& thermal,
                         const ResponseProfile& mechanical,
                         const ResponseProfile& combined) {
  if (thermal.component != Component::Thermal ||
      mechanical.component != Component::Mechanical ||
      combined.component != Component::Combined) {
    throw CaseMismatch("summarize expects Thermal, Mechanical, Combined");
  }
  if (!(thermal.definition == mechanical.definition) ||
      !(thermal.definition == combined.definition)) {
    throw CaseMismatch("summarize profiles solve different cases");
  }

  const CaseDefinition& def = combined.definition;
  const Eigen::Index n = combined.grid.x.size();

  DerivedSummary out;
  out.psi = compute_psi(def.section, def.material, def.restraints);
  out.psi_length = out.psi * def.section.length;
  out.null_point = null_point(def);
  out.equivalent_dT =
      equivalent_thermal_load(def.load.head_force, def.section, def.material)
          .magnitude;
  out.head_displacement = combined.displacement(n - 1);
  out.tip_displacement = combined.displacement(0);
  out.head_stress = combined.stress(n - 1);
  out.tip_stress = combined.stress(0);
  out.tension_zone = tension_zone(combined);
  out.max_tensile_stress = std::max(0.0, combined.stress.maxCoeff());
  return out;
}

}  // namespace epile
