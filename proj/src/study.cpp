#include "epile/study.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace epile::study {

namespace {

void reject(const char* field, const std::string& message) {
  throw ValidationError({{ViolationCode::NonPositiveParameter, field,
                          message}});
}

// Figure datasets plot against depth below the head, so flip the profile
// arrays: depth 0 is x = L.
FigureSeries make_series(std::string label, std::string quantity,
                         std::string unit, const ResponseProfile& profile,
                         const Eigen::ArrayXd& field) {
  FigureSeries s;
  s.label = std::move(label);
  s.quantity = std::move(quantity);
  s.unit = std::move(unit);
  s.depth = (profile.definition.section.length - profile.grid.x).reverse();
  s.values = field.reverse();
  return s;
}

void append_decomposition(std::vector<FigureSeries>& out,
                          const ScenarioResult& r) {
  out.push_back(make_series("thermal displacement", "displacement", "m",
                            r.thermal, r.thermal.displacement));
  out.push_back(make_series("mechanical displacement", "displacement", "m",
                            r.mechanical, r.mechanical.displacement));
  out.push_back(make_series("combined displacement", "displacement", "m",
                            r.combined, r.combined.displacement));
  out.push_back(make_series("thermal strain", "strain", "-", r.thermal,
                            r.thermal.strain));
  out.push_back(make_series("mechanical strain", "strain", "-", r.mechanical,
                            r.mechanical.strain));
  out.push_back(make_series("combined strain", "strain", "-", r.combined,
                            r.combined.strain));
  out.push_back(make_series("thermal stress", "stress", "Pa", r.thermal,
                            r.thermal.stress));
  out.push_back(make_series("mechanical stress", "stress", "Pa",
                            r.mechanical, r.mechanical.stress));
  out.push_back(make_series("combined stress", "stress", "Pa", r.combined,
                            r.combined.stress));
}

// The restraint-comparison figures share their structure: combined response
// of both tip conditions at the two nonzero head stiffnesses.
FigureDataset restraint_figure(int figure_id, const std::string& title,
                               const std::string& quantity,
                               const std::string& unit,
                               const Eigen::ArrayXd ResponseProfile::*field) {
  FigureDataset out;
  out.figure_id = figure_id;
  out.title = title;
  const Scenario heating = scenario_ii();
  const struct {
    TipCondition tip;
    double kh;
    const char* label;
  } variants[] = {
      {TipCondition::FullyFloating, kHeadStiffnessLow,
       "FF k_h = 0.125 GPa/m"},
      {TipCondition::FullyFloating, kHeadStiffnessHigh, "FF k_h = 2 GPa/m"},
      {TipCondition::EndBearing, kHeadStiffnessLow, "EB k_h = 0.125 GPa/m"},
      {TipCondition::EndBearing, kHeadStiffnessHigh, "EB k_h = 2 GPa/m"},
  };
  for (const auto& v : variants) {
    const ScenarioResult r =
        run_scenario(heating, canonical_case(v.tip, v.kh));
    out.series.push_back(
        make_series(v.label, quantity, unit, r.combined, r.combined.*field));
  }
  return out;
}

double max_abs(const Eigen::ArrayXd& a) { return a.abs().maxCoeff(); }

}  // namespace

Scenario scenario_i() {
  return Scenario{ScenarioId::I, kCanonicalForce, -kCanonicalHeating};
}

Scenario scenario_ii() {
  return Scenario{ScenarioId::II, kCanonicalForce, kCanonicalHeating};
}

Scenario make_scenario(ScenarioId id, double head_force,
                       double temperature_change) {
  if (!(head_force < 0.0)) {
    std::ostringstream msg;
    msg << "scenario force must be compressive (< 0), got " << head_force;
    reject("scenario.head_force", msg.str());
  }
  const bool cooling = temperature_change < 0.0;
  if (id == ScenarioId::I && !cooling) {
    std::ostringstream msg;
    msg << "scenario I pairs compression with cooling (dT < 0), got "
        << temperature_change;
    reject("scenario.temperature_change", msg.str());
  }
  if (id == ScenarioId::II && !(temperature_change > 0.0)) {
    std::ostringstream msg;
    msg << "scenario II pairs compression with heating (dT > 0), got "
        << temperature_change;
    reject("scenario.temperature_change", msg.str());
  }
  return Scenario{id, head_force, temperature_change};
}

CaseDefinition canonical_case(TipCondition tip, double head_stiffness,
                              Eigen::Index node_count) {
  CaseDefinition def;
  def.section = build_circular_section(kCanonicalDiameter, kCanonicalLength);
  def.material = PileMaterial{kCanonicalModulus, kCanonicalExpansion};
  def.restraints = RestraintSet{kCanonicalShearStiffness, head_stiffness, tip};
  def.load = LoadCase{0.0, 0.0};
  def.grid = build_uniform_grid(kCanonicalLength, node_count);
  return validate_case(def);
}

ScenarioResult run_scenario(const Scenario& scenario,
                            const CaseDefinition& def) {
  CaseDefinition loaded = def;
  loaded.load = LoadCase{scenario.head_force, scenario.temperature_change};
  validate_case(loaded);

  ScenarioResult out;
  out.thermal = thermal_profile(loaded);
  out.mechanical = mechanical_profile(loaded);
  out.combined = superpose(out.thermal, out.mechanical);
  out.summary = summarize(out.thermal, out.mechanical, out.combined);
  return out;
}

std::vector<DerivedSummary> run_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) {
    reject("sweep.values", "need at least one value");
  }
  for (double v : spec.values) {
    if (!std::isfinite(v)) reject("sweep.values", "values must be finite");
  }

  std::vector<DerivedSummary> out;
  out.reserve(spec.values.size());
  for (double v : spec.values) {
    CaseDefinition def = spec.base;
    switch (spec.parameter) {
      case SweepParameter::HeadStiffness:
        def.restraints.head_stiffness = v;
        break;
      case SweepParameter::Temperature:
        def.load.temperature_change = v;
        break;
      case SweepParameter::Force:
        def.load.head_force = v;
        break;
    }
    validate_case(def);
    const ResponseProfile thermal = thermal_profile(def);
    const ResponseProfile mechanical = mechanical_profile(def);
    const ResponseProfile combined = superpose(thermal, mechanical);
    out.push_back(summarize(thermal, mechanical, combined));
  }
  return out;
}

std::vector<DerivedSummary> kh_sweep(const SweepSpec& spec) {
  if (spec.parameter != SweepParameter::HeadStiffness) {
    reject("sweep.parameter", "kh_sweep only sweeps the head stiffness");
  }
  return run_sweep(spec);
}

FigureDataset figure_dataset(int figure_id) {
  switch (figure_id) {
    case 2: {
      FigureDataset out;
      out.figure_id = 2;
      out.title =
          "Response decomposition, fully floating pile, compression and "
          "cooling";
      append_decomposition(
          out.series,
          run_scenario(scenario_i(),
                       canonical_case(TipCondition::FullyFloating, 0.0)));
      return out;
    }
    case 3: {
      FigureDataset out;
      out.figure_id = 3;
      out.title =
          "Response decomposition, end bearing pile, compression and cooling";
      append_decomposition(
          out.series,
          run_scenario(scenario_i(),
                       canonical_case(TipCondition::EndBearing, 0.0)));
      return out;
    }
    case 4: {
      FigureDataset out;
      out.figure_id = 4;
      out.title =
          "Combined response, both tip conditions, compression and heating";
      const ScenarioResult ff = run_scenario(
          scenario_ii(), canonical_case(TipCondition::FullyFloating, 0.0));
      const ScenarioResult eb = run_scenario(
          scenario_ii(), canonical_case(TipCondition::EndBearing, 0.0));
      out.series.push_back(make_series("FF combined displacement",
                                       "displacement", "m", ff.combined,
                                       ff.combined.displacement));
      out.series.push_back(make_series("EB combined displacement",
                                       "displacement", "m", eb.combined,
                                       eb.combined.displacement));
      out.series.push_back(make_series("FF combined strain", "strain", "-",
                                       ff.combined, ff.combined.strain));
      out.series.push_back(make_series("EB combined strain", "strain", "-",
                                       eb.combined, eb.combined.strain));
      out.series.push_back(make_series("FF combined stress", "stress", "Pa",
                                       ff.combined, ff.combined.stress));
      out.series.push_back(make_series("EB combined stress", "stress", "Pa",
                                       eb.combined, eb.combined.stress));
      return out;
    }
    case 5:
      return restraint_figure(
          5, "Combined displacement under head restraint", "displacement",
          "m", &ResponseProfile::displacement);
    case 6:
      return restraint_figure(6, "Combined strain under head restraint",
                              "strain", "-", &ResponseProfile::strain);
    case 7:
      return restraint_figure(7, "Combined stress under head restraint",
                              "stress", "Pa", &ResponseProfile::stress);
    default: {
      std::ostringstream msg;
      msg << "figure " << figure_id
          << " has no data series; datasets exist for figures 2 through 7";
      throw UnknownFigure(msg.str());
    }
  }
}

std::vector<Claim> claims_report() {
  const Scenario cool = scenario_i();
  const Scenario heat = scenario_ii();
  const auto eb0 = canonical_case(TipCondition::EndBearing, 0.0);
  const auto ff0 = canonical_case(TipCondition::FullyFloating, 0.0);

  const ScenarioResult i_eb = run_scenario(cool, eb0);
  const ScenarioResult i_ff = run_scenario(cool, ff0);
  const ScenarioResult ii_eb = run_scenario(heat, eb0);
  const ScenarioResult ii_ff = run_scenario(heat, ff0);
  const ScenarioResult ii_eb_low = run_scenario(
      heat, canonical_case(TipCondition::EndBearing, kHeadStiffnessLow));
  const ScenarioResult ii_ff_low = run_scenario(
      heat, canonical_case(TipCondition::FullyFloating, kHeadStiffnessLow));
  const ScenarioResult ii_eb_high = run_scenario(
      heat, canonical_case(TipCondition::EndBearing, kHeadStiffnessHigh));
  const ScenarioResult ii_ff_high = run_scenario(
      heat, canonical_case(TipCondition::FullyFloating, kHeadStiffnessHigh));

  std::vector<Claim> out;

  {
    const double dT_eq =
        equivalent_thermal_load(kCanonicalForce, eb0.section, eb0.material)
            .magnitude;
    out.push_back(Claim{
        "equivalent-load-magnitude",
        "A 1000 kN compressive head force converts to a 4.36 degC "
        "equivalent temperature change",
        "equivalent thermal load being equal to 4.36°C",
        "|dT_eq - 4.36| <= 0.01",
        {{"equivalent_dT_C", dT_eq}},
        std::abs(dT_eq - 4.36) <= 0.01});

    const double ratio = kCanonicalHeating / dT_eq;
    out.push_back(Claim{
        "thermal-to-equivalent-ratio",
        "The applied 10 degC change is 2.29 times the equivalent load",
        "the magnitude of actual thermal load is 2.29 times larger than "
        "that of the equivalent thermal load",
        "|ratio - 2.29| <= 0.01",
        {{"load_ratio", ratio}},
        std::abs(ratio - 2.29) <= 0.01});
  }

  {
    const double x0 = null_point(ff0);
    out.push_back(Claim{
        "ff-null-point-midlength",
        "Unrestrained fully floating null point sits at mid-length",
        "the thermal null point is located at the mid length of the pile in "
        "fully floating pile",
        "|x0 - L/2| <= 1e-9*L",
        {{"null_point_m", x0}},
        std::abs(x0 - kCanonicalLength / 2.0) <= 1e-9 * kCanonicalLength});

    const double x0_eb0 = null_point(eb0);
    const double x0_eb_low = null_point(
        canonical_case(TipCondition::EndBearing, kHeadStiffnessLow));
    const double x0_eb_high = null_point(
        canonical_case(TipCondition::EndBearing, kHeadStiffnessHigh));
    out.push_back(Claim{
        "eb-null-point-at-tip",
        "End bearing null point is the tip for every head stiffness",
        "In ideally end bearing energy piles thermal null point is located "
        "at the pile tip regardless of the amount of a head restraint",
        "x0 == 0 exactly for k_h in {0, 0.125, 2} GPa/m",
        {{"x0_kh0_m", x0_eb0},
         {"x0_kh0.125_m", x0_eb_low},
         {"x0_kh2_m", x0_eb_high}},
        x0_eb0 == 0.0 && x0_eb_low == 0.0 && x0_eb_high == 0.0});
  }

  {
    const Eigen::ArrayXd tau = interface_shear(i_ff.combined);
    const double deviation =
        max_abs(tau - ff0.restraints.shear_stiffness *
                          i_ff.combined.displacement);
    out.push_back(Claim{
        "interface-shear-linear",
        "Interface shear is k_s times local displacement at every node",
        "the shear stress at the interface is a linear function of the "
        "vertical displacement",
        "max |tau - k_s*u| <= 1e-12 * max|tau|",
        {{"max_abs_deviation_Pa", deviation}},
        deviation <= 1e-12 * max_abs(tau)});
  }

  {
    const bool eb_zone = i_eb.summary.tension_zone.has_value();
    const bool ff_zone = i_ff.summary.tension_zone.has_value();
    out.push_back(Claim{
        "scenario-i-tension-zone-develops",
        "Compression with cooling produces a tension zone in both piles",
        "resulting in development of tensile stress and tension zone in the "
        "pile",
        "tension zone exists for both tip conditions",
        {{"eb_zone_present", eb_zone ? 1.0 : 0.0},
         {"ff_zone_present", ff_zone ? 1.0 : 0.0}},
        eb_zone && ff_zone});

    const double eb_len =
        eb_zone ? i_eb.summary.tension_zone->length() : 0.0;
    const double ff_len =
        ff_zone ? i_ff.summary.tension_zone->length() : 0.0;
    out.push_back(Claim{
        "eb-tension-zone-longer",
        "The end bearing tension zone is longer than the fully floating one",
        "The tensile stresses are larger and tension zone is longer in the "
        "end bearing pile than in the fully floating pile.",
        "zone length EB > zone length FF",
        {{"eb_zone_length_m", eb_len}, {"ff_zone_length_m", ff_len}},
        eb_len > ff_len});

    out.push_back(Claim{
        "eb-tensile-stress-larger",
        "Peak tensile stress is higher in the end bearing pile",
        "The tensile stresses are larger and tension zone is longer in the "
        "end bearing pile than in the fully floating pile.",
        "max tensile stress EB > max tensile stress FF",
        {{"eb_max_tensile_Pa", i_eb.summary.max_tensile_stress},
         {"ff_max_tensile_Pa", i_ff.summary.max_tensile_stress}},
        i_eb.summary.max_tensile_stress > i_ff.summary.max_tensile_stress});
  }

  {
    double worst = -std::numeric_limits<double>::infinity();
    for (const ScenarioResult* r : {&ii_eb, &ii_ff, &ii_eb_low, &ii_ff_low,
                                    &ii_eb_high, &ii_ff_high}) {
      const double slack = 1e-12 * max_abs(r->combined.stress);
      worst = std::max(worst, r->combined.stress.maxCoeff() - slack);
    }
    out.push_back(Claim{
        "scenario-ii-single-sign",
        "Compression with heating keeps the whole pile compressive",
        "the pile stress has the same sign along the entire length of the "
        "pile",
        "sigma <= 1e-12 * max|sigma| at every node, all tips and stiffnesses",
        {{"worst_nodewise_excess_Pa", worst}},
        worst <= 0.0});
  }

  {
    // The tip of a floating pile carries no load: stress vanishes and the
    // strain equals the free thermal expansion.
    double worst_sigma = 0.0;
    double worst_strain = 0.0;
    for (const ScenarioResult* r :
         {&i_ff, &ii_ff, &ii_ff_low, &ii_ff_high}) {
      const double dT = r->combined.definition.load.temperature_change;
      const double free_eps = kCanonicalExpansion * dT;
      worst_sigma =
          std::max(worst_sigma, std::abs(r->combined.stress(0)) /
                                    max_abs(r->combined.stress));
      worst_strain =
          std::max(worst_strain, std::abs(r->combined.strain(0) - free_eps) /
                                     max_abs(r->combined.strain));
    }
    out.push_back(Claim{
        "ff-tip-stress-strain-near-zero",
        "Fully floating tip: zero stress, strain equal to free expansion",
        "the magnitude of stress and strain at the pile tip of a fully "
        "floating pile are nearly equal to zero",
        "|sigma(0)| and |eps(0) - alpha*dT| within 1e-10 relative",
        {{"worst_tip_stress_rel", worst_sigma},
         {"worst_tip_strain_rel", worst_strain}},
        worst_sigma <= 1e-10 && worst_strain <= 1e-10});
  }

  {
    const double eb_u = max_abs(i_eb.thermal.displacement) /
                        max_abs(i_eb.mechanical.displacement);
    const double ff_u = max_abs(i_ff.thermal.displacement) /
                        max_abs(i_ff.mechanical.displacement);
    const double eb_e =
        max_abs(i_eb.thermal.strain) / max_abs(i_eb.mechanical.strain);
    const double ff_e =
        max_abs(i_ff.thermal.strain) / max_abs(i_ff.mechanical.strain);
    out.push_back(Claim{
        "thermal-response-dominates",
        "Thermal displacement and strain outweigh the mechanical ones",
        "magnitudes of thermally induced displacement and strain are larger "
        "than those of mechanically induced displacement and strain",
        "max-norm ratio thermal/mechanical > 1 for u and eps, both tips",
        {{"eb_displacement_ratio", eb_u},
         {"ff_displacement_ratio", ff_u},
         {"eb_strain_ratio", eb_e},
         {"ff_strain_ratio", ff_e}},
        eb_u > 1.0 && ff_u > 1.0 && eb_e > 1.0 && ff_e > 1.0});
  }

  {
    const double eb_head = std::abs(i_eb.summary.head_displacement);
    const double ff_head = std::abs(i_ff.summary.head_displacement);
    const double eb_tip = std::abs(i_eb.summary.tip_displacement);
    const double ff_tip = std::abs(i_ff.summary.tip_displacement);
    out.push_back(Claim{
        "eb-head-ff-tip-displacement-order",
        "Cooling case: EB moves more at the head, FF more at the tip",
        "magnitude of the combined displacement at the pile head is larger "
        "in the end bearing pile than in the fully floating pile and vice "
        "versa at the pile tip",
        "|u_head| EB > FF and |u_tip| FF > EB",
        {{"eb_head_m", eb_head},
         {"ff_head_m", ff_head},
         {"eb_tip_m", eb_tip},
         {"ff_tip_m", ff_tip}},
        eb_head > ff_head && ff_tip > eb_tip});
  }

  {
    const Eigen::ArrayXd gap =
        i_ff.combined.strain.abs() - i_eb.combined.strain.abs();
    const double slack = 1e-12 * max_abs(i_ff.combined.strain);
    out.push_back(Claim{
        "ff-combined-strain-larger",
        "Cooling case: fully floating strain dominates at every node",
        "the magnitude of a combined strain is larger in the fully floating "
        "pile than in the end bearing pile throughout the length of the pile",
        "|eps_FF| >= |eps_EB| - 1e-12*max|eps| node-wise",
        {{"min_nodewise_gap", gap.minCoeff()}},
        gap.minCoeff() >= -slack});
  }

  {
    const double eb_rel = std::abs(i_eb.thermal.stress(
                              i_eb.thermal.grid.x.size() - 1)) /
                          max_abs(i_eb.thermal.stress);
    const double ff_rel = std::abs(i_ff.thermal.stress(
                              i_ff.thermal.grid.x.size() - 1)) /
                          max_abs(i_ff.thermal.stress);
    out.push_back(Claim{
        "thermal-head-stress-zero-unrestrained",
        "Without a head spring the thermal stress vanishes at the head",
        "in the absence of a head restraint the magnitude of thermally "
        "induced stress at the pile head is equal to zero",
        "|sigma_th(L)| <= 1e-10 * max|sigma_th|, both tips",
        {{"eb_head_stress_rel", eb_rel}, {"ff_head_stress_rel", ff_rel}},
        eb_rel <= 1e-10 && ff_rel <= 1e-10});
  }

  {
    const double head = std::abs(ii_ff.summary.head_displacement);
    const double peak = max_abs(ii_ff.combined.displacement);
    out.push_back(Claim{
        "ff-head-displacement-near-zero",
        "Heating case: fully floating head barely moves",
        "in the case of a fully floating pile the combined displacement is "
        "nearly zero at the pile head",
        "|u_head| <= 5% of max|u| (threshold chosen here; source gives none)",
        {{"head_displacement_m", ii_ff.summary.head_displacement},
         {"max_abs_displacement_m", peak},
         {"head_to_peak_ratio", head / peak}},
        head <= 0.05 * peak});

    out.push_back(Claim{
        "ff-tip-displacement-exceeds-head",
        "Heating case: the floating tip moves more than the head",
        "thus resulting in the larger magnitude of the combined displacement "
        "at the pile tip than at the pile head",
        "|u_tip| > |u_head|",
        {{"tip_m", std::abs(ii_ff.summary.tip_displacement)},
         {"head_m", head}},
        std::abs(ii_ff.summary.tip_displacement) > head});

    out.push_back(Claim{
        "scenario-ii-tip-vs-scenario-i-head",
        "Floating pile: heating-case tip movement stays below cooling-case "
        "head movement",
        "the magnitude of the combined displacement at the pile tip for "
        "loading scenario (ii) is smaller than the combined displacement at "
        "the pile head for the loading scenario (i)",
        "|u_tip, scenario II| < |u_head, scenario I|",
        {{"scenario_ii_tip_m", std::abs(ii_ff.summary.tip_displacement)},
         {"scenario_i_head_m", std::abs(i_ff.summary.head_displacement)}},
        std::abs(ii_ff.summary.tip_displacement) <
            std::abs(i_ff.summary.head_displacement)});
  }

  {
    const double u0 = ii_eb.summary.head_displacement;
    const double u_low = ii_eb_low.summary.head_displacement;
    const double u_high = ii_eb_high.summary.head_displacement;
    const double ratio = u0 / u_low;
    out.push_back(Claim{
        "head-displacement-ratio-exceeds-8",
        "Moderate head spring cuts the EB heating-case head displacement "
        "more than eightfold",
        "its head displacement decreases more than 8 times in case of $k_h "
        "= 0.125$ GPa/m",
        "u_head(k_h=0) / u_head(k_h=0.125 GPa/m) > 8",
        {{"u_head_kh0_m", u0},
         {"u_head_kh0.125_m", u_low},
         {"ratio", ratio}},
        ratio > 8.0});

    out.push_back(Claim{
        "head-displacement-negative-at-kh-2",
        "Stiff head spring pushes the EB heating-case head displacement "
        "negative",
        "becomes negative for $k_h = 2$ GPa/m",
        "u_head(k_h=2 GPa/m) < 0",
        {{"u_head_kh2_m", u_high}},
        u_high < 0.0});
  }

  {
    const double ff_low = ii_ff_low.summary.head_displacement;
    const double eb_low = ii_eb_low.summary.head_displacement;
    const double ff_high = ii_ff_high.summary.head_displacement;
    const double eb_high = ii_eb_high.summary.head_displacement;
    out.push_back(Claim{
        "ff-head-below-eb-under-restraint",
        "Restrained heads: the floating pile ends up lower than the end "
        "bearing pile",
        "The head of the fully floating energy pile moved even further "
        "downward than that of the end bearing pile as the stiffness of the "
        "head spring increased.",
        "u_head FF < u_head EB at k_h in {0.125, 2} GPa/m",
        {{"ff_kh0.125_m", ff_low},
         {"eb_kh0.125_m", eb_low},
         {"ff_kh2_m", ff_high},
         {"eb_kh2_m", eb_high}},
        ff_low < eb_low && ff_high < eb_high});
  }

  {
    double worst = -std::numeric_limits<double>::infinity();
    const std::pair<const ScenarioResult*, const ScenarioResult*> steps[] = {
        {&ii_eb, &ii_eb_low},   {&ii_eb_low, &ii_eb_high},
        {&ii_ff, &ii_ff_low},   {&ii_ff_low, &ii_ff_high},
    };
    for (const auto& [softer, stiffer] : steps) {
      const double slack = 1e-12 * max_abs(softer->combined.stress);
      worst = std::max(
          worst,
          (stiffer->combined.stress - softer->combined.stress).maxCoeff() -
              slack);
    }
    out.push_back(Claim{
        "stress-magnitude-grows-with-restraint",
        "Stiffer head springs deepen the heating-case compression "
        "node-wise",
        "magnitude of compressive thermo-mechanical axial stress increases "
        "as the head restraint stiffness (k_h) applied at the pile head "
        "increases",
        "sigma(k_h+) <= sigma(k_h) + 1e-12*max|sigma| at every node",
        {{"worst_nodewise_increase_Pa", worst}},
        worst <= 0.0});
  }

  {
    const double eb_low_max = max_abs(ii_eb_low.combined.stress);
    const double ff_low_max = max_abs(ii_ff_low.combined.stress);
    const double eb_high_max = max_abs(ii_eb_high.combined.stress);
    const double ff_high_max = max_abs(ii_ff_high.combined.stress);
    out.push_back(Claim{
        "eb-stress-exceeds-ff-under-restraint",
        "Restrained piles: end bearing stress magnitudes stay above fully "
        "floating ones",
        "larger values of the thermo-mechanical axial stress were induced "
        "in the end bearing pile than in the fully floating pile",
        "max|sigma| EB > max|sigma| FF at k_h in {0.125, 2} GPa/m",
        {{"eb_kh0.125_Pa", eb_low_max},
         {"ff_kh0.125_Pa", ff_low_max},
         {"eb_kh2_Pa", eb_high_max},
         {"ff_kh2_Pa", ff_high_max}},
        eb_low_max > ff_low_max && eb_high_max > ff_high_max});
  }

  {
    bool monotone = true;
    double worst_tip_rel = 0.0;
    for (const ScenarioResult* restrained : {&ii_ff_low, &ii_ff_high}) {
      const Eigen::ArrayXd delta =
          (restrained->combined.stress - ii_ff.combined.stress).abs();
      const double slack = 1e-9 * delta.maxCoeff();
      // x ascends toward the head, so "decreases with depth" means |delta|
      // grows with x.
      monotone = monotone &&
                 ((delta.tail(delta.size() - 1) -
                   delta.head(delta.size() - 1)) >= -slack)
                     .all();
      worst_tip_rel =
          std::max(worst_tip_rel, delta(0) / delta.maxCoeff());
    }
    out.push_back(Claim{
        "restraint-stress-fades-with-depth",
        "Floating pile: head-spring stress decays downward and dies at the "
        "tip",
        "the magnitude of stress induced by the head restraint decreases "
        "with depth and it completely disappears at the pile tip",
        "|sigma(k_h) - sigma(0)| non-increasing with depth; tip value <= "
        "1e-10 of max",
        {{"worst_tip_residual_rel", worst_tip_rel},
         {"monotone", monotone ? 1.0 : 0.0}},
        monotone && worst_tip_rel <= 1e-10});
  }

  return out;
}

}  // namespace epile::study
