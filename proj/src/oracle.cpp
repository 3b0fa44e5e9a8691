#include "epile/oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace epile::oracle {

namespace {

// Free-expansion strain of the component: the constitutive law subtracts it
// from the geometric strain, and it shows up in the stress-type boundary
// conditions.
double free_strain(const CaseDefinition& def, Component component) {
  return component == Component::Thermal
             ? def.material.thermal_expansion * def.load.temperature_change
             : 0.0;
}

FieldError field_error(const Eigen::ArrayXd& reference,
                       const Eigen::ArrayXd& probe) {
  const double denom = reference.abs().maxCoeff();
  const Eigen::ArrayXd diff = (reference - probe).abs();
  const double max_abs = diff.maxCoeff();
  if (denom == 0.0) {
    const double inf = std::numeric_limits<double>::infinity();
    return FieldError{max_abs == 0.0 ? 0.0 : inf, max_abs == 0.0 ? 0.0 : inf};
  }
  const double rms = std::sqrt(diff.square().mean());
  return FieldError{max_abs / denom, rms / denom};
}

void require(bool ok, const char* field, const std::string& message) {
  if (!ok) {
    throw ValidationError({{ViolationCode::GridMalformed, field, message}});
  }
}

}  // namespace

double CompareReport::worst_max_rel() const {
  return std::max({displacement.max_rel, strain.max_rel, stress.max_rel,
                   interface_shear.max_rel});
}

namespace detail {

Eigen::ArrayXd solve_tridiagonal(const Eigen::ArrayXd& lower,
                                 const Eigen::ArrayXd& diag,
                                 const Eigen::ArrayXd& upper,
                                 const Eigen::ArrayXd& rhs) {
  const Eigen::Index n = diag.size();
  Eigen::ArrayXd c_prime(n);
  Eigen::ArrayXd d_prime(n);
  Eigen::ArrayXd out(n);

  double pivot = diag(0);
  if (pivot == 0.0) throw SingularSystem("zero pivot in row 0");
  c_prime(0) = upper(0) / pivot;
  d_prime(0) = rhs(0) / pivot;
  for (Eigen::Index i = 1; i < n; ++i) {
    pivot = diag(i) - lower(i) * c_prime(i - 1);
    if (pivot == 0.0 || !std::isfinite(pivot)) {
      std::ostringstream msg;
      msg << "degenerate pivot in row " << i;
      throw SingularSystem(msg.str());
    }
    c_prime(i) = upper(i) / pivot;
    d_prime(i) = (rhs(i) - lower(i) * d_prime(i - 1)) / pivot;
  }
  out(n - 1) = d_prime(n - 1);
  for (Eigen::Index i = n - 2; i >= 0; --i) {
    out(i) = d_prime(i) - c_prime(i) * out(i + 1);
  }
  return out;
}

}  // namespace detail

FdSolution solve_fd(const CaseDefinition& def, Component component,
                    Eigen::Index node_count) {
  validate_case(def);
  require(component != Component::Combined, "oracle.component",
          "solve Thermal and Mechanical separately; Combined is their sum");
  {
    std::ostringstream msg;
    msg << "node count must be >= 11 and odd, got " << node_count;
    require(node_count >= 11 && node_count % 2 == 1, "oracle.node_count",
            msg.str());
  }

  const double length = def.section.length;
  const double h = length / static_cast<double>(node_count - 1);
  const double psi =
      compute_psi(def.section, def.material, def.restraints);
  const double g = psi * psi * h * h;
  const double beta =
      def.restraints.head_stiffness / def.material.elastic_modulus;
  const double s0 = free_strain(def, component);
  const Eigen::Index n = node_count;

  Eigen::ArrayXd lower = Eigen::ArrayXd::Ones(n);
  Eigen::ArrayXd diag = Eigen::ArrayXd::Constant(n, -(2.0 + g));
  Eigen::ArrayXd upper = Eigen::ArrayXd::Ones(n);
  Eigen::ArrayXd rhs = Eigen::ArrayXd::Zero(n);

  // Tip row. End-bearing pins the node; fully-floating prescribes the
  // stress-free slope u'(0) = s0 through a ghost node.
  if (def.restraints.tip == TipCondition::EndBearing) {
    diag(0) = 1.0;
    upper(0) = 0.0;
    rhs(0) = 0.0;
  } else {
    upper(0) = 2.0;
    rhs(0) = 2.0 * h * s0;
  }

  // Head row. Thermal: E*(u'(L) - s0) = -k_h*u(L). Mechanical: E*u'(L) = F/A.
  if (component == Component::Thermal) {
    lower(n - 1) = 2.0;
    diag(n - 1) = -(2.0 + g + 2.0 * h * beta);
    rhs(n - 1) = -2.0 * h * s0;
  } else {
    lower(n - 1) = 2.0;
    rhs(n - 1) = -2.0 * h * def.load.head_force /
                 (def.section.area * def.material.elastic_modulus);
  }

  FdSolution out;
  out.grid = build_uniform_grid(length, n);
  out.displacement = detail::solve_tridiagonal(lower, diag, upper, rhs);
  out.component = component;
  out.definition = def;
  out.definition.grid = out.grid;

  // Strain by second-order differencing, one-sided at the ends.
  const auto& u = out.displacement;
  Eigen::ArrayXd eps(n);
  eps.segment(1, n - 2) =
      (u.tail(n - 2) - u.head(n - 2)) / (2.0 * h);
  eps(0) = (-3.0 * u(0) + 4.0 * u(1) - u(2)) / (2.0 * h);
  eps(n - 1) = (3.0 * u(n - 1) - 4.0 * u(n - 2) + u(n - 3)) / (2.0 * h);
  out.strain = eps;
  out.stress = def.material.elastic_modulus * (eps - s0);
  out.interface_shear = def.restraints.shear_stiffness * u;
  return out;
}

ConvergenceReport convergence_study(
    const CaseDefinition& def, Component component,
    const std::vector<Eigen::Index>& node_counts) {
  {
    std::ostringstream msg;
    msg << "need at least 3 node counts, got " << node_counts.size();
    require(node_counts.size() >= 3, "oracle.node_counts", msg.str());
  }
  for (std::size_t i = 1; i < node_counts.size(); ++i) {
    const double ratio = static_cast<double>(node_counts[i] - 1) /
                         static_cast<double>(node_counts[i - 1] - 1);
    std::ostringstream msg;
    msg << "counts must refine by roughly 2x per step, got "
        << node_counts[i - 1] << " -> " << node_counts[i];
    require(ratio >= 1.5 && ratio <= 3.0, "oracle.node_counts", msg.str());
  }

  ConvergenceReport report;
  report.node_counts = node_counts;
  for (const Eigen::Index n : node_counts) {
    const FdSolution fd = solve_fd(def, component, n);
    CaseDefinition on_fd_grid = def;
    on_fd_grid.grid = fd.grid;
    const ResponseProfile reference = component == Component::Thermal
                                          ? thermal_profile(on_fd_grid)
                                          : mechanical_profile(on_fd_grid);
    report.error_norms.push_back(
        field_error(reference.displacement, fd.displacement).max_rel);
  }

  double order_sum = 0.0;
  for (std::size_t i = 1; i < report.error_norms.size(); ++i) {
    const double refinement = static_cast<double>(node_counts[i] - 1) /
                              static_cast<double>(node_counts[i - 1] - 1);
    order_sum += std::log(report.error_norms[i - 1] / report.error_norms[i]) /
                 std::log(refinement);
  }
  report.observed_order =
      order_sum / static_cast<double>(report.error_norms.size() - 1);
  return report;
}

CompareReport compare(const ResponseProfile& analytic, const FdSolution& fd) {
  if (analytic.component != fd.component) {
    throw CaseMismatch("compare: profiles solve different components");
  }
  const CaseDefinition& a = analytic.definition;
  const CaseDefinition& b = fd.definition;
  if (!(a.section == b.section) || !(a.material == b.material) ||
      !(a.restraints == b.restraints) || !(a.load == b.load)) {
    throw CaseMismatch("compare: profiles solve different cases");
  }

  const Eigen::Index na = analytic.grid.x.size();
  const Eigen::Index nf = fd.grid.x.size();
  if (nf < na || (nf - 1) % (na - 1) != 0) {
    std::ostringstream msg;
    msg << "compare: fd grid (" << nf << " nodes) does not refine the "
        << "analytic grid (" << na << " nodes)";
    throw CaseMismatch(msg.str());
  }
  const Eigen::Index stride = (nf - 1) / (na - 1);
  for (Eigen::Index i = 0; i < na; ++i) {
    if (std::abs(fd.grid.x(i * stride) - analytic.grid.x(i)) >
        1e-9 * a.section.length) {
      throw CaseMismatch("compare: grids share no common nodes");
    }
  }

  const auto at_shared = [&](const Eigen::ArrayXd& field) {
    Eigen::ArrayXd shared(na);
    for (Eigen::Index i = 0; i < na; ++i) shared(i) = field(i * stride);
    return shared;
  };

  CompareReport report;
  report.displacement =
      field_error(analytic.displacement, at_shared(fd.displacement));
  report.strain = field_error(analytic.strain, at_shared(fd.strain));
  report.stress = field_error(analytic.stress, at_shared(fd.stress));
  report.interface_shear =
      field_error(analytic.interface_shear, at_shared(fd.interface_shear));
  return report;
}

}  // namespace epile::oracle
