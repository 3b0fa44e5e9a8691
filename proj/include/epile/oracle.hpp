#pragma once

#include "epile/analytic.hpp"
#include "epile/model.hpp"

#include <stdexcept>
#include <vector>

// Finite-difference cross-check for the closed forms. The governing ODE
// u'' = psi^2 * u is discretized with second-order central differences on a
// uniform grid; derivative boundary conditions go through ghost nodes so the
// whole scheme stays O(h^2). The solver never touches the closed-form
// expressions; agreement between the two is the validation gate.

namespace epile::oracle {

struct FdSolution {
  Grid grid;
  Eigen::ArrayXd displacement;
  Eigen::ArrayXd strain;
  Eigen::ArrayXd stress;
  Eigen::ArrayXd interface_shear;
  Component component;  // Thermal or Mechanical only
  CaseDefinition definition;  // grid replaced by the solver's own
};

struct FieldError {
  double max_rel;  // max |analytic - fd| / max |analytic|
  double rms_rel;  // rms of the same differences, same normalization
};

struct CompareReport {
  FieldError displacement;
  FieldError strain;
  FieldError stress;
  FieldError interface_shear;

  double worst_max_rel() const;
};

struct ConvergenceReport {
  std::vector<Eigen::Index> node_counts;
  std::vector<double> error_norms;  // displacement max-norm vs closed form
  double observed_order;            // mean log-ratio under grid refinement
};

class SingularSystem : public std::runtime_error {
 public:
  explicit SingularSystem(const std::string& what)
      : std::runtime_error(what) {}
};

// Solves the boundary-value problem for one load component on node_count
// uniformly spaced nodes. node_count must be >= 11 and odd (keeps a midpoint
// node so symmetry checks stay exact).
FdSolution solve_fd(const CaseDefinition& def, Component component,
                    Eigen::Index node_count);

// Solves at each node count and measures the displacement error against the
// closed form evaluated on the same nodes. Needs >= 3 counts with spacing
// roughly halving step to step.
ConvergenceReport convergence_study(const CaseDefinition& def,
                                    Component component,
                                    const std::vector<Eigen::Index>& node_counts);

// Per-field error norms at the shared nodes. The fd grid must refine the
// analytic grid (node counts n_fd - 1 divisible by n_a - 1) and both must
// solve the same case and component.
CompareReport compare(const ResponseProfile& analytic, const FdSolution& fd);

namespace detail {

// Thomas elimination for a tridiagonal system. lower(0) and upper(n-1) are
// ignored. Throws SingularSystem on a vanishing pivot.
Eigen::ArrayXd solve_tridiagonal(const Eigen::ArrayXd& lower,
                                 const Eigen::ArrayXd& diag,
                                 const Eigen::ArrayXd& upper,
                                 const Eigen::ArrayXd& rhs);

}  // namespace detail

}  // namespace epile::oracle
