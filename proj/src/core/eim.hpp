#ifndef QMOR_EIM_HPP
#define QMOR_EIM_HPP

#include <Eigen/Dense>

#include <vector>

#include "field.hpp"
#include "fom.hpp"

namespace qmor {

/// Which nonlinearity an interpolation component approximates.
enum class EimTarget {
  G,  // alpha phi^2 - phi^3   (gradient-flow forcing)
  H,  // -alpha/3 phi^3 + 1/4 phi^4   (energy integrand)
};

std::string_view to_string(EimTarget t);

double eval_nonlinearity(EimTarget t, double phi, double alpha);

/// One training snapshot: the nonlinearity of a converged branch,
/// sampled on the physical grid.
struct EimSnapshot {
  double epsilon = 0.0;
  double alpha = 0.0;
  Eigen::VectorXd values;
};

/// Greedy interpolation component: basis vectors, collocation points and
/// the unit-lower-triangular point-evaluation system. Interpolating the
/// nonlinearity then costs O(M^2) independent of the grid size.
struct EimComponent {
  EimTarget target = EimTarget::G;
  StateLabel state = StateLabel::QC;
  int grid_modes = 0;  // N_H the basis was trained on

  Eigen::MatrixXd basis;          // full-grid-size x M, column m = basis m
  std::vector<std::size_t> points;  // M collocation indices
  Eigen::MatrixXd interp;         // M x M unit lower triangular, interp(i,j) = basis_j(x_i)
  std::vector<std::array<double, 2>> selected_params;  // (epsilon, alpha) per basis
  std::vector<double> training_errors;  // worst-case relative error after m bases

  int size() const { return static_cast<int>(points.size()); }

  /// Solve interp * c = point_values by forward substitution.
  Eigen::VectorXd coefficients(const Eigen::VectorXd& point_values) const;

  /// Full-grid interpolant for given point values.
  Eigen::VectorXd interpolate(const Eigen::VectorXd& point_values) const;
};

/// Thrown when the greedy selects an already-used collocation point,
/// i.e. the snapshot set cannot support another basis function.
struct EimDegeneracy : std::runtime_error {
  int iteration;
  EimDegeneracy(int it, const std::string& what) : std::runtime_error(what), iteration(it) {}
};

/// Greedy construction. Snapshot selection maximizes the relative 2-norm
/// interpolation error (the reported error metric); point selection takes
/// the residual's largest-magnitude entry. Ties break to the lowest index,
/// which makes the construction deterministic and nested in M.
EimComponent train_eim(EimTarget target, StateLabel state, int grid_modes,
                       const std::vector<EimSnapshot>& snapshots, int m_max, double tol);

}  // namespace qmor

#endif
