#include "eim.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmor {

std::string_view to_string(EimTarget t) { return t == EimTarget::G ? "g" : "h"; }

double eval_nonlinearity(EimTarget t, double phi, double alpha) {
  const double p2 = phi * phi;
  const double p3 = p2 * phi;
  return t == EimTarget::G ? alpha * p2 - p3 : -alpha / 3.0 * p3 + 0.25 * p3 * phi;
}

Eigen::VectorXd EimComponent::coefficients(const Eigen::VectorXd& point_values) const {
  const int m = size();
  if (point_values.size() != m)
    throw std::invalid_argument("EimComponent::coefficients: expected " + std::to_string(m) +
                                " point values, got " + std::to_string(point_values.size()));
  Eigen::VectorXd c(m);
  for (int i = 0; i < m; ++i) {
    double acc = point_values(i);
    for (int j = 0; j < i; ++j) acc -= interp(i, j) * c(j);
    c(i) = acc;  // unit diagonal
  }
  return c;
}

Eigen::VectorXd EimComponent::interpolate(const Eigen::VectorXd& point_values) const {
  return basis * coefficients(point_values);
}

EimComponent train_eim(EimTarget target, StateLabel state, int grid_modes,
                       const std::vector<EimSnapshot>& snapshots, int m_max, double tol) {
  if (snapshots.empty()) throw std::invalid_argument("train_eim: no snapshots");
  if (m_max < 1) throw std::invalid_argument("train_eim: m_max must be >= 1");
  const Eigen::Index n = snapshots.front().values.size();
  for (const auto& s : snapshots)
    if (s.values.size() != n) throw std::invalid_argument("train_eim: snapshot size mismatch");

  EimComponent comp;
  comp.target = target;
  comp.state = state;
  comp.grid_modes = grid_modes;
  comp.basis.resize(n, 0);
  comp.interp.resize(0, 0);

  const std::size_t s_count = snapshots.size();
  std::vector<double> snap_norm(s_count);
  for (std::size_t s = 0; s < s_count; ++s) snap_norm[s] = snapshots[s].values.norm();

  // First basis: the snapshot with the largest max-norm, normalized at its
  // own peak point.
  std::size_t first = 0;
  double best = -1.0;
  for (std::size_t s = 0; s < s_count; ++s) {
    const double m = snapshots[s].values.cwiseAbs().maxCoeff();
    if (m > best) {
      best = m;
      first = s;
    }
  }
  {
    Eigen::Index peak = 0;
    snapshots[first].values.cwiseAbs().maxCoeff(&peak);
    const double pivot = snapshots[first].values(peak);
    if (pivot == 0.0) throw EimDegeneracy(1, "train_eim: first snapshot is identically zero");
    comp.basis.conservativeResize(Eigen::NoChange, 1);
    comp.basis.col(0) = snapshots[first].values / pivot;
    comp.points.push_back(static_cast<std::size_t>(peak));
    comp.interp.resize(1, 1);
    comp.interp(0, 0) = 1.0;
    comp.selected_params.push_back({snapshots[first].epsilon, snapshots[first].alpha});
  }

  // Grow: each sweep measures the current interpolant on every snapshot,
  // records the worst relative error and enriches with that snapshot's
  // residual unless the stopping rule fires.
  while (true) {
    const int m = comp.size();
    double worst = -1.0;
    std::size_t worst_idx = 0;
    Eigen::VectorXd worst_residual;
    for (std::size_t s = 0; s < s_count; ++s) {
      Eigen::VectorXd pv(m);
      for (int i = 0; i < m; ++i) pv(i) = snapshots[s].values(static_cast<Eigen::Index>(comp.points[static_cast<std::size_t>(i)]));
      Eigen::VectorXd residual = snapshots[s].values - comp.interpolate(pv);
      const double denom = snap_norm[s] > 0.0 ? snap_norm[s] : 1.0;
      const double err = residual.norm() / denom;
      if (err > worst) {
        worst = err;
        worst_idx = s;
        worst_residual = std::move(residual);
      }
    }
    comp.training_errors.push_back(worst);
    if (worst < tol || m >= m_max) break;

    Eigen::Index peak = 0;
    worst_residual.cwiseAbs().maxCoeff(&peak);
    const std::size_t pt = static_cast<std::size_t>(peak);
    if (std::find(comp.points.begin(), comp.points.end(), pt) != comp.points.end())
      throw EimDegeneracy(m + 1, "train_eim: duplicate collocation point at iteration " +
                                     std::to_string(m + 1) + " (degenerate snapshot set)");
    const double pivot = worst_residual(peak);
    if (pivot == 0.0)
      throw EimDegeneracy(m + 1, "train_eim: zero residual pivot at iteration " +
                                     std::to_string(m + 1) + " (degenerate snapshot set)");

    comp.basis.conservativeResize(Eigen::NoChange, m + 1);
    comp.basis.col(m) = worst_residual / pivot;
    comp.points.push_back(pt);
    comp.selected_params.push_back({snapshots[worst_idx].epsilon, snapshots[worst_idx].alpha});

    Eigen::MatrixXd interp(m + 1, m + 1);
    interp.setZero();
    interp.topLeftCorner(m, m) = comp.interp;
    for (int j = 0; j <= m; ++j) interp(m, j) = comp.basis(static_cast<Eigen::Index>(pt), j);
    for (int i = 0; i < m; ++i)
      interp(i, m) = comp.basis(static_cast<Eigen::Index>(comp.points[static_cast<std::size_t>(i)]), m);
    comp.interp = std::move(interp);
  }
  return comp;
}

}  // namespace qmor
