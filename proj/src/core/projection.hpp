#ifndef QMOR_PROJECTION_HPP
#define QMOR_PROJECTION_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace qmor {

/// Geometry of the higher-dimensional representation of a 12-fold
/// quasiperiodic field: a 2x4 projection matrix maps integer lattice
/// vectors of the 4-torus onto reciprocal vectors of the plane.
struct ProjectionSetup {
  static constexpr int physical_dim = 2;  // d
  static constexpr int lifted_dim = 4;    // n

  /// Row-major 2x4 projection matrix.
  std::array<double, 8> s;
  /// Second length scale, q = 2 cos(pi/12); q^2 = 2 + sqrt(3).
  double q;

  /// The i-th primitive reciprocal vector p*_i = S e_i.
  std::array<double, 2> primitive_vector(int i) const {
    return {s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(4 + i)]};
  }

  /// Canonical 12-fold setup.
  static ProjectionSetup twelve_fold();
};

/// Integer lattice vector of the lifted reciprocal space.
using ModeIndex = std::array<int, 4>;

/// Discrete 4D reciprocal lattice with N_H modes per dimension.
///
/// Storage is row-major over (h1,h2,h3,h4) in FFT order: array position
/// i in [0,N_H) along a dimension carries frequency i for i < N_H/2 and
/// i - N_H otherwise, so frequencies span [-N_H/2, N_H/2).
class SpectralGrid {
 public:
  SpectralGrid(const ProjectionSetup& setup, int modes_per_dim);

  int modes_per_dim() const { return n_h_; }
  std::size_t total_modes() const { return total_; }
  const ProjectionSetup& setup() const { return setup_; }

  /// |S H|^2 for the mode at flat position `idx`.
  double k_squared(std::size_t idx) const { return k_squared_[idx]; }
  const std::vector<double>& k_squared() const { return k_squared_; }

  /// Flat position -> integer lattice vector.
  ModeIndex mode(std::size_t idx) const;
  /// Integer lattice vector -> flat position. The vector must satisfy
  /// h_i in [-N_H/2, N_H/2); use `contains` to check first.
  std::size_t flat_index(const ModeIndex& h) const;
  bool contains(const ModeIndex& h) const;

  /// Flat position of the negated mode (exact involution).
  std::size_t conjugate_index(std::size_t idx) const;

  /// Multiplier values sorted ascending (used for stability constants).
  const std::vector<double>& sorted_k_squared() const;

 private:
  ProjectionSetup setup_;
  int n_h_;
  std::size_t total_;
  std::vector<double> k_squared_;
  mutable std::vector<double> sorted_k_squared_;  // lazily built
};

/// Per-mode diagonal operator c (1 - |SH|^2)^2 (q^2 - |SH|^2)^2.
/// Exactly zero on the two resonant shells.
std::vector<double> linear_multiplier(const SpectralGrid& grid, double penalty_c, double q);

}  // namespace qmor

#endif
