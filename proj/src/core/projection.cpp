#include "projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmor {

ProjectionSetup ProjectionSetup::twelve_fold() {
  ProjectionSetup p;
  const double pi = std::acos(-1.0);
  p.s = {1.0, std::cos(pi / 6.0), std::cos(pi / 3.0), 0.0,
         0.0, std::sin(pi / 6.0), std::sin(pi / 3.0), 1.0};
  p.q = 2.0 * std::cos(pi / 12.0);
  return p;
}

namespace {

// k^2 values within 1e-12 of a resonant shell are snapped onto it, so the
// multiplier vanishes identically there instead of leaving O(1e-30) dust.
double snap_shell(double k2, double q2) {
  if (std::abs(k2 - 1.0) < 1e-12) return 1.0;
  if (std::abs(k2 - q2) < 1e-12) return q2;
  if (std::abs(k2) < 1e-12) return 0.0;
  return k2;
}

}  // namespace

SpectralGrid::SpectralGrid(const ProjectionSetup& setup, int modes_per_dim)
    : setup_(setup), n_h_(modes_per_dim) {
  if (n_h_ < 4 || n_h_ % 2 != 0)
    throw std::invalid_argument("SpectralGrid: modes per dimension must be even and >= 4");
  total_ = 1;
  for (int i = 0; i < 4; ++i) total_ *= static_cast<std::size_t>(n_h_);

  const double q2 = setup_.q * setup_.q;
  k_squared_.resize(total_);
  const int n = n_h_;
  std::size_t idx = 0;
  for (int i1 = 0; i1 < n; ++i1) {
    const int h1 = i1 < n / 2 ? i1 : i1 - n;
    for (int i2 = 0; i2 < n; ++i2) {
      const int h2 = i2 < n / 2 ? i2 : i2 - n;
      for (int i3 = 0; i3 < n; ++i3) {
        const int h3 = i3 < n / 2 ? i3 : i3 - n;
        for (int i4 = 0; i4 < n; ++i4, ++idx) {
          const int h4 = i4 < n / 2 ? i4 : i4 - n;
          const double g1 = h1 * setup_.s[0] + h2 * setup_.s[1] + h3 * setup_.s[2] + h4 * setup_.s[3];
          const double g2 = h1 * setup_.s[4] + h2 * setup_.s[5] + h3 * setup_.s[6] + h4 * setup_.s[7];
          k_squared_[idx] = snap_shell(g1 * g1 + g2 * g2, q2);
        }
      }
    }
  }
}

ModeIndex SpectralGrid::mode(std::size_t idx) const {
  const int n = n_h_;
  ModeIndex h;
  for (int d = 3; d >= 0; --d) {
    int i = static_cast<int>(idx % static_cast<std::size_t>(n));
    idx /= static_cast<std::size_t>(n);
    h[static_cast<std::size_t>(d)] = i < n / 2 ? i : i - n;
  }
  return h;
}

std::size_t SpectralGrid::flat_index(const ModeIndex& h) const {
  const int n = n_h_;
  std::size_t idx = 0;
  for (int d = 0; d < 4; ++d) {
    const int hi = h[static_cast<std::size_t>(d)];
    const int i = hi >= 0 ? hi : hi + n;
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
  }
  return idx;
}

bool SpectralGrid::contains(const ModeIndex& h) const {
  for (int d = 0; d < 4; ++d) {
    const int hi = h[static_cast<std::size_t>(d)];
    if (hi < -n_h_ / 2 || hi >= n_h_ / 2) return false;
  }
  return true;
}

std::size_t SpectralGrid::conjugate_index(std::size_t idx) const {
  const int n = n_h_;
  std::size_t out = 0;
  std::size_t rem = idx;
  std::size_t stride = total_ / static_cast<std::size_t>(n);
  for (int d = 0; d < 4; ++d) {
    const std::size_t i = rem / stride;
    rem %= stride;
    const std::size_t neg = i == 0 ? 0 : static_cast<std::size_t>(n) - i;
    out = out * static_cast<std::size_t>(n) + neg;
    if (d < 3) stride /= static_cast<std::size_t>(n);
  }
  return out;
}

const std::vector<double>& SpectralGrid::sorted_k_squared() const {
  if (sorted_k_squared_.empty()) {
    sorted_k_squared_ = k_squared_;
    std::sort(sorted_k_squared_.begin(), sorted_k_squared_.end());
  }
  return sorted_k_squared_;
}

std::vector<double> linear_multiplier(const SpectralGrid& grid, double penalty_c, double q) {
  if (penalty_c <= 0.0) throw std::invalid_argument("linear_multiplier: penalty must be positive");
  const double q2 = q * q;
  std::vector<double> mult(grid.total_modes());
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const double k2 = grid.k_squared(i);
    const double a = 1.0 - k2;
    const double b = q2 - k2;
    mult[i] = penalty_c * a * a * b * b;
  }
  return mult;
}

}  // namespace qmor
