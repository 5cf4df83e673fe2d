#ifndef QMOR_FIELD_HPP
#define QMOR_FIELD_HPP

#include <complex>
#include <memory>
#include <vector>

#include "projection.hpp"

namespace qmor {

class SpectralGrid;

/// Fourier coefficients phi_hat(H) over the full 4D lattice, stored in the
/// grid's flat order. The transform convention is
///   phi(x) = sum_H phi_hat(H) exp(i H.x),
/// so single-mode coefficients are O(1) and the forward (physical ->
/// spectral) transform carries the 1/N factor.
struct FourierField {
  const SpectralGrid* grid = nullptr;
  std::vector<std::complex<double>> coeff;

  explicit FourierField(const SpectralGrid& g)
      : grid(&g), coeff(g.total_modes(), std::complex<double>(0.0, 0.0)) {}
  FourierField() = default;

  std::size_t size() const { return coeff.size(); }
  double norm2() const;      // plain 2-norm of the coefficient vector
  double max_abs() const;
  bool all_finite() const;
};

/// Real samples of phi on the uniform collocation grid of the 4-torus,
/// same flat ordering as the spectral storage.
struct PhysicalField {
  const SpectralGrid* grid = nullptr;
  std::vector<double> values;

  explicit PhysicalField(const SpectralGrid& g) : grid(&g), values(g.total_modes(), 0.0) {}
  PhysicalField() = default;

  std::size_t size() const { return values.size(); }
};

/// Inverse transform (spectral -> physical samples), O(N log N).
/// The imaginary residue of Hermitian input is dropped; it stays below
/// 1e-10 for fields produced by the solver.
PhysicalField to_physical(const FourierField& f);

/// Forward transform (physical -> spectral), scaled by 1/N so that
/// to_physical(to_spectral(p)) == p up to rounding.
FourierField to_spectral(const PhysicalField& p);

/// Shared, thread-safe FFT plan cache for a grid (complex-to-complex and
/// the half-spectrum real pair used by the solver fast path).
class TransformPlans {
 public:
  static std::shared_ptr<TransformPlans> get(const SpectralGrid& grid);
  ~TransformPlans();

  // c2c on the full lattice; in and out must be distinct arrays.
  void backward_c2c(const std::complex<double>* in, std::complex<double>* out) const;
  void forward_c2c(const std::complex<double>* in, std::complex<double>* out) const;

  // half-spectrum pair; spectral arrays have n^3 (n/2+1) entries and c2r
  // destroys its input.
  std::size_t half_size() const { return half_size_; }
  void backward_c2r(std::complex<double>* in_destroyed, double* out) const;
  void forward_r2c(double* in, std::complex<double>* out) const;

 private:
  explicit TransformPlans(int n);
  int n_ = 0;
  std::size_t full_size_ = 0;
  std::size_t half_size_ = 0;
  void* plan_fwd_ = nullptr;   // fftw_plan, kept opaque here
  void* plan_bwd_ = nullptr;
  void* plan_r2c_ = nullptr;
  void* plan_c2r_ = nullptr;
};

/// Expand a half-spectrum array (last dimension 0..n/2) to the full
/// lattice using Hermitian symmetry, and the reverse restriction.
void half_to_full(const SpectralGrid& grid, const std::complex<double>* half,
                  std::complex<double>* full);
void full_to_half(const SpectralGrid& grid, const std::complex<double>* full,
                  std::complex<double>* half);

}  // namespace qmor

#endif
