#include "field.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qmor {

double FourierField::norm2() const {
  double s = 0.0;
  for (const auto& c : coeff) s += std::norm(c);
  return std::sqrt(s);
}

double FourierField::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeff) m = std::max(m, std::abs(c));
  return m;
}

bool FourierField::all_finite() const {
  for (const auto& c : coeff)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

namespace {
std::mutex plan_mutex;
std::map<int, std::weak_ptr<TransformPlans>> plan_cache;

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }
const fftw_complex* as_fftw(const std::complex<double>* p) {
  return reinterpret_cast<const fftw_complex*>(p);
}
}  // namespace

TransformPlans::TransformPlans(int n) : n_(n) {
  full_size_ = 1;
  for (int i = 0; i < 4; ++i) full_size_ *= static_cast<std::size_t>(n);
  half_size_ = full_size_ / static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) / 2 + 1);

  const int dims[4] = {n, n, n, n};
  // Scratch buffers are only used during planning.
  auto* cbuf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * full_size_));
  auto* cbuf2 = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * full_size_));
  auto* rbuf = static_cast<double*>(fftw_malloc(sizeof(double) * full_size_));
  auto* hbuf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * half_size_));
  if (!cbuf || !cbuf2 || !rbuf || !hbuf) throw std::bad_alloc();

  // FFTW_UNALIGNED keeps the new-array execute API valid for ordinary
  // vector storage; FFTW_ESTIMATE keeps planning deterministic.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plan_bwd_ = fftw_plan_dft(4, dims, cbuf, cbuf2, FFTW_BACKWARD, flags);
  plan_fwd_ = fftw_plan_dft(4, dims, cbuf, cbuf2, FFTW_FORWARD, flags);
  plan_r2c_ = fftw_plan_dft_r2c(4, dims, rbuf, hbuf, flags);
  plan_c2r_ = fftw_plan_dft_c2r(4, dims, hbuf, rbuf, flags);

  fftw_free(hbuf);
  fftw_free(rbuf);
  fftw_free(cbuf2);
  fftw_free(cbuf);
  if (!plan_bwd_ || !plan_fwd_ || !plan_r2c_ || !plan_c2r_)
    throw std::runtime_error("TransformPlans: FFTW planning failed");
}

TransformPlans::~TransformPlans() {
  std::lock_guard<std::mutex> lock(plan_mutex);
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_r2c_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_c2r_));
}

std::shared_ptr<TransformPlans> TransformPlans::get(const SpectralGrid& grid) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  const int n = grid.modes_per_dim();
  if (auto it = plan_cache.find(n); it != plan_cache.end())
    if (auto sp = it->second.lock()) return sp;
  auto sp = std::shared_ptr<TransformPlans>(new TransformPlans(n));
  plan_cache[n] = sp;
  return sp;
}

void TransformPlans::backward_c2c(const std::complex<double>* in, std::complex<double>* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_),
                   const_cast<fftw_complex*>(as_fftw(in)), as_fftw(out));
}

void TransformPlans::forward_c2c(const std::complex<double>* in, std::complex<double>* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_),
                   const_cast<fftw_complex*>(as_fftw(in)), as_fftw(out));
}

void TransformPlans::backward_c2r(std::complex<double>* in_destroyed, double* out) const {
  fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_c2r_), as_fftw(in_destroyed), out);
}

void TransformPlans::forward_r2c(double* in, std::complex<double>* out) const {
  fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_r2c_), in, as_fftw(out));
}

PhysicalField to_physical(const FourierField& f) {
  if (!f.grid) throw std::invalid_argument("to_physical: field has no grid");
  auto plans = TransformPlans::get(*f.grid);
  std::vector<std::complex<double>> tmp(f.coeff.size());
  plans->backward_c2c(f.coeff.data(), tmp.data());
  PhysicalField p(*f.grid);
  for (std::size_t i = 0; i < tmp.size(); ++i) p.values[i] = tmp[i].real();
  return p;
}

FourierField to_spectral(const PhysicalField& p) {
  if (!p.grid) throw std::invalid_argument("to_spectral: field has no grid");
  auto plans = TransformPlans::get(*p.grid);
  std::vector<std::complex<double>> tmp(p.values.size());
  for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] = std::complex<double>(p.values[i], 0.0);
  FourierField f(*p.grid);
  plans->forward_c2c(tmp.data(), f.coeff.data());
  const double scale = 1.0 / static_cast<double>(p.values.size());
  for (auto& c : f.coeff) c *= scale;
  return f;
}

void half_to_full(const SpectralGrid& grid, const std::complex<double>* half,
                  std::complex<double>* full) {
  const int n = grid.modes_per_dim();
  const std::size_t nh = static_cast<std::size_t>(n);
  const std::size_t hlast = nh / 2 + 1;
  for (std::size_t i1 = 0; i1 < nh; ++i1)
    for (std::size_t i2 = 0; i2 < nh; ++i2)
      for (std::size_t i3 = 0; i3 < nh; ++i3) {
        const std::size_t full_row = ((i1 * nh + i2) * nh + i3) * nh;
        const std::size_t half_row = ((i1 * nh + i2) * nh + i3) * hlast;
        for (std::size_t i4 = 0; i4 < hlast; ++i4) full[full_row + i4] = half[half_row + i4];
        const std::size_t m1 = i1 == 0 ? 0 : nh - i1;
        const std::size_t m2 = i2 == 0 ? 0 : nh - i2;
        const std::size_t m3 = i3 == 0 ? 0 : nh - i3;
        const std::size_t mirror_row = ((m1 * nh + m2) * nh + m3) * hlast;
        for (std::size_t i4 = hlast; i4 < nh; ++i4)
          full[full_row + i4] = std::conj(half[mirror_row + (nh - i4)]);
      }
}

void full_to_half(const SpectralGrid& grid, const std::complex<double>* full,
                  std::complex<double>* half) {
  const int n = grid.modes_per_dim();
  const std::size_t nh = static_cast<std::size_t>(n);
  const std::size_t hlast = nh / 2 + 1;
  for (std::size_t i1 = 0; i1 < nh; ++i1)
    for (std::size_t i2 = 0; i2 < nh; ++i2)
      for (std::size_t i3 = 0; i3 < nh; ++i3) {
        const std::size_t full_row = ((i1 * nh + i2) * nh + i3) * nh;
        const std::size_t half_row = ((i1 * nh + i2) * nh + i3) * hlast;
        for (std::size_t i4 = 0; i4 < hlast; ++i4) half[half_row + i4] = full[full_row + i4];
      }
}

}  // namespace qmor
