#include "fom.hpp"

#include <fftw3.h>

#include <chrono>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace qmor {

void SolverConfig::validate() const {
  if (dt <= 0.0 || tol <= 0.0 || max_time <= 0.0 || pti_delta <= 0.0 || divergence_guard <= 0.0)
    throw std::invalid_argument("SolverConfig: dt, tol, max_time, pti_delta, divergence_guard must be positive");
  if (pti_stride < 1) throw std::invalid_argument("SolverConfig: pti_stride must be >= 1");
}

std::string_view to_string(BranchOutcome o) {
  switch (o) {
    case BranchOutcome::Converged: return "Converged";
    case BranchOutcome::PhaseTransitioned: return "PhaseTransitioned";
    case BranchOutcome::MaxIterations: return "MaxIterations";
  }
  return "?";
}

BranchOutcome branch_outcome_from_string(std::string_view s) {
  if (s == "Converged") return BranchOutcome::Converged;
  if (s == "PhaseTransitioned") return BranchOutcome::PhaseTransitioned;
  if (s == "MaxIterations") return BranchOutcome::MaxIterations;
  throw std::invalid_argument("unknown branch outcome: " + std::string(s));
}

FourierField seed_field(const SpectralGrid& grid, const SeedState& seed) {
  FourierField f(grid);
  for (const ModeIndex& h : seed.modes()) {
    if (!grid.contains(h))
      throw std::invalid_argument("seed_field: prominent mode outside grid range (N_H too small)");
    f.coeff[grid.flat_index(h)] = std::complex<double>(seed.amplitude, 0.0);
  }
  return f;
}

namespace {

void require_finite(const FourierField& f, long iteration, const char* where) {
  for (std::size_t i = 0; i < f.coeff.size(); ++i) {
    const auto& c = f.coeff[i];
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw NumericalOverflow(iteration, i,
                              std::string(where) + ": non-finite coefficient at mode index " +
                                  std::to_string(i));
  }
}

}  // namespace

FourierField step(const FourierField& f, const ModelParameters& p, double dt) {
  if (!f.grid) throw std::invalid_argument("step: field has no grid");
  require_finite(f, 0, "step");
  const SpectralGrid& grid = *f.grid;
  auto plans = TransformPlans::get(grid);
  const std::size_t n = grid.total_modes();

  std::vector<std::complex<double>> phys(n);
  plans->backward_c2c(f.coeff.data(), phys.data());
  // Nonlinearity on the real samples; the imaginary residue is discarded.
  for (std::size_t i = 0; i < n; ++i) {
    const double v = phys[i].real();
    phys[i] = std::complex<double>(p.alpha * v * v - v * v * v, 0.0);
  }
  FourierField out(grid);
  plans->forward_c2c(phys.data(), out.coeff.data());

  const std::vector<double> mult = linear_multiplier(grid, p.penalty_c, p.q);
  const double inv_dt = 1.0 / dt;
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> rhs = (inv_dt + p.epsilon) * f.coeff[i] + scale * out.coeff[i];
    out.coeff[i] = rhs / (inv_dt + mult[i]);
  }
  return out;
}

int phase_transition_indicator(const FourierField& a, const FourierField& b, double delta) {
  if (a.coeff.size() != b.coeff.size())
    throw std::invalid_argument("phase_transition_indicator: fields on different grids");
  for (std::size_t i = 0; i < a.coeff.size(); ++i)
    if ((std::abs(a.coeff[i]) > delta) != (std::abs(b.coeff[i]) > delta)) return 1;
  return 0;
}

double free_energy(const FourierField& f, const ModelParameters& p) {
  if (!f.grid) throw std::invalid_argument("free_energy: field has no grid");
  require_finite(f, 0, "free_energy");
  const SpectralGrid& grid = *f.grid;
  const std::vector<double> mult = linear_multiplier(grid, p.penalty_c, p.q);

  double quad = 0.0;
  for (std::size_t i = 0; i < f.coeff.size(); ++i)
    quad += (mult[i] - p.epsilon) * std::norm(f.coeff[i]);
  quad *= 0.5;

  const PhysicalField phys = to_physical(f);
  double nl = 0.0;
  for (double v : phys.values) {
    const double v3 = v * v * v;
    nl += -p.alpha / 3.0 * v3 + 0.25 * v3 * v;
  }
  nl /= static_cast<double>(phys.values.size());

  const double e = quad + nl;
  if (!std::isfinite(e)) throw NumericalOverflow(0, 0, "free_energy: non-finite result");
  return e;
}

// ---------------------------------------------------------------------------
// Branch solve on the half spectrum. The physical field is real, so only
// the h4 >= 0 slab is carried; slabs h4 in {0, -N_H/2} contain both
// members of each conjugate pair and enter norms with weight 1, all other
// slabs with weight 2.

namespace {

struct HalfWorkspace {
  const SpectralGrid& grid;
  std::shared_ptr<TransformPlans> plans;
  std::size_t half = 0;
  std::size_t full = 0;
  int n = 0;
  std::size_t hlast = 0;

  std::vector<double> mult_half;   // A(H) on the half lattice
  std::vector<double> weight;      // 1 or 2 per half entry
  fftw_complex* spec = nullptr;    // current state
  fftw_complex* next = nullptr;    // scratch for the stepped state
  fftw_complex* scratch = nullptr; // c2r input (destroyed)
  double* phys = nullptr;

  HalfWorkspace(const SpectralGrid& g, const ModelParameters& p)
      : grid(g), plans(TransformPlans::get(g)) {
    n = g.modes_per_dim();
    full = g.total_modes();
    hlast = static_cast<std::size_t>(n) / 2 + 1;
    half = plans->half_size();
    spec = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * half));
    next = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * half));
    scratch = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * half));
    phys = static_cast<double*>(fftw_malloc(sizeof(double) * full));
    if (!spec || !next || !scratch || !phys) throw std::bad_alloc();

    const std::vector<double> mult = linear_multiplier(g, p.penalty_c, p.q);
    mult_half.resize(half);
    weight.resize(half);
    const std::size_t nh = static_cast<std::size_t>(n);
    std::size_t k = 0;
    for (std::size_t row = 0; row < full / nh; ++row)
      for (std::size_t i4 = 0; i4 < hlast; ++i4, ++k) {
        mult_half[k] = mult[row * nh + i4];
        weight[k] = (i4 == 0 || i4 == nh / 2) ? 1.0 : 2.0;
      }
  }
  ~HalfWorkspace() {
    fftw_free(spec);
    fftw_free(next);
    fftw_free(scratch);
    fftw_free(phys);
  }

  std::complex<double>* as_c(fftw_complex* x) { return reinterpret_cast<std::complex<double>*>(x); }

  void load(const FourierField& f) { full_to_half(grid, f.coeff.data(), as_c(spec)); }

  FourierField unload() {
    FourierField f(grid);
    half_to_full(grid, as_c(spec), f.coeff.data());
    return f;
  }

  // One semi-implicit step from `spec` into `next`.
  void advance(const ModelParameters& p, double dt) {
    std::memcpy(scratch, spec, sizeof(fftw_complex) * half);
    plans->backward_c2r(as_c(scratch), phys);
    for (std::size_t i = 0; i < full; ++i) {
      const double v = phys[i];
      phys[i] = p.alpha * v * v - v * v * v;
    }
    plans->forward_r2c(phys, as_c(next));
    const double inv_dt = 1.0 / dt;
    const double scale = 1.0 / static_cast<double>(full);
    auto* s = as_c(spec);
    auto* m = as_c(next);
    for (std::size_t i = 0; i < half; ++i)
      m[i] = ((inv_dt + p.epsilon) * s[i] + scale * m[i]) / (inv_dt + mult_half[i]);
  }

  void commit() { std::swap(spec, next); }

  // ||next - spec||_2 over the full lattice.
  double increment_norm() const {
    const auto* a = reinterpret_cast<const std::complex<double>*>(spec);
    const auto* b = reinterpret_cast<const std::complex<double>*>(next);
    double s = 0.0;
    for (std::size_t i = 0; i < half; ++i) s += weight[i] * std::norm(b[i] - a[i]);
    return std::sqrt(s);
  }

  std::vector<bool> support(double delta) const {
    const auto* a = reinterpret_cast<const std::complex<double>*>(spec);
    std::vector<bool> mask(half);
    for (std::size_t i = 0; i < half; ++i) mask[i] = std::abs(a[i]) > delta;
    return mask;
  }

  bool support_equals(const std::vector<bool>& ref, double delta) const {
    const auto* a = reinterpret_cast<const std::complex<double>*>(spec);
    for (std::size_t i = 0; i < half; ++i)
      if ((std::abs(a[i]) > delta) != ref[i]) return false;
    return true;
  }

  // Largest |coefficient|; also reports non-finite entries.
  void check_health(double guard, long iteration) const {
    const auto* a = reinterpret_cast<const std::complex<double>*>(spec);
    const std::size_t nh = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < half; ++i) {
      const double mag = std::abs(a[i]);
      if (!std::isfinite(mag) || mag > guard) {
        const std::size_t full_idx = i / hlast * nh + i % hlast;
        throw NumericalOverflow(iteration, full_idx,
                                "solve_branch: trajectory diverged at mode index " +
                                    std::to_string(full_idx));
      }
    }
  }
};

}  // namespace

Branch solve_branch(const SpectralGrid& grid, const ModelParameters& p, const SeedState& seed,
                    const SolverConfig& cfg, const BranchObserver& observer) {
  cfg.validate();
  if (seed.amplitude > 0.0 && cfg.tol >= seed.amplitude)
    throw std::invalid_argument("solve_branch: tol must be below the seed amplitude");
  const auto t_start = std::chrono::steady_clock::now();

  HalfWorkspace ws(grid, p);
  ws.load(seed_field(grid, seed));
  const std::vector<bool> seed_support = ws.support(cfg.pti_delta);

  Branch br;
  br.seed = seed;
  br.outcome = BranchOutcome::MaxIterations;

  const long max_steps = static_cast<long>(std::floor(cfg.max_time / cfg.dt));
  long iter = 0;
  while (iter < max_steps) {
    const bool checkpoint = ((iter + 1) % cfg.pti_stride == 0) || (iter + 1 == max_steps);
    ws.advance(p, cfg.dt);
    const double res = checkpoint ? ws.increment_norm() : -1.0;
    ws.commit();
    ++iter;
    if (!checkpoint) continue;

    ws.check_health(cfg.divergence_guard, iter);
    if (observer) {
      const FourierField snap = ws.unload();
      observer(iter, static_cast<double>(iter) * cfg.dt, snap);
    }
    if (!ws.support_equals(seed_support, cfg.pti_delta)) {
      br.outcome = BranchOutcome::PhaseTransitioned;
      break;
    }
    if (res < cfg.tol) {
      br.outcome = BranchOutcome::Converged;
      break;
    }
  }

  br.iterations = iter;
  br.field = ws.unload();
  if (br.outcome == BranchOutcome::Converged) br.energy = free_energy(br.field, p);
  br.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return br;
}

PhaseSteadySolutionSet solve_all_branches(const SpectralGrid& grid, const ModelParameters& p,
                                          const SolverConfig& cfg, double seed_amplitude,
                                          std::span<const StateLabel> states) {
  PhaseSteadySolutionSet pss;
  pss.params = p;
  for (StateLabel s : states) {
    try {
      Branch br = solve_branch(grid, p, SeedState{s, seed_amplitude}, cfg);
      if (br.outcome == BranchOutcome::Converged) pss.branches.emplace(s, std::move(br));
    } catch (const std::exception& e) {
      pss.failures.emplace(s, e.what());
    }
  }
  return pss;
}

}  // namespace qmor
