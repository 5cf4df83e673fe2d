#ifndef QMOR_FOM_HPP
#define QMOR_FOM_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "field.hpp"
#include "states.hpp"

namespace qmor {

// Full-order solver for the two-length-scale free energy
//
//   F[phi] = 1/2 sum_H (A(H) - eps) |phi_hat(H)|^2
//            + <-alpha/3 phi^3 + 1/4 phi^4>,
//   A(H)   = c (1 - |SH|^2)^2 (q^2 - |SH|^2)^2,
//
// evolved by the semi-implicit gradient-flow step
//
//   (1/dt + A) phi_hat' = (1/dt + eps) phi_hat + FFT(alpha phi^2 - phi^3)/N.
//
// Each of the five seeded branches runs until the coefficient increment
// drops below tol, the spectral signature changes (a phase transition),
// or the time horizon runs out.

struct ModelParameters {
  double penalty_c = 50.0;
  double q = 1.9318516525781366;  // 2 cos(pi/12)
  double epsilon = 0.0;
  double alpha = 0.0;
};

struct SolverConfig {
  double dt = 0.1;
  double tol = 1e-8;            // on ||phi_hat' - phi_hat||_2
  double max_time = 3000.0;     // T
  double pti_delta = 0.03;      // spectral-signature magnitude threshold
  int pti_stride = 10;          // steps between residual/PTI checks
  double divergence_guard = 1e6;

  void validate() const;
};

enum class BranchOutcome { Converged, PhaseTransitioned, MaxIterations };

std::string_view to_string(BranchOutcome o);
BranchOutcome branch_outcome_from_string(std::string_view s);

struct Branch {
  SeedState seed;
  FourierField field;   // state at stop time
  double energy = 0.0;  // only meaningful when Converged
  long iterations = 0;
  BranchOutcome outcome = BranchOutcome::MaxIterations;
  double wall_seconds = 0.0;
};

/// Converged, transition-free branches at one parameter point.
struct PhaseSteadySolutionSet {
  ModelParameters params;
  std::map<StateLabel, Branch> branches;
  std::map<StateLabel, std::string> failures;  // per-seed numerical errors

  bool has(StateLabel s) const { return branches.count(s) != 0; }
};

/// Thrown when a trajectory leaves the representable range.
struct NumericalOverflow : std::runtime_error {
  long iteration;
  std::size_t mode_index;
  NumericalOverflow(long it, std::size_t mode, const std::string& what)
      : std::runtime_error(what), iteration(it), mode_index(mode) {}
};

/// phi_hat = u0 on the prominent modes of the seed, zero elsewhere.
FourierField seed_field(const SpectralGrid& grid, const SeedState& seed);

/// One semi-implicit step. Nonlinearity is evaluated pseudospectrally on
/// the real physical samples, which keeps Hermitian symmetry exact.
FourierField step(const FourierField& f, const ModelParameters& p, double dt);

/// 0 iff the sets {H : |a(H)| > delta} and {H : |b(H)| > delta} coincide.
int phase_transition_indicator(const FourierField& a, const FourierField& b, double delta);

/// Discrete free energy per unit volume (quadratic part in spectral space,
/// cubic/quartic part on the collocation grid).
double free_energy(const FourierField& f, const ModelParameters& p);

/// Observer invoked at every residual/PTI checkpoint of a branch solve.
using BranchObserver =
    std::function<void(long iteration, double time, const FourierField& state)>;

/// Evolve one seeded branch to steady state (Algorithm: seeded gradient
/// flow with strided residual and transition checks). Runs on a
/// half-spectrum fast path; the trajectory matches repeated `step` calls.
Branch solve_branch(const SpectralGrid& grid, const ModelParameters& p, const SeedState& seed,
                    const SolverConfig& cfg, const BranchObserver& observer = nullptr);

/// All five seeds; only transition-free converged branches are kept.
/// Per-branch numerical failures are recorded, not propagated.
PhaseSteadySolutionSet solve_all_branches(const SpectralGrid& grid, const ModelParameters& p,
                                          const SolverConfig& cfg, double seed_amplitude = 0.3,
                                          std::span<const StateLabel> states = kAllStates);

}  // namespace qmor

#endif
