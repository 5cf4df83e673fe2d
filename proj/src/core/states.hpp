#ifndef QMOR_STATES_HPP
#define QMOR_STATES_HPP

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "projection.hpp"

namespace qmor {

/// The five candidate ordered states of the two-scale model.
enum class StateLabel { QC, C6, LQ, T6, Lam };

inline constexpr std::array<StateLabel, 5> kAllStates = {
    StateLabel::QC, StateLabel::C6, StateLabel::LQ, StateLabel::T6, StateLabel::Lam};

std::string_view to_string(StateLabel s);
StateLabel state_from_string(std::string_view name);

/// Prominent reciprocal vectors of a state in the lifted space: the modes
/// seeded with a nonzero amplitude to bias the flow toward that state.
/// Each set is closed under H -> -H.
std::span<const ModeIndex> prominent_modes(StateLabel s);

/// Initial condition: amplitude u0 on the prominent modes of one state.
struct SeedState {
  StateLabel label = StateLabel::QC;
  double amplitude = 0.3;  // u0

  std::span<const ModeIndex> modes() const { return prominent_modes(label); }
};

}  // namespace qmor

#endif
