#include "states.hpp"

namespace qmor {

std::string_view to_string(StateLabel s) {
  switch (s) {
    case StateLabel::QC: return "QC";
    case StateLabel::C6: return "C6";
    case StateLabel::LQ: return "LQ";
    case StateLabel::T6: return "T6";
    case StateLabel::Lam: return "Lam";
  }
  return "?";
}

StateLabel state_from_string(std::string_view name) {
  for (StateLabel s : kAllStates)
    if (name == to_string(s)) return s;
  throw std::invalid_argument("unknown state label: " + std::string(name));
}

namespace {

// 24 prominent reciprocal vectors of the 12-fold star, split into the
// |SH| = 1 and |SH| = q shells. Sub-stars select the other states.
constexpr std::array<ModeIndex, 24> kQcModes = {{
    // |SH| = 1
    {0, 1, 0, 0},
    {0, 0, 1, 0},
    {0, 0, 0, 1},
    {-1, 0, 1, 0},
    {0, -1, 0, 1},
    {-1, 0, 0, 0},
    {0, -1, 0, 0},
    {0, 0, -1, 0},
    {0, 0, 0, -1},
    {1, 0, -1, 0},
    {0, 1, 0, -1},
    {1, 0, 0, 0},
    // |SH| = q
    {1, 1, 0, 0},
    {0, 1, 1, 0},
    {0, 0, 1, 1},
    {-1, 0, 1, 1},
    {-1, -1, 1, 1},
    {-1, -1, 0, 1},
    {-1, -1, 0, 0},
    {0, -1, -1, 0},
    {0, 0, -1, -1},
    {1, 0, -1, -1},
    {1, 1, -1, -1},
    {1, 1, 0, -1},
}};

constexpr std::array<ModeIndex, 6> kC6Modes = {{
    {0, 0, 1, 0},
    {-1, 0, 1, 0},
    {-1, 0, 0, 0},
    {0, 0, -1, 0},
    {1, 0, -1, 0},
    {1, 0, 0, 0},
}};

constexpr std::array<ModeIndex, 12> kLqModes = {{
    {0, 1, 0, 0},
    {0, 0, 1, 0},
    {-1, 0, 1, 0},
    {-1, 0, 0, 0},
    {0, -1, 0, 0},
    {0, 0, -1, 0},
    {1, 0, -1, 0},
    {1, 0, 0, 0},
    {1, 1, 0, 0},
    {-1, -1, 0, 1},
    {-1, -1, 0, 0},
    {1, 1, 0, -1},
}};

constexpr std::array<ModeIndex, 6> kT6Modes = {{
    {0, 0, 1, 0},
    {0, 0, 0, 1},
    {0, 0, -1, 0},
    {0, 0, 0, -1},
    {0, 1, 1, 0},
    {0, -1, -1, 0},
}};

constexpr std::array<ModeIndex, 2> kLamModes = {{
    {0, 1, 0, 0},
    {0, -1, 0, 0},
}};

}  // namespace

std::span<const ModeIndex> prominent_modes(StateLabel s) {
  switch (s) {
    case StateLabel::QC: return kQcModes;
    case StateLabel::C6: return kC6Modes;
    case StateLabel::LQ: return kLqModes;
    case StateLabel::T6: return kT6Modes;
    case StateLabel::Lam: return kLamModes;
  }
  return {};
}

}  // namespace qmor
