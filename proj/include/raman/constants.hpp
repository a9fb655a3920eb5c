#pragma once

// Shared physical constants. CODATA 2018 defining values -- exact by SI
// definition, so every module quotes the same bits.
namespace raman::constants {

inline constexpr double planck_h = 6.62607015e-34;   // J s
inline constexpr double boltzmann_k = 1.380649e-23;  // J / K
inline constexpr double two_pi = 6.28318530717958647692528676655900577;

}  // namespace raman::constants
