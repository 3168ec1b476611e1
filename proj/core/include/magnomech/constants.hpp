#pragma once

#include <numbers>

namespace magnomech {

// CODATA-2018 exact defining constants.
inline constexpr double planck_h = 6.62607015e-34;   // J s
inline constexpr double boltzmann_k = 1.380649e-23;  // J / K

inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double hbar = planck_h / two_pi;  // J s

// Vacuum (shot-noise) level of a quadrature in the X = (O + O^dag)/sqrt(2)
// convention.
inline constexpr double vacuum_noise = 0.5;

}  // namespace magnomech
