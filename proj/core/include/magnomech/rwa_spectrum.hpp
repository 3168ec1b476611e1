#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "magnomech/params.hpp"

namespace magnomech {

/// One point of the output-field noise spectral density, split by noise
/// source. Dimensionless, vacuum level 1/2.
struct NsdPoint {
  double omega = 0.0;  // rad/s, rotating frame
  double phi = 0.0;    // quadrature angle, reduced mod pi
  double s_a = 0.0;    // cavity input noise contribution
  double s_m = 0.0;    // magnon input noise contribution
  double s_b = 0.0;    // mechanical input noise contribution
  double s_total = 0.0;
  double squeezing_db = 0.0;  // -10 log10(s_total / 0.5); positive = squeezed
};

/// -10 log10(s_total / S_vac) with S_vac = 1/2.
/// Throws std::domain_error for s_total <= 0.
[[nodiscard]] double squeezing_db(double s_total);

/// Analytic RWA noise spectral density of the cavity output field at one
/// frequency and quadrature angle.
[[nodiscard]] NsdPoint nsd_components(const SystemParams& params, double omega,
                                      double phi);

/// Closed form at the optimal point omega = 0, phi = pi/2. Algebraically
/// identical to nsd_components(params, 0, pi/2).
[[nodiscard]] NsdPoint nsd_zero_freq(const SystemParams& params);

/// NSD evaluated over a frequency grid, with the parameter snapshot used and
/// the grid argmin of s_total.
struct NoiseSpectrum {
  std::vector<NsdPoint> points;
  SystemParams params;
  std::size_t argmin_index = 0;
};

/// Evaluates the RWA NSD over `omega_grid` (strictly increasing, finite).
/// Grid points are computed in parallel; ordering is preserved.
/// Throws std::invalid_argument on an empty or malformed grid.
[[nodiscard]] NoiseSpectrum spectrum(const SystemParams& params,
                                     std::span<const double> omega_grid,
                                     double phi);

}  // namespace magnomech
