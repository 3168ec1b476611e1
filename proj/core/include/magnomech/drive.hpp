#pragma once

#include <complex>

#include "magnomech/params.hpp"

namespace magnomech {

enum class Sideband { plus, minus };

/// Two-tone drive description: tones at omega_pm = omega_m +- omega_b with
/// Rabi frequencies Omega_pm, plus the bare magnomechanical coupling G0.
struct DriveSpec {
  double omega_plus = 0.0;   // rad/s
  double omega_minus = 0.0;  // rad/s
  std::complex<double> rabi_plus;   // rad/s
  std::complex<double> rabi_minus;  // rad/s
  double g0 = 0.0;  // rad/s, bare magnomechanical coupling

  /// Builds a spec with the tone frequencies derived from `params`.
  /// Throws std::domain_error for g0 <= 0.
  static DriveSpec for_params(const SystemParams& params, double g0,
                              std::complex<double> rabi_plus,
                              std::complex<double> rabi_minus);
};

/// Denominator D_pm of the mean-amplitude map at the exact sideband
/// detunings +-omega_b of the resonant case:
/// D_pm = (+-omega_b) + i kappa_m/2 - g^2 / ((+-omega_b) + i kappa_a/2).
[[nodiscard]] std::complex<double> sideband_denominator(
    const SystemParams& params, Sideband sideband);

/// Mean magnon amplitude m_pm = Omega_pm / D_pm for one drive tone.
/// The drive tone frequencies must be consistent with `params` (within
/// 1e-9 relative); otherwise std::invalid_argument.
[[nodiscard]] std::complex<double> mean_amplitude(const SystemParams& params,
                                                  const DriveSpec& drive,
                                                  Sideband sideband);

/// Inverts the mean-amplitude map: the unique Rabi frequency Omega_pm such
/// that G0 * m_pm equals the requested real, nonnegative coupling.
/// Throws std::domain_error for g_target < 0 or g0 <= 0.
[[nodiscard]] std::complex<double> calibrate_rabi(const SystemParams& params,
                                                  double g_target, double g0,
                                                  Sideband sideband);

}  // namespace magnomech
