#pragma once

#include <cmath>
#include <complex>

#include "magnomech/params.hpp"

namespace magnomech {

/// Natural, composite, and effective susceptibilities of the three coupled
/// modes at one rotating-frame frequency. Units of seconds.
///
/// g_tilde_sq = G-^2 - G+^2 is carried as a signed real so the formulas can
/// be probed across the G+ > G- boundary; stability gating happens in the
/// steady-state module, not here.
struct ChiSet {
  double omega = 0.0;  // rad/s
  std::complex<double> chi_a, chi_b, chi_m;        // natural, 1/(kappa/2 - i w)
  std::complex<double> chi_mb, chi_ma;             // composite
  std::complex<double> chi_a_eff, chi_b_eff, chi_m_eff;
  double g_tilde_sq = 0.0;  // (rad/s)^2, signed

  /// sqrt(G-^2 - G+^2); meaningful only when G- >= G+.
  [[nodiscard]] double g_tilde() const { return std::sqrt(g_tilde_sq); }
};

/// chi[omega] = (kappa/2 - i omega)^-1 for a damped mode. kappa > 0.
[[nodiscard]] std::complex<double> natural_chi(double kappa, double omega);

/// Builds the full susceptibility set at one frequency.
[[nodiscard]] ChiSet chi_set(const SystemParams& params, double omega);

}  // namespace magnomech
