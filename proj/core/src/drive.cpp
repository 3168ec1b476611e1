#include "magnomech/drive.hpp"

#include <cmath>
#include <stdexcept>

namespace magnomech {

namespace {

std::complex<double> denominator(double delta_m, double delta_a,
                                 const SystemParams& p) {
  const std::complex<double> magnon{delta_m, p.kappa_m() / 2.0};
  if (p.g() == 0.0) return magnon;
  const std::complex<double> cavity{delta_a, p.kappa_a() / 2.0};
  return magnon - p.g() * p.g() / cavity;
}

}  // namespace

DriveSpec DriveSpec::for_params(const SystemParams& params, double g0,
                                std::complex<double> rabi_plus,
                                std::complex<double> rabi_minus) {
  if (!(g0 > 0.0)) throw std::domain_error("DriveSpec: g0 must be > 0");
  DriveSpec spec;
  spec.omega_plus = params.omega_m() + params.omega_b();
  spec.omega_minus = params.omega_m() - params.omega_b();
  spec.rabi_plus = rabi_plus;
  spec.rabi_minus = rabi_minus;
  spec.g0 = g0;
  return spec;
}

std::complex<double> sideband_denominator(const SystemParams& params,
                                          Sideband sideband) {
  const double detuning =
      sideband == Sideband::plus ? params.omega_b() : -params.omega_b();
  return denominator(detuning, detuning, params);
}

std::complex<double> mean_amplitude(const SystemParams& params,
                                    const DriveSpec& drive, Sideband sideband) {
  const bool plus = sideband == Sideband::plus;
  const double omega_d = plus ? drive.omega_plus : drive.omega_minus;
  const double expected =
      plus ? params.omega_m() + params.omega_b()
           : params.omega_m() - params.omega_b();
  if (std::abs(omega_d - expected) > 1e-9 * params.omega_m())
    throw std::invalid_argument(
        "mean_amplitude: drive tone frequency inconsistent with params");

  const std::complex<double> rabi = plus ? drive.rabi_plus : drive.rabi_minus;
  if (rabi == std::complex<double>{0.0, 0.0}) return {0.0, 0.0};
  return rabi / denominator(omega_d - params.omega_m(),
                            omega_d - params.omega_a(), params);
}

std::complex<double> calibrate_rabi(const SystemParams& params, double g_target,
                                    double g0, Sideband sideband) {
  if (!(g_target >= 0.0))
    throw std::domain_error("calibrate_rabi: g_target must be >= 0");
  if (!(g0 > 0.0)) throw std::domain_error("calibrate_rabi: g0 must be > 0");
  if (g_target == 0.0) return {0.0, 0.0};
  return (g_target / g0) * sideband_denominator(params, sideband);
}

}  // namespace magnomech
