#include "magnomech/rwa_spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "magnomech/parallel.hpp"
#include "magnomech/susceptibility.hpp"

namespace magnomech {

namespace {

double reduce_phi(double phi) {
  double r = std::fmod(phi, std::numbers::pi);
  if (r < 0.0) r += std::numbers::pi;
  return r;
}

inline double abs2(std::complex<double> z) { return std::norm(z); }

}  // namespace

double squeezing_db(double s_total) {
  if (!(s_total > 0.0))
    throw std::domain_error("squeezing_db: s_total must be > 0");
  return -10.0 * std::log10(s_total / vacuum_noise);
}

NsdPoint nsd_components(const SystemParams& params, double omega, double phi) {
  const ChiSet cs = chi_set(params, omega);
  const ThermalOccupations n = thermal_occupations(params);
  const double kappa_a = params.kappa_a();
  const double kappa_m = params.kappa_m();
  const double gamma_b = params.gamma_b();
  const double g = params.g();
  const double gm = params.g_minus();
  const double gp = params.g_plus();

  NsdPoint pt;
  pt.omega = omega;
  pt.phi = reduce_phi(phi);
  pt.s_a = abs2(kappa_a * cs.chi_a_eff - 1.0) * (n.n_a + 0.5);
  pt.s_m = kappa_a * kappa_m * abs2(cs.chi_a_eff * g * cs.chi_mb) * (n.n_m + 0.5);
  pt.s_b = kappa_a * gamma_b * abs2(cs.chi_a_eff * g * cs.chi_mb * cs.chi_b) *
           (gm * gm + gp * gp + 2.0 * gm * gp * std::cos(2.0 * pt.phi)) *
           (n.n_b + 0.5);
  pt.s_total = pt.s_a + pt.s_m + pt.s_b;
  pt.squeezing_db = squeezing_db(pt.s_total);
  return pt;
}

NsdPoint nsd_zero_freq(const SystemParams& params) {
  const ThermalOccupations n = thermal_occupations(params);
  const double kappa_a = params.kappa_a();
  const double kappa_m = params.kappa_m();
  const double gamma_b = params.gamma_b();
  const double g2 = params.g() * params.g();
  const double gm = params.g_minus();
  const double gp = params.g_plus();
  const double g_tilde_sq = gm * gm - gp * gp;

  const double xi = 1.0 / (4.0 * g_tilde_sq * kappa_a + 4.0 * g2 * gamma_b +
                           kappa_a * gamma_b * kappa_m);
  const double x = 8.0 * g2 * gamma_b * xi;

  NsdPoint pt;
  pt.omega = 0.0;
  pt.phi = std::numbers::pi / 2.0;
  pt.s_a = (1.0 - x) * (1.0 - x) * (n.n_a + 0.5);
  pt.s_m = 16.0 * kappa_a * kappa_m * g2 * gamma_b * gamma_b * xi * xi *
           (n.n_m + 0.5);
  pt.s_b = 64.0 * kappa_a * gamma_b * g2 * xi * xi * (gm - gp) * (gm - gp) *
           (n.n_b + 0.5);
  pt.s_total = pt.s_a + pt.s_m + pt.s_b;
  pt.squeezing_db = squeezing_db(pt.s_total);
  return pt;
}

NoiseSpectrum spectrum(const SystemParams& params,
                       std::span<const double> omega_grid, double phi) {
  if (omega_grid.empty())
    throw std::invalid_argument("spectrum: empty frequency grid");
  for (std::size_t i = 0; i < omega_grid.size(); ++i) {
    if (!std::isfinite(omega_grid[i]))
      throw std::invalid_argument("spectrum: grid values must be finite");
    if (i > 0 && !(omega_grid[i] > omega_grid[i - 1]))
      throw std::invalid_argument("spectrum: grid must be strictly increasing");
  }

  NoiseSpectrum result{std::vector<NsdPoint>(omega_grid.size()), params, 0};
  parallel_for(omega_grid.size(), [&](std::size_t i) {
    result.points[i] = nsd_components(params, omega_grid[i], phi);
  });
  for (std::size_t i = 1; i < result.points.size(); ++i) {
    if (result.points[i].s_total < result.points[result.argmin_index].s_total)
      result.argmin_index = i;
  }
  return result;
}

}  // namespace magnomech
