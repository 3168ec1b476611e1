#include "magnomech/susceptibility.hpp"

namespace magnomech {

namespace {

inline std::complex<double> inv(std::complex<double> z) { return 1.0 / z; }

}  // namespace

std::complex<double> natural_chi(double kappa, double omega) {
  return inv({kappa / 2.0, -omega});
}

ChiSet chi_set(const SystemParams& params, double omega) {
  ChiSet cs;
  cs.omega = omega;
  cs.chi_a = natural_chi(params.kappa_a(), omega);
  cs.chi_b = natural_chi(params.gamma_b(), omega);
  cs.chi_m = natural_chi(params.kappa_m(), omega);

  const double g = params.g();
  const double gm = params.g_minus();
  const double gp = params.g_plus();
  cs.g_tilde_sq = gm * gm - gp * gp;

  // Zero couplings short-circuit so the decoupled identities hold exactly.
  cs.chi_mb = cs.g_tilde_sq == 0.0
                  ? cs.chi_m
                  : inv(inv(cs.chi_m) + cs.g_tilde_sq * cs.chi_b);
  cs.chi_ma = g == 0.0 ? cs.chi_m : inv(inv(cs.chi_m) + g * g * cs.chi_a);
  cs.chi_a_eff =
      g == 0.0 ? cs.chi_a : inv(inv(cs.chi_a) + g * g * cs.chi_mb);
  cs.chi_b_eff = cs.g_tilde_sq == 0.0
                     ? cs.chi_b
                     : inv(inv(cs.chi_b) + cs.g_tilde_sq * cs.chi_ma);
  cs.chi_m_eff =
      inv(inv(cs.chi_m) + g * g * cs.chi_a + cs.g_tilde_sq * cs.chi_b);
  return cs;
}

}  // namespace magnomech
