#pragma once

#include <array>
#include <stdexcept>

#include <Eigen/Dense>

#include "magnomech/params.hpp"

namespace magnomech {

using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Quadrature-space model of the RWA dynamics, du' = A' u' + n', in the basis
/// (dX_a, dY_a, dX_b, dY_b, dX_m, dY_m) with X = (O + O^dag)/sqrt(2),
/// Y = (O - O^dag)/(i sqrt(2)). D' is the diagonal diffusion matrix of the
/// symmetrized input correlators.
struct QuadratureModel {
  Mat6 a_prime;
  Mat6 d_prime;
};

[[nodiscard]] QuadratureModel quadrature_model(const SystemParams& params);

/// Stability of the quadrature drift matrix: stable iff every eigenvalue of
/// A' has negative real part. `marginal` warns when the spectral abscissa is
/// above -1e-6 kappa_m, where the Lyapunov solve turns ill-conditioned.
struct StabilityReport {
  bool stable = false;
  double spectral_abscissa = 0.0;  // max Re(eig(A')), rad/s
  bool marginal = false;
};

[[nodiscard]] StabilityReport is_stable(const SystemParams& params);

/// Requested variances of a system with no stationary state (G+ >= G-
/// regime, spectral abscissa >= 0).
class NoStationaryState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Steady-state covariance matrix V (A'V + VA'^T = -D') with the per-mode
/// quadrature variances read off the diagonal. `ill_conditioned` flags a
/// residual above 1e-10 |D'|_F; the state is still returned.
struct CovarianceState {
  Mat6 v;
  std::array<double, 3> var_x{};  // modes a, b, m
  std::array<double, 3> var_y{};
  bool stable = false;
  double residual = 0.0;  // |A'V + VA'^T + D'|_F
  bool ill_conditioned = false;
};

/// Solves the Lyapunov equation for the stationary covariance.
/// Throws NoStationaryState when is_stable() fails.
[[nodiscard]] CovarianceState steady_covariance(const SystemParams& params);

/// Direct vectorized (Kronecker-sum) solve of A X + X A^T + Q = 0.
[[nodiscard]] Mat6 solve_lyapunov_kron(const Mat6& a, const Mat6& q);

/// Independent eigendecomposition-based solve of the same equation, kept for
/// cross-checking the direct route.
[[nodiscard]] Mat6 solve_lyapunov_eig(const Mat6& a, const Mat6& q);

struct ModeVariances {
  double var_x = 0.0;
  double var_y = 0.0;
  double squeezing_db = 0.0;  // -10 log10(min(var_x, var_y) / 0.5)
};

/// Per-mode (a, b, m) variances and squeezing of the better quadrature.
[[nodiscard]] std::array<ModeVariances, 3> quadrature_variances(
    const CovarianceState& state);

/// Symplectic spectrum of a 6x6 covariance matrix, ascending. Values >= 1/2
/// certify a physical Gaussian state in this convention.
[[nodiscard]] std::array<double, 3> symplectic_eigenvalues(const Mat6& v);

}  // namespace magnomech
