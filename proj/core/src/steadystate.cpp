#include "magnomech/steadystate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "magnomech/rwa_spectrum.hpp"

namespace magnomech {

QuadratureModel quadrature_model(const SystemParams& params) {
  const double g = params.g();
  const double gm = params.g_minus();
  const double gp = params.g_plus();

  QuadratureModel model;
  model.a_prime = Mat6::Zero();
  model.a_prime.diagonal() << -params.kappa_a() / 2.0, -params.kappa_a() / 2.0,
      -params.gamma_b() / 2.0, -params.gamma_b() / 2.0,
      -params.kappa_m() / 2.0, -params.kappa_m() / 2.0;
  model.a_prime(0, 5) = g;
  model.a_prime(1, 4) = -g;
  model.a_prime(2, 5) = gm - gp;
  model.a_prime(3, 4) = -(gm + gp);
  model.a_prime(4, 1) = g;
  model.a_prime(4, 3) = gm - gp;
  model.a_prime(5, 0) = -g;
  model.a_prime(5, 2) = -(gm + gp);

  const ThermalOccupations n = thermal_occupations(params);
  model.d_prime = Mat6::Zero();
  model.d_prime.diagonal() << params.kappa_a() * (n.n_a + 0.5),
      params.kappa_a() * (n.n_a + 0.5), params.gamma_b() * (n.n_b + 0.5),
      params.gamma_b() * (n.n_b + 0.5), params.kappa_m() * (n.n_m + 0.5),
      params.kappa_m() * (n.n_m + 0.5);
  return model;
}

StabilityReport is_stable(const SystemParams& params) {
  const Mat6 a = quadrature_model(params).a_prime;
  const Eigen::EigenSolver<Mat6> eig(a, /*computeEigenvectors=*/false);
  StabilityReport report;
  report.spectral_abscissa = eig.eigenvalues().real().maxCoeff();
  report.stable = report.spectral_abscissa < 0.0;
  report.marginal = report.spectral_abscissa > -1e-6 * params.kappa_m();
  return report;
}

Mat6 solve_lyapunov_kron(const Mat6& a, const Mat6& q) {
  // vec(A X + X A^T) = (I (x) A + A (x) I) vec(X), column-major vec.
  Eigen::Matrix<double, 36, 36> k = Eigen::Matrix<double, 36, 36>::Zero();
  for (int col = 0; col < 6; ++col)
    k.block<6, 6>(6 * col, 6 * col) += a;
  for (int j = 0; j < 6; ++j)
    for (int l = 0; l < 6; ++l)
      for (int i = 0; i < 6; ++i) k(6 * j + i, 6 * l + i) += a(j, l);

  Eigen::Matrix<double, 36, 1> rhs;
  for (int col = 0; col < 6; ++col) rhs.segment<6>(6 * col) = -q.col(col);

  Eigen::Matrix<double, 36, 1> x = k.partialPivLu().solve(rhs);
  Mat6 v;
  for (int col = 0; col < 6; ++col) v.col(col) = x.segment<6>(6 * col);
  return 0.5 * (v + v.transpose());
}

Mat6 solve_lyapunov_eig(const Mat6& a, const Mat6& q) {
  using Mat6cd = Eigen::Matrix<std::complex<double>, 6, 6>;
  const Eigen::EigenSolver<Mat6> eig(a);
  const Mat6cd s = eig.eigenvectors();
  const Eigen::Matrix<std::complex<double>, 6, 1> lambda = eig.eigenvalues();

  const Eigen::PartialPivLU<Mat6cd> s_lu(s);
  // C = S^-1 Q S^-T, then W_ij = -C_ij / (lambda_i + lambda_j), V = S W S^T.
  const Mat6cd c =
      s_lu.solve(q.cast<std::complex<double>>()) *
      s_lu.solve(Mat6cd::Identity()).transpose();
  Mat6cd w;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) w(i, j) = -c(i, j) / (lambda[i] + lambda[j]);
  const Mat6cd v = s * w * s.transpose();
  Mat6 vr = v.real();
  return 0.5 * (vr + vr.transpose());
}

CovarianceState steady_covariance(const SystemParams& params) {
  const StabilityReport stability = is_stable(params);
  if (!stability.stable)
    throw NoStationaryState(
        "no stationary state: spectral abscissa = " +
        std::to_string(stability.spectral_abscissa) + " rad/s >= 0");

  const QuadratureModel model = quadrature_model(params);
  CovarianceState state;
  state.v = solve_lyapunov_kron(model.a_prime, model.d_prime);
  state.stable = true;
  state.residual = (model.a_prime * state.v +
                    state.v * model.a_prime.transpose() + model.d_prime)
                       .norm();
  state.ill_conditioned = state.residual > 1e-10 * model.d_prime.norm();
  for (int mode = 0; mode < 3; ++mode) {
    state.var_x[mode] = state.v(2 * mode, 2 * mode);
    state.var_y[mode] = state.v(2 * mode + 1, 2 * mode + 1);
  }
  return state;
}

std::array<ModeVariances, 3> quadrature_variances(const CovarianceState& state) {
  std::array<ModeVariances, 3> out;
  for (int mode = 0; mode < 3; ++mode) {
    out[mode].var_x = state.var_x[mode];
    out[mode].var_y = state.var_y[mode];
    out[mode].squeezing_db =
        squeezing_db(std::min(state.var_x[mode], state.var_y[mode]));
  }
  return out;
}

std::array<double, 3> symplectic_eigenvalues(const Mat6& v) {
  Mat6 omega = Mat6::Zero();
  for (int mode = 0; mode < 3; ++mode) {
    omega(2 * mode, 2 * mode + 1) = 1.0;
    omega(2 * mode + 1, 2 * mode) = -1.0;
  }
  const Eigen::EigenSolver<Mat6> eig(omega * v, /*computeEigenvectors=*/false);
  std::array<double, 6> mags;
  for (int i = 0; i < 6; ++i) mags[i] = std::abs(eig.eigenvalues()[i].imag());
  std::sort(mags.begin(), mags.end());
  // Eigenvalues come in +-i nu pairs; average each pair.
  return {0.5 * (mags[0] + mags[1]), 0.5 * (mags[2] + mags[3]),
          0.5 * (mags[4] + mags[5])};
}

}  // namespace magnomech
