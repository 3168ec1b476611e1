#include "magnomech/floquet.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace magnomech {

namespace {

using Cplx = std::complex<double>;
constexpr Cplx kI{0.0, 1.0};

int block_count(int l) { return 2 * l + 3; }

// Block row index i holds sideband s = (l+1) - i.
int sideband_of(int i, int l) { return (l + 1) - i; }

double reduce_phi(double phi) {
  double r = std::fmod(phi, std::numbers::pi);
  if (r < 0.0) r += std::numbers::pi;
  return r;
}

// Diagonal block of the system matrix S = -i w I - M for sideband s:
// -i (w + 2 s wb) I - a0.
Mat6c system_diagonal(const Mat6c& a0, double omega, double omega_b, int s) {
  Mat6c b = -a0;
  b.diagonal().array() -= kI * (omega + 2.0 * s * omega_b);
  return b;
}

// Solves S^T x = rhs for the two unit right-hand sides that pick out the
// a and a^dag rows of the k = 0 block, using block elimination on the
// transposed block-tridiagonal system.
Eigen::MatrixXcd solve_transposed_thomas(const HarmonicBlocks& hb,
                                         double omega, double omega_b, int l,
                                         const Eigen::MatrixXcd& rhs) {
  const int n = block_count(l);
  // S^T blocks: diag B_i^T, upper (-a1)^T, lower (-a_minus1)^T.
  const Mat6c upper = (-hb.a1).transpose();
  const Mat6c lower = (-hb.a_minus1).transpose();

  std::vector<Eigen::PartialPivLU<Mat6c>> diag_lu;
  diag_lu.reserve(n);
  std::vector<Eigen::MatrixXcd> y(n);

  Mat6c d = system_diagonal(hb.a0, omega, omega_b, sideband_of(0, l)).transpose();
  diag_lu.emplace_back(d);
  y[0] = rhs.middleRows(0, 6);
  for (int i = 1; i < n; ++i) {
    const Mat6c w = lower * diag_lu[i - 1].inverse();
    d = system_diagonal(hb.a0, omega, omega_b, sideband_of(i, l)).transpose() -
        w * upper;
    diag_lu.emplace_back(d);
    y[i] = rhs.middleRows(6 * i, 6) - w * y[i - 1];
  }

  Eigen::MatrixXcd x(6 * n, rhs.cols());
  x.middleRows(6 * (n - 1), 6) = diag_lu[n - 1].solve(y[n - 1]);
  for (int i = n - 2; i >= 0; --i) {
    x.middleRows(6 * i, 6) =
        diag_lu[i].solve(y[i] - upper * x.middleRows(6 * (i + 1), 6));
  }
  return x;
}

Eigen::MatrixXcd solve_transposed_dense(const HarmonicBlocks& hb, double omega,
                                        double omega_b, int l,
                                        const Eigen::MatrixXcd& rhs) {
  const int n = block_count(l);
  const int dim = 6 * n;
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    big.block<6, 6>(6 * i, 6 * i) =
        system_diagonal(hb.a0, omega, omega_b, sideband_of(i, l));
    if (i + 1 < n) big.block<6, 6>(6 * i, 6 * (i + 1)) = -hb.a_minus1;
    if (i - 1 >= 0) big.block<6, 6>(6 * i, 6 * (i - 1)) = -hb.a1;
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(big.transpose());
  Eigen::MatrixXcd x = lu.solve(rhs);
  if (!x.allFinite())
    throw std::runtime_error("floquet: singular frequency-space system");
  return x;
}

// Pairwise contraction of two transfer rows through the symmetrized input
// correlators: sideband s of x pairs with sideband -s of y, channel j with
// its conjugate partner.
std::array<Cplx, 3> contract(const Eigen::VectorXcd& x,
                             const Eigen::VectorXcd& y, int l,
                             const std::array<double, 6>& occ) {
  static constexpr int conj_partner[6] = {1, 0, 3, 2, 5, 4};
  const int n = block_count(l);
  std::array<Cplx, 3> per_channel{};
  for (int i = 0; i < n; ++i) {
    const int ip = n - 1 - i;  // block holding sideband -s
    for (int j = 0; j < 6; ++j) {
      per_channel[j / 2] +=
          x[6 * i + j] * y[6 * ip + conj_partner[j]] * occ[j];
    }
  }
  return per_channel;
}

}  // namespace

HarmonicBlocks harmonic_blocks(const SystemParams& params) {
  const double g = params.g();
  const double gm = params.g_minus();
  const double gp = params.g_plus();

  HarmonicBlocks hb;
  hb.a0 = Mat6c::Zero();
  hb.a0.diagonal() << -params.kappa_a() / 2.0, -params.kappa_a() / 2.0,
      -params.gamma_b() / 2.0, -params.gamma_b() / 2.0,
      -params.kappa_m() / 2.0, -params.kappa_m() / 2.0;
  hb.a0(0, 4) = -kI * g;
  hb.a0(1, 5) = kI * g;
  hb.a0(4, 0) = -kI * g;
  hb.a0(5, 1) = kI * g;
  hb.a0(2, 4) = -kI * gm;
  hb.a0(2, 5) = -kI * gp;
  hb.a0(3, 4) = kI * gp;
  hb.a0(3, 5) = kI * gm;
  hb.a0(4, 2) = -kI * gm;
  hb.a0(4, 3) = -kI * gp;
  hb.a0(5, 2) = kI * gp;
  hb.a0(5, 3) = kI * gm;

  hb.a1 = Mat6c::Zero();
  hb.a1(2, 4) = -kI * gp;
  hb.a1(2, 5) = -kI * gm;
  hb.a1(4, 3) = -kI * gm;
  hb.a1(5, 3) = kI * gp;

  hb.a_minus1 = Mat6c::Zero();
  hb.a_minus1(3, 4) = kI * gm;
  hb.a_minus1(3, 5) = kI * gp;
  hb.a_minus1(4, 2) = -kI * gp;
  hb.a_minus1(5, 2) = kI * gm;
  return hb;
}

Eigen::MatrixXcd floquet_block_matrix(const HarmonicBlocks& blocks,
                                      double omega_b, int truncation_l) {
  if (truncation_l < 0)
    throw std::invalid_argument("floquet_block_matrix: truncation_l must be >= 0");
  const int n = block_count(truncation_l);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(6 * n, 6 * n);
  for (int i = 0; i < n; ++i) {
    const int s = sideband_of(i, truncation_l);
    Mat6c diag = blocks.a0;
    diag.diagonal().array() += kI * (2.0 * s * omega_b);
    m.block<6, 6>(6 * i, 6 * i) = diag;
    if (i + 1 < n) m.block<6, 6>(6 * i, 6 * (i + 1)) = blocks.a_minus1;
    if (i - 1 >= 0) m.block<6, 6>(6 * i, 6 * (i - 1)) = blocks.a1;
  }
  return m;
}

FloquetSystem assemble(const SystemParams& params, double probe_omega,
                       int truncation_l) {
  return {truncation_l, probe_omega,
          floquet_block_matrix(harmonic_blocks(params), params.omega_b(),
                               truncation_l)};
}

OutputTransferRows output_transfer_rows(const SystemParams& params,
                                        double probe_omega, int truncation_l,
                                        FloquetSolve method) {
  if (truncation_l < 0)
    throw std::invalid_argument("output_transfer_rows: truncation_l must be >= 0");
  const HarmonicBlocks hb = harmonic_blocks(params);
  const int n = block_count(truncation_l);
  const int dim = 6 * n;
  const int center = 6 * (truncation_l + 1);  // k = 0 block offset

  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(dim, 2);
  rhs(center + 0, 0) = 1.0;  // a row
  rhs(center + 1, 1) = 1.0;  // a^dag row

  const Eigen::MatrixXcd rows =
      method == FloquetSolve::block_thomas
          ? solve_transposed_thomas(hb, probe_omega, params.omega_b(),
                                    truncation_l, rhs)
          : solve_transposed_dense(hb, probe_omega, params.omega_b(),
                                   truncation_l, rhs);
  if (!rows.allFinite())
    throw std::runtime_error("floquet: singular frequency-space system");

  const double sqrt_kappa_a = std::sqrt(params.kappa_a());
  const std::array<double, 6> sqrt_rate = {
      sqrt_kappa_a,
      sqrt_kappa_a,
      std::sqrt(params.gamma_b()),
      std::sqrt(params.gamma_b()),
      std::sqrt(params.kappa_m()),
      std::sqrt(params.kappa_m())};

  OutputTransferRows out;
  out.a_out.resize(dim);
  out.adag_out.resize(dim);
  for (int k = 0; k < dim; ++k) {
    const double scale = sqrt_kappa_a * sqrt_rate[k % 6];
    out.a_out[k] = scale * rows(k, 0);
    out.adag_out[k] = scale * rows(k, 1);
  }
  // Input-output relation: a_out = sqrt(kappa_a) a - a_in.
  out.a_out[center + 0] -= 1.0;
  out.adag_out[center + 1] -= 1.0;
  return out;
}

FloquetNsdDetail floquet_nsd_detail(const SystemParams& params, double omega,
                                    double phi, int truncation_l,
                                    FloquetSolve method) {
  const OutputTransferRows fwd =
      output_transfer_rows(params, omega, truncation_l, method);
  const OutputTransferRows bwd =
      output_transfer_rows(params, -omega, truncation_l, method);

  const ThermalOccupations n = thermal_occupations(params);
  const std::array<double, 6> occ = {n.n_a + 0.5, n.n_a + 0.5, n.n_b + 0.5,
                                     n.n_b + 0.5, n.n_m + 0.5, n.n_m + 0.5};

  const double phi_r = reduce_phi(phi);
  const Cplx e_minus = std::exp(-2.0 * kI * phi_r);
  const Cplx e_plus = std::exp(2.0 * kI * phi_r);

  const auto k11 = contract(fwd.a_out, bwd.a_out, truncation_l, occ);
  const auto k12 = contract(fwd.a_out, bwd.adag_out, truncation_l, occ);
  const auto k21 = contract(fwd.adag_out, bwd.a_out, truncation_l, occ);
  const auto k22 = contract(fwd.adag_out, bwd.adag_out, truncation_l, occ);

  FloquetNsdDetail detail;
  detail.point.omega = omega;
  detail.point.phi = phi_r;
  double* channel[3] = {&detail.point.s_a, &detail.point.s_b,
                        &detail.point.s_m};
  for (int c = 0; c < 3; ++c) {
    const Cplx v =
        0.5 * (e_minus * k11[c] + k12[c] + k21[c] + e_plus * k22[c]);
    *channel[c] = v.real();
    detail.imag_residue = std::max(detail.imag_residue, std::abs(v.imag()));
  }
  detail.point.s_total =
      detail.point.s_a + detail.point.s_m + detail.point.s_b;
  detail.point.squeezing_db = squeezing_db(detail.point.s_total);
  return detail;
}

NsdPoint floquet_nsd(const SystemParams& params, double omega, double phi,
                     int truncation_l, FloquetSolve method) {
  return floquet_nsd_detail(params, omega, phi, truncation_l, method).point;
}

FloquetConvergence converge(const SystemParams& params, double omega,
                            double phi, double rel_tol, int l_max) {
  if (!(rel_tol > 0.0))
    throw std::invalid_argument("converge: rel_tol must be > 0");
  if (l_max < 1) throw std::invalid_argument("converge: l_max must be >= 1");

  NsdPoint prev = floquet_nsd(params, omega, phi, 0);
  for (int l = 1; l <= l_max; ++l) {
    NsdPoint cur = floquet_nsd(params, omega, phi, l);
    if (std::abs(cur.s_total - prev.s_total) <= rel_tol * cur.s_total) {
      // Truncation l-1 already agreed with its refinement.
      return {cur, l - 1, true};
    }
    prev = cur;
  }
  return {prev, l_max, false};
}

}  // namespace magnomech
