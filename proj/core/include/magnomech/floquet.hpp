#pragma once

#include <complex>

#include <Eigen/Dense>

#include "magnomech/params.hpp"
#include "magnomech/rwa_spectrum.hpp"

namespace magnomech {

using Mat6c = Eigen::Matrix<std::complex<double>, 6, 6>;

/// Harmonic decomposition A(t) = a0 + a1 e^{+2i wb t} + a_minus1 e^{-2i wb t}
/// of the time-dependent drift matrix in the mode-operator basis
/// (da, da^dag, db, db^dag, dm, dm^dag). Entries in rad/s.
struct HarmonicBlocks {
  Mat6c a0, a1, a_minus1;
};

[[nodiscard]] HarmonicBlocks harmonic_blocks(const SystemParams& params);

/// Truncated frequency-space generator: block-tridiagonal matrix of dimension
/// 6(2l+3). Block rows are ordered by descending sideband s = l+1 ... -(l+1);
/// the row for sideband s has diagonal a0 + 2 i s wb I, a_minus1 on the
/// superdiagonal (towards s-1) and a1 on the subdiagonal (towards s+1).
[[nodiscard]] Eigen::MatrixXcd floquet_block_matrix(const HarmonicBlocks& blocks,
                                                    double omega_b,
                                                    int truncation_l);

/// Assembled frequency-space system at one probe frequency. The solvable
/// linear system is (-i omega I - block_matrix) U = N.
struct FloquetSystem {
  int truncation_l = 0;
  double probe_omega = 0.0;  // rad/s
  Eigen::MatrixXcd block_matrix;
};

[[nodiscard]] FloquetSystem assemble(const SystemParams& params,
                                     double probe_omega, int truncation_l);

enum class FloquetSolve { block_thomas, dense_lu };

/// Transfer rows of the output field over the stacked bare noise inputs
/// (a_in, a_in^dag, b_in, b_in^dag, m_in, m_in^dag) at frequencies
/// probe_omega + 2 s wb, blocks ordered by descending s. Input-output
/// subtraction already applied.
struct OutputTransferRows {
  Eigen::VectorXcd a_out;     // d a_out at the probe frequency
  Eigen::VectorXcd adag_out;  // d a_out^dag at the probe frequency
};

[[nodiscard]] OutputTransferRows output_transfer_rows(
    const SystemParams& params, double probe_omega, int truncation_l,
    FloquetSolve method = FloquetSolve::block_thomas);

/// NSD point plus the largest imaginary residue left after symmetrization
/// (a numerical-consistency diagnostic; the exact value is real).
struct FloquetNsdDetail {
  NsdPoint point;
  double imag_residue = 0.0;
};

[[nodiscard]] FloquetNsdDetail floquet_nsd_detail(
    const SystemParams& params, double omega, double phi, int truncation_l,
    FloquetSolve method = FloquetSolve::block_thomas);

/// Exact (counter-rotating-terms included) output-field NSD from the
/// truncated frequency-space solve, for comparison against the RWA result.
[[nodiscard]] NsdPoint floquet_nsd(const SystemParams& params, double omega,
                                   double phi, int truncation_l,
                                   FloquetSolve method = FloquetSolve::block_thomas);

/// Result of the truncation scan. l_used is the smallest truncation whose
/// value already agreed with the next refinement; `converged` is false when
/// the scan hit l_max without meeting rel_tol (the last value is still
/// returned).
struct FloquetConvergence {
  NsdPoint point;
  int l_used = 0;
  bool converged = false;
};

[[nodiscard]] FloquetConvergence converge(const SystemParams& params,
                                          double omega, double phi,
                                          double rel_tol = 1e-3,
                                          int l_max = 6);

}  // namespace magnomech
