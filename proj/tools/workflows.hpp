#pragma once

#include <string>
#include <vector>

#include "magnomech/params.hpp"
#include "magnomech/table.hpp"

namespace magnomech::workflows {

/// The repository's demo parameter set (also shipped as configs/baseline.json).
/// G+ is pre-set to the squeezing optimum of this operating point.
[[nodiscard]] RawParams baseline_raw();
[[nodiscard]] SystemParams default_base();

/// Figure-reproduction workflow names accepted by `reproduce`.
[[nodiscard]] const std::vector<std::string>& reproduce_targets();

struct FigureTable {
  Table table;
  SystemParams base;
};

/// Runs one figure workflow on top of `base` (per-target structural
/// overrides applied on top). Throws std::invalid_argument on unknown names.
[[nodiscard]] FigureTable reproduce(const std::string& target,
                                    const SystemParams& base);

// Grids shared between the workflows and the verification suite.
[[nodiscard]] std::vector<double> drive_ratio_grid();     // refined towards 1
[[nodiscard]] std::vector<double> wide_ratio_grid();      // linear 0 .. 0.998
[[nodiscard]] std::vector<double> coupling_sweep_grid_hz();   // G- axis
[[nodiscard]] std::vector<double> cavity_magnon_grid_hz();    // g axis
[[nodiscard]] std::vector<double> cavity_decay_grid_hz();     // kappa_a axis
[[nodiscard]] std::vector<double> mech_damping_grid_hz();     // gamma_b axis
[[nodiscard]] const std::vector<double>& bath_temperatures_k();

}  // namespace magnomech::workflows
