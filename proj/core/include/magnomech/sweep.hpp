#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "magnomech/params.hpp"

namespace magnomech {

/// What a sweep or optimization minimizes.
enum class Objective {
  rwa_nsd,          // analytic RWA s_total at (omega, phi)
  floquet_nsd,      // exact s_total at (omega, phi) with truncation floquet_l
  mech_variance,    // steady-state <dX_b^2>
  cavity_variance,  // steady-state <dY_a^2>
};

struct ObjectiveSpec {
  Objective kind = Objective::rwa_nsd;
  double omega = 0.0;                    // rad/s
  double phi = std::numbers::pi / 2.0;   // rad
  int floquet_l = 1;                     // used by floquet_nsd only
};

[[nodiscard]] Objective objective_from_name(const std::string& name);
[[nodiscard]] std::string objective_name(Objective objective);

/// Evaluates the objective at the given parameters. Variance objectives
/// return +inf when no stationary state exists instead of failing, so
/// optimizers can treat the unstable region as infeasible.
[[nodiscard]] double evaluate_objective(const SystemParams& params,
                                        const ObjectiveSpec& objective);

struct OptimizeOptions {
  int coarse_points = 1000;        // first-stage grid over [0, G-(1 - margin)]
  double rel_width = 1e-6;         // golden-section stop, relative to bracket
  double stability_margin = 1e-7;  // keeps the search inside G+ < G-
};

struct Optimum {
  double g_plus_opt = 0.0;      // rad/s
  double ratio_opt = 0.0;       // G+/G-
  double objective_value = 0.0;
  int iterations = 0;           // golden-section refinement steps
};

/// Minimizes the objective over G+ in [0, G-(1 - margin)]: coarse grid, then
/// golden-section refinement around the grid argmin. Deterministic for fixed
/// inputs, and never returns a value above the best coarse-grid point.
/// Throws std::domain_error when G- = 0; objective failures are rethrown
/// with the offending G+ attached.
[[nodiscard]] Optimum optimize_gplus(const SystemParams& params,
                                     const ObjectiveSpec& objective,
                                     const OptimizeOptions& options = {});

/// One sweep axis: a raw-config field name and its grid, in config units
/// (Hz or K).
struct AxisSpec {
  std::string name;
  std::vector<double> values;
};

struct SweepSpec {
  SystemParams base;
  std::vector<AxisSpec> axes;  // 1 or 2
  ObjectiveSpec objective;
  bool optimize_g_plus = false;
  OptimizeOptions optimize_options;
};

/// One grid point of a sweep. A nonempty `error` marks a per-point failure
/// (values are NaN); the sweep itself continues.
struct SweepRow {
  std::vector<double> axis_values;
  double objective_value = 0.0;
  double squeezing_db = 0.0;
  double g_plus_opt = 0.0;  // rad/s; the base G+ when not optimizing
  std::string error;

  [[nodiscard]] bool ok() const noexcept { return error.empty(); }
};

/// Evaluates the objective over the axis grid (outer axis first), optionally
/// optimizing G+ per point. Rows come back in deterministic grid order;
/// points are evaluated in parallel.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Loads a sweep spec from the params config format extended with an `axes`
/// section (see README). Throws ConfigError / ValidationError.
[[nodiscard]] SweepSpec load_sweep_config(const std::string& json_text);

/// Worst-case squeezing loss (dB) when G+/G- misses the optimum by
/// +-delta_ratio (relative). The drive-ratio precision diagnostic.
[[nodiscard]] double sensitivity_loss_db(const SystemParams& params,
                                         const ObjectiveSpec& objective,
                                         double delta_ratio,
                                         const OptimizeOptions& options = {});

}  // namespace magnomech
