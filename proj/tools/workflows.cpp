#include "workflows.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "magnomech/floquet.hpp"
#include "magnomech/grids.hpp"
#include "magnomech/parallel.hpp"
#include "magnomech/rwa_spectrum.hpp"
#include "magnomech/steadystate.hpp"
#include "magnomech/sweep.hpp"

namespace magnomech::workflows {

namespace {

constexpr double kPhiOptimal = std::numbers::pi / 2.0;

Table sweep_to_table(const SweepSpec& spec, const std::vector<std::string>& axis_columns) {
  const std::vector<SweepRow> rows = run_sweep(spec);
  Table t;
  t.columns = axis_columns;
  t.columns.insert(t.columns.end(), {"squeezing_db", "g_plus_opt_hz", "error"});
  for (const auto& row : rows) {
    auto& out = t.add_row();
    for (double v : row.axis_values) out.emplace_back(v);
    out.emplace_back(row.squeezing_db);
    out.emplace_back(row.g_plus_opt / two_pi);
    out.emplace_back(row.error);
  }
  return t;
}

// Squeezing of the output field vs drive ratio for several bath temperatures.
Table drive_ratio_table(const SystemParams& base) {
  const auto& temps = bath_temperatures_k();
  const auto ratios = drive_ratio_grid();
  Table t;
  t.columns = {"temperature_k", "g_plus_over_g_minus", "s_total", "squeezing_db"};
  t.rows.resize(temps.size() * ratios.size());
  parallel_for(t.rows.size(), [&](std::size_t idx) {
    const double temp = temps[idx / ratios.size()];
    const double ratio = ratios[idx % ratios.size()];
    const SystemParams p =
        base.with("temperature_k", temp)
            .with("g_plus_hz", ratio * base.raw().g_minus_hz);
    const NsdPoint pt = nsd_zero_freq(p);
    t.rows[idx] = {Table::Cell{temp}, Table::Cell{ratio},
                   Table::Cell{pt.s_total}, Table::Cell{pt.squeezing_db}};
  });
  return t;
}

// Steady-state mechanical/cavity quadrature variances vs drive ratio.
Table quadrature_variance_table(const SystemParams& base) {
  const auto& temps = bath_temperatures_k();
  const auto ratios = drive_ratio_grid();
  Table t;
  t.columns = {"temperature_k",  "g_plus_over_g_minus",
               "mech_x_var",     "mech_x_squeezing_db",
               "cavity_y_var",   "cavity_y_squeezing_db"};
  t.rows.resize(temps.size() * ratios.size());
  parallel_for(t.rows.size(), [&](std::size_t idx) {
    const double temp = temps[idx / ratios.size()];
    const double ratio = ratios[idx % ratios.size()];
    const SystemParams p =
        base.with("temperature_k", temp)
            .with("g_plus_hz", ratio * base.raw().g_minus_hz);
    const CovarianceState state = steady_covariance(p);
    t.rows[idx] = {Table::Cell{temp},
                   Table::Cell{ratio},
                   Table::Cell{state.var_x[1]},
                   Table::Cell{squeezing_db(state.var_x[1])},
                   Table::Cell{state.var_y[0]},
                   Table::Cell{squeezing_db(state.var_y[0])}};
  });
  return t;
}

// RWA vs exact solve over the drive ratio at one coupling strength.
Table rwa_comparison_table(const SystemParams& base, double coupling_fraction) {
  const double coupling_hz = coupling_fraction * base.raw().omega_b_hz;
  const SystemParams strong =
      base.with("g_hz", coupling_hz).with("g_minus_hz", coupling_hz);
  const auto ratios = wide_ratio_grid();
  Table t;
  t.columns = {"g_plus_over_g_minus", "s_rwa",
               "s_floquet_l1",        "s_floquet_l2",
               "squeezing_db_rwa",    "squeezing_db_floquet_l1"};
  t.rows.resize(ratios.size());
  parallel_for(ratios.size(), [&](std::size_t idx) {
    const double ratio = ratios[idx];
    const SystemParams p =
        strong.with("g_plus_hz", ratio * strong.raw().g_minus_hz);
    const NsdPoint rwa = nsd_zero_freq(p);
    const NsdPoint fl1 = floquet_nsd(p, 0.0, kPhiOptimal, 1);
    const NsdPoint fl2 = floquet_nsd(p, 0.0, kPhiOptimal, 2);
    t.rows[idx] = {Table::Cell{ratio},           Table::Cell{rwa.s_total},
                   Table::Cell{fl1.s_total},     Table::Cell{fl2.s_total},
                   Table::Cell{rwa.squeezing_db},
                   Table::Cell{fl1.squeezing_db}};
  });
  return t;
}

SweepSpec optimized_sweep(const SystemParams& base, AxisSpec outer, AxisSpec inner) {
  SweepSpec spec{base, {std::move(outer), std::move(inner)}, {}, true, {}};
  spec.objective = {Objective::rwa_nsd, 0.0, kPhiOptimal, 1};
  return spec;
}

}  // namespace

RawParams baseline_raw() {
  RawParams raw;
  raw.omega_a_hz = 10e9;
  raw.omega_m_hz = 10e9;
  raw.omega_b_hz = 30e6;
  raw.kappa_a_hz = 1e6;
  raw.kappa_m_hz = 1e6;
  raw.gamma_b_hz = 100.0;
  raw.g_hz = 3e6;
  raw.g_minus_hz = 3e6;
  raw.g_plus_hz = 2999845.9;  // squeezing optimum for this operating point
  raw.temperature_k = 0.01;
  return raw;
}

SystemParams default_base() { return SystemParams::validated(baseline_raw()); }

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> targets = {
      "fig2b", "fig2c", "fig3", "fig4", "fig5a", "fig5b", "fig5c", "figA"};
  return targets;
}

const std::vector<double>& bath_temperatures_k() {
  static const std::vector<double> temps = {0.01, 0.1, 1.0};
  return temps;
}

std::vector<double> drive_ratio_grid() {
  // Log-refined towards ratio 1: the squeezing optimum sits within 1e-4 of
  // the boundary at small mechanical damping.
  auto one_minus = geomspace(1e-6, 1.0, 400);
  std::vector<double> ratios(one_minus.size());
  for (std::size_t i = 0; i < one_minus.size(); ++i)
    ratios[i] = 1.0 - one_minus[one_minus.size() - 1 - i];
  return ratios;
}

std::vector<double> wide_ratio_grid() { return linspace(0.0, 0.998, 200); }

std::vector<double> coupling_sweep_grid_hz() { return geomspace(1e4, 1e7, 100); }

std::vector<double> cavity_magnon_grid_hz() { return geomspace(1e5, 1e7, 100); }

std::vector<double> cavity_decay_grid_hz() { return geomspace(3e5, 3e6, 100); }

std::vector<double> mech_damping_grid_hz() { return geomspace(1e2, 3e6, 100); }

FigureTable reproduce(const std::string& target, const SystemParams& base) {
  if (target == "fig2b") {
    const SystemParams b = base.with("gamma_b_hz", 100.0);
    return {drive_ratio_table(b), b};
  }
  if (target == "fig2c") {
    const SystemParams b = base.with("gamma_b_hz", 1e4);
    return {drive_ratio_table(b), b};
  }
  if (target == "fig3") {
    const SystemParams b = base.with("gamma_b_hz", 1e4);
    auto spec = optimized_sweep(b, {"g_minus_hz", coupling_sweep_grid_hz()},
                                {"g_hz", cavity_magnon_grid_hz()});
    return {sweep_to_table(spec, {"g_minus_hz", "g_hz"}), b};
  }
  if (target == "fig4") {
    const SystemParams b = base.with("gamma_b_hz", 1e4);
    auto spec = optimized_sweep(b, {"kappa_a_hz", cavity_decay_grid_hz()},
                                {"gamma_b_hz", mech_damping_grid_hz()});
    return {sweep_to_table(spec, {"kappa_a_hz", "gamma_b_hz"}), b};
  }
  if (target == "fig5a" || target == "fig5b" || target == "fig5c") {
    const double fraction =
        target == "fig5a" ? 0.05 : (target == "fig5b" ? 0.1 : 0.5);
    const SystemParams b = base.with("gamma_b_hz", 1e4);
    return {rwa_comparison_table(b, fraction), b};
  }
  if (target == "figA") {
    const SystemParams b = base.with("gamma_b_hz", 100.0);
    return {quadrature_variance_table(b), b};
  }
  throw std::invalid_argument("unknown reproduce target: " + target);
}

}  // namespace magnomech::workflows
