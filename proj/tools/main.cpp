#include <complex>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magnomech/drive.hpp"
#include "magnomech/floquet.hpp"
#include "magnomech/grids.hpp"
#include "magnomech/parallel.hpp"
#include "magnomech/rwa_spectrum.hpp"
#include "magnomech/steadystate.hpp"
#include "magnomech/sweep.hpp"
#include "magnomech/table.hpp"
#include "workflows.hpp"

namespace {

using namespace magnomech;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string path = "-";
  std::string format = "csv";
};

void add_output_options(CLI::App* sub, OutputOptions& out) {
  sub->add_option("-o,--output", out.path, "Output path ('-' for stdout)");
  sub->add_option("--format", out.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const OutputOptions& out, const Table& table,
          const SystemParams* provenance) {
  write_table_file(out.path, table, table_format_from_name(out.format),
                   provenance);
}

std::vector<double> omega_grid_rad(double min_hz, double max_hz, int points) {
  std::vector<double> grid = linspace(min_hz, max_hz, points);
  for (double& v : grid) v *= two_pi;
  return grid;
}

struct SpectrumArgs {
  std::string config;
  double phi = std::numbers::pi / 2.0;
  double omega_min_hz = -5e6;
  double omega_max_hz = 5e6;
  int points = 201;
  OutputOptions out;
};

void run_spectrum(const SpectrumArgs& args) {
  const SystemParams params = load_config_file(args.config);
  const auto grid = omega_grid_rad(args.omega_min_hz, args.omega_max_hz, args.points);
  const NoiseSpectrum spec = spectrum(params, grid, args.phi);

  Table t;
  t.columns = {"omega_over_2pi_hz", "s_a", "s_m", "s_b", "s_total", "squeezing_db"};
  for (const NsdPoint& pt : spec.points) {
    t.rows.push_back({Table::Cell{pt.omega / two_pi}, Table::Cell{pt.s_a},
                      Table::Cell{pt.s_m}, Table::Cell{pt.s_b},
                      Table::Cell{pt.s_total}, Table::Cell{pt.squeezing_db}});
  }
  emit(args.out, t, &params);
}

struct FloquetArgs {
  SpectrumArgs base;
  int truncation_l = 1;
  bool compare_rwa = false;
};

void run_floquet(const FloquetArgs& args) {
  const SystemParams params = load_config_file(args.base.config);
  const auto grid =
      omega_grid_rad(args.base.omega_min_hz, args.base.omega_max_hz, args.base.points);

  std::vector<NsdPoint> points(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    points[i] = floquet_nsd(params, grid[i], args.base.phi, args.truncation_l);
  });

  Table t;
  t.columns = {"omega_over_2pi_hz", "s_a", "s_m", "s_b", "s_total", "squeezing_db"};
  if (args.compare_rwa) {
    t.columns.push_back("s_total_rwa");
    t.columns.push_back("squeezing_db_rwa");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const NsdPoint& pt = points[i];
    auto& row = t.add_row();
    row = {Table::Cell{pt.omega / two_pi}, Table::Cell{pt.s_a},
           Table::Cell{pt.s_m},            Table::Cell{pt.s_b},
           Table::Cell{pt.s_total},        Table::Cell{pt.squeezing_db}};
    if (args.compare_rwa) {
      const NsdPoint rwa = nsd_components(params, grid[i], args.base.phi);
      row.emplace_back(rwa.s_total);
      row.emplace_back(rwa.squeezing_db);
    }
  }
  emit(args.base.out, t, &params);
}

struct SteadyArgs {
  std::string config;
  std::string axis = "g_plus_hz";
  double axis_min = 0.0;
  double axis_max = -1.0;  // resolved after the config loads
  int axis_points = 100;
  bool axis_log = false;
  OutputOptions out;
};

void run_steadystate(const SteadyArgs& args) {
  const SystemParams params = load_config_file(args.config);
  double hi = args.axis_max;
  if (args.axis == "g_plus_hz" && hi < 0.0)
    hi = 0.9999 * params.raw().g_minus_hz;
  if (hi < 0.0)
    throw std::invalid_argument("--axis-max is required for axis " + args.axis);
  const auto grid = args.axis_log ? geomspace(args.axis_min, hi, args.axis_points)
                                  : linspace(args.axis_min, hi, args.axis_points);

  Table t;
  t.columns = {args.axis,   "var_x_a", "var_y_a", "var_x_b",
               "var_y_b",   "var_x_m", "var_y_m", "squeezing_db_a",
               "squeezing_db_b", "squeezing_db_m", "stable", "error"};
  t.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    auto& row = t.rows[i];
    row.emplace_back(grid[i]);
    try {
      const SystemParams p = params.with(args.axis, grid[i]);
      const CovarianceState state = steady_covariance(p);
      const auto modes = quadrature_variances(state);
      for (int mode = 0; mode < 3; ++mode) {
        row.emplace_back(modes[mode].var_x);
        row.emplace_back(modes[mode].var_y);
      }
      for (int mode = 0; mode < 3; ++mode)
        row.emplace_back(modes[mode].squeezing_db);
      row.emplace_back(1.0);
      row.emplace_back(std::string{});
    } catch (const std::exception& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      while (row.size() < 10) row.emplace_back(nan);
      row.emplace_back(0.0);
      row.emplace_back(std::string{e.what()});
    }
  });
  emit(args.out, t, &params);
}

struct OptimizeArgs {
  std::string config;
  std::string objective = "rwa-nsd";
  double omega_hz = 0.0;
  double phi = std::numbers::pi / 2.0;
  int truncation_l = 1;
  OutputOptions out;
};

void run_optimize(const OptimizeArgs& args) {
  const SystemParams params = load_config_file(args.config);
  const ObjectiveSpec objective{objective_from_name(args.objective),
                                two_pi * args.omega_hz, args.phi,
                                args.truncation_l};
  const Optimum opt = optimize_gplus(params, objective);

  Table t;
  t.columns = {"g_plus_opt_hz", "ratio_opt", "objective_value", "squeezing_db",
               "iterations"};
  t.rows.push_back({Table::Cell{opt.g_plus_opt / two_pi},
                    Table::Cell{opt.ratio_opt},
                    Table::Cell{opt.objective_value},
                    Table::Cell{squeezing_db(opt.objective_value)},
                    Table::Cell{static_cast<double>(opt.iterations)}});
  emit(args.out, t, &params);
}

struct SweepArgs {
  std::string config;
  OutputOptions out;
};

void run_sweep_cmd(const SweepArgs& args) {
  std::ifstream in(args.config);
  if (!in) throw ConfigError("cannot open config file: " + args.config);
  std::ostringstream buf;
  buf << in.rdbuf();
  const SweepSpec spec = load_sweep_config(buf.str());
  const std::vector<SweepRow> rows = run_sweep(spec);

  Table t;
  for (const auto& axis : spec.axes) t.columns.push_back(axis.name);
  t.columns.insert(t.columns.end(),
                   {"objective_value", "squeezing_db", "g_plus_opt_hz", "error"});
  for (const auto& row : rows) {
    auto& out = t.add_row();
    for (double v : row.axis_values) out.emplace_back(v);
    out.emplace_back(row.objective_value);
    out.emplace_back(row.squeezing_db);
    out.emplace_back(row.g_plus_opt / two_pi);
    out.emplace_back(row.error);
  }
  emit(args.out, t, &spec.base);
}

struct CalibrateArgs {
  std::string config;
  double g_target_hz = 0.0;
  double g0_hz = 0.0;
  std::string sideband;
  OutputOptions out;
};

void run_calibrate(const CalibrateArgs& args) {
  const SystemParams params = load_config_file(args.config);
  const Sideband sideband =
      args.sideband == "plus" ? Sideband::plus : Sideband::minus;
  const std::complex<double> rabi = calibrate_rabi(
      params, two_pi * args.g_target_hz, two_pi * args.g0_hz, sideband);

  Table t;
  t.columns = {"sideband", "rabi_abs_hz", "rabi_phase_rad"};
  t.rows.push_back({Table::Cell{args.sideband},
                    Table::Cell{std::abs(rabi) / two_pi},
                    Table::Cell{std::arg(rabi)}});
  emit(args.out, t, &params);
}

struct ReproduceArgs {
  std::string target;
  std::string config;
  OutputOptions out;
  bool output_set = false;
};

void run_reproduce(const ReproduceArgs& args) {
  const SystemParams base = args.config.empty()
                                ? workflows::default_base()
                                : load_config_file(args.config);
  const workflows::FigureTable figure = workflows::reproduce(args.target, base);
  OutputOptions out = args.out;
  if (!args.output_set)
    out.path = args.target + (out.format == "json" ? ".json" : ".csv");
  emit(out, figure.table, &figure.base);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Microwave output-field squeezing in cavity magnomechanics"};
  app.require_subcommand(1);

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "RWA output-field noise spectral density");
  spectrum_cmd->add_option("--config", spectrum_args.config, "Params config (JSON)")
      ->required();
  spectrum_cmd->add_option("--phi", spectrum_args.phi, "Quadrature angle (rad)");
  spectrum_cmd->add_option("--omega-min-hz", spectrum_args.omega_min_hz,
                           "Grid start, omega/2pi (Hz)");
  spectrum_cmd->add_option("--omega-max-hz", spectrum_args.omega_max_hz,
                           "Grid end, omega/2pi (Hz)");
  spectrum_cmd->add_option("--points", spectrum_args.points, "Grid size")
      ->check(CLI::Range(2, 1000000));
  add_output_options(spectrum_cmd, spectrum_args.out);

  FloquetArgs floquet_args;
  auto* floquet_cmd = app.add_subcommand(
      "floquet", "Exact NSD with counter-rotating terms (frequency-space solve)");
  floquet_cmd->add_option("--config", floquet_args.base.config, "Params config (JSON)")
      ->required();
  floquet_cmd->add_option("--phi", floquet_args.base.phi, "Quadrature angle (rad)");
  floquet_cmd->add_option("--omega-min-hz", floquet_args.base.omega_min_hz,
                          "Grid start, omega/2pi (Hz)");
  floquet_cmd->add_option("--omega-max-hz", floquet_args.base.omega_max_hz,
                          "Grid end, omega/2pi (Hz)");
  floquet_cmd->add_option("--points", floquet_args.base.points, "Grid size")
      ->check(CLI::Range(2, 1000000));
  floquet_cmd->add_option("--l", floquet_args.truncation_l,
                          "Harmonic truncation order")
      ->check(CLI::Range(0, 32));
  floquet_cmd->add_flag("--compare-rwa", floquet_args.compare_rwa,
                        "Also emit the RWA columns");
  add_output_options(floquet_cmd, floquet_args.base.out);

  SteadyArgs steady_args;
  auto* steady_cmd = app.add_subcommand(
      "steadystate", "Steady-state quadrature variances vs a swept parameter");
  steady_cmd->add_option("--config", steady_args.config, "Params config (JSON)")
      ->required();
  steady_cmd->add_option("--axis", steady_args.axis, "Swept raw-config field");
  steady_cmd->add_option("--axis-min", steady_args.axis_min, "Axis start");
  steady_cmd->add_option("--axis-max", steady_args.axis_max, "Axis end");
  steady_cmd->add_option("--axis-points", steady_args.axis_points, "Axis size")
      ->check(CLI::Range(1, 1000000));
  steady_cmd->add_flag("--axis-log", steady_args.axis_log, "Log-spaced axis");
  add_output_options(steady_cmd, steady_args.out);

  OptimizeArgs optimize_args;
  auto* optimize_cmd =
      app.add_subcommand("optimize", "Optimize G+ for a squeezing objective");
  optimize_cmd->add_option("--config", optimize_args.config, "Params config (JSON)")
      ->required();
  optimize_cmd
      ->add_option("--objective", optimize_args.objective,
                   "rwa-nsd | floquet-nsd | mech-variance | cavity-variance")
      ->check(CLI::IsMember(
          {"rwa-nsd", "floquet-nsd", "mech-variance", "cavity-variance"}));
  optimize_cmd->add_option("--omega-hz", optimize_args.omega_hz,
                           "Evaluation frequency, omega/2pi (Hz)");
  optimize_cmd->add_option("--phi", optimize_args.phi, "Quadrature angle (rad)");
  optimize_cmd->add_option("--l", optimize_args.truncation_l,
                           "Truncation for the floquet-nsd objective");
  add_output_options(optimize_cmd, optimize_args.out);

  SweepArgs sweep_args;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Parameter sweep from a config with axes");
  sweep_cmd->add_option("--config", sweep_args.config, "Sweep config (JSON)")
      ->required();
  add_output_options(sweep_cmd, sweep_args.out);

  CalibrateArgs calibrate_args;
  auto* calibrate_cmd = app.add_subcommand(
      "calibrate", "Drive Rabi frequency required for a target coupling");
  calibrate_cmd->add_option("--config", calibrate_args.config, "Params config (JSON)")
      ->required();
  calibrate_cmd
      ->add_option("--g-target-hz", calibrate_args.g_target_hz,
                   "Target coupling G/2pi (Hz)")
      ->required();
  calibrate_cmd
      ->add_option("--g0-hz", calibrate_args.g0_hz,
                   "Bare magnomechanical coupling G0/2pi (Hz)")
      ->required();
  calibrate_cmd->add_option("--sideband", calibrate_args.sideband, "plus | minus")
      ->required()
      ->check(CLI::IsMember({"plus", "minus"}));
  add_output_options(calibrate_cmd, calibrate_args.out);

  ReproduceArgs reproduce_args;
  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "Figure-reproduction workflows");
  reproduce_cmd
      ->add_option("target", reproduce_args.target,
                   "fig2b fig2c fig3 fig4 fig5a fig5b fig5c figA")
      ->required()
      ->check(CLI::IsMember(workflows::reproduce_targets()));
  reproduce_cmd->add_option("--config", reproduce_args.config,
                            "Base params config (defaults to the built-in baseline)");
  auto* out_opt = reproduce_cmd->add_option("-o,--output", reproduce_args.out.path,
                                            "Output path (default <target>.csv)");
  reproduce_cmd->add_option("--format", reproduce_args.out.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  reproduce_args.output_set = out_opt->count() > 0;

  try {
    if (spectrum_cmd->parsed()) run_spectrum(spectrum_args);
    if (floquet_cmd->parsed()) run_floquet(floquet_args);
    if (steady_cmd->parsed()) run_steadystate(steady_args);
    if (optimize_cmd->parsed()) run_optimize(optimize_args);
    if (sweep_cmd->parsed()) run_sweep_cmd(sweep_args);
    if (calibrate_cmd->parsed()) run_calibrate(calibrate_args);
    if (reproduce_cmd->parsed()) run_reproduce(reproduce_args);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
