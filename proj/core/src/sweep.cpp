#include "magnomech/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "magnomech/floquet.hpp"
#include "magnomech/parallel.hpp"
#include "magnomech/rwa_spectrum.hpp"
#include "magnomech/steadystate.hpp"

namespace magnomech {

namespace {

constexpr double kGoldenRatio = 0.6180339887498949;  // (sqrt(5) - 1) / 2

double objective_at_gplus(const SystemParams& params,
                          const ObjectiveSpec& objective, double g_plus) {
  try {
    return evaluate_objective(params.with_g_plus(g_plus), objective);
  } catch (const std::exception& e) {
    throw std::runtime_error("objective evaluation failed at g_plus = " +
                             std::to_string(g_plus / two_pi) + " Hz: " +
                             e.what());
  }
}

}  // namespace

Objective objective_from_name(const std::string& name) {
  if (name == "rwa-nsd") return Objective::rwa_nsd;
  if (name == "floquet-nsd") return Objective::floquet_nsd;
  if (name == "mech-variance") return Objective::mech_variance;
  if (name == "cavity-variance") return Objective::cavity_variance;
  throw std::invalid_argument("unknown objective: " + name);
}

std::string objective_name(Objective objective) {
  switch (objective) {
    case Objective::rwa_nsd: return "rwa-nsd";
    case Objective::floquet_nsd: return "floquet-nsd";
    case Objective::mech_variance: return "mech-variance";
    case Objective::cavity_variance: return "cavity-variance";
  }
  return "unknown";
}

double evaluate_objective(const SystemParams& params,
                          const ObjectiveSpec& objective) {
  switch (objective.kind) {
    case Objective::rwa_nsd:
      return nsd_components(params, objective.omega, objective.phi).s_total;
    case Objective::floquet_nsd:
      return floquet_nsd(params, objective.omega, objective.phi,
                         objective.floquet_l)
          .s_total;
    case Objective::mech_variance:
    case Objective::cavity_variance:
      try {
        const CovarianceState state = steady_covariance(params);
        return objective.kind == Objective::mech_variance ? state.var_x[1]
                                                          : state.var_y[0];
      } catch (const NoStationaryState&) {
        return std::numeric_limits<double>::infinity();
      }
  }
  throw std::logic_error("evaluate_objective: unhandled objective");
}

Optimum optimize_gplus(const SystemParams& params,
                       const ObjectiveSpec& objective,
                       const OptimizeOptions& options) {
  if (!(params.g_minus() > 0.0))
    throw std::domain_error("optimize_gplus: g_minus must be > 0");
  if (options.coarse_points < 3)
    throw std::invalid_argument("optimize_gplus: coarse_points must be >= 3");

  const double hi = params.g_minus() * (1.0 - options.stability_margin);
  const int n = options.coarse_points;

  // Stage 1: coarse grid.
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[i] = hi * static_cast<double>(i) / static_cast<double>(n - 1);
    const double v = objective_at_gplus(params, objective, xs[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }

  // Stage 2: golden-section refinement inside the bracketing grid cells.
  double a = xs[std::max(0, best - 1)];
  double b = xs[std::min(n - 1, best + 1)];
  const double width0 = b - a;
  double c = b - kGoldenRatio * (b - a);
  double d = a + kGoldenRatio * (b - a);
  double fc = objective_at_gplus(params, objective, c);
  double fd = objective_at_gplus(params, objective, d);
  int iterations = 0;
  while (b - a > options.rel_width * width0) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGoldenRatio * (b - a);
      fc = objective_at_gplus(params, objective, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGoldenRatio * (b - a);
      fd = objective_at_gplus(params, objective, d);
    }
    ++iterations;
  }

  double x_opt = fc < fd ? c : d;
  double value = std::min(fc, fd);
  // The coarse argmin is a hard floor: refinement must never regress.
  if (best_value < value) {
    x_opt = xs[best];
    value = best_value;
  }

  return {x_opt, x_opt / params.g_minus(), value, iterations};
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw std::invalid_argument("run_sweep: expected 1 or 2 axes");
  const auto& known = SystemParams::field_names();
  for (const auto& axis : spec.axes) {
    if (std::find(known.begin(), known.end(), axis.name) == known.end())
      throw std::invalid_argument("run_sweep: unknown axis parameter: " +
                                  axis.name);
    if (axis.values.empty())
      throw std::invalid_argument("run_sweep: empty axis grid: " + axis.name);
    for (double v : axis.values)
      if (!std::isfinite(v))
        throw std::invalid_argument("run_sweep: non-finite axis value in " +
                                    axis.name);
  }

  const std::size_t n_outer = spec.axes[0].values.size();
  const std::size_t n_inner = spec.axes.size() == 2 ? spec.axes[1].values.size() : 1;
  std::vector<SweepRow> rows(n_outer * n_inner);

  parallel_for(rows.size(), [&](std::size_t idx) {
    SweepRow& row = rows[idx];
    const std::size_t i = idx / n_inner;
    const std::size_t j = idx % n_inner;
    row.axis_values.push_back(spec.axes[0].values[i]);
    if (spec.axes.size() == 2) row.axis_values.push_back(spec.axes[1].values[j]);

    try {
      SystemParams point = spec.base.with(spec.axes[0].name, row.axis_values[0]);
      if (spec.axes.size() == 2)
        point = point.with(spec.axes[1].name, row.axis_values[1]);

      if (spec.optimize_g_plus) {
        const Optimum opt =
            optimize_gplus(point, spec.objective, spec.optimize_options);
        row.objective_value = opt.objective_value;
        row.g_plus_opt = opt.g_plus_opt;
      } else {
        row.objective_value = evaluate_objective(point, spec.objective);
        row.g_plus_opt = point.g_plus();
      }
      row.squeezing_db = row.objective_value > 0.0
                             ? squeezing_db(row.objective_value)
                             : std::numeric_limits<double>::quiet_NaN();
    } catch (const std::exception& e) {
      row.error = e.what();
      row.objective_value = std::numeric_limits<double>::quiet_NaN();
      row.squeezing_db = std::numeric_limits<double>::quiet_NaN();
      row.g_plus_opt = std::numeric_limits<double>::quiet_NaN();
    }
  });
  return rows;
}

SweepSpec load_sweep_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("sweep config parse failure: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("sweep config must be a JSON object");

  SweepSpec spec{SystemParams::validated(parse_raw_config(json_text, true)),
                 {},
                 {},
                 false,
                 {}};

  auto axes_it = doc.find("axes");
  if (axes_it == doc.end() || !axes_it->is_array() || axes_it->empty())
    throw ConfigError("sweep config needs a nonempty 'axes' array");
  for (const auto& axis : *axes_it) {
    AxisSpec out;
    if (!axis.is_object() || !axis.contains("name"))
      throw ConfigError("each axis needs a 'name'");
    out.name = axis["name"].get<std::string>();
    if (axis.contains("values")) {
      out.values = axis["values"].get<std::vector<double>>();
    } else {
      for (const char* key : {"min", "max", "points"})
        if (!axis.contains(key))
          throw ConfigError("axis '" + out.name +
                            "' needs 'values' or min/max/points");
      const double lo = axis["min"].get<double>();
      const double hi = axis["max"].get<double>();
      const int points = axis["points"].get<int>();
      const bool log_scale = axis.value("scale", "linear") == std::string("log");
      if (points < 1) throw ConfigError("axis points must be >= 1");
      for (int i = 0; i < points; ++i) {
        const double t =
            points == 1 ? 0.0
                        : static_cast<double>(i) / static_cast<double>(points - 1);
        out.values.push_back(log_scale ? lo * std::pow(hi / lo, t)
                                       : lo + (hi - lo) * t);
      }
    }
    spec.axes.push_back(std::move(out));
  }
  if (spec.axes.size() > 2) throw ConfigError("at most 2 axes are supported");

  spec.objective.kind = objective_from_name(doc.value("objective", "rwa-nsd"));
  spec.objective.omega = two_pi * doc.value("omega_hz", 0.0);
  spec.objective.phi = doc.value("phi", std::numbers::pi / 2.0);
  spec.objective.floquet_l = doc.value("floquet_l", 1);
  spec.optimize_g_plus = doc.value("optimize_g_plus", false);
  return spec;
}

double sensitivity_loss_db(const SystemParams& params,
                           const ObjectiveSpec& objective, double delta_ratio,
                           const OptimizeOptions& options) {
  if (!(delta_ratio >= 0.0))
    throw std::domain_error("sensitivity_loss_db: delta_ratio must be >= 0");
  if (delta_ratio == 0.0) return 0.0;

  const Optimum opt = optimize_gplus(params, objective, options);
  const double db_opt = squeezing_db(opt.objective_value);
  double worst = 0.0;
  for (const double factor : {1.0 - delta_ratio, 1.0 + delta_ratio}) {
    const double value = evaluate_objective(
        params.with_g_plus(opt.g_plus_opt * factor), objective);
    worst = std::max(worst, db_opt - squeezing_db(value));
  }
  return worst;
}

}  // namespace magnomech
