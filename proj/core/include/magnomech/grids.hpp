#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace magnomech {

/// n evenly spaced values from lo to hi inclusive (exact endpoints).
[[nodiscard]] inline std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("linspace: n must be >= 2");
  std::vector<double> v(static_cast<std::size_t>(n));
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + step * i;
  v.back() = hi;
  return v;
}

/// n log-spaced values from lo to hi inclusive; lo, hi > 0.
[[nodiscard]] inline std::vector<double> geomspace(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("geomspace: n must be >= 2");
  if (!(lo > 0.0) || !(hi > 0.0))
    throw std::invalid_argument("geomspace: endpoints must be > 0");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    v[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, t);
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

}  // namespace magnomech
