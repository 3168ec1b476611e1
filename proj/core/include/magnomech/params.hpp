#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "magnomech/constants.hpp"

namespace magnomech {

/// Config-facing raw parameter set. All `*_hz` entries are ordinary
/// frequencies (nu = omega / 2pi) in Hz; temperature is in kelvin.
struct RawParams {
  double omega_a_hz = 0.0;    // cavity resonance
  double omega_m_hz = 0.0;    // magnon resonance; must equal omega_a_hz
  double omega_b_hz = 0.0;    // mechanical resonance
  double kappa_a_hz = 0.0;    // cavity dissipation
  double kappa_m_hz = 0.0;    // magnon dissipation
  double gamma_b_hz = 0.0;    // mechanical damping
  double g_hz = 0.0;          // cavity-magnon coupling
  double g_minus_hz = 0.0;    // effective coupling, red-sideband drive
  double g_plus_hz = 0.0;     // effective coupling, blue-sideband drive
  double temperature_k = 0.0; // bath temperature, shared by all three modes

  bool operator==(const RawParams&) const = default;
};

/// Carries every violation found in a raw parameter set, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues);
  [[nodiscard]] const std::vector<std::string>& issues() const noexcept {
    return issues_;
  }

 private:
  std::vector<std::string> issues_;
};

/// Malformed config document: parse failure, missing key, unknown key or
/// unit tag.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validated parameter set. Accessors return angular units (rad/s); the raw
/// Hz values are retained so emitted configs round-trip bit-for-bit.
///
/// Immutable after construction; safe to share across threads.
class SystemParams {
 public:
  /// Wraps `raw` after validation. Throws ValidationError listing every
  /// violation.
  static SystemParams validated(const RawParams& raw);

  /// Returns all violations of `raw`; empty means valid.
  [[nodiscard]] static std::vector<std::string> validate(const RawParams& raw);

  [[nodiscard]] double omega_a() const noexcept { return two_pi * raw_.omega_a_hz; }
  [[nodiscard]] double omega_m() const noexcept { return two_pi * raw_.omega_m_hz; }
  [[nodiscard]] double omega_b() const noexcept { return two_pi * raw_.omega_b_hz; }
  [[nodiscard]] double kappa_a() const noexcept { return two_pi * raw_.kappa_a_hz; }
  [[nodiscard]] double kappa_m() const noexcept { return two_pi * raw_.kappa_m_hz; }
  [[nodiscard]] double gamma_b() const noexcept { return two_pi * raw_.gamma_b_hz; }
  [[nodiscard]] double g() const noexcept { return two_pi * raw_.g_hz; }
  [[nodiscard]] double g_minus() const noexcept { return two_pi * raw_.g_minus_hz; }
  [[nodiscard]] double g_plus() const noexcept { return two_pi * raw_.g_plus_hz; }
  [[nodiscard]] double temperature() const noexcept { return raw_.temperature_k; }

  /// Rotating-wave approximation validity flag:
  /// max(kappa_a, kappa_m, g, G-, G+) <= omega_b / 10. Reported as a warning
  /// only; nothing refuses to evaluate when false.
  [[nodiscard]] bool rwa_valid() const noexcept;

  /// G- > G+, the drive hierarchy required for a stationary state.
  [[nodiscard]] bool drive_hierarchy_ok() const noexcept {
    return raw_.g_minus_hz > raw_.g_plus_hz;
  }

  [[nodiscard]] const RawParams& raw() const noexcept { return raw_; }

  /// Copy with one raw field replaced; `key` is a config key such as
  /// "gamma_b_hz". Revalidates. Throws std::invalid_argument on unknown keys.
  [[nodiscard]] SystemParams with(const std::string& key, double value) const;

  /// Copy with the blue-sideband coupling replaced, given in rad/s.
  [[nodiscard]] SystemParams with_g_plus(double g_plus_rad_s) const;

  /// Config keys accepted by with() and the config loader, in schema order.
  [[nodiscard]] static const std::vector<std::string>& field_names();

 private:
  explicit SystemParams(const RawParams& raw) : raw_(raw) {}
  RawParams raw_;
};

struct ThermalOccupations {
  double n_a = 0.0;
  double n_m = 0.0;
  double n_b = 0.0;
};

/// Bose-Einstein occupation [exp(hbar omega / kB T) - 1]^-1.
/// Returns exactly 0 at T = 0. Throws std::domain_error for omega <= 0 or
/// negative temperature.
[[nodiscard]] double thermal_occupation(double omega_rad_s, double temperature_k);

/// Occupations of the three baths at the mode frequencies.
[[nodiscard]] ThermalOccupations thermal_occupations(const SystemParams& params);

/// Parses and validates a JSON config document (flat object with the
/// RawParams keys). Throws ConfigError or ValidationError.
[[nodiscard]] SystemParams load_config(const std::string& json_text);
[[nodiscard]] SystemParams load_config_file(const std::string& path);

/// Inverse of load_config. load_config(emit_config(p)) == p bit-for-bit.
[[nodiscard]] std::string emit_config(const SystemParams& params);

/// Parses just the raw key-value block. With `allow_extra_keys`, unknown
/// keys are ignored (layered formats such as sweep specs use this).
[[nodiscard]] RawParams parse_raw_config(const std::string& json_text,
                                         bool allow_extra_keys = false);

}  // namespace magnomech
