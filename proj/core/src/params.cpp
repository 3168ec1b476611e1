#include "magnomech/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace magnomech {

namespace {

using Field = double RawParams::*;

struct FieldEntry {
  const char* key;
  Field member;
};

constexpr FieldEntry kFields[] = {
    {"omega_a_hz", &RawParams::omega_a_hz},
    {"omega_m_hz", &RawParams::omega_m_hz},
    {"omega_b_hz", &RawParams::omega_b_hz},
    {"kappa_a_hz", &RawParams::kappa_a_hz},
    {"kappa_m_hz", &RawParams::kappa_m_hz},
    {"gamma_b_hz", &RawParams::gamma_b_hz},
    {"g_hz", &RawParams::g_hz},
    {"g_minus_hz", &RawParams::g_minus_hz},
    {"g_plus_hz", &RawParams::g_plus_hz},
    {"temperature_k", &RawParams::temperature_k},
};

std::string join(const std::vector<std::string>& parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out << "; ";
    out << parts[i];
  }
  return out.str();
}

// Known stems let the loader distinguish a wrong unit tag from a plain
// unknown key.
bool matches_known_stem(const std::string& key, std::string& expected) {
  for (const auto& f : kFields) {
    std::string known(f.key);
    auto stem = known.substr(0, known.rfind('_'));
    if (key.size() > stem.size() && key.compare(0, stem.size() + 1, stem + "_") == 0) {
      expected = known;
      return true;
    }
  }
  return false;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::runtime_error("invalid parameters: " + join(issues)),
      issues_(std::move(issues)) {}

std::vector<std::string> SystemParams::validate(const RawParams& raw) {
  std::vector<std::string> issues;
  auto check_finite = [&](const char* name, double v) {
    if (!std::isfinite(v)) {
      issues.push_back(std::string(name) + " must be finite");
      return false;
    }
    return true;
  };
  auto require_positive = [&](const char* name, double v) {
    if (check_finite(name, v) && !(v > 0.0))
      issues.push_back(std::string(name) + " must be > 0");
  };
  auto require_nonnegative = [&](const char* name, double v) {
    if (check_finite(name, v) && !(v >= 0.0))
      issues.push_back(std::string(name) + " must be >= 0");
  };

  // Frequencies and dissipation rates are strictly positive; couplings may
  // vanish (decoupled limits are legitimate operating points).
  require_positive("omega_a_hz", raw.omega_a_hz);
  require_positive("omega_m_hz", raw.omega_m_hz);
  require_positive("omega_b_hz", raw.omega_b_hz);
  require_positive("kappa_a_hz", raw.kappa_a_hz);
  require_positive("kappa_m_hz", raw.kappa_m_hz);
  require_positive("gamma_b_hz", raw.gamma_b_hz);
  require_nonnegative("g_hz", raw.g_hz);
  require_nonnegative("g_minus_hz", raw.g_minus_hz);
  require_nonnegative("g_plus_hz", raw.g_plus_hz);
  require_nonnegative("temperature_k", raw.temperature_k);

  if (std::isfinite(raw.omega_a_hz) && std::isfinite(raw.omega_m_hz) &&
      raw.omega_a_hz != raw.omega_m_hz) {
    issues.push_back("resonance condition violated: omega_a_hz must equal omega_m_hz");
  }
  return issues;
}

SystemParams SystemParams::validated(const RawParams& raw) {
  auto issues = validate(raw);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return SystemParams(raw);
}

bool SystemParams::rwa_valid() const noexcept {
  const double m = std::max({raw_.kappa_a_hz, raw_.kappa_m_hz, raw_.g_hz,
                             raw_.g_minus_hz, raw_.g_plus_hz});
  return m <= raw_.omega_b_hz / 10.0;
}

SystemParams SystemParams::with(const std::string& key, double value) const {
  RawParams raw = raw_;
  for (const auto& f : kFields) {
    if (key == f.key) {
      raw.*(f.member) = value;
      return validated(raw);
    }
  }
  throw std::invalid_argument("unknown parameter field: " + key);
}

SystemParams SystemParams::with_g_plus(double g_plus_rad_s) const {
  RawParams raw = raw_;
  raw.g_plus_hz = g_plus_rad_s / two_pi;
  return validated(raw);
}

const std::vector<std::string>& SystemParams::field_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& f : kFields) v.emplace_back(f.key);
    return v;
  }();
  return names;
}

double thermal_occupation(double omega_rad_s, double temperature_k) {
  if (!(omega_rad_s > 0.0))
    throw std::domain_error("thermal_occupation: omega must be > 0");
  if (!(temperature_k >= 0.0))
    throw std::domain_error("thermal_occupation: temperature must be >= 0");
  if (temperature_k == 0.0) return 0.0;
  // expm1 keeps precision for small exponents; overflow to inf gives 0.
  return 1.0 / std::expm1(hbar * omega_rad_s / (boltzmann_k * temperature_k));
}

ThermalOccupations thermal_occupations(const SystemParams& params) {
  return {thermal_occupation(params.omega_a(), params.temperature()),
          thermal_occupation(params.omega_m(), params.temperature()),
          thermal_occupation(params.omega_b(), params.temperature())};
}

RawParams parse_raw_config(const std::string& json_text, bool allow_extra_keys) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config parse failure: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  RawParams raw;
  for (const auto& f : kFields) {
    auto it = doc.find(f.key);
    if (it == doc.end())
      throw ConfigError(std::string("missing key ") + f.key);
    if (!it->is_number())
      throw ConfigError(std::string("key ") + f.key + " must be a number");
    raw.*(f.member) = it->get<double>();
  }
  if (!allow_extra_keys) {
    for (const auto& [key, value] : doc.items()) {
      bool known = false;
      for (const auto& f : kFields) known = known || key == f.key;
      if (known) continue;
      std::string expected;
      if (matches_known_stem(key, expected))
        throw ConfigError("unknown unit tag in key '" + key + "' (expected " +
                          expected + ")");
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  return raw;
}

SystemParams load_config(const std::string& json_text) {
  return SystemParams::validated(parse_raw_config(json_text));
}

SystemParams load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config(buf.str());
}

std::string emit_config(const SystemParams& params) {
  const RawParams& raw = params.raw();
  nlohmann::ordered_json doc;
  for (const auto& f : kFields) doc[f.key] = raw.*(f.member);
  return doc.dump(2) + "\n";
}

}  // namespace magnomech
