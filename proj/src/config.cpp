#include "dude/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dude {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

enum class FieldKind { real, integer, seed, policy, boolean };

struct FieldDef {
  const char* name;
  FieldKind kind;
  double NetworkConfig::* real_member = nullptr;
  std::int64_t NetworkConfig::* int_member = nullptr;
  std::uint64_t NetworkConfig::* seed_member = nullptr;
  UlPolicy NetworkConfig::* policy_member = nullptr;
  bool NetworkConfig::* bool_member = nullptr;
};

constexpr FieldDef real_field(const char* name, double NetworkConfig::* m) {
  return {name, FieldKind::real, m, nullptr, nullptr, nullptr, nullptr};
}
constexpr FieldDef int_field(const char* name, std::int64_t NetworkConfig::* m) {
  return {name, FieldKind::integer, nullptr, m, nullptr, nullptr, nullptr};
}

const FieldDef kFields[] = {
    real_field("window_side", &NetworkConfig::window_side),
    real_field("macro_density", &NetworkConfig::macro_density),
    real_field("small_density", &NetworkConfig::small_density),
    real_field("ue_density", &NetworkConfig::ue_density),
    real_field("macro_power_dbm", &NetworkConfig::macro_power_dbm),
    real_field("small_power_dbm", &NetworkConfig::small_power_dbm),
    real_field("ue_max_power_dbm", &NetworkConfig::ue_max_power_dbm),
    real_field("small_bias_db", &NetworkConfig::small_bias_db),
    real_field("pathloss_exponent", &NetworkConfig::pathloss_exponent),
    real_field("pathloss_intercept_db", &NetworkConfig::pathloss_intercept_db),
    real_field("min_distance_m", &NetworkConfig::min_distance_m),
    real_field("shadowing_std_db", &NetworkConfig::shadowing_std_db),
    real_field("noise_figure_db", &NetworkConfig::noise_figure_db),
    real_field("bandwidth_hz", &NetworkConfig::bandwidth_hz),
    int_field("num_blocks", &NetworkConfig::num_blocks),
    real_field("pc_p0_dbm", &NetworkConfig::pc_p0_dbm),
    real_field("pc_alpha", &NetworkConfig::pc_alpha),
    int_field("num_drops", &NetworkConfig::num_drops),
    int_field("slots_per_drop", &NetworkConfig::slots_per_drop),
    {"master_seed", FieldKind::seed, nullptr, nullptr,
     &NetworkConfig::master_seed, nullptr, nullptr},
    {"ul_policy", FieldKind::policy, nullptr, nullptr, nullptr,
     &NetworkConfig::ul_policy, nullptr},
    {"decoupled_dl_uses_bias", FieldKind::boolean, nullptr, nullptr, nullptr,
     nullptr, &NetworkConfig::decoupled_dl_uses_bias},
};

const FieldDef* find_field(const std::string& name) {
  for (const auto& f : kFields) {
    if (name == f.name) return &f;
  }
  return nullptr;
}

void require(bool ok, const char* field, const char* what) {
  if (!ok) {
    throw ValidationError(std::string("invalid config: field '") + field +
                          "' " + what);
  }
}

bool is_blank(const std::string& text) {
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(UlPolicy policy) {
  return policy == UlPolicy::coupled ? "coupled" : "decoupled";
}

UlPolicy ul_policy_from_string(const std::string& text) {
  if (text == "coupled") return UlPolicy::coupled;
  if (text == "decoupled") return UlPolicy::decoupled;
  throw ValidationError("invalid config: field 'ul_policy' must be "
                        "\"coupled\" or \"decoupled\", got \"" + text + "\"");
}

void validate(const NetworkConfig& c) {
  require(std::isfinite(c.window_side) && c.window_side > 0.0, "window_side",
          "must be > 0");
  require(std::isfinite(c.macro_density) && c.macro_density >= 0.0,
          "macro_density", "must be >= 0");
  require(std::isfinite(c.small_density) && c.small_density >= 0.0,
          "small_density", "must be >= 0");
  require(std::isfinite(c.ue_density) && c.ue_density >= 0.0, "ue_density",
          "must be >= 0");
  require(std::isfinite(c.macro_power_dbm), "macro_power_dbm", "must be finite");
  require(std::isfinite(c.small_power_dbm), "small_power_dbm", "must be finite");
  require(std::isfinite(c.ue_max_power_dbm), "ue_max_power_dbm",
          "must be finite");
  require(std::isfinite(c.small_bias_db), "small_bias_db", "must be finite");
  require(std::isfinite(c.pathloss_exponent) && c.pathloss_exponent > 2.0,
          "pathloss_exponent", "must be > 2");
  require(std::isfinite(c.pathloss_intercept_db), "pathloss_intercept_db",
          "must be finite");
  require(std::isfinite(c.min_distance_m) && c.min_distance_m > 0.0,
          "min_distance_m", "must be > 0");
  require(std::isfinite(c.shadowing_std_db) && c.shadowing_std_db >= 0.0,
          "shadowing_std_db", "must be >= 0");
  require(std::isfinite(c.noise_figure_db), "noise_figure_db", "must be finite");
  require(std::isfinite(c.bandwidth_hz) && c.bandwidth_hz > 0.0, "bandwidth_hz",
          "must be > 0");
  require(c.num_blocks >= 1, "num_blocks", "must be >= 1");
  require(std::isfinite(c.pc_p0_dbm), "pc_p0_dbm", "must be finite");
  require(std::isfinite(c.pc_alpha) && c.pc_alpha >= 0.0 && c.pc_alpha <= 1.0,
          "pc_alpha", "must be in [0, 1]");
  require(c.num_drops >= 1, "num_drops", "must be >= 1");
  require(c.slots_per_drop >= 1, "slots_per_drop", "must be >= 1");
}

double area_km2(const NetworkConfig& c) {
  const double side_km = c.window_side / 1000.0;
  return side_km * side_km;
}

std::int64_t ue_count(const NetworkConfig& c) {
  return std::llround(c.ue_density * area_km2(c));
}

double block_bandwidth_hz(const NetworkConfig& c) {
  return c.bandwidth_hz / static_cast<double>(c.num_blocks);
}

NetworkConfig config_from_json_text(const std::string& text) {
  NetworkConfig cfg;
  if (!is_blank(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      const FieldDef* f = find_field(key);
      if (f == nullptr) {
        throw ValidationError("invalid config: unknown key '" + key + "'");
      }
      try {
        switch (f->kind) {
          case FieldKind::real:
            require(value.is_number(), f->name, "must be a number");
            cfg.*(f->real_member) = value.get<double>();
            break;
          case FieldKind::integer:
            require(value.is_number_integer(), f->name, "must be an integer");
            cfg.*(f->int_member) = value.get<std::int64_t>();
            break;
          case FieldKind::seed:
            require(value.is_number_integer() &&
                        (value.is_number_unsigned() ||
                         value.get<std::int64_t>() >= 0),
                    f->name, "must be a non-negative integer");
            cfg.*(f->seed_member) = value.get<std::uint64_t>();
            break;
          case FieldKind::policy:
            require(value.is_string(), f->name, "must be a string");
            cfg.*(f->policy_member) =
                ul_policy_from_string(value.get<std::string>());
            break;
          case FieldKind::boolean:
            require(value.is_boolean(), f->name, "must be a boolean");
            cfg.*(f->bool_member) = value.get<bool>();
            break;
        }
      } catch (const nlohmann::json::exception& e) {
        throw ValidationError("invalid config: field '" + key + "': " +
                              e.what());
      }
    }
  }
  validate(cfg);
  return cfg;
}

std::string config_to_json_text(const NetworkConfig& cfg) {
  std::ostringstream out;
  out << "{\n";
  bool first = true;
  for (const auto& f : kFields) {
    if (!first) out << ",\n";
    first = false;
    out << "  \"" << f.name << "\": ";
    switch (f.kind) {
      case FieldKind::real:
        out << fmt17(cfg.*(f.real_member));
        break;
      case FieldKind::integer:
        out << cfg.*(f.int_member);
        break;
      case FieldKind::seed:
        out << cfg.*(f.seed_member);
        break;
      case FieldKind::policy:
        out << '"' << to_string(cfg.*(f.policy_member)) << '"';
        break;
      case FieldKind::boolean:
        out << (cfg.*(f.bool_member) ? "true" : "false");
        break;
    }
  }
  out << "\n}\n";
  return out.str();
}

NetworkConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str());
}

void save_config(const NetworkConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write config file: " + path);
  out << config_to_json_text(cfg);
}

void set_field(NetworkConfig& cfg, const std::string& name, double value) {
  const FieldDef* f = find_field(name);
  if (f == nullptr) {
    throw ValidationError("invalid config: unknown key '" + name + "'");
  }
  switch (f->kind) {
    case FieldKind::real:
      cfg.*(f->real_member) = value;
      break;
    case FieldKind::integer:
      cfg.*(f->int_member) = std::llround(value);
      break;
    case FieldKind::seed:
      require(value >= 0.0, f->name, "must be a non-negative integer");
      cfg.*(f->seed_member) = static_cast<std::uint64_t>(std::llround(value));
      break;
    case FieldKind::policy:
    case FieldKind::boolean:
      throw ValidationError("invalid config: field '" + name +
                            "' is not numeric and cannot be swept");
  }
}

}  // namespace dude
