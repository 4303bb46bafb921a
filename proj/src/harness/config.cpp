#include "qla/harness/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qla/errors.hpp"
#include "qla/kdv/soliton.hpp"
#include "qla/parallel.hpp"

namespace qla::harness {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') ||
                        (v.front() == '\'' && v.back() == '\''))) {
    return v.substr(1, v.size() - 2);
  }
  return v;
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double out = 0;
  try {
    out = std::stod(v, &pos);
  } catch (...) {
    throw ConfigError("config key '" + key + "': not a number: " + v);
  }
  if (pos != v.size()) {
    throw ConfigError("config key '" + key + "': not a number: " + v);
  }
  return out;
}

long parse_long(const std::string& key, const std::string& v) {
  const double d = parse_double(key, v);
  const long l = static_cast<long>(d);
  if (static_cast<double>(l) != d) {
    throw ConfigError("config key '" + key + "': not an integer: " + v);
  }
  return l;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("config key '" + key + "': not a bool: " + v);
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(key, item));
  }
  if (out.empty()) {
    throw ConfigError("config key '" + key + "': empty list");
  }
  return out;
}

}  // namespace

void apply_key(RunConfig& cfg, const std::string& key,
               const std::string& raw) {
  const std::string v = unquote(trim(raw));
  if (key == "problem") {
    if (v == "kdv") {
      cfg.problem = Problem::Kdv;
    } else if (v == "maxwell") {
      cfg.problem = Problem::Maxwell;
    } else {
      throw ConfigError("config key 'problem': expected kdv|maxwell, got " + v);
    }
  } else if (key == "variant") {
    if (v == "unitary-v1") {
      cfg.variant = kdv::Variant::UnitaryV1;
    } else if (v == "unitary-v2") {
      cfg.variant = kdv::Variant::UnitaryV2;
    } else if (v == "non-unitary") {
      cfg.variant = kdv::Variant::NonUnitaryPotential;
    } else {
      throw ConfigError(
          "config key 'variant': expected unitary-v1|unitary-v2|non-unitary, "
          "got " + v);
    }
  } else if (key == "epsilon") {
    cfg.epsilon = parse_double(key, v);
  } else if (key == "sites") {
    cfg.sites = static_cast<std::size_t>(parse_long(key, v));
  } else if (key == "nx") {
    cfg.nx = static_cast<std::size_t>(parse_long(key, v));
  } else if (key == "ny") {
    cfg.ny = static_cast<std::size_t>(parse_long(key, v));
  } else if (key == "steps") {
    cfg.steps = parse_long(key, v);
  } else if (key == "cadence") {
    cfg.cadence = parse_long(key, v);
  } else if (key == "output_dir") {
    cfg.output_dir = v;
  } else if (key == "workers") {
    cfg.workers = static_cast<unsigned>(parse_long(key, v));
  } else if (key == "snapshots") {
    cfg.snapshots = parse_bool(key, v);
  } else if (key == "initial") {
    cfg.initial = v;
  } else if (key == "soliton_c") {
    cfg.soliton_c = parse_double(key, v);
  } else if (key == "soliton_x0") {
    cfg.soliton_x0 = parse_double(key, v);
  } else if (key == "kdv_a") {
    cfg.kdv_a = parse_double(key, v);
  } else if (key == "amplitude_scale") {
    cfg.amplitude_scale = parse_double(key, v);
  } else if (key == "sine_amp") {
    cfg.sine_amp = parse_double(key, v);
  } else if (key == "sine_mode") {
    cfg.sine_mode = static_cast<int>(parse_long(key, v));
  } else if (key == "pulse_amp") {
    cfg.pulse_amp = parse_double(key, v);
  } else if (key == "pulse_center") {
    cfg.pulse_center = parse_double(key, v);
  } else if (key == "pulse_width") {
    cfg.pulse_width = parse_double(key, v);
  } else if (key == "index_profile") {
    cfg.index_profile = v;
  } else if (key == "index_component") {
    cfg.index_component = v;
  } else if (key == "index_base") {
    cfg.index_base = parse_double(key, v);
  } else if (key == "index_delta") {
    cfg.index_delta = parse_double(key, v);
  } else if (key == "index_center_x") {
    cfg.index_center_x = parse_double(key, v);
  } else if (key == "index_center_y") {
    cfg.index_center_y = parse_double(key, v);
  } else if (key == "index_width") {
    cfg.index_width = parse_double(key, v);
  } else if (key == "index_slope_x") {
    cfg.index_slope_x = parse_double(key, v);
  } else if (key == "index_slope_y") {
    cfg.index_slope_y = parse_double(key, v);
  } else if (key == "derivative_mode") {
    cfg.derivative_mode = v;
  } else if (key == "epsilons") {
    cfg.epsilons = parse_list(key, v);
  } else if (key == "end_time") {
    cfg.end_time = parse_double(key, v);
  } else if (key == "domain_length") {
    cfg.domain_length = parse_double(key, v);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key = value");
    }
    apply_key(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return cfg;
}

void validate(RunConfig& cfg, std::vector<std::string>* warnings) {
  if (cfg.workers == 0) {
    cfg.workers = ParallelExecutor::worker_count_from_env(1);
  }
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
    throw ConfigError("config key 'epsilon': must satisfy 0 < epsilon < 1");
  }
  if (cfg.steps < 0) {
    throw ConfigError("config key 'steps': must be >= 0");
  }
  if (cfg.cadence < 1) {
    throw ConfigError("config key 'cadence': must be >= 1");
  }
  if (cfg.amplitude_scale <= 0.0) {
    throw ConfigError("config key 'amplitude_scale': must be > 0");
  }
  if (cfg.problem == Problem::Kdv) {
    if (cfg.initial.empty()) cfg.initial = "soliton";
    if (cfg.sites < 4) {
      throw ConfigError("config key 'sites': kdv needs sites >= 4");
    }
    if (cfg.initial == "soliton") {
      if (cfg.soliton_c <= 0.0) {
        throw ConfigError("config key 'soliton_c': must be > 0");
      }
      const double length = cfg.epsilon * static_cast<double>(cfg.sites);
      if (cfg.soliton_x0 == 0.0) cfg.soliton_x0 = 0.25 * length;
      const auto coeffs =
          kdv::effective_coefficients(cfg.variant, cfg.kdv_a);
      const kdv::SolitonParams p{coeffs.a, coeffs.b, cfg.soliton_c,
                                 cfg.soliton_x0};
      // matches the warning rule in soliton_init
      if (12.0 / p.argument_factor() > 0.5 * length && warnings != nullptr) {
        warnings->push_back("soliton wider than half the domain");
      }
    } else if (cfg.initial != "sine" && cfg.initial != "zero" &&
               cfg.initial.rfind("file:", 0) != 0) {
      throw ConfigError("config key 'initial': unknown kdv initial '" +
                        cfg.initial + "'");
    }
  } else {
    if (cfg.initial.empty()) cfg.initial = "xpulse";
    if (cfg.nx < 4 || cfg.ny < 4) {
      throw ConfigError("config keys 'nx'/'ny': maxwell needs extents >= 4");
    }
    if (cfg.initial != "xpulse" && cfg.initial != "te-gaussian" &&
        cfg.initial != "zero" && cfg.initial.rfind("file:", 0) != 0) {
      throw ConfigError("config key 'initial': unknown maxwell initial '" +
                        cfg.initial + "'");
    }
    const bool file_profile = cfg.index_profile.rfind("file:", 0) == 0;
    if (!file_profile && cfg.index_profile != "uniform" &&
        cfg.index_profile != "linear-ramp" &&
        cfg.index_profile != "tanh-interface" &&
        cfg.index_profile != "gaussian-lens") {
      throw ConfigError("config key 'index_profile': unknown profile '" +
                        cfg.index_profile + "'");
    }
    if (cfg.index_component != "x" && cfg.index_component != "y" &&
        cfg.index_component != "z" && cfg.index_component != "all") {
      throw ConfigError("config key 'index_component': expected x|y|z|all");
    }
    if (cfg.derivative_mode != "analytic" &&
        cfg.derivative_mode != "central-difference") {
      throw ConfigError(
          "config key 'derivative_mode': expected analytic|central-difference");
    }
    if (file_profile && cfg.derivative_mode == "analytic") {
      cfg.derivative_mode = "central-difference";
      if (warnings != nullptr) {
        warnings->push_back(
            "index file profiles have no analytic derivatives; using "
            "central differences");
      }
    }
  }
}

}  // namespace qla::harness
