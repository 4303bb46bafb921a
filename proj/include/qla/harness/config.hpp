#pragma once

#include <string>
#include <vector>

#include "qla/kdv/scheme.hpp"

namespace qla::harness {

enum class Problem { Kdv, Maxwell };

// One experiment. Parsed from a TOML-style key = value file; CLI flags
// override file keys. validate() resolves defaults and rejects bad values
// naming the offending key.
struct RunConfig {
  Problem problem = Problem::Kdv;
  kdv::Variant variant = kdv::Variant::UnitaryV1;

  double epsilon = 0.05;
  std::size_t sites = 0;        // kdv lattice size
  std::size_t nx = 0, ny = 0;   // maxwell grid
  long steps = 0;
  long cadence = 100;
  std::string output_dir = "out";
  unsigned workers = 0;  // 0: QLA_WORKERS env or 1
  bool snapshots = true;

  // Initial condition. kdv: soliton | sine | zero | file:<snapshot>;
  // maxwell: xpulse | te-gaussian | zero | file:<snapshot>.
  std::string initial;
  double soliton_c = 0.5;
  double soliton_x0 = 0.0;
  double kdv_a = 0.0;  // target nonlinearity coefficient; 0 = variant default
  double amplitude_scale = 1.0;
  double sine_amp = 0.1;
  int sine_mode = 1;
  double pulse_amp = 0.01;
  double pulse_center = 0.0;
  double pulse_width = 0.25;

  // Refractive index profile (maxwell).
  std::string index_profile = "uniform";  // + linear-ramp | tanh-interface |
                                          // gaussian-lens | file:<grid>
  std::string index_component = "all";    // x | y | z | all
  double index_base = 1.0;
  double index_delta = 0.0;
  double index_center_x = 0.0;
  double index_center_y = 0.0;
  double index_width = 1.0;
  double index_slope_x = 0.0;
  double index_slope_y = 0.0;
  std::string derivative_mode = "analytic";  // analytic | central-difference

  // Convergence studies.
  std::vector<double> epsilons;
  double end_time = 0.0;
  double domain_length = 0.0;
};

// Parses `key = value` lines ('#' comments, blank lines allowed). Unknown
// keys are configuration errors naming the key.
RunConfig parse_config_file(const std::string& path);
void apply_key(RunConfig& cfg, const std::string& key,
               const std::string& value);

// Resolves defaults (initial condition, worker count from QLA_WORKERS,
// soliton center) and validates; appends human-readable warnings.
void validate(RunConfig& cfg, std::vector<std::string>* warnings = nullptr);

}  // namespace qla::harness
