#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qla/harness/config.hpp"

namespace qla::harness {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificationFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericAbort = 3;

// Builds the initial field described by the config (also used by tests).
AmplitudeField build_initial_field(const RunConfig& cfg);

// Executes the stepping loop; writes diagnostics.csv, snapshots at cadence
// ticks, and a manifest into cfg.output_dir. Throws ConfigError /
// NumericError; on a numeric abort the last good snapshot is flushed
// before the exception propagates.
void cmd_run(const RunConfig& cfg);

struct ConvergePoint {
  double epsilon = 0.0;
  std::size_t sites = 0;
  long steps = 0;
  double time_reached = 0.0;
  double linf_error = 0.0;
  double l2_error = 0.0;
};

struct ConvergeResult {
  std::vector<ConvergePoint> points;
  double fitted_order = 0.0;
  bool coarsest_excluded = false;
};

// Fixed-physical-end-time error-vs-epsilon study against the analytic
// reference (soliton for kdv, advected pulse for vacuum maxwell). Needs
// >= 3 epsilons, end_time > 0 and domain_length commensurate with every
// epsilon. The coarsest point is excluded from the fit when its error
// exceeds 10% of the solution amplitude.
ConvergeResult run_converge(const RunConfig& cfg);
void cmd_converge(const RunConfig& cfg);  // run_converge + files/stdout

}  // namespace qla::harness
