#include "qla/harness/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "qla/errors.hpp"
#include "qla/harness/config.hpp"
#include "qla/harness/run.hpp"
#include "qla/harness/verify.hpp"

namespace qla::harness {

namespace {

struct CommonArgs {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
};

// Every CLI override maps onto a config key, so flags and file keys share
// one validation path.
void add_override(CLI::App* cmd, CommonArgs& args, const std::string& flag,
                  const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag,
      [&args, key](const std::string& v) {
        args.overrides.emplace_back(key, v);
      },
      help);
}

void add_common(CLI::App* cmd, CommonArgs& args, bool converge) {
  cmd->add_option("-c,--config", args.config_path,
                  "experiment config file (key = value lines)");
  add_override(cmd, args, "--epsilon", "epsilon", "lattice unit");
  add_override(cmd, args, "--sites", "sites", "1D site count (kdv)");
  add_override(cmd, args, "--nx", "nx", "grid extent in x (maxwell)");
  add_override(cmd, args, "--ny", "ny", "grid extent in y (maxwell)");
  add_override(cmd, args, "--steps", "steps", "number of time steps");
  add_override(cmd, args, "--cadence", "cadence", "diagnostics cadence");
  add_override(cmd, args, "--output-dir", "output_dir", "output directory");
  add_override(cmd, args, "--workers", "workers", "worker thread count");
  add_override(cmd, args, "--variant", "variant",
               "kdv variant: unitary-v1|unitary-v2|non-unitary");
  add_override(cmd, args, "--initial", "initial", "initial condition");
  add_override(cmd, args, "--kdv-a", "kdv_a",
               "target KdV nonlinearity coefficient");
  add_override(cmd, args, "--soliton-c", "soliton_c", "soliton speed");
  add_override(cmd, args, "--soliton-x0", "soliton_x0", "soliton center");
  add_override(cmd, args, "--amplitude-scale", "amplitude_scale",
               "initial-condition amplitude scale");
  add_override(cmd, args, "--snapshots", "snapshots",
               "write field snapshots (true|false)");
  add_override(cmd, args, "--index-profile", "index_profile",
               "refractive index profile (maxwell)");
  if (converge) {
    add_override(cmd, args, "--epsilons", "epsilons",
                 "comma-separated epsilon list");
    add_override(cmd, args, "--time", "end_time", "physical end time");
    add_override(cmd, args, "--domain-length", "domain_length",
                 "physical domain length");
  }
}

RunConfig assemble(const CommonArgs& args, Problem problem) {
  RunConfig cfg;
  if (!args.config_path.empty()) {
    cfg = parse_config_file(args.config_path);
  }
  cfg.problem = problem;
  for (const auto& [key, value] : args.overrides) {
    apply_key(cfg, key, value);
  }
  return cfg;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"qubit lattice algorithm laboratory"};
  app.require_subcommand(1);

  CommonArgs kdv_run_args, kdv_conv_args, mx_run_args, mx_conv_args;
  std::string verify_target, verify_out;

  auto* kdv_cmd = app.add_subcommand("kdv", "1D KdV schemes");
  kdv_cmd->require_subcommand(1);
  auto* kdv_run = kdv_cmd->add_subcommand("run", "time-step an experiment");
  add_common(kdv_run, kdv_run_args, false);
  auto* kdv_conv =
      kdv_cmd->add_subcommand("converge", "error-vs-epsilon study");
  add_common(kdv_conv, kdv_conv_args, true);

  auto* mx_cmd = app.add_subcommand("maxwell", "2D Maxwell scheme");
  mx_cmd->require_subcommand(1);
  auto* mx_run = mx_cmd->add_subcommand("run", "time-step an experiment");
  add_common(mx_run, mx_run_args, false);
  auto* mx_conv =
      mx_cmd->add_subcommand("converge", "error-vs-epsilon study");
  add_common(mx_conv, mx_conv_args, true);

  auto* verify = app.add_subcommand(
      "verify", "symbolic continuum-limit certification");
  verify
      ->add_option("target", verify_target,
                   "kdv-v1|kdv-v2|kdv-nonunitary|maxwell")
      ->required();
  verify->add_option("--out", verify_out, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (kdv_run->parsed()) {
      cmd_run(assemble(kdv_run_args, Problem::Kdv));
    } else if (kdv_conv->parsed()) {
      cmd_converge(assemble(kdv_conv_args, Problem::Kdv));
    } else if (mx_run->parsed()) {
      cmd_run(assemble(mx_run_args, Problem::Maxwell));
    } else if (mx_conv->parsed()) {
      cmd_converge(assemble(mx_conv_args, Problem::Maxwell));
    } else if (verify->parsed()) {
      return cmd_verify(verify_target, verify_out);
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "numeric abort: %s\n", e.what());
    return kExitNumericAbort;
  }
  return kExitOk;
}

}  // namespace qla::harness
