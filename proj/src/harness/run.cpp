#include "qla/harness/run.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "qla/errors.hpp"
#include "qla/harness/io.hpp"
#include "qla/kdv/diagnostics.hpp"
#include "qla/kdv/soliton.hpp"
#include "qla/maxwell/em.hpp"
#include "qla/maxwell/scheme.hpp"
#include "qla/reductions.hpp"

#ifndef QLA_VERSION
#define QLA_VERSION "unknown"
#endif

namespace qla::harness {

namespace {

double wrap_half(double u, double length) {
  u = std::fmod(u, length);
  if (u < -0.5 * length) u += length;
  if (u >= 0.5 * length) u -= length;
  return u;
}

maxwell::RefractiveIndexField build_index_field(const RunConfig& cfg) {
  const Extents dims{cfg.nx, cfg.ny};
  if (cfg.index_profile.rfind("file:", 0) == 0) {
    Extents file_dims;
    auto planes = read_index_grid(cfg.index_profile.substr(5), &file_dims);
    if (!(file_dims == dims)) {
      throw ConfigError("config key 'index_profile': grid file extents do "
                        "not match nx/ny");
    }
    if (planes.size() != 3) {
      throw ConfigError("config key 'index_profile': grid file must carry "
                        "3 components");
    }
    return maxwell::RefractiveIndexField::from_planes(std::move(planes), dims,
                                                      cfg.epsilon);
  }

  maxwell::IndexProfile profile;
  if (cfg.index_profile == "uniform") {
    profile.shape = maxwell::IndexProfile::Shape::Uniform;
  } else if (cfg.index_profile == "linear-ramp") {
    profile.shape = maxwell::IndexProfile::Shape::LinearRamp;
  } else if (cfg.index_profile == "tanh-interface") {
    profile.shape = maxwell::IndexProfile::Shape::TanhInterface;
  } else {
    profile.shape = maxwell::IndexProfile::Shape::GaussianLens;
  }
  profile.apply_x = cfg.index_component == "x" || cfg.index_component == "all";
  profile.apply_y = cfg.index_component == "y" || cfg.index_component == "all";
  profile.apply_z = cfg.index_component == "z" || cfg.index_component == "all";
  profile.base = cfg.index_base;
  profile.delta = cfg.index_delta;
  profile.center_x = cfg.index_center_x;
  profile.center_y = cfg.index_center_y;
  profile.width = cfg.index_width;
  profile.slope_x = cfg.index_slope_x;
  profile.slope_y = cfg.index_slope_y;
  const auto mode = cfg.derivative_mode == "analytic"
                        ? maxwell::DerivMode::Analytic
                        : maxwell::DerivMode::CentralDifference;
  return maxwell::RefractiveIndexField::from_profile(profile, dims,
                                                     cfg.epsilon, mode);
}

}  // namespace

AmplitudeField build_initial_field(const RunConfig& cfg) {
  if (cfg.initial.rfind("file:", 0) == 0) {
    AmplitudeField field = read_snapshot(cfg.initial.substr(5), cfg.epsilon);
    const int want_ncomp = cfg.problem == Problem::Kdv ? 2 : 6;
    const Extents want = cfg.problem == Problem::Kdv
                             ? Extents{cfg.sites, 1}
                             : Extents{cfg.nx, cfg.ny};
    if (field.ncomp() != want_ncomp || !(field.dims() == want)) {
      throw ConfigError("config key 'initial': snapshot shape does not match "
                        "the configured lattice");
    }
    if (!field.all_finite()) {
      throw ConfigError("config key 'initial': snapshot contains non-finite "
                        "values");
    }
    return field;
  }

  if (cfg.problem == Problem::Kdv) {
    const double length = cfg.epsilon * static_cast<double>(cfg.sites);
    AmplitudeField field(Extents{cfg.sites, 1}, 2, cfg.epsilon);
    if (cfg.initial == "soliton") {
      const auto coeffs = kdv::effective_coefficients(cfg.variant, cfg.kdv_a);
      field = kdv::soliton_init(
          {coeffs.a, coeffs.b, cfg.soliton_c, cfg.soliton_x0}, cfg.sites,
          cfg.epsilon);
    } else if (cfg.initial == "sine") {
      const double k =
          2.0 * std::numbers::pi * cfg.sine_mode / length;
      for (std::size_t j = 0; j < cfg.sites; ++j) {
        const double psi = cfg.sine_amp * std::sin(k * cfg.epsilon * j);
        field.at(j, 0) = 0.5 * psi;
        field.at(j, 1) = 0.5 * psi;
      }
    }
    if (cfg.amplitude_scale != 1.0) {
      for (int c = 0; c < 2; ++c) {
        for (auto& v : field.plane(c)) v *= cfg.amplitude_scale;
      }
    }
    return field;
  }

  const Extents dims{cfg.nx, cfg.ny};
  AmplitudeField field(dims, 6, cfg.epsilon);
  const double lx = cfg.epsilon * static_cast<double>(cfg.nx);
  const double ly = cfg.epsilon * static_cast<double>(cfg.ny);
  const double cx = cfg.pulse_center == 0.0 ? 0.5 * lx : cfg.pulse_center;
  if (cfg.initial == "xpulse") {
    // plane-polarized pulse in q1, q5 varying only in x: advects at +x
    // with unit speed in vacuum
    auto q1 = field.plane(1);
    auto q5 = field.plane(5);
    for (std::size_t ix = 0; ix < cfg.nx; ++ix) {
      const double u = wrap_half(cfg.epsilon * ix - cx, lx) / cfg.pulse_width;
      const double v = cfg.pulse_amp * std::exp(-u * u);
      for (std::size_t iy = 0; iy < cfg.ny; ++iy) {
        q1[iy * cfg.nx + ix] = v;
        q5[iy * cfg.nx + ix] = v;
      }
    }
  } else if (cfg.initial == "te-gaussian") {
    // E_z pulse plus B = curl(0,0,A): div B = 0 analytically
    auto q2 = field.plane(2);
    auto q3 = field.plane(3);
    auto q4 = field.plane(4);
    const double cy = 0.5 * ly;
    const double w2 = cfg.pulse_width * cfg.pulse_width;
    for (std::size_t iy = 0; iy < cfg.ny; ++iy) {
      for (std::size_t ix = 0; ix < cfg.nx; ++ix) {
        const double rx = wrap_half(cfg.epsilon * ix - cx, lx);
        const double ry = wrap_half(cfg.epsilon * iy - cy, ly);
        const double g = cfg.pulse_amp * std::exp(-(rx * rx + ry * ry) / w2);
        const std::size_t s = iy * cfg.nx + ix;
        q2[s] = g;
        q3[s] = -2.0 * ry / w2 * g;  // dA/dy
        q4[s] = 2.0 * rx / w2 * g;   // -dA/dx
      }
    }
  }
  return field;
}

namespace {

std::string echo_config(const RunConfig& cfg) {
  std::ostringstream o;
  o.precision(17);
  o << "problem = " << (cfg.problem == Problem::Kdv ? "kdv" : "maxwell")
    << "\n";
  if (cfg.problem == Problem::Kdv) {
    o << "variant = " << kdv::to_string(cfg.variant) << "\n"
      << "sites = " << cfg.sites << "\n"
      << "kdv_a = " << cfg.kdv_a << "\n"
      << "soliton_c = " << cfg.soliton_c << "\n"
      << "soliton_x0 = " << cfg.soliton_x0 << "\n";
  } else {
    o << "nx = " << cfg.nx << "\n"
      << "ny = " << cfg.ny << "\n"
      << "index_profile = " << cfg.index_profile << "\n"
      << "index_component = " << cfg.index_component << "\n"
      << "index_base = " << cfg.index_base << "\n"
      << "index_delta = " << cfg.index_delta << "\n"
      << "derivative_mode = " << cfg.derivative_mode << "\n";
  }
  o << "epsilon = " << cfg.epsilon << "\n"
    << "steps = " << cfg.steps << "\n"
    << "cadence = " << cfg.cadence << "\n"
    << "initial = " << cfg.initial << "\n"
    << "amplitude_scale = " << cfg.amplitude_scale << "\n"
    << "workers = " << cfg.workers << "\n"
    << "snapshots = " << (cfg.snapshots ? "true" : "false") << "\n";
  return o.str();
}

std::string snapshot_name(long step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%08ld.bin", step);
  return buf;
}

}  // namespace

void cmd_run(const RunConfig& config) {
  RunConfig cfg = config;
  std::vector<std::string> warnings;
  validate(cfg, &warnings);

  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);
  const auto out = [&](const std::string& name) {
    return (fs::path(cfg.output_dir) / name).string();
  };

  const auto t_begin = std::chrono::steady_clock::now();
  ParallelExecutor pool(cfg.workers);
  AmplitudeField field = build_initial_field(cfg);
  AmplitudeField last_good = field;
  long last_good_step = 0;

  const bool is_kdv = cfg.problem == Problem::Kdv;
  std::optional<kdv::Stepper> kdv_stepper;
  std::optional<maxwell::Stepper> mx_stepper;
  std::optional<maxwell::RefractiveIndexField> index;
  if (is_kdv) {
    kdv_stepper.emplace(
        kdv::SchemeConfig{cfg.variant, cfg.epsilon, cfg.sites, cfg.kdv_a},
        pool);
  } else {
    index = build_index_field(cfg);
    mx_stepper.emplace(
        maxwell::SchemeConfig{cfg.epsilon, Extents{cfg.nx, cfg.ny}, *index},
        pool);
  }
  const double dt = is_kdv ? kdv_stepper->dt() : mx_stepper->dt();

  const std::vector<std::string> columns =
      is_kdv ? std::vector<std::string>{"step", "time", "l2_norm",
                                        "norm_drift", "mass", "peak_position",
                                        "linf_error", "l2_error"}
             : std::vector<std::string>{"step", "time", "l2_norm",
                                        "norm_drift", "energy", "div_d_max",
                                        "div_b_max"};
  CsvWriter csv(out("diagnostics.csv"), columns);

  const double norm0 = l2_norm(field);
  const bool soliton_ref = is_kdv && cfg.initial == "soliton" &&
                           cfg.amplitude_scale == 1.0;
  const auto coeffs = kdv::effective_coefficients(cfg.variant, cfg.kdv_a);
  const kdv::SolitonParams sparams{coeffs.a, coeffs.b, cfg.soliton_c,
                                   cfg.soliton_x0};

  auto tick = [&](long step, double t) {
    if (!field.all_finite()) {
      write_snapshot(out("snap_lastgood.bin"), last_good);
      throw NumericError("non-finite field at step " + std::to_string(step) +
                         "; last good snapshot from step " +
                         std::to_string(last_good_step));
    }
    const double norm = l2_norm(field);
    const double drift =
        norm0 > 0.0 ? std::fabs(norm - norm0) / norm0 : 0.0;
    if (is_kdv) {
      const auto d = kdv::diagnostics(field, sparams, t);
      csv.row({static_cast<double>(step), t, norm, drift, d.mass,
               d.peak_position,
               soliton_ref ? d.linf_error
                           : std::numeric_limits<double>::quiet_NaN(),
               soliton_ref ? d.l2_error
                           : std::numeric_limits<double>::quiet_NaN()});
    } else {
      const auto d = maxwell::em_diagnostics(field, *index, norm0);
      csv.row({static_cast<double>(step), t, norm, drift, d.energy,
               d.div_d_max, d.div_b_max});
    }
    if (cfg.snapshots) {
      write_snapshot(out(snapshot_name(step)), field);
    }
    last_good = field;
    last_good_step = step;
  };

  auto abort_manifest = [&](const std::string& error) {
    std::ostringstream m;
    m << echo_config(cfg) << "version = " << QLA_VERSION << "\n"
      << "status = aborted\n"
      << "error = " << error << "\n";
    write_text_file(out("manifest"), m.str());
  };

  try {
    tick(0, 0.0);
    for (long step = 1; step <= cfg.steps; ++step) {
      if (is_kdv) {
        kdv_stepper->step(field);
      } else {
        mx_stepper->step(field);
      }
      if (step % cfg.cadence == 0 || step == cfg.steps) {
        tick(step, dt * static_cast<double>(step));
      }
    }
  } catch (const NumericError& e) {
    abort_manifest(e.what());
    throw;
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin)
          .count();
  std::ostringstream m;
  m << echo_config(cfg) << "version = " << QLA_VERSION << "\n"
    << "status = ok\n"
    << "wall_time_seconds = " << wall << "\n";
  for (const auto& w : warnings) {
    m << "warning = " << w << "\n";
  }
  write_text_file(out("manifest"), m.str());
}

namespace {

double fit_order(const std::vector<ConvergePoint>& pts, bool skip_first) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = skip_first ? 1 : 0; i < pts.size(); ++i) {
    const double x = std::log(pts[i].epsilon);
    const double y = std::log(pts[i].linf_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

ConvergeResult run_converge(const RunConfig& config) {
  RunConfig base = config;
  if (base.epsilons.size() < 3) {
    throw ConfigError("config key 'epsilons': convergence study needs at "
                      "least 3 values");
  }
  if (!(base.end_time > 0.0)) {
    throw ConfigError("config key 'end_time': must be > 0");
  }
  if (!(base.domain_length > 0.0)) {
    throw ConfigError("config key 'domain_length': must be > 0");
  }

  // Sort coarsest first so the 10% exclusion rule reads naturally.
  std::sort(base.epsilons.begin(), base.epsilons.end(),
            [](double a, double b) { return a > b; });

  double amplitude = 0.0;
  ConvergeResult result;
  for (double eps : base.epsilons) {
    const double n_real = base.domain_length / eps;
    const auto n = static_cast<std::size_t>(std::llround(n_real));
    if (std::fabs(n_real - static_cast<double>(n)) > 1e-9 * n_real) {
      throw ConfigError("config key 'epsilons': domain_length is not an "
                        "integer multiple of epsilon " + std::to_string(eps));
    }

    RunConfig cfg = base;
    cfg.epsilon = eps;
    std::vector<std::string> warnings;
    if (cfg.problem == Problem::Kdv) {
      cfg.sites = n;
      if (cfg.initial.empty()) cfg.initial = "soliton";
      if (cfg.initial != "soliton") {
        throw ConfigError("config key 'initial': kdv convergence study "
                          "needs the soliton initial condition");
      }
    } else {
      cfg.nx = n;
      if (cfg.ny == 0) cfg.ny = 4;
      if (cfg.initial.empty()) cfg.initial = "xpulse";
      if (cfg.initial != "xpulse") {
        throw ConfigError("config key 'initial': maxwell convergence study "
                          "needs the xpulse initial condition");
      }
    }
    validate(cfg, &warnings);

    ParallelExecutor pool(cfg.workers);
    AmplitudeField field = build_initial_field(cfg);

    ConvergePoint point;
    point.epsilon = eps;
    point.sites = field.sites();

    if (cfg.problem == Problem::Kdv) {
      kdv::Stepper stepper(
          {cfg.variant, cfg.epsilon, cfg.sites, cfg.kdv_a}, pool);
      point.steps = std::lround(base.end_time / stepper.dt());
      for (long s = 0; s < point.steps; ++s) stepper.step(field);
      point.time_reached = stepper.dt() * static_cast<double>(point.steps);
      const auto coeffs = kdv::effective_coefficients(cfg.variant, cfg.kdv_a);
      const auto d = kdv::diagnostics(
          field, {coeffs.a, coeffs.b, cfg.soliton_c, cfg.soliton_x0},
          point.time_reached);
      point.linf_error = d.linf_error;
      point.l2_error = d.l2_error;
      amplitude = 3.0 * cfg.soliton_c / coeffs.a;
    } else {
      auto index = build_index_field(cfg);
      maxwell::Stepper stepper(
          {cfg.epsilon, Extents{cfg.nx, cfg.ny}, index}, pool);
      point.steps = std::lround(base.end_time / stepper.dt());
      for (long s = 0; s < point.steps; ++s) stepper.step(field);
      point.time_reached = stepper.dt() * static_cast<double>(point.steps);
      // analytic reference: the pulse advected by t in +x, zero elsewhere
      const double lx = cfg.epsilon * static_cast<double>(cfg.nx);
      const double cx =
          (cfg.pulse_center == 0.0 ? 0.5 * lx : cfg.pulse_center) +
          point.time_reached;
      double linf = 0.0, l2 = 0.0;
      for (int c = 0; c < 6; ++c) {
        const auto plane = field.plane(c);
        for (std::size_t iy = 0; iy < cfg.ny; ++iy) {
          for (std::size_t ix = 0; ix < cfg.nx; ++ix) {
            double ref = 0.0;
            if (c == 1 || c == 5) {
              const double u =
                  wrap_half(cfg.epsilon * ix - cx, lx) / cfg.pulse_width;
              ref = cfg.pulse_amp * std::exp(-u * u);
            }
            const double err = plane[iy * cfg.nx + ix] - ref;
            linf = std::max(linf, std::fabs(err));
            l2 += err * err;
          }
        }
      }
      point.linf_error = linf;
      point.l2_error = std::sqrt(l2 * cfg.epsilon * cfg.epsilon);
      amplitude = cfg.pulse_amp;
    }
    result.points.push_back(point);
  }

  result.coarsest_excluded =
      result.points.front().linf_error > 0.1 * amplitude;
  result.fitted_order = fit_order(result.points, result.coarsest_excluded);
  return result;
}

void cmd_converge(const RunConfig& config) {
  const ConvergeResult result = run_converge(config);

  namespace fs = std::filesystem;
  fs::create_directories(config.output_dir);
  CsvWriter csv((fs::path(config.output_dir) / "converge.csv").string(),
                {"epsilon", "sites", "steps", "time_reached", "linf_error",
                 "l2_error"});
  for (const auto& p : result.points) {
    csv.row({p.epsilon, static_cast<double>(p.sites),
             static_cast<double>(p.steps), p.time_reached, p.linf_error,
             p.l2_error});
    std::printf("eps=%-8.5g sites=%-6zu steps=%-8ld t=%-8.5g linf=%.6e\n",
                p.epsilon, p.sites, p.steps, p.time_reached, p.linf_error);
  }
  std::ostringstream s;
  s << "fitted_order = " << result.fitted_order << "\n"
    << "coarsest_excluded = "
    << (result.coarsest_excluded ? "true" : "false") << "\n";
  write_text_file((fs::path(config.output_dir) / "summary.txt").string(),
                  s.str());
  std::printf("fitted order: %.3f%s\n", result.fitted_order,
              result.coarsest_excluded ? " (coarsest point excluded)" : "");
}

}  // namespace qla::harness
