#include "sgsta/cli.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgsta/analysis.hpp"
#include "sgsta/errors.hpp"
#include "sgsta/table.hpp"

namespace sgsta::cli {

namespace {

struct RunConfig {
  DesignParams params;
  int n_steps = kDefaultSteps;
  int samples = kDefaultProfileSamples;
  std::string out = "-";
  std::string format = "csv";
  bool serial = false;

  // simulate
  std::string device = "sta";
  double B0 = 0.1;
  std::string profile_path;
  std::string target = "auto";

  // sweeps; 0 points means the subcommand default
  double omega_L = 1e6;
  double ratio_min = 0.01;
  double ratio_max = 10.0;
  double t_min = 0.4e-6;
  double t_max = 4e-6;
  double offset_max = 0.1;
  int points = 0;
  bool min_time = false;

  Execution exec() const { return serial ? Execution::serial : Execution::parallel; }

  void validate() const {
    for (double v : {params.gamma, params.T, params.BzI, params.BxF, B0, omega_L, ratio_min, ratio_max, t_min,
                     t_max, offset_max}) {
      if (!std::isfinite(v)) throw InputError("numeric options must be finite");
    }
    if (!(params.BxF < 0.0)) {
      throw InputError("--bxf must be negative: phi(T) = 0 is a local minimum of the pointer longitude only for "
                       "BxF < 0, otherwise phi leaves (0, pi) and the field diverges");
    }
    params.validate();
    if (n_steps < 10) throw InputError("--steps must be at least 10");
    if (samples < 100) throw InputError("--samples must be at least 100");
    if (points < 0 || points == 1) throw InputError("--points must be at least 2");
  }
};

SpinState parse_target(const std::string& name) {
  if (name == "x+") return direction_eigenstate(Vec3::UnitX(), +1);
  if (name == "x-") return direction_eigenstate(Vec3::UnitX(), -1);
  if (name == "z+") return SpinState::basis(+1);
  if (name == "z-") return SpinState::basis(-1);
  throw InputError("unknown --target '" + name + "' (expected x+, x-, z+ or z-)");
}

std::vector<FieldSample> sample_sta_field(const DesignParams& params, int samples) {
  const StaProfile profile(params);
  std::vector<FieldSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double t = (i == samples - 1) ? params.T : params.T * i / (samples - 1);
    out.push_back(profile.field(t));
  }
  return out;
}

int cmd_design(const RunConfig& cfg, TableFormat fmt, std::ostream&) {
  write_table(field_profile_table(sample_sta_field(cfg.params, cfg.samples)), fmt, cfg.out);
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, TableFormat fmt, std::ostream& diag) {
  FieldProfile profile;
  std::string target = cfg.target;
  double T = cfg.params.T;
  if (!cfg.profile_path.empty()) {
    profile = tabulated_profile(field_samples_from_table(read_csv_table(cfg.profile_path)), cfg.profile_path);
    T = profile.t_max;
    if (target == "auto") target = "x-";
  } else if (cfg.device == "sta") {
    profile = sta_profile(cfg.params);
    if (target == "auto") target = "x-";
  } else if (cfg.device == "helicoidal") {
    profile = helicoidal_profile(cfg.B0, T);
    if (target == "auto") target = "x+";
  } else {
    throw InputError("unknown --device '" + cfg.device + "' (expected sta or helicoidal)");
  }
  const Trajectory traj =
      propagate(profile, SpinState::basis(+1), T, cfg.n_steps, parse_target(target), cfg.params.gamma);
  diag << "final fidelity (" << profile.label << ", target " << target
       << "): " << format_number(traj.final_fidelity()) << '\n';
  write_table(trajectory_table(traj), fmt, cfg.out);
  return kExitOk;
}

int cmd_sweep_standard(const RunConfig& cfg, TableFormat fmt, std::ostream&) {
  const int n = cfg.points ? cfg.points : 500;
  const Sweep sweep = sweep_standard(log_grid(cfg.ratio_min, cfg.ratio_max, n), cfg.omega_L, cfg.n_steps, cfg.exec());
  write_table(sweep_table(sweep), fmt, cfg.out);
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg, TableFormat fmt, std::ostream& diag) {
  const DeviceComparison c = compare_devices(cfg.params, cfg.n_steps, cfg.exec());
  diag << "B_av = " << format_number(c.report.B_av) << " G, B_max = " << format_number(c.report.B_max)
       << " G, B_st0 = " << format_number(c.B_st0) << " G\n"
       << "final fidelity: sta " << format_number(c.sta.final_fidelity()) << ", B_av "
       << format_number(c.standard_av.final_fidelity()) << ", B_max "
       << format_number(c.standard_max.final_fidelity()) << ", B_st0 "
       << format_number(c.standard_st0.final_fidelity()) << '\n';
  write_table(comparison_table(c), fmt, cfg.out);
  return kExitOk;
}

int cmd_resilience(const RunConfig& cfg, TableFormat fmt, std::ostream&) {
  if (!(cfg.offset_max > 0.0 && cfg.offset_max <= 0.1)) throw InputError("--offset-max must lie in (0, 0.1]");
  const int n = cfg.points ? cfg.points : 41;
  const Sweep sweep =
      resilience_sweep(cfg.params, linear_grid(-cfg.offset_max, cfg.offset_max, n), cfg.n_steps, cfg.exec());
  write_table(sweep_table(sweep), fmt, cfg.out);
  return kExitOk;
}

std::vector<double> time_grid(const RunConfig& cfg) {
  if (!(cfg.t_min > 0.0)) throw InputError("--t-min must be positive");
  return linear_grid(cfg.t_min, cfg.t_max, cfg.points ? cfg.points : 200);
}

int cmd_resources(const RunConfig& cfg, TableFormat fmt, std::ostream&) {
  write_table(sweep_table(resource_curve(time_grid(cfg), cfg.params, cfg.exec())), fmt, cfg.out);
  return kExitOk;
}

int cmd_speedup(const RunConfig& cfg, TableFormat fmt, std::ostream&) {
  write_table(sweep_table(speedup_curve(time_grid(cfg), cfg.params, cfg.exec())), fmt, cfg.out);
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, TableFormat fmt, std::ostream& diag) {
  const ProfileReport report = validate_profile(cfg.params, cfg.samples);
  write_table(profile_report_table(report), fmt, cfg.out);
  if (cfg.min_time) {
    if (!report.valid) {
      diag << "min-time: template design is invalid at its own T\n";
    } else if (const auto t = min_feasible_time(cfg.params, cfg.samples)) {
      diag << "min feasible T = " << format_number(*t) << " s\n";
    } else {
      diag << "min-time: no lower bound in range (valid down to T/100)\n";
    }
  }
  if (!report.valid) {
    diag << "design invalid: phi leaves (0, pi) or the field diverges on [0, T]\n";
    return kExitDivergence;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& diag) {
  RunConfig cfg;
  CLI::App app{"Spin-1 transfer with shortcut-to-adiabaticity magnetic fields", "sgsta"};
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--gamma", cfg.params.gamma, "Gyromagnetic ratio (rad/s/G)")->capture_default_str();
  app.add_option("--T", cfg.params.T, "Total transfer time (s)")->capture_default_str();
  app.add_option("--bzi", cfg.params.BzI, "Initial field along z (G)")->capture_default_str();
  app.add_option("--bxf", cfg.params.BxF, "Final field along x (G), must be negative")->capture_default_str();
  app.add_option("--steps", cfg.n_steps, "Integrator steps over [0, T]")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Field samples for design/validate")->capture_default_str();
  app.add_option("--out", cfg.out, "Output path, '-' for stdout")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format: csv or json")->capture_default_str();
  app.add_flag("--serial", cfg.serial, "Evaluate sweep points serially");
  app.add_option("--device", cfg.device, "simulate: sta or helicoidal")->capture_default_str();
  app.add_option("--b0", cfg.B0, "simulate: helicoidal field modulus (G)")->capture_default_str();
  app.add_option("--profile", cfg.profile_path, "simulate: field table to replay (piecewise linear)");
  app.add_option("--target", cfg.target, "simulate: x+, x-, z+, z- or auto")->capture_default_str();
  app.add_option("--omega-l", cfg.omega_L, "sweep-standard: Larmor pulsation (rad/s)")->capture_default_str();
  app.add_option("--ratio-min", cfg.ratio_min, "sweep-standard: smallest T/T_L")->capture_default_str();
  app.add_option("--ratio-max", cfg.ratio_max, "sweep-standard: largest T/T_L")->capture_default_str();
  app.add_option("--t-min", cfg.t_min, "resources/speedup: shortest T (s)")->capture_default_str();
  app.add_option("--t-max", cfg.t_max, "resources/speedup: longest T (s)")->capture_default_str();
  app.add_option("--offset-max", cfg.offset_max, "resilience: largest |dt/T|")->capture_default_str();
  app.add_option("--points", cfg.points, "Sweep grid size (0: subcommand default)")->capture_default_str();
  app.add_flag("--min-time", cfg.min_time, "validate: also report the shortest feasible T");

  using Handler = int (*)(const RunConfig&, TableFormat, std::ostream&);
  const std::vector<std::pair<CLI::App*, Handler>> commands{
      {app.add_subcommand("design", "Emit the STA field profile"), cmd_design},
      {app.add_subcommand("simulate", "Propagate |m_z=+1> and emit the trajectory"), cmd_simulate},
      {app.add_subcommand("sweep-standard", "Standard-device fidelity versus T/T_L"), cmd_sweep_standard},
      {app.add_subcommand("compare", "STA versus standard devices at matched fields"), cmd_compare},
      {app.add_subcommand("resilience", "Transfer error versus stopping-time offset"), cmd_resilience},
      {app.add_subcommand("resources", "B_max, B_av and B_st0 versus T"), cmd_resources},
      {app.add_subcommand("speedup", "Standard/STA transfer-time ratio versus T"), cmd_speedup},
      {app.add_subcommand("validate", "Domain check and field statistics of a design"), cmd_validate},
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    diag << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    diag << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    cfg.validate();
    const TableFormat fmt = parse_table_format(cfg.format);
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(cfg, fmt, diag);
    }
    diag << app.help();
    return kExitInput;
  } catch (const DivergenceError& e) {
    diag << "divergence: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const InputError& e) {
    diag << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const IoError& e) {
    diag << "i/o error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace sgsta::cli
