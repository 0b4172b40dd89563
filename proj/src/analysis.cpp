#include "sgsta/analysis.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include "sgsta/errors.hpp"

namespace sgsta {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_increasing(const std::vector<double>& grid, const char* what) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw InputError(std::string(what) + " must be strictly increasing");
  }
}

}  // namespace

std::size_t Sweep::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw InputError("unknown sweep column '" + std::string(name) + "'");
}

std::vector<double> Sweep::column(std::string_view name) const {
  const std::size_t k = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.values[k]);
  return out;
}

std::vector<double> Sweep::abscissas() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.abscissa);
  return out;
}

std::vector<double> linear_grid(double first, double last, int n) {
  if (n < 2 || !(last > first)) throw InputError("grid needs n >= 2 and last > first");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = first + (last - first) * i / (n - 1);
  g.back() = last;
  return g;
}

std::vector<double> log_grid(double first, double last, int n) {
  if (!(first > 0.0)) throw InputError("log grid needs a positive start");
  std::vector<double> g = linear_grid(std::log(first), std::log(last), n);
  for (double& v : g) v = std::exp(v);
  g.front() = first;
  g.back() = last;
  return g;
}

std::vector<double> default_ratio_grid() { return log_grid(0.01, 10.0, 500); }
std::vector<double> default_time_grid() { return linear_grid(0.4e-6, 4e-6, 200); }

SpinState adiabatic_target() { return direction_eigenstate(Vec3::UnitX(), +1); }
SpinState sta_target() { return direction_eigenstate(Vec3::UnitX(), -1); }

Sweep sweep_standard(const std::vector<double>& ratios, double omega_L, int n_steps, Execution exec) {
  if (!(omega_L > 0.0)) throw InputError("Larmor pulsation must be positive");
  for (double r : ratios) {
    if (!(r > 0.0)) throw InputError("T/T_L ratios must be positive");
  }
  require_increasing(ratios, "T/T_L ratios");

  const double gamma = kDefaultGamma;
  const double B0 = omega_L / gamma;
  const double TL = 2.0 * std::numbers::pi / omega_L;
  const SpinState psi0 = SpinState::basis(+1);
  const SpinState target = adiabatic_target();

  Sweep sweep{"T_over_TL", {"fidelity"}, std::vector<SweepRow>(ratios.size())};
  for_each_index(ratios.size(), exec, [&](std::size_t i) {
    const double T = ratios[i] * TL;
    const SpinState psi = propagate_final(helicoidal_profile(B0, T), psi0, T, n_steps, gamma);
    sweep.rows[i] = {ratios[i], {fidelity(psi, target)}, false};
  });
  return sweep;
}

DeviceComparison compare_devices(const DesignParams& params, int n_steps, Execution exec) {
  DeviceComparison out;
  out.report = validate_profile(params);
  if (!out.report.valid) {
    throw DivergenceError("STA design is invalid for T = " + std::to_string(params.T) + " s");
  }
  out.B_st0 = 2.0 * std::numbers::pi / (params.gamma * params.T);

  const SpinState psi0 = SpinState::basis(+1);
  const double moduli[] = {out.report.B_av, out.report.B_max, out.B_st0};
  Trajectory* standard[] = {&out.standard_av, &out.standard_max, &out.standard_st0};

  for_each_index(4, exec, [&](std::size_t i) {
    if (i == 0) {
      out.sta = propagate(sta_profile(params), psi0, params.T, n_steps, sta_target(), params.gamma);
    } else {
      *standard[i - 1] = propagate(helicoidal_profile(moduli[i - 1], params.T), psi0, params.T, n_steps,
                                   adiabatic_target(), params.gamma);
    }
  });
  return out;
}

Sweep resilience_sweep(const DesignParams& params, const std::vector<double>& rel_offsets, int n_steps,
                       Execution exec) {
  require_increasing(rel_offsets, "offsets");
  double span = 1.0;
  for (double o : rel_offsets) {
    if (!(o >= -0.1 - 1e-12 && o <= 0.1 + 1e-12)) throw InputError("offsets must lie in [-0.1, 0.1]");
    span = std::max(span, 1.0 + o);
  }
  span = std::min(span, StaProfile::kMaxSpan);
  if (!extended_domain_valid(params, span)) {
    throw DivergenceError("STA design is not valid on the extended range [0, " + std::to_string(span) + " T]");
  }
  if (n_steps < 10) throw InputError("propagation needs at least 10 steps");

  const FieldProfile extended = sta_profile(params, span);
  const auto shared_profile = std::make_shared<const StaProfile>(params);
  const SpinState psi0 = SpinState::basis(+1);
  const SpinState target = sta_target();
  const double T = params.T;

  Sweep sweep{"dt_over_T", {"eps_trajectory", "eps_velocity"}, std::vector<SweepRow>(rel_offsets.size())};
  for_each_index(rel_offsets.size(), exec, [&](std::size_t i) {
    const double stop = std::min(T * (1.0 + rel_offsets[i]), extended.t_max);
    const int steps = std::max(10, static_cast<int>(std::llround(n_steps * (1.0 + rel_offsets[i]))));
    const SpinState by_trajectory = propagate_final(extended, psi0, stop, steps, params.gamma);

    const double stretch = T / stop;
    const FieldProfile rescaled{[shared_profile, stretch, T](double s) {
                                  FieldSample f = shared_profile->field(std::min(s * stretch, T));
                                  f.t = s;
                                  return f;
                                },
                                stop, "sta-rescaled"};
    const SpinState by_velocity = propagate_final(rescaled, psi0, stop, n_steps, params.gamma);

    sweep.rows[i] = {rel_offsets[i],
                     {1.0 - fidelity(by_trajectory, target), 1.0 - fidelity(by_velocity, target)},
                     false};
  });
  return sweep;
}

Sweep resource_curve(const std::vector<double>& T_grid, const DesignParams& params_template, Execution exec) {
  params_template.validate();
  require_increasing(T_grid, "time grid");
  Sweep sweep{"T_s", {"B_max_G", "B_av_G", "B_st0_G"}, std::vector<SweepRow>(T_grid.size())};
  for_each_index(T_grid.size(), exec, [&](std::size_t i) {
    const DesignParams p = params_template.with_duration(T_grid[i]);
    const ProfileReport report = validate_profile(p);
    const double st0 = 2.0 * std::numbers::pi / (p.gamma * p.T);
    sweep.rows[i] = report.valid ? SweepRow{p.T, {report.B_max, report.B_av, st0}, false}
                                 : SweepRow{p.T, {kNaN, kNaN, st0}, true};
  });
  return sweep;
}

Sweep speedup_curve(const std::vector<double>& T_grid, const DesignParams& params_template, Execution exec) {
  const Sweep resources = resource_curve(T_grid, params_template, exec);
  const double gamma = params_template.gamma;
  Sweep sweep{"T_s", {"speedup_max", "speedup_av"}, {}};
  sweep.rows.reserve(resources.rows.size());
  for (const SweepRow& r : resources.rows) {
    if (r.diverged) {
      sweep.rows.push_back({r.abscissa, {kNaN, kNaN}, true});
      continue;
    }
    const double t_max = larmor_time(gamma, r.values[0]);
    const double t_av = larmor_time(gamma, r.values[1]);
    sweep.rows.push_back({r.abscissa, {t_max / r.abscissa, t_av / r.abscissa}, false});
  }
  return sweep;
}

}  // namespace sgsta
