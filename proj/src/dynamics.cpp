#include "sgsta/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include "sgsta/errors.hpp"

namespace sgsta {

FieldProfile zero_profile(double t_max) {
  return {[](double t) { return FieldSample{t, 0.0, 0.0, 0.0}; }, t_max, "zero"};
}

FieldProfile constant_profile(const Vec3& field, double t_max) {
  return {[field](double t) { return FieldSample{t, field.x(), field.y(), field.z()}; }, t_max, "constant"};
}

FieldProfile helicoidal_profile(double B0, double T) {
  helicoidal_field(B0, T, 0.0);
  return {[B0, T](double t) { return helicoidal_field(B0, T, t); }, T, "helicoidal"};
}

FieldProfile sta_profile(const DesignParams& params, double span) {
  if (!(span > 0.0 && span <= StaProfile::kMaxSpan)) throw InputError("STA span must lie in (0, 1.1]");
  auto profile = std::make_shared<const StaProfile>(params);
  return {[profile](double t) { return profile->field(t); }, span * params.T, "sta"};
}

FieldProfile tabulated_profile(std::vector<FieldSample> samples, std::string label) {
  if (samples.size() < 2) throw InputError("tabulated profile needs at least two samples");
  if (samples.front().t != 0.0) throw InputError("tabulated profile must start at t = 0");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].t > samples[i - 1].t)) throw InputError("tabulated profile times must increase strictly");
  }
  auto table = std::make_shared<const std::vector<FieldSample>>(std::move(samples));
  const double t_max = table->back().t;
  auto sampler = [table](double t) {
    const auto& s = *table;
    if (!(t >= 0.0 && t <= s.back().t)) throw InputError("tabulated profile evaluated out of range");
    auto hi = std::upper_bound(s.begin(), s.end(), t, [](double v, const FieldSample& f) { return v < f.t; });
    if (hi == s.end()) return FieldSample{t, s.back().Bx, s.back().By, s.back().Bz};
    const auto lo = hi - 1;
    const double w = (t - lo->t) / (hi->t - lo->t);
    return FieldSample{t, lo->Bx + w * (hi->Bx - lo->Bx), lo->By + w * (hi->By - lo->By),
                       lo->Bz + w * (hi->Bz - lo->Bz)};
  };
  return {sampler, t_max, std::move(label)};
}

namespace {

void check_run(const FieldProfile& profile, double T, int n_steps) {
  if (n_steps < 10) throw InputError("propagation needs at least 10 steps");
  if (!(T > 0.0) || !std::isfinite(T)) throw InputError("propagation time must be positive");
  if (T > profile.t_max * (1.0 + 1e-12)) {
    throw InputError("profile '" + profile.label + "' is not defined up to the requested time");
  }
}

// exp(-i H dt) with H = -gamma B.J, i.e. a rotation by gamma |B| dt about -B.
Operator3 step_propagator(const FieldSample& field, double gamma, double dt) {
  const Vec3 b = field.vector();
  const double magnitude = b.norm();
  if (magnitude == 0.0) return Operator3::Identity();
  return spin1_rotation(-b / magnitude, gamma * magnitude * dt);
}

}  // namespace

Trajectory propagate(const FieldProfile& profile, const SpinState& psi0, double T, int n_steps,
                     const SpinState& target, double gamma) {
  check_run(profile, T, n_steps);
  const SpinOperators& J = spin1_operators();
  const double dt = T / n_steps;

  Trajectory traj;
  traj.target = target;
  const auto n = static_cast<std::size_t>(n_steps) + 1;
  traj.times.reserve(n);
  traj.states.reserve(n);
  traj.jx.reserve(n);
  traj.jy.reserve(n);
  traj.jz.reserve(n);
  traj.fidelity.reserve(n);
  traj.fields.reserve(n);

  auto record = [&](double t, const SpinState& psi) {
    traj.times.push_back(t);
    traj.states.push_back(psi);
    traj.jx.push_back(expectation(psi, J.x));
    traj.jy.push_back(expectation(psi, J.y));
    traj.jz.push_back(expectation(psi, J.z));
    traj.fidelity.push_back(fidelity(psi, target));
    traj.fields.push_back(profile(t));
  };

  SpinState psi = psi0;
  record(0.0, psi);
  for (int k = 0; k < n_steps; ++k) {
    psi = psi.evolved(step_propagator(profile((k + 0.5) * dt), gamma, dt));
    record(k + 1 == n_steps ? T : (k + 1) * dt, psi);
  }
  return traj;
}

SpinState propagate_final(const FieldProfile& profile, const SpinState& psi0, double T, int n_steps,
                          double gamma) {
  check_run(profile, T, n_steps);
  const double dt = T / n_steps;
  SpinState psi = psi0;
  for (int k = 0; k < n_steps; ++k) psi = psi.evolved(step_propagator(profile((k + 0.5) * dt), gamma, dt));
  return psi;
}

std::vector<double> invariant_eigenvalue_trace(const Trajectory& traj, const DesignParams& params) {
  const StaProfile profile(params);
  const SpinOperators& J = spin1_operators();
  std::vector<double> out;
  out.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const Vec3 u = pointer(profile.angles(traj.times[i]));
    out.push_back(expectation(traj.states[i], J.along(u)));
  }
  return out;
}

double transfer_error(const Trajectory& traj, double t) {
  if (traj.size() == 0) throw InputError("empty trajectory");
  if (!(t >= traj.times.front() && t <= traj.times.back())) {
    throw InputError("transfer_error time outside the trajectory");
  }
  auto hi = std::lower_bound(traj.times.begin(), traj.times.end(), t);
  const auto i = static_cast<std::size_t>(hi - traj.times.begin());
  double f;
  if (traj.times[i] == t || i == 0) {
    f = traj.fidelity[i];
  } else {
    const double w = (t - traj.times[i - 1]) / (traj.times[i] - traj.times[i - 1]);
    f = traj.fidelity[i - 1] + w * (traj.fidelity[i] - traj.fidelity[i - 1]);
  }
  return std::clamp(1.0 - f, 0.0, 1.0);
}

}  // namespace sgsta
