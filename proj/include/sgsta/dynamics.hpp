#pragma once

// Time-dependent Schroedinger propagation of a spin-1 state.

#include <functional>
#include <string>
#include <vector>

#include "sgsta/field_design.hpp"
#include "sgsta/spin.hpp"

namespace sgsta {

struct FieldProfile {
  std::function<FieldSample(double)> sampler;
  double t_max = 0.0;  // s; sampler is defined on [0, t_max]
  std::string label;

  FieldSample operator()(double t) const { return sampler(t); }
};

FieldProfile zero_profile(double t_max);
FieldProfile constant_profile(const Vec3& field, double t_max);
FieldProfile helicoidal_profile(double B0, double T);
// STA field on [0, span T].
FieldProfile sta_profile(const DesignParams& params, double span = 1.0);

// Piecewise-linear interpolation between tabulated samples, e.g. a profile
// read back from a field table. Samples must have strictly increasing times
// starting at 0.
FieldProfile tabulated_profile(std::vector<FieldSample> samples, std::string label = "tabulated");

struct Trajectory {
  std::vector<double> times;
  std::vector<SpinState> states;
  std::vector<double> jx, jy, jz;
  std::vector<double> fidelity;  // against `target`
  std::vector<FieldSample> fields;
  SpinState target;

  std::size_t size() const { return times.size(); }
  const SpinState& final_state() const { return states.back(); }
  double final_fidelity() const { return fidelity.back(); }
};

inline constexpr int kDefaultSteps = 10000;

// Midpoint exponential integrator: every step applies the exact rotation
// exp(-i H(B(t_mid)) dt). Records the state and diagnostics at all n_steps+1
// step boundaries.
Trajectory propagate(const FieldProfile& profile, const SpinState& psi0, double T, int n_steps,
                     const SpinState& target, double gamma = kDefaultGamma);

// Final state only; no trajectory bookkeeping.
SpinState propagate_final(const FieldProfile& profile, const SpinState& psi0, double T, int n_steps,
                          double gamma = kDefaultGamma);

// <psi(t)| u(t).J |psi(t)> along a trajectory, u the STA invariant pointer.
std::vector<double> invariant_eigenvalue_trace(const Trajectory& traj, const DesignParams& params);

// 1 - F(t), linearly interpolating F between recorded samples.
double transfer_error(const Trajectory& traj, double t);

}  // namespace sgsta
