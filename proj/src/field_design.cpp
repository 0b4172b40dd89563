#include "sgsta/field_design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "sgsta/errors.hpp"

namespace sgsta {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double z) {
  if (std::abs(z) < 1e-4) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

FieldSample checked(FieldSample f) {
  if (!std::isfinite(f.Bx) || !std::isfinite(f.Bz)) {
    throw DivergenceError("STA field is not finite at t = " + std::to_string(f.t));
  }
  return f;
}

}  // namespace

void DesignParams::validate() const {
  if (!(std::isfinite(gamma) && gamma > 0.0)) throw InputError("gamma must be positive");
  if (!(std::isfinite(T) && T > 0.0)) throw InputError("T must be positive");
  if (!(std::isfinite(BzI) && BzI > 0.0)) throw InputError("BzI must be positive");
  if (!(std::isfinite(BxF) && BxF < 0.0)) {
    throw InputError(
        "BxF must be negative: with the quartic pointer angles the third derivative of theta is "
        "negative at T, so phi = 0 is a local minimum only for BxF < 0");
  }
  if (!std::isfinite(scaled_BzI()) || !std::isfinite(scaled_BxF()) || scaled_BzI() == 0.0 ||
      scaled_BxF() == 0.0) {
    throw InputError("dimensionless endpoint fields must be finite and nonzero");
  }
}

FieldSample helicoidal_field(double B0, double T, double t) {
  if (!(B0 > 0.0) || !(T > 0.0)) throw InputError("helicoidal field needs B0 > 0 and T > 0");
  if (!(t >= 0.0 && t <= T)) throw InputError("helicoidal field evaluated outside [0, T]");
  const double angle = 0.5 * kPi * t / T;
  return {t, B0 * std::sin(angle), 0.0, B0 * std::cos(angle)};
}

double larmor_time(double gamma, double B0) {
  if (!(gamma > 0.0) || !(B0 > 0.0)) throw InputError("larmor time needs gamma > 0 and B0 > 0");
  return 2.0 * kPi / (gamma * B0);
}

Vec3 pointer(const AngleState& a) {
  const double st = std::sin(a.theta);
  return {st * std::cos(a.phi), st * std::sin(a.phi), std::cos(a.theta)};
}

StaProfile::StaProfile(const DesignParams& params) : params_(params) {
  params_.validate();
  const double bz = params_.scaled_BzI();
  const double bx = params_.scaled_BxF();

  theta_ = Polynomial({kPi, 0.0, -3.0 * kPi, 4.0 * kPi, -1.5 * kPi});
  phi_ = Polynomial({0.5 * kPi, -bz / 3.0, -3.0 * kPi - 6.0 * kPi / bx + bz,
                     4.0 * kPi + 12.0 * kPi / bx - bz, -1.5 * kPi - 6.0 * kPi / bx + bz / 3.0});
  dtheta_ = theta_.derivative();
  d2theta_ = dtheta_.derivative();
  d3theta_ = d2theta_.derivative();
  dphi_ = phi_.derivative();
  d2phi_ = dphi_.derivative();

  auto minus_constant = [](const Polynomial& p, double c) {
    std::vector<double> coeffs = p.coefficients();
    coeffs[0] -= c;
    return Polynomial(std::move(coeffs));
  };

  start_a_ = minus_constant(theta_, kPi).divided_by_power(2);
  start_b_ = dtheta_.divided_by_power(1);
  start_c_ = minus_constant(phi_, 0.5 * kPi).divided_by_power(1);

  end_d_ = minus_constant(theta_.shifted(1.0), 0.5 * kPi).divided_by_power(3);
  end_e_ = dtheta_.shifted(1.0).divided_by_power(2);
  end_f_ = phi_.shifted(1.0).divided_by_power(2);
  start_dc_ = start_c_.derivative();
  end_df_ = end_f_.derivative();
}

void StaProfile::check_time(double t) const {
  if (!(t >= 0.0 && t <= kMaxSpan * params_.T * (1.0 + 1e-12))) {
    throw InputError("STA profile evaluated outside [0, 1.1 T]: t = " + std::to_string(t));
  }
}

AngleState StaProfile::angles(double t) const {
  check_time(t);
  const double T = params_.T;
  const double x = t / T;
  AngleState a;
  a.theta = theta_(x);
  a.phi = phi_(x);
  a.dtheta = dtheta_(x) / T;
  a.dphi = dphi_(x) / T;
  a.d2theta = d2theta_(x) / (T * T);
  a.d2phi = d2phi_(x) / (T * T);
  a.d3theta = d3theta_(x) / (T * T * T);
  return a;
}

FieldSample StaProfile::field(double t) const {
  check_time(t);
  const double x = t / params_.T;
  if (x < kEndpointWindow) return checked(near_start(t, x));
  if (std::abs(x - 1.0) < kEndpointWindow) return checked(near_end(t, x));
  return checked(direct(t, x));
}

FieldSample StaProfile::near_start(double t, double x) const {
  const double T = params_.T;
  const double a = start_a_(x);
  const double b = start_b_(x);
  const double c = start_c_(x);
  const double cos_theta = std::cos(theta_(x));
  const double sin_phi = std::cos(x * c);
  const double gamma_bx = x * b / (T * sin_phi);
  const double ratio = b * c * cos_theta * sinc(x * c) / (T * a * sinc(x * x * a) * sin_phi);
  const double dphi_dx = c + x * start_dc_(x);
  const double gamma_bz = -dphi_dx / T + ratio;
  return {t, gamma_bx / params_.gamma, 0.0, gamma_bz / params_.gamma};
}

FieldSample StaProfile::near_end(double t, double x) const {
  const double T = params_.T;
  const double s = x - 1.0;
  const double d = end_d_(s);
  const double e = end_e_(s);
  const double f = end_f_(s);
  const double sin_theta = std::cos(s * s * s * d);
  const double cos_phi = std::cos(s * s * f);
  const double gamma_bx = e / (T * f * sinc(s * s * f));
  const double ratio = -s * s * s * e * d * sinc(s * s * s * d) * cos_phi /
                       (T * sin_theta * f * sinc(s * s * f));
  const double dphi_dx = 2.0 * s * f + s * s * end_df_(s);
  const double gamma_bz = -dphi_dx / T + ratio;
  return {t, gamma_bx / params_.gamma, 0.0, gamma_bz / params_.gamma};
}

FieldSample StaProfile::direct(double t, double x) const {
  const double T = params_.T;
  const double theta = theta_(x);
  const double phi = phi_(x);
  const double denom = std::sin(theta) * std::sin(phi);
  if (std::abs(denom) < kDivergenceGuard) {
    throw DivergenceError("STA field diverges at t = " + std::to_string(t) +
                          " s (pointer on a singular meridian or pole)");
  }
  const double dtheta = dtheta_(x) / T;
  const double gamma_bx = dtheta / std::sin(phi);
  const double gamma_bz = -dphi_(x) / T + dtheta * std::cos(theta) * std::cos(phi) / denom;
  return {t, gamma_bx / params_.gamma, 0.0, gamma_bz / params_.gamma};
}

AngleState sta_angles(const DesignParams& params, double t) { return StaProfile(params).angles(t); }

FieldSample sta_field(const DesignParams& params, double t) { return StaProfile(params).field(t); }

namespace {

double golden_section_max(const StaProfile& profile, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double t) { return profile.field(t).norm(); };
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  const double tol = 1e-12 * profile.params().T;
  while (hi - lo > tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ProfileReport validate_profile(const DesignParams& params, int n_samples) {
  if (n_samples < 100) throw InputError("validate_profile needs at least 100 samples");
  const StaProfile profile(params);
  const double T = params.T;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  ProfileReport report;
  report.phi_min = std::numeric_limits<double>::infinity();
  report.phi_max = -std::numeric_limits<double>::infinity();
  report.valid = true;

  std::vector<double> norms(static_cast<std::size_t>(n_samples));
  const double h = T / (n_samples - 1);
  for (int i = 0; i < n_samples; ++i) {
    const double t = (i == n_samples - 1) ? T : i * h;
    if (i > 0 && i < n_samples - 1) {
      const double phi = profile.angles(t).phi;
      report.phi_min = std::min(report.phi_min, phi);
      report.phi_max = std::max(report.phi_max, phi);
      if (!(phi > 0.0 && phi < std::numbers::pi)) report.valid = false;
    }
    try {
      norms[static_cast<std::size_t>(i)] = profile.field(t).norm();
    } catch (const DivergenceError&) {
      report.valid = false;
      norms[static_cast<std::size_t>(i)] = nan;
    }
  }

  if (!report.valid) {
    report.B_max = nan;
    report.B_av = nan;
    report.max_field_norm_location = nan;
    return report;
  }

  double integral = 0.0;
  for (int i = 0; i + 1 < n_samples; ++i) integral += 0.5 * h * (norms[i] + norms[i + 1]);
  report.B_av = integral / T;

  const auto argmax = static_cast<int>(std::max_element(norms.begin(), norms.end()) - norms.begin());
  const double lo = std::max(0.0, (argmax - 1) * h);
  const double hi = std::min(T, (argmax + 1) * h);
  const double t_star = golden_section_max(profile, lo, hi);
  const double refined = profile.field(t_star).norm();
  if (refined >= norms[static_cast<std::size_t>(argmax)]) {
    report.B_max = refined;
    report.max_field_norm_location = t_star;
  } else {
    report.B_max = norms[static_cast<std::size_t>(argmax)];
    report.max_field_norm_location = std::min(T, argmax * h);
  }
  return report;
}

bool extended_domain_valid(const DesignParams& params, double span, int n_samples) {
  if (!(span >= 1.0 && span <= StaProfile::kMaxSpan)) {
    throw InputError("extended span must lie in [1, 1.1]");
  }
  if (n_samples < 100) throw InputError("extended_domain_valid needs at least 100 samples");
  const StaProfile profile(params);
  const double t_end = span * params.T;
  const double h = t_end / (n_samples - 1);
  for (int i = 0; i < n_samples; ++i) {
    const double t = (i == n_samples - 1) ? t_end : i * h;
    const double x = t / params.T;
    if (i > 0 && std::abs(x - 1.0) >= StaProfile::kEndpointWindow) {
      const double phi = profile.angles(t).phi;
      if (!(phi > 0.0 && phi < std::numbers::pi)) return false;
    }
    try {
      profile.field(t);
    } catch (const DivergenceError&) {
      return false;
    }
  }
  return true;
}

std::optional<double> min_feasible_time(const DesignParams& params_template, int n_samples) {
  params_template.validate();
  const double T0 = params_template.T;
  auto valid_at = [&](double T) { return validate_profile(params_template.with_duration(T), n_samples).valid; };
  if (!valid_at(T0)) throw InputError("template design is not valid at its own T");

  double hi = T0;
  double lo = T0;
  bool bracketed = false;
  while (lo > T0 / 100.0) {
    lo = std::max(0.5 * lo, T0 / 100.0);
    if (!valid_at(lo)) {
      bracketed = true;
      break;
    }
    hi = lo;
    if (lo <= T0 / 100.0) break;
  }
  if (!bracketed) return std::nullopt;

  const double tol = 1e-3 * T0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (valid_at(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace sgsta
