#pragma once

// Field profiles for the spin-transfer device: the standard helicoidal field
// and the shortcut-to-adiabaticity (STA) field reverse-engineered from the
// spherical angles of the invariant pointer u(t).

#include <optional>

#include "sgsta/polynomial.hpp"
#include "sgsta/spin.hpp"

namespace sgsta {

struct DesignParams {
  double gamma = kDefaultGamma;  // rad s^-1 G^-1
  double T = 2e-6;  // s, total transfer time
  double BzI = 0.1;  // G, initial field along +z
  double BxF = -0.1;  // G, final field along x; must be negative

  // Throws InputError if any invariant is broken.
  void validate() const;

  // Dimensionless endpoint fields gamma*T*B.
  double scaled_BzI() const { return gamma * T * BzI; }
  double scaled_BxF() const { return gamma * T * BxF; }

  DesignParams with_duration(double duration) const {
    DesignParams p = *this;
    p.T = duration;
    return p;
  }
};

// Pointer angles and their time derivatives (rad, rad/s, ...).
struct AngleState {
  double theta = 0.0;
  double phi = 0.0;
  double dtheta = 0.0;
  double dphi = 0.0;
  double d2theta = 0.0;
  double d2phi = 0.0;
  double d3theta = 0.0;
};

struct ProfileReport {
  double phi_min = 0.0;  // rad, over interior samples
  double phi_max = 0.0;
  bool valid = false;
  double B_max = 0.0;  // G, NaN when invalid
  double B_av = 0.0;  // G, NaN when invalid
  double max_field_norm_location = 0.0;  // s
};

// B(t) = B0 (cos(pi t / 2T) z + sin(pi t / 2T) x); ends along +x.
FieldSample helicoidal_field(double B0, double T, double t);

// 2 pi / (gamma B0)
double larmor_time(double gamma, double B0);

// u = (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta))
Vec3 pointer(const AngleState& angles);

// Quartic pointer angles theta = P(t/T), phi = Q(t/T) and the field they
// induce through the precession equation du/dt = gamma u x B with B_y = 0.
//
// The field expression is 0/0 at both endpoints. Within 1e-3 T of an
// endpoint the polynomials are re-expanded about it, the vanishing leading
// powers are cancelled analytically, and the ratio is evaluated from the
// reduced polynomials.
class StaProfile {
 public:
  // Evaluation is permitted on [0, kMaxSpan * T].
  static constexpr double kMaxSpan = 1.1;
  static constexpr double kEndpointWindow = 1e-3;
  static constexpr double kDivergenceGuard = 1e-8;

  explicit StaProfile(const DesignParams& params);

  const DesignParams& params() const { return params_; }

  AngleState angles(double t) const;
  // Throws DivergenceError when |sin(theta) sin(phi)| drops below the
  // guard away from the endpoints or the result is not finite.
  FieldSample field(double t) const;

  // Raw polynomials in x = t/T.
  const Polynomial& theta_polynomial() const { return theta_; }
  const Polynomial& phi_polynomial() const { return phi_; }

 private:
  void check_time(double t) const;
  FieldSample near_start(double t, double x) const;
  FieldSample near_end(double t, double x) const;
  FieldSample direct(double t, double x) const;

  DesignParams params_;
  Polynomial theta_, dtheta_, d2theta_, d3theta_;
  Polynomial phi_, dphi_, d2phi_;

  // About x = 0: theta - pi = x^2 a(x), P'(x) = x b(x), phi - pi/2 = x c(x).
  Polynomial start_a_, start_b_, start_c_, start_dc_;
  // About x = 1 with s = x - 1: theta - pi/2 = s^3 d(s), P'(x) = s^2 e(s),
  // phi = s^2 f(s).
  Polynomial end_d_, end_e_, end_f_, end_df_;
};

AngleState sta_angles(const DesignParams& params, double t);
FieldSample sta_field(const DesignParams& params, double t);

// Trapezoid samples used by validate_profile when no count is given.
inline constexpr int kDefaultProfileSamples = 10001;

// Samples phi(t) and |B(t)| on a uniform grid over [0, T]. Invalidity is
// reported, never thrown (apart from bad params or n_samples < 100).
ProfileReport validate_profile(const DesignParams& params, int n_samples = kDefaultProfileSamples);

// True when the field stays finite on [0, span T] and phi stays inside
// (0, pi) away from the final-time window, where phi touches zero by design.
bool extended_domain_valid(const DesignParams& params, double span,
                           int n_samples = kDefaultProfileSamples);

// Smallest T (gamma, BzI, BxF fixed) for which the design is valid, found by
// bisection to 1e-3 of the template T. std::nullopt when the design is
// still valid at T/100.
std::optional<double> min_feasible_time(const DesignParams& params_template,
                                        int n_samples = kDefaultProfileSamples);

}  // namespace sgsta
