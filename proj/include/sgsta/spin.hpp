#pragma once

// Spin-1 algebra in the J_z eigenbasis, ordered m = +1, 0, -1.
// Units: hbar = 1, so J eigenvalues are {-1, 0, +1} and Hamiltonians are in
// rad/s.

#include <complex>

#include <Eigen/Dense>

namespace sgsta {

using Complex = std::complex<double>;
using Operator3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3d;

// Gyromagnetic ratio mu_B / hbar in rad s^-1 G^-1.
inline constexpr double kDefaultGamma = 8.794e6;

struct FieldSample {
  double t = 0.0;  // s
  double Bx = 0.0;  // G
  double By = 0.0;
  double Bz = 0.0;

  Vec3 vector() const { return {Bx, By, Bz}; }
  double norm() const { return vector().norm(); }
};

// Normalized spin-1 pure state.
class SpinState {
 public:
  // |m_z = +1>.
  SpinState() : amplitudes_(1.0, 0.0, 0.0) {}

  // Throws InputError unless the amplitudes are unit norm within 1e-9.
  explicit SpinState(const Eigen::Vector3cd& amplitudes);
  SpinState(Complex plus, Complex zero, Complex minus)
      : SpinState(Eigen::Vector3cd(plus, zero, minus)) {}

  const Eigen::Vector3cd& amplitudes() const { return amplitudes_; }
  Complex operator[](int i) const { return amplitudes_[i]; }
  double norm() const { return amplitudes_.norm(); }

  // Applies a unitary. The result is not renormalized.
  SpinState evolved(const Operator3& unitary) const;

  static SpinState basis(int m);

 private:
  struct Unchecked {};
  SpinState(const Eigen::Vector3cd& amplitudes, Unchecked) : amplitudes_(amplitudes) {}

  Eigen::Vector3cd amplitudes_;
};

struct SpinOperators {
  Operator3 x;
  Operator3 y;
  Operator3 z;

  // n . J
  Operator3 along(const Vec3& n) const { return n.x() * x + n.y() * y + n.z() * z; }
};

const SpinOperators& spin1_operators();

// Eigenvector of n.J with eigenvalue m. The first amplitude with modulus
// above 1e-12 is made real and positive.
SpinState direction_eigenstate(const Vec3& n, int m);

// H = -gamma B.J
Operator3 hamiltonian(const FieldSample& field, double gamma);

// |<target|state>|^2
double fidelity(const SpinState& state, const SpinState& target);

// <psi|M|psi> for Hermitian M.
double expectation(const SpinState& state, const Operator3& observable);

// exp(-i angle (axis.J)) in closed form.
Operator3 spin1_rotation(const Vec3& axis, double angle);

bool is_hermitian(const Operator3& m, double tol = 1e-12);
bool is_unitary(const Operator3& m, double tol = 1e-12);

}  // namespace sgsta
