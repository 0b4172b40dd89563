#include "sgsta/spin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgsta/errors.hpp"

namespace sgsta {

namespace {

void require_unit(const Vec3& n, const char* what) {
  const double norm = n.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-9) {
    throw InputError(std::string(what) + " must be a unit vector (norm " + std::to_string(norm) + ")");
  }
}

SpinOperators make_operators() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  SpinOperators ops;
  ops.x << 0, r, 0,
           r, 0, r,
           0, r, 0;
  ops.y << 0, -i * r, 0,
           i * r, 0, -i * r,
           0, i * r, 0;
  ops.z << 1, 0, 0,
           0, 0, 0,
           0, 0, -1;
  return ops;
}

}  // namespace

SpinState::SpinState(const Eigen::Vector3cd& amplitudes) : amplitudes_(amplitudes) {
  const double n = amplitudes_.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-9) {
    throw InputError("spin state must be normalized (norm " + std::to_string(n) + ")");
  }
}

SpinState SpinState::evolved(const Operator3& unitary) const {
  return SpinState(unitary * amplitudes_, Unchecked{});
}

SpinState SpinState::basis(int m) {
  if (m < -1 || m > 1) throw InputError("spin-1 projection must be -1, 0 or +1");
  Eigen::Vector3cd v = Eigen::Vector3cd::Zero();
  v[1 - m] = 1.0;
  return SpinState(v, Unchecked{});
}

const SpinOperators& spin1_operators() {
  static const SpinOperators ops = make_operators();
  return ops;
}

SpinState direction_eigenstate(const Vec3& n, int m) {
  require_unit(n, "quantization axis");
  if (m < -1 || m > 1) throw InputError("spin-1 projection must be -1, 0 or +1");

  // Eigenvalues come back ascending: -1, 0, +1.
  Eigen::SelfAdjointEigenSolver<Operator3> solver(spin1_operators().along(n));
  Eigen::Vector3cd v = solver.eigenvectors().col(m + 1);
  v.normalize();
  for (int k = 0; k < 3; ++k) {
    if (std::abs(v[k]) > 1e-12) {
      v *= std::conj(v[k]) / std::abs(v[k]);
      v[k] = std::abs(v[k]);
      break;
    }
  }
  return SpinState(v);
}

Operator3 hamiltonian(const FieldSample& field, double gamma) {
  if (!std::isfinite(field.Bx) || !std::isfinite(field.By) || !std::isfinite(field.Bz) ||
      !std::isfinite(gamma)) {
    throw InputError("hamiltonian requires finite field components and gamma");
  }
  return -gamma * spin1_operators().along(field.vector());
}

double fidelity(const SpinState& state, const SpinState& target) {
  return std::norm(target.amplitudes().dot(state.amplitudes()));
}

double expectation(const SpinState& state, const Operator3& observable) {
  if (!is_hermitian(observable)) throw InputError("observable is not Hermitian");
  const Eigen::Vector3cd& psi = state.amplitudes();
  return psi.dot(observable * psi).real();
}

Operator3 spin1_rotation(const Vec3& axis, double angle) {
  require_unit(axis, "rotation axis");
  // (n.J)^3 = n.J for spin 1, which truncates the exponential series.
  const Operator3 generator = spin1_operators().along(axis);
  // cos(a) - 1 = -2 sin^2(a/2) keeps small-angle steps accurate.
  const double half = std::sin(0.5 * angle);
  return Operator3::Identity() - Complex(0.0, std::sin(angle)) * generator -
         (2.0 * half * half) * generator * generator;
}

bool is_hermitian(const Operator3& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

bool is_unitary(const Operator3& m, double tol) {
  return (m.adjoint() * m - Operator3::Identity()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace sgsta
