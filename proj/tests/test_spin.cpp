#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "sgsta/errors.hpp"
#include "sgsta/spin.hpp"

using namespace sgsta;

namespace {

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v(n(rng), n(rng), n(rng));
  return v.normalized();
}

SpinState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Vector3cd v;
  for (int i = 0; i < 3; ++i) v[i] = Complex(n(rng), n(rng));
  return SpinState(v.normalized());
}

double max_abs(const Operator3& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("spin-1 matrices in the J_z basis") {
  const auto& J = spin1_operators();
  CHECK(J.z(0, 0).real() == 1.0);
  CHECK(J.z(1, 1).real() == 0.0);
  CHECK(J.z(2, 2).real() == -1.0);

  Operator3 jx;
  jx << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  jx /= std::sqrt(2.0);
  CHECK(max_abs(J.x - jx) < 1e-15);

  const Complex i(0.0, 1.0);
  CHECK(max_abs(J.x * J.y - J.y * J.x - i * J.z) < 1e-14);
  CHECK(max_abs(J.y * J.z - J.z * J.y - i * J.x) < 1e-14);
  CHECK(max_abs(J.z * J.x - J.x * J.z - i * J.y) < 1e-14);
  // Casimir J^2 = j(j+1) = 2.
  CHECK(max_abs(J.x * J.x + J.y * J.y + J.z * J.z - 2.0 * Operator3::Identity()) < 1e-14);
}

TEST_CASE("direction eigenstates") {
  const double r = 1.0 / std::sqrt(2.0);
  SUBCASE("z axis") {
    const SpinState s = direction_eigenstate(Vec3::UnitZ(), +1);
    CHECK(std::abs(s[0] - 1.0) < 1e-12);
    CHECK(std::abs(s[1]) < 1e-12);
    CHECK(std::abs(s[2]) < 1e-12);
  }
  SUBCASE("x axis, hand-diagonalized J_x") {
    const SpinState plus = direction_eigenstate(Vec3::UnitX(), +1);
    CHECK(std::abs(plus[0] - 0.5) < 1e-12);
    CHECK(std::abs(plus[1] - r) < 1e-12);
    CHECK(std::abs(plus[2] - 0.5) < 1e-12);
    const SpinState minus = direction_eigenstate(Vec3::UnitX(), -1);
    CHECK(std::abs(minus[0] - 0.5) < 1e-12);
    CHECK(std::abs(minus[1] + r) < 1e-12);
    CHECK(std::abs(minus[2] - 0.5) < 1e-12);
    CHECK(fidelity(plus, minus) < 1e-24);
  }
  SUBCASE("phase convention: first nonzero amplitude real positive") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 20; ++k) {
      const SpinState s = direction_eigenstate(random_unit(rng), k % 3 - 1);
      CHECK(s[0].real() > 0.0);
      CHECK(std::abs(s[0].imag()) < 1e-15);
    }
    const SpinState y0 = direction_eigenstate(Vec3::UnitZ(), 0);
    CHECK(std::abs(y0[1] - 1.0) < 1e-12);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(direction_eigenstate(Vec3(1.0, 1.0, 0.0), 1), InputError);
    CHECK_THROWS_AS(direction_eigenstate(Vec3::UnitX(), 2), InputError);
  }
}

TEST_CASE("eigen-consistency for random axes") {
  std::mt19937_64 rng(2024);
  const auto& J = spin1_operators();
  for (int k = 0; k < 100; ++k) {
    const Vec3 n = random_unit(rng);
    for (int m = -1; m <= 1; ++m) {
      const SpinState s = direction_eigenstate(n, m);
      const Eigen::Vector3cd residual = J.along(n) * s.amplitudes() - double(m) * s.amplitudes();
      CHECK(residual.norm() < 1e-10);
    }
  }
}

TEST_CASE("hamiltonian") {
  const auto& J = spin1_operators();
  const double gamma = kDefaultGamma;
  SUBCASE("diagonal") {
    const Operator3 H = hamiltonian({0.0, 0.0, 0.0, 0.3}, gamma);
    CHECK(max_abs(H - (-gamma * 0.3) * J.z) < 1e-6);
    CHECK(is_hermitian(H));
  }
  SUBCASE("zero field") { CHECK(max_abs(hamiltonian({}, gamma)) == 0.0); }
  SUBCASE("transverse field") {
    const Operator3 H = hamiltonian({0.0, 0.1, 0.0, 0.0}, 8.794e6);
    CHECK(max_abs(H + 8.794e5 * J.x) < 1e-8);
  }
  SUBCASE("non-finite input") {
    CHECK_THROWS_AS(hamiltonian({0.0, std::nan(""), 0.0, 0.0}, gamma), InputError);
    CHECK_THROWS_AS(hamiltonian({0.0, 0.0, 0.0, INFINITY}, gamma), InputError);
  }
}

TEST_CASE("fidelity and expectation") {
  const SpinState z_plus = SpinState::basis(+1);
  const SpinState z_minus = SpinState::basis(-1);
  const SpinState x_plus = direction_eigenstate(Vec3::UnitX(), +1);
  const SpinState x_minus = direction_eigenstate(Vec3::UnitX(), -1);
  const auto& J = spin1_operators();

  CHECK(fidelity(x_plus, x_plus) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity(z_plus, z_minus) == 0.0);
  CHECK(fidelity(z_plus, x_plus) == doctest::Approx(0.25).epsilon(1e-14));

  CHECK(expectation(z_plus, J.z) == doctest::Approx(1.0));
  CHECK(expectation(x_minus, J.x) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(expectation(z_plus, J.x)) < 1e-15);

  Operator3 not_hermitian = J.x;
  not_hermitian(0, 1) += Complex(0.0, 0.5);
  CHECK_THROWS_AS(expectation(z_plus, not_hermitian), InputError);
}

TEST_CASE("fidelity symmetry and phase invariance") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int k = 0; k < 50; ++k) {
    const SpinState a = random_state(rng);
    const SpinState b = random_state(rng);
    const double f = fidelity(a, b);
    CHECK(f == doctest::Approx(fidelity(b, a)).epsilon(1e-13));
    const SpinState a_phase(std::polar(1.0, angle(rng)) * a.amplitudes());
    const SpinState b_phase(std::polar(1.0, angle(rng)) * b.amplitudes());
    CHECK(fidelity(a_phase, b_phase) == doctest::Approx(f).epsilon(1e-13));
    CHECK(f >= 0.0);
    CHECK(f <= 1.0 + 1e-15);
  }
}

TEST_CASE("spin state construction") {
  CHECK_THROWS_AS(SpinState(1.0, 1.0, 0.0), InputError);
  CHECK_THROWS_AS(SpinState::basis(3), InputError);
  CHECK(SpinState().norm() == 1.0);
}

TEST_CASE("closed-form spin-1 rotation") {
  const double pi = std::numbers::pi;
  CHECK(max_abs(spin1_rotation(Vec3::UnitY(), 0.0) - Operator3::Identity()) == 0.0);

  SUBCASE("pi about z acts diagonally") {
    const SpinState out = SpinState::basis(+1).evolved(spin1_rotation(Vec3::UnitZ(), pi));
    CHECK(std::abs(out[0] - std::polar(1.0, -pi)) < 1e-15);
    CHECK(std::abs(out[1]) == 0.0);
    CHECK(std::abs(out[2]) == 0.0);
  }
  SUBCASE("pi about z maps m_x=+1 to m_x=-1") {
    const SpinState out =
        direction_eigenstate(Vec3::UnitX(), +1).evolved(spin1_rotation(Vec3::UnitZ(), pi));
    CHECK(fidelity(out, direction_eigenstate(Vec3::UnitX(), -1)) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("matches the eigen-decomposition exponential") {
    // exp(-i a n.J) = sum_m exp(-i a m) |m_n><m_n|
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> a(-10.0, 10.0);
    for (int k = 0; k < 50; ++k) {
      const Vec3 n = random_unit(rng);
      const double angle = a(rng);
      Operator3 reference = Operator3::Zero();
      for (int m = -1; m <= 1; ++m) {
        const auto v = direction_eigenstate(n, m).amplitudes();
        reference += std::polar(1.0, -angle * m) * v * v.adjoint();
      }
      CHECK(max_abs(spin1_rotation(n, angle) - reference) < 1e-12);
    }
  }
  SUBCASE("overlap law cos^4(delta/2)") {
    // Rotating |m_x=+1> by delta about z tilts its axis by delta.
    for (double delta : {0.1, 0.7, 1.5, 2.9}) {
      const SpinState out =
          direction_eigenstate(Vec3::UnitX(), +1).evolved(spin1_rotation(Vec3::UnitZ(), delta));
      CHECK(fidelity(out, direction_eigenstate(Vec3::UnitX(), +1)) ==
            doctest::Approx(std::pow(std::cos(delta / 2), 4)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(spin1_rotation(Vec3(0.0, 0.0, 2.0), 1.0), InputError);
}

TEST_CASE("rotation properties") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> a(-20.0, 20.0);
  for (int k = 0; k < 200; ++k) {
    const Vec3 n = random_unit(rng);
    const double x = a(rng);
    const double y = a(rng);
    const Operator3 U = spin1_rotation(n, x);
    CHECK(is_unitary(U, 1e-13));
    CHECK(std::abs(random_state(rng).evolved(U).norm() - 1.0) < 1e-12);
    CHECK(max_abs(U * spin1_rotation(n, y) - spin1_rotation(n, x + y)) < 1e-12);
  }
}
