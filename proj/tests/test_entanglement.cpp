#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "decoq/entanglement.hpp"
#include "decoq/errors.hpp"
#include "decoq/states.hpp"
#include "decoq/tensor.hpp"
#include "oracles.hpp"

using namespace decoq;

TEST_CASE("bell state: concurrence 1, negativity 1/2") {
  const DensityMatrix bell = bell_state();
  CHECK(concurrence(bell).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(negativity(bell) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("werner family reproduces max(0, (3p-1)/2)") {
  for (int i = 0; i <= 50; ++i) {
    const double p = i / 50.0;
    const DensityMatrix rho(oracle::werner(p));
    CHECK(concurrence(rho).value ==
          doctest::Approx(oracle::werner_concurrence(p)).epsilon(1e-12));
  }
}

TEST_CASE("concurrence and negativity vanish together at p = 1/3") {
  // scan the Werner line around the separability threshold
  for (int i = 0; i <= 60; ++i) {
    const double p = 0.2 + i * (0.25 / 60.0);  // [0.2, 0.45]
    const DensityMatrix rho(oracle::werner(p));
    const double c = concurrence(rho).value;
    const double n = negativity(rho);
    if (p < 1.0 / 3.0 - 1e-3) {
      CHECK(c == doctest::Approx(0.0));
      CHECK(n == doctest::Approx(0.0));
    }
    if (p > 1.0 / 3.0 + 1e-3) {
      CHECK(c > 0.0);
      CHECK(n > 0.0);
    }
  }
}

TEST_CASE("local unitaries leave the concurrence invariant") {
  std::mt19937_64 rng(31);
  for (int seed = 0; seed < 50; ++seed) {
    const CMat4 rho = oracle::random_density(rng);
    const CMat4 u = kron(oracle::random_unitary2(rng),
                         oracle::random_unitary2(rng));
    const DensityMatrix a(rho);
    const DensityMatrix b(CMat4(u * rho * u.adjoint()));
    CHECK(std::abs(concurrence(a).value - concurrence(b).value) <= 1e-10);
    CHECK(std::abs(negativity(a) - negativity(b)) <= 1e-10);
  }
}

TEST_CASE("product states carry no entanglement") {
  std::mt19937_64 rng(37);
  for (int seed = 0; seed < 50; ++seed) {
    const Eigen::Vector2cd a = oracle::random_qubit(rng);
    const Eigen::Vector2cd b = oracle::random_qubit(rng);
    Eigen::Vector4cd psi;
    psi << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    const CMat4 rho = psi * psi.adjoint();
    const DensityMatrix dm(rho);
    CHECK(concurrence(dm).value <= 1e-10);
    CHECK(negativity(dm) <= 1e-10);
  }
}

TEST_CASE("pure states: concurrence equals 2 |a d - b c|") {
  std::mt19937_64 rng(41);
  for (int seed = 0; seed < 50; ++seed) {
    const Eigen::Vector4cd psi = oracle::random_two_qubit(rng);
    const CMat4 rho = psi * psi.adjoint();
    const double expected = 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2));
    CHECK(std::abs(concurrence(DensityMatrix(rho)).value - expected) <= 1e-10);
  }
}

TEST_CASE("spin flip is an involution and maps bell to itself") {
  std::mt19937_64 rng(43);
  const CMat4 rho = oracle::random_density(rng);
  CHECK((spin_flip(spin_flip(rho)) - rho).norm() <= 1e-14);
  const CMat4 bell = bell_state().matrix();
  CHECK((spin_flip(bell) - bell).norm() <= 1e-14);
}

TEST_CASE("partial transpose acts on the second slot") {
  std::mt19937_64 rng(47);
  const CMat4 rho = oracle::random_density(rng);
  const CMat4 pt = partial_transpose_b(rho);
  CHECK((partial_transpose_b(pt) - rho).norm() <= 1e-14);
  CHECK(std::abs((pt.trace() - rho.trace()).real()) <= 1e-14);
  // block (0,1): rows 0-1, cols 2-3 transpose within each 2x2 block
  CHECK(pt(0, 1) == rho(1, 0));
  CHECK(pt(2, 3) == rho(3, 2));
  CHECK(pt(0, 2) == rho(0, 2));  // inter-block index untouched on slot a
}
