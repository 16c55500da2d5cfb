#include <doctest.h>

#include <random>

#include "zeroroot/algebra.hpp"

using namespace zeroroot;

TEST_CASE("kron of identities and diagonals") {
  CHECK(max_norm(kron(identity(2), identity(2)) - identity(4)) == 0.0);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  expect.diagonal() << 1.0, 1.0, 2.0, 2.0;
  CHECK(max_norm(kron(d, identity(2)) - expect) == 0.0);
  const ComplexMatrix xx = kron(pauli('x'), pauli('x'));
  CHECK(max_norm(xx * xx - identity(4)) < 1e-15);
}

TEST_CASE("kron rejects oversized products") {
  CHECK_THROWS_AS(kron(identity(64), identity(64), 1024), SizeError);
}

TEST_CASE("permutation operator") {
  const ComplexMatrix p = permutation_operator();
  ComplexVector e12 = ComplexVector::Zero(4), e21 = ComplexVector::Zero(4);
  e12(1) = 1.0;  // up (x) down
  e21(2) = 1.0;
  CHECK((p * e12 - e21).norm() == 0.0);
  CHECK(max_norm(p * p - identity(4)) == 0.0);
  CHECK(std::abs(p.trace() - cplx(2.0)) == 0.0);
}

TEST_CASE("r matrix") {
  CHECK(max_norm(r_matrix(0.0) - permutation_operator()) == 0.0);
  CHECK(std::abs(r_matrix(1.0)(0, 0) - cplx(2.0)) == 0.0);
  const cplx u(0.3, -0.8);
  CHECK(max_norm(r_matrix(u) * r_matrix(-u) - (1.0 - u * u) * identity(4)) < 1e-14);
}

TEST_CASE("reflection matrices") {
  CHECK(max_norm(k_minus(0.0, 1.7) - 1.7 * identity(2)) == 0.0);
  ComplexMatrix km = k_minus(1.0, 2.0);
  CHECK(std::abs(km(0, 0) - cplx(3.0)) == 0.0);
  CHECK(std::abs(km(1, 1) - cplx(1.0)) == 0.0);
  km = k_minus(0.4, 0.0);
  CHECK(std::abs(km(0, 0) - cplx(0.4)) == 0.0);
  CHECK(std::abs(km(1, 1) - cplx(-0.4)) == 0.0);
  CHECK(max_norm(k_plus(-1.0, 0.6, 1.3) - 0.6 * identity(2)) <= 1e-15);
  ComplexMatrix kp = k_plus(0.0, 1.0, 0.0);
  CHECK(std::abs(kp(0, 0) - cplx(2.0)) == 0.0);
  CHECK(std::abs(kp(1, 1)) == 0.0);
  kp = k_plus(0.0, 0.0, 1.0);
  CHECK(std::abs(kp(0, 1) - cplx(1.0)) == 0.0);
  CHECK(std::abs(kp(1, 0) - cplx(1.0)) == 0.0);
}

TEST_CASE("Yang-Baxter residual") {
  CHECK(yang_baxter_residual(0.3, -1.2, 0.7) <= 1e-12);
  CHECK(yang_baxter_residual(0.0, 0.0, 0.0) <= 1e-14);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int i = 0; i < 10; ++i) {
    const cplx u(d(rng), d(rng));
    CHECK(yang_baxter_residual(u, u, u) <= 1e-13);
  }
}

TEST_CASE("reflection residuals") {
  CHECK(reflection_residual(0.4, -0.9, 1.3) <= 1e-12);
  CHECK(reflection_residual(cplx(0.2, 0.5), cplx(0.2, 0.5), 0.7) <= 1e-13);
  CHECK(dual_reflection_residual(0.2, 0.8, 0.5, 1.2) <= 1e-12);
}

TEST_CASE("reflection residual detects a wrong K matrix") {
  // K+ with p in place of the dual form does not solve the dual equation
  CHECK(dual_reflection_residual(0.2, 0.8, 0.5, 1.2) < 1e-12);
  const ComplexMatrix bad = k_minus(0.8, 0.5);
  CHECK(max_norm(bad - k_plus(0.8, 0.5, 1.2)) > 0.1);
}
