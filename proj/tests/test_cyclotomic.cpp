#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "anyonwalk/cyclotomic.hpp"

using namespace anyonwalk;

namespace {

std::complex<double> zeta_c(int k) { return std::polar(1.0, M_PI * k / 8.0); }

CycScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), half(0, 3);
  CycScalar::Coeffs c{};
  for (auto& v : c) v = coeff(rng);
  return CycScalar(c, half(rng));
}

}  // namespace

TEST_CASE("root of unity powers") {
  CHECK(CycScalar::zeta(16) == CycScalar::integer(1));
  CHECK(CycScalar::zeta(8) == CycScalar::integer(-1));
  CHECK(CycScalar::zeta(3) * CycScalar::zeta(5) == CycScalar::integer(-1));
  CHECK(CycScalar::zeta(-1) == CycScalar::zeta(15));
}

TEST_CASE("sqrt2 is zeta^2 - zeta^6") {
  CHECK(CycScalar::zeta(2) - CycScalar::zeta(6) == CycScalar::sqrt2_pow(1));
  CHECK(CycScalar::sqrt2_pow(1) * CycScalar::sqrt2_pow(1) == CycScalar::integer(2));
  CHECK(CycScalar::sqrt2_pow(-3) * CycScalar::sqrt2_pow(3) == CycScalar::integer(1));
}

TEST_CASE("loop value d = -A^2 - A^-2 equals sqrt2 at A = zeta^3") {
  const CycScalar d = -(CycScalar::zeta(6) + CycScalar::zeta(-6));
  CHECK(d == CycScalar::sqrt2_pow(1));
}

TEST_CASE("arithmetic agrees with complex doubles") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const CycScalar x = random_scalar(rng), y = random_scalar(rng);
    CHECK(std::abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-9);
    CHECK(std::abs((x + y).to_complex() - (x.to_complex() + y.to_complex())) < 1e-9);
    CHECK(std::abs(x.conj().to_complex() - std::conj(x.to_complex())) < 1e-9);
    CHECK(std::abs(x.times_zeta(k).to_complex() - x.to_complex() * zeta_c(k)) < 1e-9);
  }
}

TEST_CASE("normal form makes equality exact") {
  const CycScalar a = CycScalar::integer(4) * CycScalar::sqrt2_pow(-2);
  CHECK(a == CycScalar::integer(2));
  CHECK((a - a).is_zero());
  CHECK(CycScalar::integer(0) == CycScalar());
}

TEST_CASE("2x2 matrices") {
  const CycMat2 i = CycMat2::identity();
  CHECK(i.identity_sign() == 1);
  CHECK((-i).identity_sign() == -1);
  const CycMat2 m(CycScalar::integer(1), CycScalar::zeta(4), CycScalar::integer(0), CycScalar::integer(1));
  CHECK(m.identity_sign() == 0);
  CHECK((m * m.adjoint())(0, 0) == CycScalar::integer(2));
  CHECK(m.adjoint().adjoint() == m);
}
