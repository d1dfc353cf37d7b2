#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

namespace anyonwalk {

/// Exact element of Z[ζ, 1/√2] with ζ = exp(iπ/8): an integer combination of
/// ζ^0..ζ^7 (ζ^8 = -1) scaled by 2^{-half_pow/2}.
///
/// Values are kept in canonical form (smallest possible half_pow, zero has
/// half_pow 0), so operator== is exact value equality. Arithmetic throws
/// std::overflow_error instead of wrapping.
class CycScalar {
 public:
  using Coeffs = std::array<std::int64_t, 8>;

  CycScalar() = default;
  CycScalar(const Coeffs& coeffs, int half_pow);

  static CycScalar integer(std::int64_t v);
  /// ζ^k for any integer k.
  static CycScalar zeta(int k);
  /// (√2)^k for any integer k.
  static CycScalar sqrt2_pow(int k);

  const Coeffs& coefficients() const { return coeffs_; }
  int half_pow() const { return half_pow_; }
  bool is_zero() const;

  CycScalar operator-() const;
  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const { return *this + (-o); }
  CycScalar operator*(const CycScalar& o) const;
  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
  /// Multiplies by ζ^k (a signed rotation of the coefficient vector).
  CycScalar times_zeta(int k) const;
  /// Complex conjugate (ζ -> ζ^{-1}).
  CycScalar conj() const;

  bool operator==(const CycScalar& o) const = default;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  void normalize();

  Coeffs coeffs_{};
  int half_pow_ = 0;
};

/// 2x2 matrix over CycScalar, row-major.
class CycMat2 {
 public:
  CycMat2() = default;
  CycMat2(CycScalar a, CycScalar b, CycScalar c, CycScalar d) : m_{a, b, c, d} {}

  static CycMat2 identity();

  const CycScalar& operator()(int r, int c) const { return m_[static_cast<std::size_t>(2 * r + c)]; }

  CycMat2 operator*(const CycMat2& o) const;
  CycMat2 scaled(const CycScalar& s) const;
  CycMat2 operator-() const { return scaled(CycScalar::integer(-1)); }
  /// Conjugate transpose; the inverse for the unitary generators used here.
  CycMat2 adjoint() const;

  bool operator==(const CycMat2& o) const = default;

  /// +1 or -1 if the matrix is ±identity, 0 otherwise.
  int identity_sign() const;

  std::string to_string() const;

 private:
  std::array<CycScalar, 4> m_{};
};

}  // namespace anyonwalk
