#include "anyonwalk/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace anyonwalk {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

using Coeffs = CycScalar::Coeffs;

// Product in Z[x]/(x^8 + 1).
Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
  Coeffs r{};
  for (int i = 0; i < 8; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b[j] == 0) continue;
      const std::int64_t term = checked_mul(a[i], b[j]);
      const int k = i + j;
      if (k < 8) {
        r[k] = checked_add(r[k], term);
      } else {
        r[k - 8] = checked_add(r[k - 8], -term);
      }
    }
  }
  return r;
}

// √2 = ζ^2 - ζ^6.
Coeffs times_sqrt2(const Coeffs& a) {
  Coeffs r{};
  for (int i = 0; i < 8; ++i) {
    const int up = i + 2;
    const int down = i + 6;
    if (up < 8) r[up] = checked_add(r[up], a[i]);
    else r[up - 8] = checked_add(r[up - 8], -a[i]);
    if (down < 8) r[down] = checked_add(r[down], -a[i]);
    else r[down - 8] = checked_add(r[down - 8], a[i]);
  }
  return r;
}

bool all_even(const Coeffs& a) {
  for (auto v : a) {
    if (v % 2 != 0) return false;
  }
  return true;
}

}  // namespace

CycScalar::CycScalar(const Coeffs& coeffs, int half_pow) : coeffs_(coeffs), half_pow_(half_pow) { normalize(); }

CycScalar CycScalar::integer(std::int64_t v) {
  Coeffs c{};
  c[0] = v;
  return CycScalar(c, 0);
}

CycScalar CycScalar::zeta(int k) { return integer(1).times_zeta(k); }

CycScalar CycScalar::sqrt2_pow(int k) {
  Coeffs c{};
  c[0] = 1;
  return CycScalar(c, -k);
}

bool CycScalar::is_zero() const {
  for (auto v : coeffs_) {
    if (v != 0) return false;
  }
  return true;
}

void CycScalar::normalize() {
  if (is_zero()) {
    half_pow_ = 0;
    return;
  }
  for (;;) {
    if (all_even(coeffs_)) {
      for (auto& v : coeffs_) v /= 2;
      half_pow_ -= 2;
      continue;
    }
    // x / √2 = x·√2 / 2 stays integral iff x·√2 has even coefficients.
    Coeffs s = times_sqrt2(coeffs_);
    if (all_even(s)) {
      for (auto& v : s) v /= 2;
      coeffs_ = s;
      half_pow_ -= 1;
      continue;
    }
    break;
  }
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Bring both to the larger half_pow: x·2^{-k/2} = (x·√2^{m-k})·2^{-m/2}.
  const int target = std::max(half_pow_, o.half_pow_);
  auto lift = [target](Coeffs c, int k) {
    for (int i = k; i < target; ++i) c = times_sqrt2(c);
    return c;
  };
  const Coeffs a = lift(coeffs_, half_pow_);
  const Coeffs b = lift(o.coeffs_, o.half_pow_);
  Coeffs r{};
  for (int i = 0; i < 8; ++i) r[i] = checked_add(a[i], b[i]);
  return CycScalar(r, target);
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
  if (is_zero() || o.is_zero()) return CycScalar{};
  return CycScalar(poly_mul(coeffs_, o.coeffs_), half_pow_ + o.half_pow_);
}

CycScalar CycScalar::times_zeta(int k) const {
  k %= 16;
  if (k < 0) k += 16;
  Coeffs r{};
  for (int i = 0; i < 8; ++i) {
    int e = i + k;
    std::int64_t v = coeffs_[i];
    while (e >= 8) {
      e -= 8;
      v = -v;
    }
    r[e] = v;
  }
  CycScalar out;
  out.coeffs_ = r;
  out.half_pow_ = half_pow_;
  return out;
}

CycScalar CycScalar::conj() const {
  // ζ^i -> ζ^{-i} = -ζ^{8-i}.
  Coeffs r{};
  r[0] = coeffs_[0];
  for (int i = 1; i < 8; ++i) r[8 - i] = -coeffs_[i];
  return CycScalar(r, half_pow_);
}

std::complex<double> CycScalar::to_complex() const {
  std::complex<double> sum{};
  for (int i = 0; i < 8; ++i) {
    if (coeffs_[i] == 0) continue;
    sum += static_cast<double>(coeffs_[i]) * std::polar(1.0, i * std::numbers::pi / 8.0);
  }
  return sum * std::pow(2.0, -0.5 * half_pow_);
}

std::string CycScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int i = 0; i < 8; ++i) {
    const auto v = coeffs_[i];
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    first = false;
    const auto mag = v < 0 ? -v : v;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z^" << i;
    }
  }
  os << ")";
  if (half_pow_ != 0) os << "*2^(" << -half_pow_ << "/2)";
  return os.str();
}

CycMat2 CycMat2::identity() {
  return {CycScalar::integer(1), CycScalar{}, CycScalar{}, CycScalar::integer(1)};
}

CycMat2 CycMat2::operator*(const CycMat2& o) const {
  CycMat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r.m_[static_cast<std::size_t>(2 * i + j)] = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
    }
  }
  return r;
}

CycMat2 CycMat2::scaled(const CycScalar& s) const {
  CycMat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m_[i] = m_[i] * s;
  return r;
}

CycMat2 CycMat2::adjoint() const {
  return {(*this)(0, 0).conj(), (*this)(1, 0).conj(), (*this)(0, 1).conj(), (*this)(1, 1).conj()};
}

int CycMat2::identity_sign() const {
  if (!(*this)(0, 1).is_zero() || !(*this)(1, 0).is_zero()) return 0;
  const CycScalar one = CycScalar::integer(1);
  if ((*this)(0, 0) == one && (*this)(1, 1) == one) return 1;
  if ((*this)(0, 0) == -one && (*this)(1, 1) == -one) return -1;
  return 0;
}

std::string CycMat2::to_string() const {
  return "[[" + m_[0].to_string() + ", " + m_[1].to_string() + "], [" + m_[2].to_string() + ", " +
         m_[3].to_string() + "]]";
}

}  // namespace anyonwalk
