#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace mzv {

using Rational = mpq_class;

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int m);

int euler_phi(int m);

/// Exact element of the cyclotomic field Q(zeta_m).
///
/// Stored in the power basis 1, zeta, ..., zeta^(phi(m)-1) reduced modulo the
/// m-th cyclotomic polynomial, so two elements of the same order are equal iff
/// their coefficient vectors are equal. Elements of different orders are
/// combined in Q(zeta_lcm). Q itself is the order-1 case.
class CycloNum {
 public:
  CycloNum();
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  CycloNum(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Reduces sum_j coeffs[j] * zeta_order^j; any number of coefficients.
  static CycloNum make(int order, std::span<const Rational> coeffs);

  /// zeta_order^(e mod order); negative exponents allowed.
  static CycloNum root_power(int order, long long e);

  int order() const noexcept { return order_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  std::optional<Rational> rational() const;
  std::complex<double> to_complex() const;

  /// The same element viewed in Q(zeta_target); `order()` must divide `target`.
  CycloNum embed(int target) const;

  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator*=(const Rational& rhs);

  friend CycloNum operator+(CycloNum lhs, const CycloNum& rhs) { return lhs += rhs; }
  friend CycloNum operator-(CycloNum lhs, const CycloNum& rhs) { return lhs -= rhs; }
  friend CycloNum operator*(CycloNum lhs, const CycloNum& rhs) { return lhs *= rhs; }
  friend CycloNum operator*(CycloNum lhs, const Rational& rhs) { return lhs *= rhs; }
  CycloNum operator-() const;

  friend bool operator==(const CycloNum& lhs, const CycloNum& rhs);

 private:
  CycloNum(int order, std::vector<Rational> coeffs);

  int order_;
  std::vector<Rational> coeffs_;
};

/// Non-negative power by repeated squaring.
CycloNum pow(const CycloNum& base, unsigned exponent);

}  // namespace mzv
