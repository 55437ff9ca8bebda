#pragma once

#include "enriques/integer.hpp"

#include <vector>

namespace enriques {

/// Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1).
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(int m);

  /// sum_j counts[j] * zeta^j for j in [0, m).
  static CyclotomicInteger from_exponent_counts(int m, const std::vector<Integer>& counts);
  /// c * zeta^j.
  static CyclotomicInteger monomial(int m, const Integer& c, int j);

  int conductor() const noexcept { return m_; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) = default;

 private:
  int m_;
  std::vector<Integer> coeffs_;
};

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int m);

}  // namespace enriques
