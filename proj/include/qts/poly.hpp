#pragma once

// Dense univariate polynomials, coefficients in ascending degree.

#include <utility>
#include <vector>

#include "qts/numeric.hpp"

namespace qts {

class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly from_ints(const std::vector<long>& coeffs);
  static RationalPoly from_ints(const std::vector<Int>& coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coeff(long i) const;

  Rational eval(const Rational& x) const;
  RationalPoly derivative() const;
  RationalPoly monic() const;
  // p(alpha X + beta).
  RationalPoly compose_affine(const Rational& alpha, const Rational& beta) const;

  friend RationalPoly operator+(const RationalPoly& lhs, const RationalPoly& rhs);
  friend RationalPoly operator-(const RationalPoly& lhs, const RationalPoly& rhs);
  friend RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& p);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws InvalidInputError on division by zero.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& num, const RationalPoly& den);
// Monic gcd (zero if both are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

// High-precision float coefficients; length is degree + 1.
struct FloatPoly {
  std::vector<Real> coeffs;
  long precision_bits = kDefaultPrecisionBits;
  // Set when the estimated cancellation exceeds precision_bits - 64.
  bool precision_warning = false;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  Real eval(const Real& x) const;
};

FloatPoly to_float(const RationalPoly& p, long precision_bits);

}  // namespace qts
