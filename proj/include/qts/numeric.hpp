#pragma once

// Exact and precision-controlled number types shared by every module.
//
// Int and Rational are the GMP C++ classes. Real is a small value type over
// an MPFR handle; each value carries its own precision and all arithmetic
// rounds to nearest.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qts {

using Int = mpz_class;
using Rational = mpq_class;

inline constexpr long kDefaultPrecisionBits = 256;

// Error taxonomy. The CLI maps these onto exit codes.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct DegenerateInputError : std::domain_error {
  using std::domain_error::domain_error;
};
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// An exact step produced something that cannot happen for correct code.
struct InternalInconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Real {
 public:
  explicit Real(long precision_bits = kDefaultPrecisionBits);
  Real(long value, long precision_bits);
  Real(double value, long precision_bits);
  Real(const Int& value, long precision_bits);
  Real(const Rational& value, long precision_bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator==(const Real& lhs, const Real& rhs) {
    return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& lhs, const Real& rhs);

  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Round toward -inf / +inf to an integer. Throws RangeError if out of long.
  long floor_long() const;
  long ceil_long() const;

  // "%.<digits>Rg" style, e.g. 12 significant digits.
  std::string to_significant(int digits) const;
  // Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;
  // Hexadecimal float, exact at the value's precision.
  std::string to_hex() const;

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real pow(const Real& x, long n);
Real max(const Real& a, const Real& b);

// 2^e at the given precision.
Real exp2_int(long e, long precision_bits);

// Number of bits in |z| (0 for z == 0).
std::size_t bit_length(const Int& z);

// Exact binomial coefficient C(n, k), 0 outside 0 <= k <= n.
Int binomial(long n, long k);

}  // namespace qts
