#include "qts/numeric.hpp"

#include <climits>
#include <cstdlib>
#include <memory>

namespace qts {

namespace {

std::string take_mpfr_string(char* raw) {
  std::unique_ptr<char, void (*)(char*)> guard(raw, [](char* p) { mpfr_free_str(p); });
  return std::string(raw);
}

}  // namespace

Real::Real(long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const Int& value, long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, long precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

namespace {

// Results take the larger operand precision.
void widen_to(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) {
    mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
  }
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& lhs, const Real& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

long Real::floor_long() const {
  if (!mpfr_fits_slong_p(value_, MPFR_RNDD)) throw RangeError("value does not fit a long");
  return mpfr_get_si(value_, MPFR_RNDD);
}

long Real::ceil_long() const {
  if (!mpfr_fits_slong_p(value_, MPFR_RNDU)) throw RangeError("value does not fit a long");
  return mpfr_get_si(value_, MPFR_RNDU);
}

std::string Real::to_significant(int digits) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Rg", digits, value_) < 0) throw std::bad_alloc();
  return take_mpfr_string(raw);
}

std::string Real::to_fixed(int decimals) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*RNf", decimals, value_) < 0) throw std::bad_alloc();
  return take_mpfr_string(raw);
}

std::string Real::to_hex() const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%Ra", value_) < 0) throw std::bad_alloc();
  return take_mpfr_string(raw);
}

Real abs(const Real& x) {
  Real out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& x, long n) {
  Real out(x.precision());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

Real exp2_int(long e, long precision_bits) {
  Real out(1L, precision_bits);
  mpfr_mul_2si(out.get(), out.get(), e, MPFR_RNDN);
  return out;
}

std::size_t bit_length(const Int& z) {
  if (sgn(z) == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace qts
