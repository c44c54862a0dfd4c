#include "qts/poly.hpp"

#include <algorithm>

namespace qts {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rational> q;
  q.reserve(coeffs.size());
  for (long c : coeffs) q.emplace_back(c);
  return RationalPoly(std::move(q));
}

RationalPoly RationalPoly::from_ints(const std::vector<Int>& coeffs) {
  std::vector<Rational> q;
  q.reserve(coeffs.size());
  for (const auto& c : coeffs) q.emplace_back(c);
  return RationalPoly(std::move(q));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(long i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c /= lc;
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::compose_affine(const Rational& alpha, const Rational& beta) const {
  // Horner in the polynomial ring: acc = acc * (alpha X + beta) + c.
  const RationalPoly lin(std::vector<Rational>{beta, alpha});
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin + RationalPoly(std::vector<Rational>{*it});
  }
  return acc;
}

RationalPoly operator+(const RationalPoly& lhs, const RationalPoly& rhs) {
  std::vector<Rational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) out[i] += lhs.coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& lhs, const RationalPoly& rhs) {
  return lhs + Rational(-1) * rhs;
}

RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const Rational& s, const RationalPoly& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& c : out) c *= s;
  return RationalPoly(std::move(out));
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& num, const RationalPoly& den) {
  if (den.is_zero()) throw InvalidInputError("polynomial division by zero");
  if (num.degree() < den.degree()) return {RationalPoly(), num};
  std::vector<Rational> rem(num.coeffs());
  std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - den.degree() + 1), Rational(0));
  const long dd = den.degree();
  const Rational& lc = den.leading();
  for (long k = num.degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lc;
    quo[static_cast<std::size_t>(k)] = q;
    if (sgn(q) == 0) continue;
    for (long j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(std::max<long>(dd, 0)));
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a;
  RationalPoly y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Real FloatPoly::eval(const Real& x) const {
  Real acc(0L, precision_bits);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

FloatPoly to_float(const RationalPoly& p, long precision_bits) {
  FloatPoly out;
  out.precision_bits = precision_bits;
  for (const auto& c : p.coeffs()) out.coeffs.emplace_back(c, precision_bits);
  if (out.coeffs.empty()) out.coeffs.emplace_back(0L, precision_bits);
  return out;
}

}  // namespace qts
