#include <algorithm>
#include <cmath>
#include <numbers>

#include "qts/hyperbolicity.hpp"

namespace qts {

namespace {

struct Cx {
  Real re;
  Real im;
};

Cx add(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx sub(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx mul(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Real norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }
Cx div(const Cx& a, const Cx& b) {
  const Real den = norm2(b);
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
Real modulus(const Cx& a) { return sqrt(norm2(a)); }

// p(z), p'(z) and sum |a_i| |z|^i by Horner.
void horner(const std::vector<Real>& a, const Cx& z, Cx& value, Cx& deriv, Real& scale) {
  const long bits = z.re.precision();
  value = {Real(0L, bits), Real(0L, bits)};
  deriv = {Real(0L, bits), Real(0L, bits)};
  scale = Real(0L, bits);
  const Real r = modulus(z);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    deriv = add(mul(deriv, z), value);
    value = add(mul(value, z), Cx{*it, Real(0L, bits)});
    scale = scale * r + abs(*it);
  }
}

}  // namespace

Real real_tolerance(const FloatPoly& p) { return exp2_int(-(p.precision_bits / 2), p.precision_bits); }

std::vector<ComplexRoot> numeric_roots(const FloatPoly& p, const RootOptions& opts) {
  const long bits = p.precision_bits;
  std::vector<Real> a = p.coeffs;
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  if (a.empty()) throw ZeroPolynomialError("the zero polynomial has no finite root set");
  if (a.size() - 1 > 64) throw InvalidInputError("numeric_roots supports degree <= 64");

  std::vector<ComplexRoot> roots;
  // Exact zero roots are split off before iterating.
  std::size_t zeros = 0;
  while (zeros < a.size() - 1 && a[zeros].is_zero()) ++zeros;
  for (std::size_t i = 0; i < zeros; ++i) roots.push_back({Real(0L, bits), Real(0L, bits)});
  a.erase(a.begin(), a.begin() + static_cast<long>(zeros));
  const std::size_t n = a.size() - 1;

  if (n >= 1) {
    // Fujiwara-style radius for the starting circle.
    double radius = 0.0;
    const double lead = std::fabs(a[n].to_double());
    for (std::size_t i = 0; i < n; ++i) {
      const double ratio = std::fabs(a[i].to_double()) / lead;
      if (ratio > 0.0) radius = std::max(radius, std::pow(ratio, 1.0 / static_cast<double>(n - i)));
    }
    radius = std::max(radius, 1e-3);

    std::vector<Cx> z;
    z.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
      z.push_back({Real(radius * std::cos(angle), bits), Real(radius * std::sin(angle), bits)});
    }

    // A root is done when its backward error reaches the rounding level.
    const long slack = 8 + 2 * static_cast<long>(std::ceil(std::log2(static_cast<double>(n) + 1.0)));
    const Real eps = exp2_int(-(bits - slack), bits);
    std::vector<bool> done(n, false);
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
      bool all_done = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (done[k]) continue;
        Cx value;
        Cx deriv;
        Real scale(bits);
        horner(a, z[k], value, deriv, scale);
        if (modulus(value) <= eps * scale) {
          done[k] = true;
          continue;
        }
        all_done = false;
        const Cx ratio = div(value, deriv);
        Cx repulsion{Real(0L, bits), Real(0L, bits)};
        for (std::size_t j = 0; j < n; ++j) {
          if (j == k) continue;
          repulsion = add(repulsion, div(Cx{Real(1L, bits), Real(0L, bits)}, sub(z[k], z[j])));
        }
        const Cx denom = sub(Cx{Real(1L, bits), Real(0L, bits)}, mul(ratio, repulsion));
        z[k] = sub(z[k], div(ratio, denom));
      }
      if (all_done) break;
    }
    if (iter == opts.max_iterations) {
      throw NonConvergenceError("Aberth iteration did not converge in " +
                                std::to_string(opts.max_iterations) + " sweeps");
    }

    const Real tol = real_tolerance(p);
    const Real one(1L, bits);
    std::vector<Cx> upper;
    std::vector<Cx> lower;
    for (auto& root : z) {
      if (abs(root.im) <= tol * max(one, modulus(root))) {
        roots.push_back({root.re, Real(0L, bits)});
      } else if (root.im.sign() > 0) {
        upper.push_back(root);
      } else {
        lower.push_back(root);
      }
    }
    auto by_re = [](const Cx& x, const Cx& y) { return x.re < y.re; };
    std::sort(upper.begin(), upper.end(), by_re);
    std::sort(lower.begin(), lower.end(), by_re);
    if (upper.size() == lower.size()) {
      for (std::size_t i = 0; i < upper.size(); ++i) {
        const Real re = (upper[i].re + lower[i].re) / Real(2L, bits);
        const Real im = (upper[i].im - lower[i].im) / Real(2L, bits);
        roots.push_back({re, -im});
        roots.push_back({re, im});
      }
    } else {
      for (auto& x : upper) roots.push_back({x.re, x.im});
      for (auto& x : lower) roots.push_back({x.re, x.im});
    }
  }

  std::stable_sort(roots.begin(), roots.end(), [](const ComplexRoot& x, const ComplexRoot& y) {
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  });
  return roots;
}

}  // namespace qts
