#pragma once

// Seeded random rational polynomials for root-count cross-checks.
//
// random_poly: degree uniform in 1..8, coefficients n/k with n uniform in
// [-100, 100] and k in 1..4, nonzero leading coefficient.
// random_squarefree_product: distinct rational linear factors times distinct
// positive-definite quadratics, so many roots are real but none repeat.

#include <algorithm>
#include <random>

#include "qts/poly.hpp"

namespace qts::testing {

inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline RationalPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg_dist(1, 8);
  std::uniform_int_distribution<long> num_dist(-100, 100);
  std::uniform_int_distribution<long> den_dist(1, 4);
  const int degree = deg_dist(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(ratio(num_dist(rng), den_dist(rng)));
  while (sgn(c.back()) == 0) c.back() = ratio(num_dist(rng), den_dist(rng));
  return RationalPoly(std::move(c));
}

inline RationalPoly random_squarefree_product(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg_dist(1, 8);
  std::uniform_int_distribution<long> num_dist(-12, 12);
  std::uniform_int_distribution<long> den_dist(1, 3);
  std::uniform_int_distribution<int> coin(0, 2);
  const int degree = deg_dist(rng);
  std::vector<Rational> real_roots;
  std::vector<std::pair<Rational, Rational>> complex_pairs;  // (center, shift)
  int remaining = degree;
  while (remaining > 0) {
    if (remaining >= 2 && coin(rng) == 0) {
      std::pair<Rational, Rational> pr{ratio(num_dist(rng), den_dist(rng)), ratio(1 + std::abs(num_dist(rng)), den_dist(rng))};
      if (std::find(complex_pairs.begin(), complex_pairs.end(), pr) != complex_pairs.end()) continue;
      complex_pairs.push_back(pr);
      remaining -= 2;
    } else {
      const Rational r = ratio(num_dist(rng), den_dist(rng));
      if (std::find(real_roots.begin(), real_roots.end(), r) != real_roots.end()) continue;
      real_roots.push_back(r);
      remaining -= 1;
    }
  }
  RationalPoly p({Rational(1)});
  for (const auto& r : real_roots) p = p * RationalPoly({-r, Rational(1)});
  for (const auto& [c, s] : complex_pairs) p = p * RationalPoly({c * c + s, -2 * c, Rational(1)});
  return p;
}

}  // namespace qts::testing
