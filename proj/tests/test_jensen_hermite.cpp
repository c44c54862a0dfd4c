#include <cmath>

#include "doctest.h"
#include "qts/jensen_hermite.hpp"

using namespace qts;

namespace {

std::vector<double> as_doubles(const FloatPoly& p) {
  std::vector<double> out;
  for (const auto& c : p.coeffs) out.push_back(c.to_double());
  return out;
}

void check_line(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(got[i] - want[i]) <= tol);
  }
}

}  // namespace

TEST_SUITE("jensen_hermite") {

TEST_CASE("Hermite polynomials") {
  CHECK(hermite(0).coeffs == std::vector<Int>{1});
  CHECK(hermite(1).coeffs == std::vector<Int>{0, 1});
  CHECK(hermite(2).coeffs == std::vector<Int>{-2, 0, 1});
  CHECK(hermite(3).coeffs == std::vector<Int>{0, -6, 0, 1});
  CHECK(hermite(4).coeffs == std::vector<Int>{12, 0, -12, 0, 1});
}

TEST_CASE("Hermite recurrence and parity") {
  for (long d = 1; d < 12; ++d) {
    const auto prev = hermite(d - 1).coeffs;
    const auto cur = hermite(d).coeffs;
    const auto next = hermite(d + 1).coeffs;
    for (long i = 0; i <= d + 1; ++i) {
      Int expect = (i >= 1 ? cur[static_cast<std::size_t>(i - 1)] : Int(0));
      if (i <= d - 1) expect -= 2 * d * prev[static_cast<std::size_t>(i)];
      CHECK(next[static_cast<std::size_t>(i)] == expect);
      if ((d + 1 - i) % 2 != 0) CHECK(next[static_cast<std::size_t>(i)] == 0);
    }
  }
}

TEST_CASE("unnormalized Jensen polynomial") {
  const RationalPoly j = jensen_poly(qbinom_coeffs({2, 2}), 2, 1);
  // u_1 + 2 u_2 X + u_3 X^2 for (1,1,2,1,1)
  CHECK(j == RationalPoly::from_ints(std::vector<long>{1, 4, 1}));
  // past the end pads with zeros
  CHECK(jensen_poly(qbinom_coeffs({2, 2}), 2, 4) == RationalPoly::from_ints(std::vector<long>{1}));
}

TEST_CASE("(50,50) reference lines") {
  const CoeffSeq s = qbinom_coeffs({50, 50});
  const MomentProfile p = profile(s.params());
  check_line(as_doubles(normalized_jensen(s, p, 1, 1250)), {0.004787, 0.999977}, 1e-6);
  check_line(as_doubles(normalized_jensen(s, p, 2, 1250)), {-1.963914, 0.028721, 0.999907}, 1e-6);
  check_line(as_doubles(normalized_jensen(s, p, 3, 1250)), {-0.083596, -5.890518, 0.071796, 0.999790}, 1e-6);
}

TEST_CASE("(50,50) against the independent computation") {
  const CoeffSeq s = qbinom_coeffs({50, 50});
  const MomentProfile p = profile(s.params());
  check_line(as_doubles(normalized_jensen(s, p, 3, 1250)),
             {-0.08359631437, -5.890518486, 0.0717957193, 0.9997900022}, 1e-9);
}

TEST_CASE("(90,90,90) against the independent computation") {
  const CoeffSeq s = qmultinom_coeffs(Composition({90, 90, 90}));
  const MomentProfile p = profile(s.params());
  check_line(as_doubles(normalized_jensen(s, p, 1, 12150)), {0.000872804671, 0.9999989806}, 1e-9);
  check_line(as_doubles(normalized_jensen(s, p, 2, 12150)), {-1.494557171, 0.005236817385, 0.9999959224}, 1e-9);
  check_line(as_doubles(normalized_jensen(s, p, 3, 12150)),
             {-0.01170090611, -4.483630515, 0.01309199026, 0.9999908253}, 1e-9);
}

TEST_CASE("degree zero is the constant one") {
  const CoeffSeq s = qbinom_coeffs({2, 2});
  const MomentProfile p = profile(s.params());
  const FloatPoly j = normalized_jensen(s, p, 0, 2);
  REQUIRE(j.degree() == 0);
  CHECK(j.coeffs[0].to_double() == 1.0);
}

TEST_CASE("normalized Jensen errors") {
  const CoeffSeq s = qbinom_coeffs({2, 2});
  const MomentProfile p = profile(s.params());
  CHECK_THROWS_AS(normalized_jensen(s, p, 2, 5), RangeError);
  CHECK_THROWS_AS(normalized_jensen(s, p, 2, -1), RangeError);
  CHECK_THROWS_AS(normalized_jensen(s, p, -1, 1), InvalidInputError);
}

TEST_CASE("precision warning") {
  const CoeffSeq s = qbinom_coeffs({50, 50});
  CHECK_FALSE(normalized_jensen(s, profile(s.params(), 256), 3, 1250).precision_warning);
  CHECK(normalized_jensen(s, profile(s.params(), 64), 3, 1250).precision_warning);
}

TEST_CASE("Hermite deviation") {
  const CoeffSeq s = qbinom_coeffs({50, 50});
  const MomentProfile p = profile(s.params());
  const double dev = hermite_deviation(normalized_jensen(s, p, 2, 1250), 2);
  CHECK(dev == doctest::Approx(2.0 - 1.963913666).epsilon(1e-6));
  CHECK_THROWS_AS(hermite_deviation(normalized_jensen(s, p, 2, 1250), 3), InvalidInputError);
}

TEST_CASE("slope fit") {
  CHECK(*ols_slope({1, 2, 3}, {2, 4, 6}) == doctest::Approx(2.0));
  CHECK_FALSE(ols_slope({1}, {1}).has_value());
}

TEST_CASE("convergence study") {
  std::vector<Params> fam{BoxParams(10, 10), BoxParams(20, 20), BoxParams(40, 40)};
  const ConvergenceTable t1 = convergence_study(fam, 2, 1.0, 256, 1);
  const ConvergenceTable t3 = convergence_study(fam, 2, 1.0, 256, 3);
  REQUIRE(t1.rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t1.rows[i].max_deviation == t3.rows[i].max_deviation);
    CHECK(t1.rows[i].argmax_m == t3.rows[i].argmax_m);
  }
  CHECK(t1.rows[1].size == 40);
  REQUIRE(t1.center_slope.has_value());
  CHECK(*t1.center_slope < 0.0);
  const ConvergenceTable single = convergence_study({BoxParams(50, 50)}, 1, 0.0);
  CHECK_FALSE(single.fitted_slope.has_value());
  CHECK_THROWS_AS(convergence_study({BoxParams(20, 20), BoxParams(10, 10)}, 1, 1.0), InvalidInputError);
}

}  // TEST_SUITE
