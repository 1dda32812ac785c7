#include <cmath>

#include "doctest.h"
#include "stsurf/approximation.hpp"

using namespace stsurf;

TEST_SUITE("directions") {

TEST_CASE("golden direction: Fibonacci convergents, no flags") {
  PrecisionScope scope(100);
  const auto o = fixtures::two_square_torus();
  const auto report = approximation_report(o, parse_direction("golden"), 20);
  REQUIRE(report.convergents.size() == 20);
  long long f0 = 1, f1 = 1;
  for (const auto& c : report.convergents) {
    CHECK(c.next_quotient == 1);
    CHECK(c.q == f1);
    CHECK(c.p == f0);
    const long long f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
    CHECK(c.scaled_rotation_error > 2.0 / 3.0);
    CHECK(c.within_sharp_bound);
  }
  CHECK_FALSE(report.good_candidate);
  CHECK_FALSE(report.fairly_good_candidate);
  // k q |q theta' - p| tends to k/sqrt(5), below k/(a+1) = k/2
  CHECK(report.convergents.back().scaled_rotation_error == doctest::Approx(2 / std::sqrt(5.0)).epsilon(1e-6));
}

TEST_CASE("measured error agrees with an angle computation") {
  PrecisionScope scope(60);
  const auto o = fixtures::six_square_family(1);
  const auto report = approximation_report(o, parse_direction("sqrt(3)"), 8);
  const long double theta = std::sqrt(3.0L);
  for (const auto& c : report.convergents) {
    const long double angle = std::fabs(std::atan2(theta, 1.0L) -
                                        std::atan2(static_cast<long double>(c.q), static_cast<long double>(c.p)));
    const long double n2 = static_cast<long double>(c.p * c.p + c.q * c.q);
    const long double expected = static_cast<long double>(c.max_strips) * n2 * std::tan(angle);
    CHECK(c.measured == doctest::Approx(static_cast<double>(expected)).epsilon(1e-8));
    CHECK(c.measured <= c.bound_hi * (1 + 1e-9) * (1 + 1.0 / static_cast<double>(c.q * c.q)));
  }
}

TEST_CASE("doubling quotients flag a good candidate") {
  PrecisionScope scope(200);
  std::string cf = "cf:1";
  for (long long a = 2; a <= (1LL << 20); a *= 2) cf += "," + std::to_string(a);
  const auto report = approximation_report(fixtures::six_square_family(1), parse_direction(cf), 8);
  CHECK(report.partial_quotients[0] == 1);
  CHECK(report.partial_quotients[1] == 2);
  CHECK(report.partial_quotients[5] == 32);
  CHECK(report.good_candidate);
  CHECK(report.good_witness.size() == 8);
}

TEST_CASE("fairly good window") {
  PrecisionScope scope(100);
  // k = 1: window [3, 6]
  const auto report = approximation_report(fixtures::unit_torus(), parse_direction("cf:1,4,1,5,1,4,1,5,1,4,1,5,1,4,1,5"), 8);
  CHECK(report.fairly_good_candidate);
  CHECK(report.fairly_good_witness == std::vector<int>{1, 3, 5, 7});
  CHECK_FALSE(report.good_candidate);
}

TEST_CASE("shallow directions use the transposed surface") {
  PrecisionScope scope(80);
  const auto o = fixtures::five_square_h2_right();
  const Real theta = 1 / parse_direction("sqrt(2)");
  const auto report = approximation_report(o, theta, 5);
  CHECK(report.transposed);
  for (const auto& c : report.convergents) CHECK(c.direction.run >= c.direction.rise);
}

TEST_CASE("errors and trivial depth") {
  PrecisionScope scope(50);
  const auto o = fixtures::unit_torus();
  CHECK(approximation_report(o, parse_direction("golden"), 0).convergents.empty());
  CHECK_THROWS_AS(approximation_report(o, parse_direction("3/2"), 5), RationalDirection);
  CHECK_THROWS_AS(approximation_report(o, parse_direction("1"), 3), RationalDirection);
  ApproximationOptions low;
  low.digits = 20;
  CHECK_THROWS_AS(approximation_report(o, parse_direction("golden"), 30, low), InsufficientPrecision);
  CHECK_THROWS(parse_direction("banana"));
  CHECK_THROWS(parse_direction("cf:1,0"));
}

}
