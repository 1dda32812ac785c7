#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stsurf/directions.hpp"

using namespace stsurf;

namespace {

Origami random_connected_origami(int k, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    auto o = Origami::build(k, Permutation::from_images(a), Permutation::from_images(b));
    if (o.connected()) return o;
  }
}

}  // namespace

TEST_SUITE("directions") {

TEST_CASE("slope parsing and printing") {
  const auto s = Slope::parse("2/1");
  CHECK(s.run == 1);
  CHECK(s.rise == 2);
  CHECK(s.to_string() == "2/1");
  CHECK(s.steep());
  CHECK_FALSE(Slope::parse("1/3").steep());
  CHECK(Slope::parse("1/0").run == 0);
  CHECK_THROWS(Slope::parse("2/4"));
  CHECK_THROWS(Slope::parse("0/0"));
  CHECK_THROWS(Slope::parse("x"));
}

TEST_CASE("Farey words") {
  CHECK(sturmian_lyndon(2, 5).letters == "00101");
  CHECK(sturmian_lyndon(0, 1).letters == "0");
  CHECK(sturmian_lyndon(1, 1).letters == "1");
  CHECK(sturmian_lyndon(1, 3).letters == "001");
  CHECK(sturmian_lyndon(3, 5).letters == "01011");
  CHECK_THROWS(sturmian_lyndon(2, 4));
  CHECK_THROWS(sturmian_lyndon(5, 3));
  for (long long q = 1; q <= 40; ++q) {
    for (long long p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto w = sturmian_lyndon(p, q);
      CHECK(static_cast<long long>(w.letters.size()) == q);
      CHECK(std::count(w.letters.begin(), w.letters.end(), '1') == p);
      CHECK(w.letters == oracle::christoffel(p, q));
      if (q > 1) CHECK(is_lyndon(w.letters));
    }
  }
}

TEST_CASE("slope enumeration order") {
  const auto slopes = enumerate_slopes(3);
  std::vector<std::pair<long long, long long>> got;
  for (const auto& s : slopes) got.emplace_back(s.run, s.rise);
  const std::vector<std::pair<long long, long long>> want{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {3, 2},
                                                          {2, 3}, {1, 3}, {1, 0}, {0, 1}};
  CHECK(got == want);
  // every reduced direction with entries up to 12 appears exactly once
  const auto many = enumerate_slopes(12);
  long long count = 0;
  for (long long a = 0; a <= 12; ++a)
    for (long long b = 0; b <= 12; ++b)
      if ((a || b) && std::gcd(a, b) == 1) ++count;
  CHECK(static_cast<long long>(many.size()) == count);
}

TEST_CASE("retiling is a surface of the same genus") {
  const auto o = fixtures::six_square_family(1);
  const auto r = retile(o, Slope::make(2, 3));
  const auto tiled = Origami::build(r.sigma_h.degree(), r.sigma_h, r.sigma_v);
  CHECK(tiled.squares() == 18);
  CHECK(tiled.connected());
  CHECK(stratum(tiled).genus == 2);
  CHECK_THROWS_AS(retile(o, Slope::make(3, 2)), ShallowSlope);
}

TEST_CASE("word route equals retiling route pointwise") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto o = random_connected_origami(2 + static_cast<int>(rng() % 9), rng);
    for (const auto& s : enumerate_slopes(9)) {
      if (!s.steep()) continue;
      CHECK(sigma_hat_word(o, s) == sigma_hat_retile(o, s));
    }
  }
}

TEST_CASE("sigma-hat matches a straight-line trace") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto o = random_connected_origami(2 + static_cast<int>(rng() % 8), rng);
    for (const auto& s : enumerate_slopes(8)) {
      if (s.rise == 0) continue;
      const auto traced = oracle::cycle_lengths(oracle::first_return(o, s.run, s.rise));
      const auto dec = cylinder_decomposition(o, s);
      std::vector<int> lengths;
      for (const auto& c : dec.cylinders) lengths.push_back(static_cast<int>(c.strips));
      std::sort(lengths.begin(), lengths.end(), std::greater<>());
      CHECK(lengths == traced);
      if (s.steep()) {
        const auto map = oracle::first_return(o, s.run, s.rise);
        const auto hat = sigma_hat(o, s);
        for (int i = 1; i <= o.squares(); ++i) CHECK(hat(i) == map[static_cast<std::size_t>(i)]);
      }
    }
  }
}

TEST_CASE("single-cylinder directions on small surfaces") {
  CHECK(is_single_cylinder(fixtures::unit_torus(), Slope::make(3, 7)));
  const auto t2 = fixtures::two_square_torus();
  CHECK_FALSE(is_single_cylinder(t2, Slope::make(0, 1)));
  CHECK(is_single_cylinder(t2, Slope::make(1, 0)));
  const auto found = find_single_cylinder_direction(t2, 5);
  REQUIRE(found.slope);
  CHECK(found.slope->to_string() == "1/1");
  CHECK(found.examined == 1);
}

TEST_CASE("eight squares: parity obstruction") {
  const auto o = fixtures::wollmilchsau();
  const auto cert = no_single_cylinder_certificate(o);
  CHECK(cert.kind == NoSingleCylinderCertificate::Kind::ParityObstruction);
  const auto search = find_single_cylinder_direction(o, 12);
  CHECK_FALSE(search.slope);
  CHECK(search.parity_obstruction);
}

TEST_CASE("odd surfaces admit single-cylinder directions") {
  const auto o = fixtures::five_square_h2_right();
  const auto cert = no_single_cylinder_certificate(o);
  CHECK(cert.kind == NoSingleCylinderCertificate::Kind::None);
  REQUIRE(cert.witness);
  CHECK(is_single_cylinder(o, *cert.witness));
}

TEST_CASE("horizontal decomposition of the six-square family") {
  for (int n = 1; n <= 4; ++n) {
    const auto o = fixtures::six_square_family(n);
    const auto dec = cylinder_decomposition(o, Slope::make(1, 0));
    REQUIRE(dec.cylinders.size() == 2);
    CHECK(dec.cylinders[0].area() == 2 * n + 1);
    CHECK(dec.cylinders[1].area() == 2 * n + 1);
    CHECK(dec.transposed);
    CHECK(dec.cylinders[0].squares.size() == static_cast<std::size_t>(2 * n + 1));
  }
}

TEST_CASE("areas add up and heights follow the slope") {
  const auto o = fixtures::six_square_family(2);
  for (const auto& s : enumerate_slopes(7)) {
    const auto dec = cylinder_decomposition(o, s);
    CHECK(dec.total_area() == o.squares());
    double sum = 0;
    for (std::size_t i = 0; i < dec.cylinders.size(); ++i) sum += dec.height(i) * dec.width();
    CHECK(sum == doctest::Approx(o.squares()));
  }
  const auto dec = cylinder_decomposition(o, Slope::make(1, 2));
  CHECK(dec.width() == doctest::Approx(1 / std::sqrt(5.0)));
}

TEST_CASE("huge denominators use the word route") {
  const auto o = fixtures::five_square_h2_right();
  // consecutive Fibonacci numbers
  const Slope s = Slope::make(701408733, 1134903170);
  const auto hat = sigma_hat(o, s);
  CHECK(hat.degree() == 5);
  const auto moderate = Slope::make(6765, 10946);
  CHECK(sigma_hat_word(o, moderate) == sigma_hat_retile(o, moderate));
}

TEST_CASE("disconnected input is refused") {
  const auto o = Origami::build(4, Permutation::parse("(1 2)(3 4)", 4), Permutation::identity(4));
  CHECK_THROWS_AS(is_single_cylinder(o, Slope::make(1, 1)), DisconnectedSurface);
  CHECK_THROWS_AS(cylinder_decomposition(o, Slope::make(1, 1)), DisconnectedSurface);
}

}
