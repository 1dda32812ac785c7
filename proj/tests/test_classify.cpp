#include <random>

#include "doctest.h"
#include "stsurf/classify.hpp"

using namespace stsurf;

TEST_SUITE("skew_sim") {

TEST_CASE("classifier fixtures") {
  const auto left = classify_staircase(fixtures::five_square_left_staircase());
  CHECK(left.verdict == Verdict::NotErgodicAE);

  const auto right = classify_staircase(fixtures::five_square_right_staircase());
  CHECK(right.verdict == Verdict::ErgodicAE);
  CHECK(right.single_cylinder.has_value());

  const auto two = classify_staircase(fixtures::two_square_staircase());
  CHECK(two.verdict == Verdict::ErgodicAE);

  for (int n = 1; n <= 2; ++n) {
    const auto six = classify_staircase(fixtures::six_square_staircase(n));
    CHECK(six.verdict == Verdict::Unknown);
    REQUIRE(six.supplementary.has_value());
    CHECK(six.supplementary->strips == std::vector<long long>{2 * n + 1, 2 * n + 1});
    CHECK(six.supplementary->profiles_equal);
  }
}

TEST_CASE("classifier ignores relabelling") {
  std::mt19937_64 rng(3);
  const StaircaseSpec specs[] = {fixtures::five_square_left_staircase(), fixtures::five_square_right_staircase(),
                                 fixtures::two_square_staircase()};
  for (const auto& spec : specs) {
    const Verdict base = classify_staircase(spec).verdict;
    const int k = spec.origami().squares();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> images(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) images[static_cast<std::size_t>(i)] = i + 1;
      std::shuffle(images.begin(), images.end(), rng);
      const auto g = Permutation::from_images(images);
      const Origami o = spec.origami().relabel(g);
      std::vector<Cut> cuts = spec.cuts();
      for (auto& c : cuts) c.start.square = g(c.start.square);
      const auto moved = StaircaseSpec::build(o, spec.group(), cuts);
      CHECK(classify_staircase(moved).verdict == base);
    }
  }
}

TEST_CASE("generalized cut systems stay Unknown") {
  const auto g = GroupDescriptor::free(1);
  Cut a;
  a.start = {1, Rational(1, 3), 0};
  a.dx = 0;
  a.dy = 1;
  a.length = Rational(1, 2);
  a.value = GroupValue::unit(g, 1);
  Cut b = a;
  b.start.x = Rational(2, 3);
  b.value = -a.value;
  const auto spec = StaircaseSpec::build(fixtures::two_square_torus(), g, {a, b});
  CHECK(classify_staircase(spec).verdict == Verdict::Unknown);
}

TEST_CASE("proposals") {
  const auto torus = propose_staircase(fixtures::unit_torus(), 1);
  CHECK_FALSE(torus.feasible);
  CHECK_FALSE(torus.reason.empty());

  const auto two = propose_staircase(fixtures::two_square_torus(), 1);
  REQUIRE(two.feasible);
  const auto& cuts = two.spec->cuts();
  REQUIRE(cuts.size() == 2);
  const auto expect = fixtures::two_square_staircase();
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(cuts[j].start == expect.cuts()[j].start);
    CHECK(cuts[j].value == expect.cuts()[j].value);
  }
  CHECK(two.classification->verdict == Verdict::ErgodicAE);
  CHECK_FALSE(propose_staircase(fixtures::two_square_torus(), 3).feasible);

  // H(2) with no regular vertex
  const auto h2 = Origami::build(3, Permutation::parse("(1 2 3)", 3), Permutation::parse("(1 2)", 3));
  REQUIRE(stratum(h2).regular_vertices.empty());
  const auto none = propose_staircase(h2, 1);
  CHECK_FALSE(none.feasible);
  CHECK_FALSE(none.warnings.empty());

  // every proposal that succeeds classifies as ErgodicAE when a single-cylinder direction exists
  const auto right = propose_staircase(fixtures::five_square_h2_right(), 1);
  REQUIRE(right.feasible);
  CHECK(right.classification->verdict == Verdict::ErgodicAE);
}

}  // TEST_SUITE
