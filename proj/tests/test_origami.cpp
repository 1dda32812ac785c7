#include "doctest.h"
#include "stsurf/origami.hpp"

using namespace stsurf;

TEST_SUITE("origami") {

TEST_CASE("unit torus") {
  const auto o = fixtures::unit_torus();
  const auto s = stratum(o);
  CHECK(s.genus == 1);
  CHECK(s.name() == "H(0)");
  CHECK(s.vertex_count == 1);
}

TEST_CASE("eight squares: genus three, four cone points of angle 4pi") {
  const auto o = fixtures::wollmilchsau();
  const auto s = stratum(o);
  CHECK(s.genus == 3);
  CHECK(s.cone_angles == std::vector<int>{2, 2, 2, 2});
  CHECK(s.name() == "H(1,1,1,1)");
  CHECK(s.regular_vertices.empty());
}

TEST_CASE("six-square family") {
  const auto o = fixtures::six_square_family(1);
  CHECK(o.sigma_h() == Permutation::parse("(1 2 3)(4 5 6)", 6));
  CHECK(o.sigma_v() == Permutation::parse("(2 4)(3 5)", 6));
  CHECK(o.commutator() == Permutation::parse("(1 6)(3 5)", 6));
  const auto s = stratum(o);
  CHECK(s.name() == "H(1,1)");
  CHECK(s.genus == 2);
  CHECK(s.regular_vertices.size() == 2);
  for (int n = 1; n <= 5; ++n) {
    const auto f = fixtures::six_square_family(n);
    CHECK(f.squares() == 4 * n + 2);
    CHECK(f.connected());
    CHECK(stratum(f).name() == "H(1,1)");
  }
}

TEST_CASE("five-square H(2) examples") {
  const auto left = fixtures::five_square_h2_left();
  CHECK(left.commutator() == Permutation::parse("(2 5 4)", 5));
  CHECK(stratum(left).name() == "H(2)");
  const auto right = fixtures::five_square_h2_right();
  CHECK(right.commutator() == Permutation::parse("(2 4 3)", 5));
  CHECK(stratum(right).name() == "H(2)");
  CHECK(stratum(right).regular_vertices.size() == 2);
  // a single transposition for sigma_v lands in H(1,1) instead
  const auto typo = Origami::build(5, Permutation::parse("(1 2)(3 4 5)", 5), Permutation::parse("(1 3)", 5));
  CHECK(stratum(typo).name() == "H(1,1)");
}

TEST_CASE("corner lookup agrees around each vertex") {
  for (const auto& o : {fixtures::wollmilchsau(), fixtures::six_square_family(2), fixtures::five_square_h2_right()}) {
    for (int i = 1; i <= o.squares(); ++i) {
      // the upper-right corner of i is the upper-left corner of its right neighbour
      CHECK(o.vertex_at(i, Corner::UpperRight) == o.vertex_at(o.sigma_h()(i), Corner::UpperLeft));
      CHECK(o.vertex_at(i, Corner::UpperRight) == o.vertex_at(o.sigma_v()(i), Corner::LowerRight));
      CHECK(o.vertex_at(i, Corner::UpperLeft) == o.vertex_at(o.sigma_v()(i), Corner::LowerLeft));
      CHECK(o.vertex_at(i, Corner::LowerRight) == o.vertex_at(o.sigma_h()(i), Corner::LowerLeft));
    }
    // each vertex of cone angle 2*pi*m is the corner of 4m square corners
    std::vector<int> corners(o.vertices().size(), 0);
    for (int i = 1; i <= o.squares(); ++i)
      for (Corner c : {Corner::LowerLeft, Corner::LowerRight, Corner::UpperLeft, Corner::UpperRight})
        ++corners[static_cast<std::size_t>(o.vertex_at(i, c))];
    for (std::size_t id = 0; id < corners.size(); ++id)
      CHECK(corners[id] == 4 * o.vertices()[id].cone_angle_multiple);
  }
}

TEST_CASE("Gauss-Bonnet") {
  for (const auto& o : {fixtures::wollmilchsau(), fixtures::six_square_family(3), fixtures::five_square_h2_left()}) {
    const auto s = stratum(o);
    int excess = 0;
    for (int m : s.cone_angles) excess += m - 1;
    CHECK(excess == 2 * s.genus - 2);
  }
}

TEST_CASE("disconnected surfaces") {
  const auto o = Origami::build(4, Permutation::parse("(1 2)(3 4)", 4), Permutation::identity(4));
  CHECK_FALSE(o.connected());
  CHECK_THROWS_AS(stratum(o), DisconnectedSurface);
  const auto report = stratum_report(o);
  CHECK_FALSE(report.connected);
  REQUIRE(report.components.size() == 2);
  CHECK(report.components[0].genus == 1);
  CHECK_THROWS_AS(Origami::build(3, Permutation::identity(2), Permutation::identity(3)), DegreeMismatch);
}

TEST_CASE("relabelling and transposition preserve the stratum") {
  const auto o = fixtures::six_square_family(2);
  const auto g = Permutation::parse("(1 7 3)(2 9)", o.squares());
  CHECK(stratum(o.relabel(g)).name() == stratum(o).name());
  CHECK(stratum(o.relabel(g)).genus == stratum(o).genus);
  CHECK(stratum(o.transpose()).name() == stratum(o).name());
  CHECK(o.transpose().transpose() == o);
}

}
