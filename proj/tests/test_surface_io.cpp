#include <random>

#include "doctest.h"
#include "stsurf/surface_io.hpp"

using namespace stsurf;

namespace {

template <class E>
E expect_error(const std::string& text) {
  try {
    parse_surface(text);
  } catch (const E& e) {
    return e;
  }
  FAIL("expected an error for: " << text);
  return E(0, 0, "");
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("minimal documents") {
  const auto torus = parse_surface("k=1 h=() v=()");
  CHECK(torus.k == 1);
  CHECK(torus.origami() == fixtures::unit_torus());
  CHECK_FALSE(torus.has_cuts());

  const auto w = parse_surface(
      "# eight squares\n"
      "name=wollmilchsau\n"
      "k=8\n"
      "h=(1 2 3 4)(5 6 7 8)\n"
      "v=(1 8 3 6)(2 7 4 5)  # vertical\n"
      "expect-genus=3\n");
  CHECK(w.origami() == fixtures::wollmilchsau());
  CHECK(w.name == "wollmilchsau");
  CHECK(w.expect_genus == 3);

  // compact digits
  CHECK(parse_surface("k=8 h=(1234)(5678) v=(1836)(2745)").origami() == fixtures::wollmilchsau());
}

TEST_CASE("syntax and semantic errors are distinct") {
  const auto bij = expect_error<SemanticError>("k=3\nh=()\nv=(12)(23)\n");
  CHECK(bij.line() == 3);
  CHECK(bij.column() == 1);

  const auto deg = expect_error<SemanticError>("k=2 h=(1 3)");
  CHECK(deg.column() == 5);

  CHECK(expect_error<ParseError>("k=2\nh=(1 2\n").line() == 2);
  CHECK(expect_error<ParseError>("k=2 colour=red").column() == 5);
  CHECK(expect_error<ParseError>("k=x").line() == 1);
  CHECK(expect_error<ParseError>("h=()").line() == 1);
  CHECK(expect_error<ParseError>("k=1 cut { square=1 at=0,0 dir=1,0 }").line() == 1);
  CHECK(expect_error<ParseError>("k=1 cut { edge=top:1 value=[1 }").line() == 1);
  CHECK(expect_error<ParseError>("k=1 cut { edge=middle:1 value=1 }").line() == 1);

  // a cut through a singular point is well-formed text but an invalid object
  const auto sing = expect_error<SemanticError>(
      "k=8 h=(1 2 3 4)(5 6 7 8) v=(1 8 3 6)(2 7 4 5)\n"
      "cut { edge=top:1 value=1 }\n"
      "cut { square=1 at=1/2,1/2 dir=1,1 len=1 value=1 }\n");
  CHECK(sing.line() == 3);
  CHECK(expect_error<SemanticError>("k=1 group=Z^2 cut { edge=top:1 value=[1] }").line() == 1);
  CHECK(expect_error<SemanticError>("k=1 cut { edge=top:2 value=1 }").line() == 1);
}

TEST_CASE("cuts by edge and by coordinates") {
  const auto doc = parse_surface(
      "k=5 h=(1 2)(3 4 5) v=(1 5)(2 3) group=Z\n"
      "cut { edge=top:5 value=[1] }\n"
      "cut {\n  edge=top:1\n  value=-1\n}\n");
  REQUIRE(doc.cuts.size() == 2);
  const auto expect = fixtures::five_square_right_staircase();
  for (std::size_t j = 0; j < 2; ++j) CHECK(same_cut(doc.cuts[j], expect.cuts()[j]));
  CHECK(doc.staircase().natural());

  const auto free_cut = parse_surface("k=1 group=Z^2 cut { square=1 at=1/3,0 dir=0,1 len=1/2 value=[1,-2] }");
  CHECK(free_cut.cuts[0].value.to_string() == "[1,-2]");
  CHECK(free_cut.cuts[0].start.x == Rational(1, 3));
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> kdist(1, 9), small(1, 7), val(-4, 4), gpick(0, 2);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = kdist(rng);
    std::vector<int> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    SurfaceDocument doc;
    doc.k = k;
    doc.h = Permutation::from_images(a);
    doc.v = Permutation::from_images(b);
    if (trial % 3 == 0) doc.name = "doc" + std::to_string(trial);
    if (trial % 4 == 0) doc.expect_genus = small(rng);
    if (trial % 5 == 0) doc.expect_stratum = "H(2)";
    if (trial % 2 == 0) {
      const GroupDescriptor g = gpick(rng) == 0 ? GroupDescriptor::free(1)
                                : gpick(rng) == 1 ? GroupDescriptor::free(3) : GroupDescriptor::cyclic(5);
      doc.group = g;
      const Origami o = doc.origami();
      std::uniform_int_distribution<int> sq(1, k);
      for (int c = 0; c < 2; ++c) {
        std::vector<long long> comps(static_cast<std::size_t>(g.rank));
        for (auto& x : comps) x = val(rng);
        if (g.is_cyclic()) comps[0] = (comps[0] % 5 + 5) % 5;
        Cut cut;
        cut.start = {sq(rng), Rational(small(rng), 8), Rational(small(rng), 8)};
        cut.dx = small(rng);
        cut.dy = -small(rng);
        cut.length = Rational(1, small(rng) + 7);
        cut.value = GroupValue::make(g, comps);
        doc.cuts.push_back(cut);
      }
      try {
        (void)doc.staircase();
      } catch (const InvalidCut&) {
        continue;
      }
    }
    const std::string text = print_surface(doc);
    const auto back = parse_surface(text);
    CHECK(back.name == doc.name);
    CHECK(back.k == doc.k);
    CHECK(back.h == doc.h);
    CHECK(back.v == doc.v);
    CHECK(back.group == doc.group);
    CHECK(back.expect_genus == doc.expect_genus);
    CHECK(back.expect_stratum == doc.expect_stratum);
    REQUIRE(back.cuts.size() == doc.cuts.size());
    for (std::size_t j = 0; j < doc.cuts.size(); ++j) CHECK(same_cut(back.cuts[j], doc.cuts[j]));
    CHECK(print_surface(back) == text);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("fixture documents round trip") {
  for (const auto& spec : {fixtures::two_square_staircase(), fixtures::six_square_staircase(2),
                           fixtures::five_square_drifting_spec()}) {
    const auto doc = document_for(spec, "fixture");
    const auto back = parse_surface(print_surface(doc));
    const auto rebuilt = back.staircase();
    CHECK(rebuilt.origami() == spec.origami());
    REQUIRE(rebuilt.cuts().size() == spec.cuts().size());
    for (std::size_t j = 0; j < spec.cuts().size(); ++j) CHECK(same_cut(rebuilt.cuts()[j], spec.cuts()[j]));
  }
}

}  // TEST_SUITE
