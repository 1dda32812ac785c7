#include <sstream>

#include "doctest.h"
#include "stsurf/diffusion.hpp"

using namespace stsurf;

TEST_SUITE("skew_sim") {

TEST_CASE("diffusion without cuts is flat") {
  const auto spec = StaircaseSpec::build(fixtures::wollmilchsau(), GroupDescriptor::free(2), {});
  DiffusionOptions opt;
  opt.directions = 5;
  opt.length = 200;
  const auto sum = diffusion_experiment(spec, opt);
  REQUIRE(sum.runs.size() == 5);
  for (const auto& r : sum.runs) {
    CHECK(r.drift_ratio == 0);
    CHECK(r.returns == 0);
    CHECK(r.max_excursion == 0);
    CHECK(r.crossings == 0);
  }
  CHECK(sum.drift_max == 0);
}

TEST_CASE("diffusion is deterministic given the seed") {
  const auto spec = fixtures::five_square_right_staircase();
  DiffusionOptions opt;
  opt.directions = 4;
  opt.length = 2000;
  opt.seed = 17;
  opt.trace_every = 10;
  const auto a = diffusion_experiment(spec, opt);
  const auto b = diffusion_experiment(spec, opt);
  std::ostringstream sa, sb;
  write_summary_csv(sa, a);
  write_summary_csv(sb, b);
  CHECK(sa.str() == sb.str());
  opt.seed = 18;
  std::ostringstream sc;
  write_summary_csv(sc, diffusion_experiment(spec, opt));
  CHECK(sc.str() != sa.str());

  std::ostringstream trace;
  write_trace_csv(trace, a.runs[0]);
  CHECK(trace.str().rfind("t,s1,returns\n", 0) == 0);
}

TEST_CASE("nonzero integral drifts linearly") {
  DiffusionOptions opt;
  opt.directions = 6;
  opt.length = 5000;
  const auto sum = diffusion_experiment(fixtures::five_square_drifting_spec(), opt);
  for (const auto& r : sum.runs) {
    if (!r.truncated) CHECK(r.drift_ratio > 0.5);
  }
}

}  // TEST_SUITE
