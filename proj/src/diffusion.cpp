#include "stsurf/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "stsurf/tracer.hpp"

namespace stsurf {

namespace {

double quantile(std::vector<double> v, double q) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size())));
  return v[std::min(v.size() - 1, idx == 0 ? 0 : idx - 1)];
}

}  // namespace

DiffusionSummary diffusion_experiment(const StaircaseSpec& spec, const DiffusionOptions& options) {
  if (options.directions < 0) throw std::invalid_argument("direction count must be non-negative");
  if (!(options.length > 0)) throw std::invalid_argument("orbit length must be positive");
  const Origami& o = spec.origami();
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<long double> unit(0.0L, 1.0L);
  std::uniform_int_distribution<int> square(1, o.squares());

  DiffusionSummary summary;
  for (int i = 0; i < options.directions; ++i) {
    DiffusionRun run;
    run.angle = angle(rng);
    run.square = square(rng);
    run.x = unit(rng);
    run.y = unit(rng);
    run.final_sum = GroupValue::zero(spec.group());
    const long double dx = std::cos(static_cast<long double>(run.angle));
    const long double dy = std::sin(static_cast<long double>(run.angle));

    GroupValue s = GroupValue::zero(spec.group());
    long double last = 0;
    try {
      Tracer<long double> tracer(spec, dx, dy, options.tolerance);
      const auto outcome = tracer.run({run.square, run.x, run.y}, options.length, false,
                                      [&](int cut, int sign, const long double& t) {
                                        s += spec.cuts()[static_cast<std::size_t>(cut)].value * sign;
                                        last = t;
                                        ++run.crossings;
                                        run.max_excursion = std::max(run.max_excursion, s.norm());
                                        if (t > options.return_after && s.is_zero()) ++run.returns;
                                        if (options.trace_every > 0 && run.crossings % options.trace_every == 0) {
                                          run.trace.push_back({t, s.components(), run.returns});
                                        }
                                      });
      run.elapsed = outcome.elapsed;
    } catch (const AmbiguousCrossing& e) {
      run.truncated = true;
      run.note = e.what();
      run.elapsed = last;
    } catch (const ParallelCut& e) {
      run.truncated = true;
      run.note = e.what();
    }
    run.final_sum = s;
    run.drift_ratio = run.elapsed > 0 ? static_cast<double>(s.norm() / run.elapsed) : 0.0;
    if (run.returns > 0) ++summary.returning;
    if (run.truncated) ++summary.truncated;
    summary.runs.push_back(std::move(run));
  }

  std::vector<double> drifts;
  for (const auto& r : summary.runs) drifts.push_back(r.drift_ratio);
  summary.drift_q10 = quantile(drifts, 0.1);
  summary.drift_median = quantile(drifts, 0.5);
  summary.drift_q90 = quantile(drifts, 0.9);
  summary.drift_max = quantile(drifts, 1.0);
  return summary;
}

void write_trace_csv(std::ostream& out, const DiffusionRun& run) {
  const std::size_t d = run.final_sum.components().size();
  out << "t";
  for (std::size_t i = 1; i <= d; ++i) out << ",s" << i;
  out << ",returns\n";
  for (const auto& row : run.trace) {
    out << static_cast<double>(row.t);
    for (long long v : row.s) out << ',' << v;
    out << ',' << row.returns << '\n';
  }
}

void write_summary_csv(std::ostream& out, const DiffusionSummary& summary) {
  out << "run,angle,square,x,y,elapsed,drift_ratio,returns,max_excursion,crossings,final_sum,truncated\n";
  for (std::size_t i = 0; i < summary.runs.size(); ++i) {
    const auto& r = summary.runs[i];
    out << i + 1 << ',' << r.angle << ',' << r.square << ',' << static_cast<double>(r.x) << ','
        << static_cast<double>(r.y) << ',' << static_cast<double>(r.elapsed) << ',' << r.drift_ratio << ','
        << r.returns << ',' << r.max_excursion << ',' << r.crossings << ",\"" << r.final_sum.to_string() << "\","
        << (r.truncated ? 1 : 0) << '\n';
  }
}

}  // namespace stsurf
