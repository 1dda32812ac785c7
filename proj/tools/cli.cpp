#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stsurf/approximation.hpp"
#include "stsurf/classify.hpp"
#include "stsurf/diffusion.hpp"
#include "stsurf/skew.hpp"
#include "stsurf/surface_io.hpp"

namespace stsurf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  bool json = false;
  long long qmax = 50;
  int depth = 10;
  unsigned precision = 100;
  std::uint64_t seed = 1;
  std::string out_dir;
};

SurfaceDocument load(const std::string& input) {
  const std::string prefix = "fixture:";
  if (input.rfind(prefix, 0) != 0) return read_surface_file(input);
  const std::string name = input.substr(prefix.size());
  auto plain = [&](const Origami& o) {
    SurfaceDocument d;
    d.name = name;
    d.k = o.squares();
    d.h = o.sigma_h();
    d.v = o.sigma_v();
    return d;
  };
  if (name == "torus") return plain(fixtures::unit_torus());
  if (name == "wollmilchsau") return plain(fixtures::wollmilchsau());
  if (name == "two-square") return document_for(fixtures::two_square_staircase(), name);
  if (name == "five-square-left") return document_for(fixtures::five_square_left_staircase(), name);
  if (name == "five-square-right") return document_for(fixtures::five_square_right_staircase(), name);
  if (name == "drifting") return document_for(fixtures::five_square_drifting_spec(), name);
  if (name.rfind("six-square-", 0) == 0) {
    return document_for(fixtures::six_square_staircase(std::stoi(name.substr(11))), name);
  }
  throw UsageError("unknown fixture '" + name + "'");
}

Json value_json(const GroupValue& g) { return Json(g.components()); }

std::string cone_list(const Stratum& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.cone_angles.size(); ++i) out << (i ? " " : "") << s.cone_angles[i];
  return s.cone_angles.empty() ? "none" : out.str();
}

void emit(std::ostream& out, const Common& c, const Json& j, const std::string& human) {
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    out << human;
  }
}

int cmd_analyze(const Common& c, std::ostream& out) {
  const auto doc = load(c.input);
  const Origami o = doc.origami();
  const auto report = stratum_report(o);
  Json j;
  std::ostringstream h;
  j["name"] = doc.name;
  j["squares"] = o.squares();
  j["commutator"] = o.commutator().to_cycle_string();
  j["connected"] = report.connected;
  h << "surface " << (doc.name.empty() ? "(unnamed)" : doc.name) << ", " << o.squares() << " squares\n";
  h << "commutator " << o.commutator().to_cycle_string() << '\n';
  bool ok = true;
  Json comps = Json::array();
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const auto& s = report.components[i];
    comps.push_back({{"squares", s.squares},
                     {"genus", s.genus},
                     {"stratum", s.name()},
                     {"cone_angles_2pi", s.cone_angles},
                     {"vertices", s.vertex_count},
                     {"regular_vertices", s.regular_vertices.size()}});
    if (!report.connected) h << "component " << i + 1 << ": ";
    h << "genus " << s.genus << ", stratum " << s.name() << ", cone angles (x 2pi): " << cone_list(s) << ", "
      << s.vertex_count << " vertices (" << s.regular_vertices.size() << " regular)\n";
  }
  j["components"] = comps;
  if (report.connected) {
    const auto& s = report.components.front();
    const auto cert = no_single_cylinder_certificate(o, c.qmax);
    j["certificate"] = cert.describe();
    h << "certificate " << cert.describe() << '\n';
    Json checks = Json::object();
    if (doc.expect_genus) {
      const bool pass = *doc.expect_genus == s.genus;
      ok = ok && pass;
      checks["genus"] = pass;
      h << "expect-genus " << *doc.expect_genus << ": " << (pass ? "ok" : "MISMATCH") << '\n';
    }
    if (doc.expect_stratum) {
      const bool pass = *doc.expect_stratum == s.name();
      ok = ok && pass;
      checks["stratum"] = pass;
      h << "expect-stratum " << *doc.expect_stratum << ": " << (pass ? "ok" : "MISMATCH") << '\n';
    }
    j["checks"] = checks;
  } else {
    h << "surface is disconnected; direction queries are unavailable\n";
  }
  j["pass"] = ok;
  emit(out, c, j, h.str());
  return ok ? 0 : 1;
}

int cmd_single_cylinder(const Common& c, std::ostream& out) {
  const Origami o = load(c.input).origami();
  const auto search = find_single_cylinder_direction(o, c.qmax);
  const auto cert = no_single_cylinder_certificate(o, c.qmax);
  Json j;
  j["slope"] = search.slope ? Json(search.slope->to_string()) : Json(nullptr);
  j["examined"] = search.examined;
  j["certificate"] = cert.describe();
  std::ostringstream h;
  h << (search.slope ? search.slope->to_string() : "none") << '\n';
  h << "examined " << search.examined << " slopes; " << cert.describe() << '\n';
  emit(out, c, j, h.str());
  return 0;
}

int cmd_decompose(const Common& c, const std::string& slope_text, std::ostream& out) {
  const auto doc = load(c.input);
  const Origami o = doc.origami();
  const Slope s = Slope::parse(slope_text);
  const auto dec = cylinder_decomposition(o, s);
  Json j;
  std::ostringstream h;
  j["slope"] = s.to_string();
  h << "slope " << s.to_string() << ": " << dec.cylinders.size() << " cylinder(s), width 1/sqrt(" << dec.norm2()
    << ")\n";
  Json cyls = Json::array();
  for (std::size_t i = 0; i < dec.cylinders.size(); ++i) {
    const auto& cy = dec.cylinders[i];
    cyls.push_back({{"strips", cy.strips}, {"area", cy.area()}, {"cycle", cy.cycle}, {"squares", cy.squares}});
    h << "  cylinder " << i + 1 << ": " << cy.strips << " strip(s), area " << cy.area() << ", squares";
    for (int q : cy.squares) h << ' ' << q;
    h << '\n';
  }
  j["cylinders"] = cyls;
  j["total_area"] = dec.total_area();
  if (doc.has_cuts()) {
    const auto spec = doc.staircase();
    const auto zero = zero_integral_check(spec, s);
    j["integral"] = zero.residual.to_string();
    j["zero_integral"] = zero.zero;
    h << "integral " << zero.residual.to_string() << (zero.zero ? " (zero)" : "") << '\n';
    const auto sums = cylinder_sums(spec, s);
    Json profiles = Json::array();
    for (std::size_t i = 0; i < sums.cylinders.size(); ++i) {
      const auto& cy = sums.cylinders[i];
      h << "  cylinder " << i + 1 << " profile integral " << cy.integral.to_string() << ", max |S| " << cy.max_norm
        << '\n';
      profiles.push_back({{"integral", cy.integral.to_string()}, {"max_norm", cy.max_norm}});
    }
    j["profiles"] = profiles;
    if (!c.out_dir.empty()) {
      std::filesystem::create_directories(c.out_dir);
      const auto path = std::filesystem::path(c.out_dir) / "profiles.csv";
      std::ofstream csv(path);
      csv << "cylinder,lo,hi";
      for (int g = 1; g <= spec.group().rank; ++g) csv << ",s" << g;
      csv << '\n';
      for (std::size_t i = 0; i < sums.cylinders.size(); ++i) {
        for (const auto& iv : sums.cylinders[i].intervals) {
          csv << i + 1 << ',' << to_string(iv.lo) << ',' << to_string(iv.hi);
          for (long long v : iv.sum.components()) csv << ',' << v;
          csv << '\n';
        }
      }
      h << "profiles written to " << path.string() << '\n';
    }
  }
  emit(out, c, j, h.str());
  return 0;
}

int cmd_approx(const Common& c, const std::string& theta_text, std::ostream& out) {
  const Origami o = load(c.input).origami();
  PrecisionScope scope(c.precision);
  const Real theta = parse_direction(theta_text);
  ApproximationOptions opt;
  opt.digits = c.precision;
  const auto rep = approximation_report(o, theta, c.depth, opt);
  Json j;
  std::ostringstream h;
  j["theta"] = theta_text;
  j["transposed"] = rep.transposed;
  Json rows = Json::array();
  h << "theta " << theta_text << (rep.transposed ? " (transposed)" : "") << ", k = " << rep.squares << '\n';
  h << " n  a(n+1)  direction      cyl  E_n          bounds                   ok  sharp\n";
  for (const auto& r : rep.convergents) {
    rows.push_back({{"n", r.index},
                    {"p", r.p},
                    {"q", r.q},
                    {"next_quotient", r.next_quotient},
                    {"direction", r.direction.to_string()},
                    {"cylinders", r.cylinders},
                    {"E", r.measured},
                    {"bound_lo", r.bound_lo},
                    {"bound_hi", r.bound_hi},
                    {"within_bound", r.within_bound},
                    {"scaled_rotation_error", r.scaled_rotation_error},
                    {"within_sharp_bound", r.within_sharp_bound}});
    h << std::setw(2) << r.index << "  " << std::setw(6) << r.next_quotient << "  " << std::setw(13)
      << r.direction.to_string() << "  " << std::setw(3) << r.cylinders << "  " << std::setw(11) << std::setprecision(6)
      << r.measured << "  [" << std::setw(8) << r.bound_lo << ", " << std::setw(8) << r.bound_hi << "]  "
      << (r.within_bound ? "yes" : "NO ") << " " << (r.within_sharp_bound ? "yes" : "NO") << '\n';
  }
  j["convergents"] = rows;
  j["good_candidate"] = rep.good_candidate;
  j["good_witness"] = rep.good_witness;
  j["fairly_good_candidate"] = rep.fairly_good_candidate;
  j["fairly_good_witness"] = rep.fairly_good_witness;
  j["all_within_bound"] = rep.all_within_bound();
  h << "good candidate: " << (rep.good_candidate ? "yes" : "no") << ", fairly good candidate: "
    << (rep.fairly_good_candidate ? "yes" : "no") << '\n';
  emit(out, c, j, h.str());
  return rep.all_within_bound() ? 0 : 1;
}

SurfacePoint parse_point(const std::string& text) {
  const auto colon = text.find(':');
  const auto comma = text.find(',');
  if (colon == std::string::npos || comma == std::string::npos || comma < colon) {
    throw UsageError("point must look like square:x,y");
  }
  return {std::stoi(text.substr(0, colon)), parse_rational(text.substr(colon + 1, comma - colon - 1)),
          parse_rational(text.substr(comma + 1))};
}

int cmd_simulate(const Common& c, const std::string& start_text, const std::string& dir_text,
                 const std::string& time_text, std::ostream& out) {
  const auto doc = load(c.input);
  const auto spec = doc.staircase();
  const SurfacePoint start = parse_point(start_text);
  const auto comma = dir_text.find(',');
  ErgodicSumTrace tr;
  if (comma != std::string::npos) {
    tr = ergodic_sum(spec, start, parse_rational(dir_text.substr(0, comma)), parse_rational(dir_text.substr(comma + 1)),
                     parse_rational(time_text));
  } else {
    // an irrational slope rise/run = theta, unit run
    PrecisionScope scope(c.precision);
    const Real theta = parse_direction(dir_text);
    auto real = [](const Rational& r) {
      return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
    };
    tr = ergodic_sum(spec, start.square, real(start.x), real(start.y), Real(1), theta, real(parse_rational(time_text)),
                     c.precision);
  }
  Json j;
  j["start"] = tr.start;
  j["direction"] = tr.direction;
  j["exact"] = tr.exact;
  j["status"] = to_string(tr.status);
  j["elapsed"] = tr.exact ? Json(tr.exact_elapsed) : Json(static_cast<double>(tr.elapsed));
  j["sum"] = value_json(tr.sum);
  Json log = Json::array();
  std::ostringstream h;
  h << "S = " << tr.sum.to_string() << " after time " << (tr.exact ? tr.exact_elapsed : std::to_string(static_cast<double>(tr.elapsed)))
    << " (" << to_string(tr.status) << ", " << tr.crossings.size() << " crossings)\n";
  for (const auto& cr : tr.crossings) {
    log.push_back({{"cut", cr.cut + 1},
                   {"sign", cr.sign},
                   {"time", cr.exact_time.empty() ? Json(static_cast<double>(cr.time)) : Json(cr.exact_time)},
                   {"running", value_json(cr.running)}});
    h << "  t=" << (cr.exact_time.empty() ? std::to_string(static_cast<double>(cr.time)) : cr.exact_time) << " cut "
      << cr.cut + 1 << (cr.sign > 0 ? " +" : " -") << "  S=" << cr.running.to_string() << '\n';
  }
  j["crossings"] = log;
  emit(out, c, j, h.str());
  return 0;
}

int cmd_classify(const Common& c, std::ostream& out) {
  const auto spec = load(c.input).staircase();
  const auto cl = classify_staircase(spec, c.qmax);
  Json j;
  j["verdict"] = to_string(cl.verdict);
  j["justification"] = cl.justification;
  j["single_cylinder"] = cl.single_cylinder ? Json(cl.single_cylinder->to_string()) : Json(nullptr);
  std::ostringstream h;
  h << "verdict " << to_string(cl.verdict) << '\n';
  for (const auto& w : cl.justification) h << "  - " << w << '\n';
  if (cl.supplementary) {
    const auto& s = *cl.supplementary;
    j["supplementary"] = {{"slope", s.slope.to_string()},
                          {"strips", s.strips},
                          {"integrals", s.integrals},
                          {"profiles_equal", s.profiles_equal}};
    h << "supplementary two-cylinder zero-sum along " << s.slope.to_string() << ": integrals";
    for (const auto& i : s.integrals) h << ' ' << i;
    h << ", profiles " << (s.profiles_equal ? "equal" : "differ") << '\n';
  } else {
    j["supplementary"] = nullptr;
  }
  emit(out, c, j, h.str());
  return 0;
}

int cmd_koksma(const Common& c, const std::string& slope_text, std::ostream& out, std::ostream& err) {
  const auto spec = load(c.input).staircase();
  Slope s;
  if (slope_text.empty()) {
    const auto search = find_single_cylinder_direction(spec.origami(), c.qmax);
    if (!search.slope) {
      err << "refused: no single-cylinder direction with max(rise, run) <= " << c.qmax << '\n';
      return 1;
    }
    s = *search.slope;
  } else {
    s = Slope::parse(slope_text);
  }
  KoksmaReport r;
  try {
    r = koksma_verify(spec, s);
  } catch (const PreconditionFailed& e) {
    if (c.json) {
      out << Json{{"slope", s.to_string()}, {"pass", false}, {"refusal", e.what()}}.dump(2) << '\n';
    } else {
      err << e.what() << '\n';
    }
    return 1;
  }
  Json j;
  j["slope"] = s.to_string();
  j["bound"] = r.bound;
  j["max_observed"] = r.max_observed;
  j["per_cut_ok"] = r.per_cut_ok;
  j["counts_ok"] = r.counts_ok;
  j["translated_ok"] = r.translated_ok;
  j["pass"] = r.pass;
  std::ostringstream h;
  h << "slope " << s.to_string() << ": max |S| = " << r.max_observed << ", bound " << r.bound << " -> "
    << (r.pass ? "pass" : "FAIL") << '\n';
  h << "  per-cut |P - q h| <= 2: " << (r.per_cut_ok ? "yes" : "no") << ", crossing counts in P..P+2: "
    << (r.counts_ok ? "yes" : "no") << ", translated identity: " << (r.translated_ok ? "yes" : "no") << '\n';
  emit(out, c, j, h.str());
  return r.pass ? 0 : 1;
}

int cmd_propose(const Common& c, int rank, std::ostream& out) {
  const Origami o = load(c.input).origami();
  const auto p = propose_staircase(o, rank, c.qmax);
  Json j;
  j["feasible"] = p.feasible;
  j["reason"] = p.reason;
  j["warnings"] = p.warnings;
  std::ostringstream h;
  if (!p.feasible) {
    h << "Infeasible: " << p.reason << '\n';
  } else {
    const std::string text = print_surface(document_for(*p.spec, "proposal"));
    j["document"] = text;
    j["verdict"] = to_string(p.classification->verdict);
    h << text << "verdict " << to_string(p.classification->verdict) << '\n';
    if (!c.out_dir.empty()) {
      std::filesystem::create_directories(c.out_dir);
      std::ofstream(std::filesystem::path(c.out_dir) / "proposal.surf") << text;
    }
  }
  for (const auto& w : p.warnings) h << "warning: " << w << '\n';
  emit(out, c, j, h.str());
  return p.feasible ? 0 : 1;
}

int cmd_diffusion(const Common& c, int directions, double length, std::ostream& out) {
  const auto spec = load(c.input).staircase();
  DiffusionOptions opt;
  opt.directions = directions;
  opt.length = length;
  opt.seed = c.seed;
  if (!c.out_dir.empty()) opt.trace_every = 1;
  const auto sum = diffusion_experiment(spec, opt);
  if (!c.out_dir.empty()) {
    std::filesystem::create_directories(c.out_dir);
    for (std::size_t i = 0; i < sum.runs.size(); ++i) {
      std::ofstream f(std::filesystem::path(c.out_dir) / ("trace_" + std::to_string(i + 1) + ".csv"));
      write_trace_csv(f, sum.runs[i]);
    }
    std::ofstream f(std::filesystem::path(c.out_dir) / "summary.csv");
    write_summary_csv(f, sum);
  }
  Json j;
  Json runs = Json::array();
  std::ostringstream h;
  h << " run  angle     drift     returns  max|S|  S_T\n";
  for (std::size_t i = 0; i < sum.runs.size(); ++i) {
    const auto& r = sum.runs[i];
    runs.push_back({{"angle", r.angle},
                    {"drift_ratio", r.drift_ratio},
                    {"returns", r.returns},
                    {"max_excursion", r.max_excursion},
                    {"final_sum", value_json(r.final_sum)},
                    {"truncated", r.truncated}});
    h << std::setw(4) << i + 1 << "  " << std::setw(8) << std::setprecision(4) << r.angle << "  " << std::setw(8)
      << r.drift_ratio << "  " << std::setw(7) << r.returns << "  " << std::setw(6) << r.max_excursion << "  "
      << r.final_sum.to_string() << (r.truncated ? " (truncated)" : "") << '\n';
  }
  j["runs"] = runs;
  j["drift_quantiles"] = {{"q10", sum.drift_q10}, {"median", sum.drift_median}, {"q90", sum.drift_q90}, {"max", sum.drift_max}};
  j["returning"] = sum.returning;
  j["truncated"] = sum.truncated;
  h << "drift ratio q10 " << sum.drift_q10 << ", median " << sum.drift_median << ", q90 " << sum.drift_q90
    << ", max " << sum.drift_max << "; " << sum.returning << "/" << sum.runs.size() << " runs returned to 0\n";
  emit(out, c, j, h.str());
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square-tiled surfaces and their group-valued staircase covers"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub) {
    sub->add_option("input", c.input, ".surf file or fixture:NAME")->required();
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_option("--qmax", c.qmax, "slope search bound (max of rise, run)");
    sub->add_option("--depth", c.depth, "number of convergents");
    sub->add_option("--precision", c.precision, "decimal digits for irrational directions");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--out-dir", c.out_dir, "directory for CSV and document output");
  };
  std::string slope, theta = "golden", start, dir, time = "1", koksma_slope;
  int rank = 1, directions = 20;
  double length = 1e5;

  auto* analyze = app.add_subcommand("analyze", "genus, stratum, vertices and single-cylinder certificate");
  common(analyze);
  auto* single = app.add_subcommand("single-cylinder", "first single-cylinder slope up to --qmax");
  common(single);
  auto* decompose = app.add_subcommand("decompose", "cylinder decomposition and, with cuts, exact profiles");
  common(decompose);
  decompose->add_option("--slope", slope, "rise/run")->required();
  auto* approx = app.add_subcommand("approx", "periodic approximations of an irrational direction");
  common(approx);
  approx->add_option("--theta", theta, "golden, sqrt(N), cf:a1,a2,... or a decimal");
  auto* simulate = app.add_subcommand("simulate", "exact ergodic sum along one orbit");
  common(simulate);
  simulate->add_option("--start", start, "square:x,y")->required();
  simulate->add_option("--dir", dir, "dx,dy (exact) or an irrational slope")->required();
  simulate->add_option("--time", time, "orbit time in units of the direction vector");
  auto* classify = app.add_subcommand("classify", "ErgodicAE / NotErgodicAE / Unknown with justification");
  common(classify);
  auto* koksma = app.add_subcommand("verify-koksma", "exact profile bound in a single-cylinder direction");
  common(koksma);
  koksma->add_option("--slope", koksma_slope, "rise/run; default the first single-cylinder slope");
  auto* propose = app.add_subcommand("propose", "construct a natural Z^d staircase");
  common(propose);
  propose->add_option("--rank", rank, "d");
  auto* diffusion = app.add_subcommand("diffusion", "random-direction drift and recurrence statistics");
  common(diffusion);
  diffusion->add_option("--directions", directions, "number of sampled directions");
  diffusion->add_option("--time", length, "orbit length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(c, out);
    if (single->parsed()) return cmd_single_cylinder(c, out);
    if (decompose->parsed()) return cmd_decompose(c, slope, out);
    if (approx->parsed()) return cmd_approx(c, theta, out);
    if (simulate->parsed()) return cmd_simulate(c, start, dir, time, out);
    if (classify->parsed()) return cmd_classify(c, out);
    if (koksma->parsed()) return cmd_koksma(c, koksma_slope, out, err);
    if (propose->parsed()) return cmd_propose(c, rank, out);
    if (diffusion->parsed()) return cmd_diffusion(c, directions, length, out);
  } catch (const DocumentError& e) {
    err << c.input << ":" << e.what() << '\n';
    return 2;
  } catch (const PreconditionFailed& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace stsurf::cli
