#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "stsurf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = stsurf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STSURF_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("cli exit codes") {
  CHECK(call({"analyze", data("wollmilchsau.surf")}).code == 0);
  CHECK(call({"analyze", data("broken.surf")}).code == 2);
  CHECK(call({"analyze", "missing.surf"}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"decompose", "fixture:torus"}).code == 2);  // --slope is required
  CHECK(call({"verify-koksma", data("six-square-1.surf")}).code == 1);
  CHECK(call({"propose", "fixture:torus", "--rank", "1"}).code == 1);
  CHECK(call({"--help"}).code == 0);

  const auto bad = call({"analyze", data("broken.surf")});
  CHECK(bad.err.find("broken.surf:4:1:") != std::string::npos);
}

TEST_CASE("expectation mismatch fails analyze") {
  const auto dir = std::filesystem::temp_directory_path() / "stsurf_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "wrong.surf";
  {
    std::ofstream f(path);
    f << "k=8 h=(1 2 3 4)(5 6 7 8) v=(1 8 3 6)(2 7 4 5)\nexpect-genus=2\n";
  }
  const auto r = call({"analyze", path.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("json and text carry the same verdicts") {
  for (const std::string f : {"two-square-staircase.surf", "five-square-left.surf", "six-square-1.surf"}) {
    const auto text = call({"classify", data(f)});
    const auto js = nlohmann::json::parse(call({"classify", data(f), "--json"}).out);
    CHECK(text.out.find("verdict " + js["verdict"].get<std::string>()) != std::string::npos);
  }
  const auto a = nlohmann::json::parse(call({"analyze", data("wollmilchsau.surf"), "--json"}).out);
  CHECK(a["components"][0]["stratum"] == "H(1,1,1,1)");
  CHECK(a["components"][0]["cone_angles_2pi"] == nlohmann::json({2, 2, 2, 2}));
  CHECK(a["pass"] == true);

  const auto s = nlohmann::json::parse(call({"single-cylinder", "fixture:torus", "--json"}).out);
  CHECK(s["slope"] == "1/1");
}

TEST_CASE("simulate reports the exact crossing log") {
  const auto r = call({"simulate", data("two-square-staircase.surf"), "--start", "1:1/4,1/5", "--dir", "2,1", "--time",
                       "5/2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["crossings"].size() == 5);
  CHECK(j["sum"] == nlohmann::json({1}));
  CHECK(j["crossings"][0]["time"] == "3/8");
}

TEST_CASE("diffusion writes traces and summary") {
  const auto dir = std::filesystem::temp_directory_path() / "stsurf_cli_diffusion";
  std::filesystem::remove_all(dir);
  const auto r = call({"diffusion", "fixture:five-square-right", "--directions", "3", "--time", "2000", "--out-dir",
                       dir.string()});
  CHECK(r.code == 0);
  for (const char* f : {"trace_1.csv", "trace_2.csv", "trace_3.csv", "summary.csv"}) {
    CHECK(std::filesystem::exists(dir / f));
  }
}

}  // TEST_SUITE
