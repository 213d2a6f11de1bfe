#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "btq/commands.hpp"
#include "doctest.h"
#include "json.hpp"

using btq::commands::run_cli;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--json", "--no-timing"});
  const auto r = run(args);
  REQUIRE_MESSAGE(r.status == 0, r.err);
  return nlohmann::json::parse(r.out);
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() / ("btq_cli_test_" + std::to_string(::getpid()) + "_" +
                                                     std::to_string(counter++));
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

std::vector<std::size_t> sorted_sizes(const nlohmann::json& orbits) {
  std::vector<std::size_t> s;
  for (const auto& o : orbits) s.push_back(o.size());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"nonsense"}).status == 2);
  CHECK(run({"fano", "--orbits", "d9"}).status == 2);
  CHECK(run({"fano", "--flag", "P1,L1"}).status == 2);
  CHECK(run({"fano", "--flag", "L1,P2"}).status == 2);
  const auto cap = run({"building", "--radius", "5"});
  CHECK(cap.status == 2);
  CHECK(cap.err.find("radius 5 exceeds the cap of 4") != std::string::npos);
  CHECK(run({"building", "--p", "4"}).status == 2);
  CHECK(run({"building", "--format", "svg"}).status == 2);
  const auto fuzz = run({"building", "--fuzz", "10"});
  CHECK(fuzz.status == 2);
  CHECK(fuzz.err.find("--seed") != std::string::npos);
  CHECK(run({"pi1", "/nonexistent/btq/file"}).status == 2);
  CHECK(run({"invariants", "--n", "0"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("domain errors exit 1") {
  const auto r = run({"invariants", "--descend", "5"});
  CHECK(r.status == 1);
  CHECK(r.err.find("not an étale-quotient candidate") != std::string::npos);
  TempFile bad("gens: a\nrel: a q\n");
  CHECK(run({"pi1", bad.path.string()}).status == 1);
}

TEST_CASE("JSON reports are byte-identical without timing") {
  const auto a = run({"--json", "--no-timing", "fano", "--verify"});
  const auto b = run({"--json", "--no-timing", "fano", "--verify"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["version"] == "1");
  CHECK(j["command"] == "fano");
  CHECK(j["pass"] == true);
  CHECK_FALSE(j.contains("wall_time_ms"));
  for (const auto& x : j["assertions"]) CHECK(x["pass"] == true);

  const auto timed = nlohmann::json::parse(run({"--json", "fano"}).out);
  CHECK(timed.contains("wall_time_ms"));
}

TEST_CASE("text output ends with a summary line") {
  const auto r = run({"--no-timing", "fano"});
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("assertions passed") != std::string::npos);
}

TEST_CASE("fano orbits") {
  const auto d8 = run_json({"fano", "--orbits", "d8"});
  CHECK(d8["result"]["order"] == 8);
  CHECK(sorted_sizes(d8["result"]["orbits"]) == std::vector<std::size_t>{1, 1, 2, 2, 4, 4});
  const auto d16 = run_json({"fano", "--orbits", "d16", "--flag", "P3,L4"});
  CHECK(d16["result"]["orbits"].size() == 3);
  CHECK(d16["result"]["flag"] == "(P3,L4)");
  CHECK(run_json({"fano", "--orbits", "full"})["result"]["orbits"].size() == 1);
}

TEST_CASE("building balls") {
  const auto r1 = run_json({"building", "--p", "2", "--radius", "1"});
  CHECK(r1["result"]["vertices"] == 15);
  CHECK(r1["result"]["triangles"] == 21);
  CHECK(r1["result"]["edges"] == 14 + 21);
  CHECK(run_json({"building", "--radius", "0"})["result"]["vertices"] == 1);
  CHECK(run_json({"building", "--p", "3"})["result"]["vertices"] == 27);
  const auto dot = run({"--no-timing", "building", "--format", "dot"});
  CHECK(dot.status == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  const auto fuzz = run_json({"--seed", "5", "building", "--fuzz", "50"});
  CHECK(fuzz["pass"] == true);
  CHECK(run_json({"--seed", "5", "building", "--fuzz", "50"}) == fuzz);
}

TEST_CASE("central fiber and quotient") {
  const auto cf = run_json({"central-fiber", "--report"});
  CHECK(cf["pass"] == true);
  CHECK(cf["result"]["complex"]["vertices"].size() == 16);
  const auto q = run_json({"quotient", "--flag", "P7,L3"});
  CHECK(q["pass"] == true);
  CHECK(q["result"]["complex"]["edges"].size() == 18);
  const auto raw = run({"--no-timing", "quotient", "--raw-labels"});
  CHECK(raw.out.find("orbit:") != std::string::npos);
  const auto named = run({"--no-timing", "quotient"});
  CHECK(named.out.find("V Pibar") != std::string::npos);
}

TEST_CASE("pi1 output") {
  const auto def = run_json({"pi1"});
  CHECK(def["result"]["factors"] == nlohmann::json::parse("[42]"));
  CHECK(def["result"]["free_rank"] == 0);
  CHECK(def["result"]["order"] == 42);

  TempFile rose("gens: a b c\nrel: a a b a b a\nrel: a b c b c b\nrel: b c c c c c\n");
  const auto r = run_json({"pi1", rose.path.string(), "--simplify"});
  CHECK(r["result"]["factors"] == nlohmann::json::parse("[42]"));
  CHECK(r["result"]["order"] == 42);
  CHECK(r["result"].contains("simplified"));

  TempFile torus("V v\nE a v v\nE b v v\nF T +a +b -a -b\n");
  const auto t = run_json({"pi1", "--complex", torus.path.string(), "--max-cosets", "200"});
  CHECK(t["result"]["free_rank"] == 2);
  CHECK(t["result"]["order"] == "overflow");
}

TEST_CASE("invariants") {
  const auto j = run_json({"invariants"});
  CHECK(j["result"]["chi"] == "16");
  CHECK(j["result"]["c1_sq"] == 144);
  CHECK(j["result"]["c2"] == 48);
  CHECK(j["result"]["N"] == 16);
  CHECK(j["result"]["q"] == 2);
  CHECK_FALSE(j["result"].contains("fake_plane"));

  const auto d = run_json({"invariants", "--descend", "16", "--pg", "0", "--irregularity", "0"});
  CHECK(d["result"]["descended"]["chi"] == "1");
  CHECK(d["result"]["descended"]["degree"] == 16);
  CHECK(d["result"]["fake_plane"]["is_fake_plane"] == true);

  const auto u = run_json({"invariants", "--descend", "16"});
  CHECK(u["result"]["fake_plane"]["is_fake_plane"] == false);
  CHECK(u["result"]["fake_plane"]["reasons"][0] == "pg unknown");

  CHECK(run_json({"invariants", "--n", "1", "--q", "3"})["result"]["chi"] == "16/3");
}

TEST_CASE("verify-paper passes, for one flag and for the sweep") {
  const auto j = run_json({"verify-paper"});
  CHECK(j["pass"] == true);
  CHECK(j["assertions"].size() > 30);
  const auto sweep = run_json({"verify-paper", "--flag-sweep", "--flag", "P2,L1"});
  CHECK(sweep["pass"] == true);
  CHECK(sweep["assertions"].size() >= j["assertions"].size() + 21 * 6);
}
