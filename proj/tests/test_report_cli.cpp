#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "toposcope/report.hpp"
#include "toposcope/suites.hpp"

using namespace topo;

namespace {

template <typename F>
std::optional<errc> thrown_code(F&& f) {
  try {
    f();
  } catch (const topo_error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Saves one environment variable and restores it on scope exit.
struct EnvGuard {
  std::string key, saved;
  bool had = false;
  explicit EnvGuard(const char* k) : key(k) {
    if (const char* v = std::getenv(k)) {
      had = true;
      saved = v;
    }
  }
  ~EnvGuard() {
    if (had)
      setenv(key.c_str(), saved.c_str(), 1);
    else
      unsetenv(key.c_str());
  }
};

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + TOPOSCOPE_BIN + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
  std::fclose(f);
  return out;
}

}  // namespace

TEST_CASE("report JSON shape") {
  VerificationReport r;
  r.suite = "demo";
  r.set_param("n", "3");
  r.add("first claim", 7);
  r.add("second claim", 2, "witness [0,3]");
  r.finalize();
  CHECK(r.verdict == Verdict::Fail);

  const std::string expected = R"({
  "suite": "demo",
  "params": {
    "n": "3"
  },
  "verdict": "FAIL",
  "evidence": [
    {
      "claim": "first claim",
      "instances": 7
    },
    {
      "claim": "second claim",
      "instances": 2,
      "counterexample": "witness [0,3]"
    }
  ],
  "elapsed_ms": 0
}
)";
  CHECK(report_to_json(r) == expected);

  VerificationReport clean;
  clean.suite = "demo";
  clean.add("only claim", 1);
  clean.finalize();
  CHECK(clean.verdict == Verdict::Pass);

  VerificationReport skipped;
  skipped.suite = "demo";
  skipped.verdict = Verdict::Skip;
  skipped.add("would fail", 1, "ignored");
  skipped.finalize();  // Skip wins over counterexamples
  CHECK(skipped.verdict == Verdict::Skip);

  VerificationReport sorted;
  sorted.set_param("n", "3");
  sorted.set_param("max-x", "5");
  sorted.set_param("n", "4");  // overwrite, no duplicate
  const std::vector<std::pair<std::string, std::string>> want{{"max-x", "5"}, {"n", "4"}};
  CHECK(sorted.params == want);
}

TEST_CASE("suite registry and parameters") {
  const auto names = suite_names();
  CHECK(names.size() == 12);
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const char* name : {"enum-cross", "t1-join", "crt-chain", "upset-algebra"})
    CHECK(std::count(names.begin(), names.end(), name) == 1);

  SuiteParams p;
  CHECK(!p.has("n"));
  CHECK(p.get_int("n", 7) == 7);
  p.set("n", "5");
  CHECK(p.has("n"));
  CHECK(p.get_int("n", 7) == 5);
  CHECK(p.get_u64("n", 9) == 5);
  p.set("n", "5x");
  CHECK(thrown_code([&] { p.get_int("n", 0); }) == errc::bad_param);
  CHECK(thrown_code([&] { p.get_u64("n", 0); }) == errc::bad_param);

  CHECK(thrown_code([] { run_suite("no-such-suite", SuiteParams{}); }) == errc::unknown_suite);
  SuiteParams bad;
  bad.set("n", "x");
  CHECK(thrown_code([&] { run_suite("t1-join", bad); }) == errc::bad_param);
}

TEST_CASE("reports are deterministic") {
  SuiteParams p;
  p.set("n", "2");
  const auto r1 = run_suite("t1-join", p);
  const auto r2 = run_suite("t1-join", p);
  CHECK(r1.verdict == Verdict::Pass);
  CHECK(report_to_json(r1) == report_to_json(r2));
  CHECK(r1.elapsed_ms == 0);
}

TEST_CASE("ground cap environment variable") {
  EnvGuard guard("TOPOSCOPE_MAX_N");
  unsetenv("TOPOSCOPE_MAX_N");
  CHECK(effective_ground_cap() == 4);
  setenv("TOPOSCOPE_MAX_N", "6", 1);
  CHECK(effective_ground_cap() == 6);
  setenv("TOPOSCOPE_MAX_N", "99", 1);
  CHECK(effective_ground_cap() == 6);
  setenv("TOPOSCOPE_MAX_N", "0", 1);
  CHECK(effective_ground_cap() == 1);
  setenv("TOPOSCOPE_MAX_N", "abc", 1);
  CHECK(thrown_code([] { effective_ground_cap(); }) == errc::bad_param);
}

TEST_CASE("dot diagrams") {
  const std::string expected_lattice = R"(digraph lattice {
  rankdir=BT;
  node [shape=box,fontname="monospace"];
  t0 [label="[0,1,2,3]"];
  t1 [label="[0,2,3]"];
  t2 [label="[0,1,3]"];
  t3 [label="[0,3]"];
  t1 -> t0;
  t2 -> t0;
  t3 -> t1;
  t3 -> t2;
}
)";
  CHECK(lattice_dot(2) == expected_lattice);
  CHECK(thrown_code([] { lattice_dot(4); }) == errc::too_large);

  const std::string expected_sdot = R"(digraph specialization {
  rankdir=BT;
  node [shape=circle];
  p0 [label="0"];
  p1 [label="1"];
  p0 -> p1;
}
)";
  CHECK(specialization_dot(FiniteTopology::from_opens(2, {0, 2, 3})) == expected_sdot);
}

TEST_CASE("command line interface") {
  EnvGuard guard("TOPOSCOPE_MAX_N");
  setenv("TOPOSCOPE_MAX_N", "4", 1);  // inherited by the spawned binary

  auto count3 = run_cli("enumerate --n 3 --format count");
  CHECK(count3.status == 0);
  CHECK(count3.out == "29\n");

  auto t03 = run_cli("enumerate --n 3 --filter t0 --format count");
  CHECK(t03.status == 0);
  CHECK(t03.out == "19\n");

  auto sober4 = run_cli("enumerate --n 4 --filter sober --format count");
  CHECK(sober4.status == 0);
  CHECK(sober4.out == "219\n");

  auto json2 = run_cli("enumerate --n 2 --format json");
  CHECK(json2.status == 0);
  CHECK(json2.out ==
        "{\"opens\":[0,1,2,3]}\n{\"opens\":[0,2,3]}\n{\"opens\":[0,1,3]}\n{\"opens\":[0,3]}\n");

  CHECK(run_cli("enumerate --n 6 --format count").status == 65);
  CHECK(run_cli("enumerate --n 3 --format dot --filter t0").status == 64);
  CHECK(run_cli("enumerate --n 2 --format nope").status == 64);
  CHECK(run_cli("").status == 64);  // a subcommand is required

  auto dot2 = run_cli("enumerate --n 2 --format dot");
  CHECK(dot2.status == 0);
  CHECK(dot2.out == lattice_dot(2));

  auto point_dot = run_cli("enumerate --n 2 --format dot --topology 0,2,3");
  CHECK(point_dot.status == 0);
  CHECK(point_dot.out == specialization_dot(FiniteTopology::from_opens(2, {0, 2, 3})));

  const auto expected = report_to_json(run_suite("t1-join", SuiteParams{}));
  auto verify_default = run_cli("verify t1-join");
  CHECK(verify_default.status == 0);
  CHECK(verify_default.out == expected);

  auto skipped = run_cli("verify t1-join --n 5");
  CHECK(skipped.status == 2);
  CHECK(skipped.out.find("\"verdict\": \"SKIP\"") != std::string::npos);

  CHECK(run_cli("verify no-such-suite").status == 64);
  CHECK(run_cli("verify t1-join --n x").status == 64);

  const std::string path = "/tmp/toposcope_cli_out_test.json";
  auto to_file = run_cli("verify t1-join --out " + path);
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(path) == expected);
  std::remove(path.c_str());
}
