// Acceptance harness: ten pass/fail lines, exit code = number of failures.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "toposcope/report.hpp"
#include "toposcope/suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

topo::VerificationReport run(const std::string& suite,
                             const std::vector<std::pair<std::string, std::string>>& kv = {}) {
  topo::SuiteParams p;
  for (const auto& [k, v] : kv) p.set(k, v);
  return topo::run_suite(suite, p);
}

bool passed(const topo::VerificationReport& r) { return r.verdict == topo::Verdict::Pass; }

std::uint64_t instances(const topo::VerificationReport& r) {
  std::uint64_t total = 0;
  for (const auto& e : r.evidence) total += e.instances;
  return total;
}

int failures = 0;

void line(int k, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s (%s)\n", k, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++failures;
}

template <typename F>
void criterion(int k, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    line(k, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  // The sweeps below need ground sizes up to 5 regardless of the ambient cap.
  setenv("TOPOSCOPE_MAX_N", "5", 1);

  criterion(1, [] {
    const auto start = Clock::now();
    const auto r = run("enum-cross", {{"n", "5"}});
    const auto ms = ms_since(start);
    line(1, passed(r) && ms < 60000,
         "counts 1,1,4,29,355,6942 by two enumerations, T0 counts 1,1,3,19,219,4231, " +
             std::to_string(ms) + " ms of 60000");
  });

  criterion(2, [] {
    const auto r = run("sobriety-collapse", {{"max-n", "4"}});
    line(2, passed(r),
         "sober = T0 = d-space = well-filtered on all " + std::to_string(instances(r)) +
             " topologies with n <= 4");
  });

  criterion(3, [] {
    bool ok = true;
    std::uint64_t factors = 0;
    for (const char* n : {"2", "3", "4"}) {
      const auto r = run("t1-join", {{"n", n}});
      ok = ok && passed(r);
      factors += r.evidence.empty() ? 0 : r.evidence[0].instances;
    }
    line(3, ok,
         "discrete topologies on n = 2,3,4 recovered as joins of " + std::to_string(factors) +
             " sober attached factors with exact closed and irreducible families");
  });

  criterion(4, [] {
    const auto r = run("meet-sober", {{"max-n", "4"}});
    line(4, passed(r),
         "every topology on n <= 4 is exactly the meet of its sober refinements (" +
             std::to_string(r.evidence.empty() ? 0 : r.evidence[0].instances) + " inputs)");
  });

  criterion(5, [] {
    const auto r = run("alexandroff-meet", {{"max-n", "4"}});
    line(5, passed(r),
         "every poset on n <= 4 decomposes as a meet of sober single-edge factors (" +
             std::to_string(r.evidence.empty() ? 0 : r.evidence[0].instances) + " posets)");
  });

  criterion(6, [] {
    const auto r = run("upper-sets", {{"max-n", "4"}});
    line(6, passed(r),
         "TD, T1-sober, TD-sober ascend along refinement and sober joins stay sober, " +
             std::to_string(instances(r)) + " checked pairs");
  });

  criterion(7, [] {
    const auto r = run("link-coarsening", {{"max-n", "4"}});
    line(7, passed(r),
         "link-pair coarsenings are strictly coarser, T0, sober-preserving, with pointwise "
         "closure and order laws (" +
             std::to_string(r.evidence.empty() ? 0 : r.evidence[0].instances) + " coarsenings)");
  });

  criterion(8, [] {
    bool ok = true;
    std::uint64_t members = 0;
    for (const char* n : {"2", "3", "4"}) {
      const auto r = run("minimal-sober", {{"n", n}});
      ok = ok && passed(r);
      members += r.evidence.empty() ? 0 : r.evidence[0].instances;
    }
    line(8, ok,
         "minimal sober classes on n = 2,3,4 are exactly the n! chain topologies (" +
             std::to_string(members) +
             " members), coinciding with minimal d-space and well-filtered classes");
  });

  criterion(9, [] {
    const auto start = Clock::now();
    const auto cof = run("cofinite-join");
    const auto crt = run("crt-chain", {{"max-index", "4"}, {"max-point", "20"}});
    const auto rem = run("primorial-complement", {{"max-x", "50"}});
    const auto ms = ms_since(start);
    line(9, passed(cof) && passed(crt) && passed(rem) && ms < 10000,
         "cofinite join width 2, chain separations for a < b <= 20 at stages 1..4, rebased "
         "common points to prime index 8, primorial complement certificates for x <= 50, " +
             std::to_string(ms) + " ms of 10000");
  });

  criterion(10, [] {
    const auto r = run("upset-algebra", {{"random", "10000"}});
    line(10, passed(r),
         "Boolean algebra laws and pointwise window agreement on the exhaustive corpus plus "
         "10000 randomized cases (" +
             std::to_string(instances(r)) + " checks)");
  });

  return failures;
}
