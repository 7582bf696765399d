#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toposcope/lattice.hpp"
#include "toposcope/report.hpp"
#include "toposcope/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitSkip = 2;
constexpr int kExitUsage = 64;
constexpr int kExitTooLarge = 65;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << text;
}

// "0,1,3,7" -> canonical open masks.
std::vector<topo::Mask> parse_masks(const std::string& s) {
  std::vector<topo::Mask> masks;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size() || v > 63) throw std::invalid_argument("bad mask " + item);
    masks.push_back(static_cast<topo::Mask>(v));
  }
  return masks;
}

int run_verify(const std::string& suite, const topo::SuiteParams& params, const std::string& out_path,
               bool timings) {
  const auto start = std::chrono::steady_clock::now();
  topo::VerificationReport report = topo::run_suite(suite, params);
  if (timings) {
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  }
  emit(topo::report_to_json(report), out_path);
  switch (report.verdict) {
    case topo::Verdict::Pass:
      return 0;
    case topo::Verdict::Fail:
      return kExitFail;
    case topo::Verdict::Skip:
      return kExitSkip;
  }
  return kExitFail;
}

int run_enumerate(int n, const std::string& filter, const std::string& format, const std::string& topology,
                  const std::string& out_path) {
  std::optional<topo::Property> prop;
  if (!filter.empty()) {
    prop = topo::property_from_name(filter);
    if (!prop) topo::fail(topo::errc::bad_param, "unknown property " + filter);
  }
  if (format == "count" || format == "json") {
    if (n > 5) topo::fail(topo::errc::too_large, "full enumeration is limited to 5 points");
    const auto ts = topo::enumerate_topologies(n, prop);
    if (format == "count") {
      emit(std::to_string(ts.size()) + "\n", out_path);
      return 0;
    }
    std::string lines;
    for (const auto& t : ts) {
      nlohmann::ordered_json j;
      j["opens"] = nlohmann::json::array();
      for (topo::Mask m : t.opens()) j["opens"].push_back(m);
      lines += j.dump() + "\n";
    }
    emit(lines, out_path);
    return 0;
  }
  if (format == "dot") {
    if (!topology.empty()) {
      const auto t = topo::FiniteTopology::from_opens(n, parse_masks(topology));
      emit(topo::specialization_dot(t), out_path);
      return 0;
    }
    if (prop) topo::fail(topo::errc::bad_param, "--filter applies to count and json formats only");
    emit(topo::lattice_dot(n), out_path);
    return 0;
  }
  topo::fail(topo::errc::bad_param, "format must be count, json or dot");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toposcope: exact (counter)examples in the lattice of topologies"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite and print its report");
  std::string suite;
  verify->add_option("suite", suite, "suite name")->required();
  std::map<std::string, std::string> flag_values;
  for (const char* key : {"n", "max-n", "max-index", "max-point", "max-x", "random", "seed"})
    verify->add_option(std::string("--") + key, flag_values[key]);
  std::string verify_out;
  bool timings = false;
  verify->add_option("--out", verify_out, "write the report to a file instead of stdout");
  verify->add_flag("--timings", timings, "record wall time (reports stop being byte-stable)");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate topologies on a small ground set");
  int n = 0;
  std::string filter, format = "count", topology, enum_out;
  enumerate->add_option("--n", n, "ground set size")->required();
  enumerate->add_option("--filter", filter, "property filter: t0 t1 t2 td sober d-space well-filtered");
  enumerate->add_option("--format", format, "count, json (one topology per line) or dot");
  enumerate->add_option("--topology", topology, "open masks of one topology, e.g. 0,1,3,7 (dot format)");
  enumerate->add_option("--out", enum_out, "write the output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      topo::SuiteParams params;
      for (const auto& [key, value] : flag_values)
        if (!value.empty()) params.set(key, value);
      return run_verify(suite, params, verify_out, timings);
    }
    return run_enumerate(n, filter, format, topology, enum_out);
  } catch (const topo::topo_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == topo::errc::too_large ? kExitTooLarge : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
