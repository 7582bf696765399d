#pragma once

#include <map>
#include <string>
#include <vector>

#include "toposcope/report.hpp"

namespace topo {

// String key/value parameters from the CLI; typed accessors validate.
class SuiteParams {
 public:
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;  // errc::bad_param
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  const std::map<std::string, std::string>& raw() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

// Ground-size cap for the verification sweeps: TOPOSCOPE_MAX_N clamped to
// [1,6], default 4. Suites whose requested size exceeds it report Skip.
int effective_ground_cap();

using SuiteFn = VerificationReport (*)(const SuiteParams&);

// name -> runner for every registered suite:
//   enum-cross, sobriety-collapse, t1-join, meet-sober, alexandroff-meet,
//   upper-sets, link-coarsening, minimal-sober, cofinite-join, crt-chain,
//   primorial-complement, upset-algebra
const std::map<std::string, SuiteFn>& suite_registry();

// errc::unknown_suite for unregistered names.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

std::vector<std::string> suite_names();

}  // namespace topo
