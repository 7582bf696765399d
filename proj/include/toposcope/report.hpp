#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toposcope/finspace.hpp"

namespace topo {

enum class Verdict { Pass, Fail, Skip };

const char* verdict_name(Verdict v);

// One checked claim: how many instances were examined and, on failure, the
// first counterexample (canonical topology encodings or symbolic set text).
struct Evidence {
  std::string claim;
  std::uint64_t instances = 0;
  std::optional<std::string> counterexample;
};

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;  // echoed, sorted by key
  Verdict verdict = Verdict::Pass;
  std::vector<Evidence> evidence;
  std::int64_t elapsed_ms = 0;  // stays 0 unless timings are requested

  void add(const std::string& claim, std::uint64_t instances,
           std::optional<std::string> counterexample = std::nullopt);
  void set_param(const std::string& key, const std::string& value);
  // Fail iff any evidence carries a counterexample (unless already skipped).
  void finalize();
};

// Field order is fixed (suite, params, verdict, evidence, elapsed_ms) and the
// output is byte-stable for identical inputs.
std::string report_to_json(const VerificationReport& r);

// Hasse diagram of the topology lattice on n points (n <= 3): nodes carry the
// canonical open-mask encodings, edges are covering pairs.
std::string lattice_dot(int n);

// Hasse diagram of one topology's specialization order (n <= 6).
std::string specialization_dot(const FiniteTopology& t);

}  // namespace topo
