#pragma once

#include <stdexcept>
#include <string>

namespace topo {

// Failure categories surfaced by the library. Every throw site picks the most
// specific code; the CLI maps codes onto exit statuses and report text.
enum class errc {
  not_a_topology,
  bad_point,
  bad_set,
  empty_family,
  mixed_ground_size,
  too_large,
  not_t0,
  not_t1,
  not_sober,
  not_cofinite,
  precondition_violated,
  equal_points,
  comparable_pair,
  bad_partition,
  bad_subspace,
  index_overlap,
  empty_set_min,
  inconsistent_family,
  unknown_suite,
  bad_param,
  size_limit,
};

const char* errc_name(errc c);

class topo_error : public std::runtime_error {
 public:
  topo_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw topo_error(code, what);
}

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_topology: return "NotATopology";
    case errc::bad_point: return "BadPoint";
    case errc::bad_set: return "BadSet";
    case errc::empty_family: return "EmptyFamily";
    case errc::mixed_ground_size: return "MixedGroundSize";
    case errc::too_large: return "TooLarge";
    case errc::not_t0: return "NotT0";
    case errc::not_t1: return "NotT1";
    case errc::not_sober: return "NotSober";
    case errc::not_cofinite: return "NotCofinite";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::equal_points: return "EqualPoints";
    case errc::comparable_pair: return "ComparablePair";
    case errc::bad_partition: return "BadPartition";
    case errc::bad_subspace: return "BadSubspace";
    case errc::index_overlap: return "IndexOverlap";
    case errc::empty_set_min: return "EmptySetMin";
    case errc::inconsistent_family: return "InconsistentFamily";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::bad_param: return "BadParam";
    case errc::size_limit: return "SizeLimit";
  }
  return "Unknown";
}

}  // namespace topo
