#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toposcope/preorder.hpp"
#include "toposcope/sets.hpp"

namespace topo {

// A topology on {0,...,n-1}, n <= 6. Open sets are kept in canonical
// (popcount, value) order; the family bitmap is kept alongside so membership,
// equality and the lattice operations are word operations.
class FiniteTopology {
 public:
  // The unique topology on the empty carrier.
  FiniteTopology() : FiniteTopology(0, FamilyMask{1}) {}

  // Validates the axioms (empty and full present, closed under pairwise union
  // and intersection); duplicates in `opens` are tolerated and dropped.
  static FiniteTopology from_opens(int n, std::vector<Mask> opens);

  // Smallest topology containing `sets`.
  static FiniteTopology from_subbase(int n, const std::vector<Mask>& sets);

  static FiniteTopology from_family(int n, FamilyMask opens);
  static FiniteTopology indiscrete(int n);
  static FiniteTopology discrete(int n);

  int ground_size() const { return n_; }
  const std::vector<Mask>& opens() const { return opens_; }
  FamilyMask open_family() const { return family_; }
  FamilyMask closed_family() const;
  std::vector<Mask> closed_sets() const;  // canonical order

  bool is_open(Mask a) const;
  bool is_closed(Mask a) const;

  Mask closure(Mask a) const;   // smallest closed superset
  Mask interior(Mask a) const;  // largest open subset
  Mask point_closure(int x) const;

  // Union of the point closures of the members of `a` (always closed here,
  // because point closures are closed and the carrier is finite).
  Mask point_closure_hull(Mask a) const;

  // Saturation: intersection of all opens containing `a`.
  Mask saturation(Mask a) const;

  // x <= y iff x lies in the closure of {y}; opens are exactly the up-sets.
  Preorder specialization() const;

  // Topology induced on the subset `m`, re-indexed along increasing elements.
  FiniteTopology subspace(Mask m) const;

  bool finer_than(const FiniteTopology& o) const;     // o subset of this
  bool strictly_finer_than(const FiniteTopology& o) const;

  // "[0,3,5,7]" open masks in canonical order; the report encoding.
  std::string encode() const;

  bool operator==(const FiniteTopology& o) const { return n_ == o.n_ && family_ == o.family_; }
  bool operator!=(const FiniteTopology& o) const { return !(*this == o); }

 private:
  FiniteTopology(int n, FamilyMask family);

  int n_ = 0;
  FamilyMask family_ = 0;
  std::vector<Mask> opens_;
};

// Nonempty closed `a` is irreducible iff every two opens meeting `a` meet
// inside `a`.
bool is_irreducible(const FiniteTopology& t, Mask a);

// All irreducible closed sets, canonical order.
std::vector<Mask> irreducible_closed_sets(const FiniteTopology& t);

enum class Property { T0, T1, T2, TD, Sober, DSpace, WellFiltered };

const char* property_name(Property p);
std::optional<Property> property_from_name(const std::string& name);

bool is_t0(const FiniteTopology& t);
bool is_t1(const FiniteTopology& t);
bool is_t2(const FiniteTopology& t);

// TD via closed differences: cl({x}) - {x} is closed for every x.
bool is_td(const FiniteTopology& t);
// TD via the open-point route: every x has an open U with U /\ cl({x}) = {x}.
// Equivalent to is_td; both are exposed so tests can cross them.
bool is_td_open_point(const FiniteTopology& t);

// Every irreducible closed set is the closure of exactly one point.
bool is_sober(const FiniteTopology& t);

// T0, and every directed subset D (for the specialization order) with
// intersection of up-sets inside an open U already meets U.
bool is_d_space(const FiniteTopology& t);

// T0, and every filtered family of nonempty saturated sets whose intersection
// lies in an open U has a member inside U. Checked by direct enumeration of
// filtered families.
bool is_well_filtered(const FiniteTopology& t);

bool has_property(const FiniteTopology& t, Property p);

// Point soberification: the space of irreducible closed sets with opens
// diamond(U) = {C : C meets U}. Requires T0 (so the new carrier is again
// {0,...,n-1} sized).
struct Soberification {
  FiniteTopology space;
  std::vector<Mask> carrier;   // carrier[i] = the irreducible closed set that is point i
  std::vector<int> point_map;  // x -> index of cl({x})
};

Soberification soberify(const FiniteTopology& t);

}  // namespace topo
