#pragma once

#include <optional>
#include <vector>

#include "toposcope/finspace.hpp"
#include "toposcope/preorder.hpp"

namespace topo {

// One representative per specialization-equivalence class. `classes` lists
// the class masks ordered by least element; pick[i] lies in classes[i].
struct ChoiceFunction {
  std::vector<Mask> classes;
  std::vector<int> pick;
};

std::vector<Mask> specialization_classes(const FiniteTopology& t);
ChoiceFunction choice_from_representatives(const FiniteTopology& t, const std::vector<int>& reps);
std::vector<ChoiceFunction> all_choice_functions(const FiniteTopology& t);

// Sober factor attached to a proper nonempty closed set A of a T1 space:
// opens are the empty set, every set containing both in_a and out_a, and
// every subset of X-A containing out_a. The result is sober and coarser than
// the discrete topology while keeping A closed.
FiniteTopology sober_join_factor(const FiniteTopology& t, Mask a, int in_a, int out_a);

// One sober factor per proper nonempty closed set of a T1 space; their join
// returns the space itself (verified). Spaces with no proper nonempty closed
// set decompose as {T}.
std::vector<FiniteTopology> t1_join_decomposition(const FiniteTopology& t);

// Finer T0 topology obtained by closing, for each class, the sets that pin
// the chosen representative inside its class.
FiniteTopology t0_refinement(const FiniteTopology& t, const ChoiceFunction& f);

// Topology on n points that restricts to `sub` on the subset m and leaves
// every point outside m isolated; closed sets are exactly (closed of sub,
// embedded) united with arbitrary sets outside m.
FiniteTopology direct_sum_extension(int n, Mask m, const FiniteTopology& sub);

// direct_sum_extension on the two-point subset {open_pt, closed_pt} carrying
// the connected T0 topology where {closed_pt} is relatively closed.
FiniteTopology attached_pair_extension(int n, int open_pt, int closed_pt);

// Sober topologies refining T whose meet is exactly T. Stage one refines by
// every choice function; stage two attaches a pair factor for every strict
// specialization y < a. The meet is verified, as is the enumeration fallback
// (meet of all sober refinements). `pair_stage_needed` lists the non-closed
// sets no stage-one factor separates: the data for which inputs require the
// second stage.
struct MeetDecomposition {
  std::vector<FiniteTopology> factors;
  std::vector<FiniteTopology> refinement_factors;  // stage one
  std::vector<FiniteTopology> pair_factors;        // stage two
  std::vector<Mask> pair_stage_needed;
};

MeetDecomposition meet_sober_decomposition(const FiniteTopology& t);

// Partial order with the single strict relation a < b.
Poset single_edge_poset(int n, int a, int b);

// Alexandroff topologies of the single-edge posets of P; their meet is the
// Alexandroff topology of P (verified). An antichain decomposes as the
// discrete topology alone.
std::vector<FiniteTopology> alexandroff_meet_decomposition(const Poset& p);

struct NoncomparablePair {
  int x = 0;
  int y = 0;
};

// Strictly coarser T0 topology on a T0 space: keeps the opens containing x
// and the opens avoiding both x and y, for a noncomparable pair (x, y). The
// new specialization order adds exactly {(u,v) : u <= y and x <= v}.
FiniteTopology link_pair_coarsening(const FiniteTopology& t, NoncomparablePair pair);

// A sober space is minimal sober iff its specialization order is a
// sup-complete chain and its topology is the Scott topology. On finite
// carriers: iff the order is a total order. When not minimal the certificate
// carries the lexicographically least noncomparable pair (when one exists)
// and the strictly coarser sober witness produced from it.
struct MinimalSoberCertificate {
  bool minimal = false;
  std::optional<NoncomparablePair> witness_pair;
  std::optional<FiniteTopology> coarser_sober;
};

MinimalSoberCertificate minimal_sober_certificate(const FiniteTopology& t);

}  // namespace topo
