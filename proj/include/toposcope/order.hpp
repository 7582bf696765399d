#pragma once

#include <optional>
#include <vector>

#include "toposcope/finspace.hpp"
#include "toposcope/preorder.hpp"

namespace topo {

// All up-sets of P. On a finite carrier this is the finest topology with
// specialization preorder P, and specialization() inverts it exactly.
FiniteTopology alexandroff_topology(const Preorder& p);

// Opens: up-sets U such that every directed D with sup in U meets U. On a
// finite poset every up-set qualifies, which tests pin down explicitly.
FiniteTopology scott_topology(const Poset& p);

// Generated by the complements of principal down-sets.
FiniteTopology upper_topology(const Poset& p);

// d nonempty and every two members have an upper bound inside d.
bool is_directed(const Preorder& p, Mask d);

// Least upper bound of `s` if it exists (s may be empty: returns the least
// element if there is one).
std::optional<int> sup_of(const Poset& p, Mask s);

bool is_chain(const Poset& p);
bool is_dcpo(const Poset& p);          // every directed subset has a sup
bool is_sup_complete(const Poset& p);  // every nonempty subset has a sup

// x is way below y: every directed D whose sup dominates y contains a member
// above x. On finite posets this collapses to x <= y; kept definitional.
bool way_below(const Poset& p, int x, int y);

// dcpo whose every point is the directed sup of the points way below it.
bool is_domain(const Poset& p);

// All preorders on n points in increasing encode() order. n <= 5.
std::vector<Preorder> enumerate_preorders(int n);
std::vector<Poset> enumerate_posets(int n);

}  // namespace topo
