#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "toposcope/errors.hpp"

namespace topo {

// A subset of {0,...,n-1} as a bitmask. Ground sizes are capped at 6 so that a
// family of subsets fits in one 64-bit word (bit s <=> the set with mask s is
// a member), which makes lattice meets an AND and subset tests one compare.
using Mask = std::uint32_t;
using FamilyMask = std::uint64_t;

inline constexpr int kMaxGround = 6;

constexpr Mask full_mask(int n) { return static_cast<Mask>((1u << n) - 1u); }

inline int popcount(Mask m) { return std::popcount(m); }

inline void check_ground(int n) {
  if (n < 0 || n > kMaxGround) fail(errc::too_large, "ground size " + std::to_string(n) + " outside [0," + std::to_string(kMaxGround) + "]");
}

inline void check_point(int n, int x) {
  if (x < 0 || x >= n) fail(errc::bad_point, "point " + std::to_string(x) + " outside ground set of size " + std::to_string(n));
}

inline void check_subset(int n, Mask a) {
  if (a & ~full_mask(n)) fail(errc::bad_set, "mask " + std::to_string(a) + " not a subset of the ground set");
}

// "{0,2}" rendering for report text.
std::string set_to_string(Mask a);

// Sorts by (popcount, numeric value): the canonical family order. It is a
// linear extension of subset inclusion.
void canonical_sort(std::vector<Mask>& sets);

// Least fixpoint of pairwise union/intersection containing `f`. On a finite
// carrier this is exactly the family generated as a topology by `f` once the
// empty set and the full set are included.
FamilyMask close_family(FamilyMask f);

inline bool family_contains(FamilyMask f, Mask s) { return (f >> s) & 1u; }

std::vector<Mask> family_members(FamilyMask f);

}  // namespace topo
