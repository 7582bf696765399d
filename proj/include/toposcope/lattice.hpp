#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toposcope/finspace.hpp"

namespace topo {

// Meet: intersection of the open families. Join: topology generated by the
// union as a subbase. Both require a nonempty family on one ground set.
FiniteTopology meet(const std::vector<FiniteTopology>& ts);
FiniteTopology join(const std::vector<FiniteTopology>& ts);

// All topologies on n points (n <= 5), streamed in increasing order of the
// specialization-preorder encoding; optionally filtered by a property. For
// n <= 3 the stream is cross-checked internally against the direct
// family-filter enumeration.
std::vector<FiniteTopology> enumerate_topologies(int n, std::optional<Property> filter = std::nullopt);

std::uint64_t count_topologies(int n, std::optional<Property> filter = std::nullopt);

// Independent enumerations used as oracles for each other:
// breadth-first closure search over open families (n <= 5), and the brute
// filter of all subset families (n <= 4).
std::vector<FiniteTopology> enumerate_topologies_by_closure(int n);
std::vector<FiniteTopology> enumerate_topologies_direct(int n);

// Members of the property class with no strictly coarser member. n <= 4.
std::vector<FiniteTopology> minimal_in_class(int n, Property p);

// T is not the join of any family of strictly coarser topologies. By the
// accumulation argument, failing on some family implies failing on a pair, so
// only pairs are scanned. n <= 4.
bool strongly_irreducible(const FiniteTopology& t);

// Least size of a family of sober topologies joining to T; nullopt when no
// such family exists. On these carriers: 1 when T is T0, nullopt otherwise
// (sober factors are T0 and joins of T0 are T0, while finite T0 is sober).
std::optional<std::uint32_t> sober_join_width(const FiniteTopology& t);

}  // namespace topo
