#include "toposcope/lattice.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "toposcope/order.hpp"

namespace topo {

namespace {

void check_family_arg(const std::vector<FiniteTopology>& ts) {
  if (ts.empty()) fail(errc::empty_family, "meet/join of an empty family");
  for (const auto& t : ts)
    if (t.ground_size() != ts.front().ground_size())
      fail(errc::mixed_ground_size, "family mixes ground sizes");
}

}  // namespace

FiniteTopology meet(const std::vector<FiniteTopology>& ts) {
  check_family_arg(ts);
  FamilyMask f = ts.front().open_family();
  for (const auto& t : ts) f &= t.open_family();
  // Intersections of topologies are topologies; construct without re-closure.
  return FiniteTopology::from_family(ts.front().ground_size(), f);
}

FiniteTopology join(const std::vector<FiniteTopology>& ts) {
  check_family_arg(ts);
  FamilyMask f = 0;
  for (const auto& t : ts) f |= t.open_family();
  return FiniteTopology::from_family(ts.front().ground_size(), close_family(f));
}

std::vector<FiniteTopology> enumerate_topologies(int n, std::optional<Property> filter) {
  auto preorders = enumerate_preorders(n);  // caps n at 5
  std::vector<FiniteTopology> all;
  all.reserve(preorders.size());
  for (const auto& p : preorders) all.push_back(alexandroff_topology(p));
  if (n <= 3) {
    // The two independent enumerations must produce the same set.
    std::vector<FamilyMask> a, b;
    for (const auto& t : all) a.push_back(t.open_family());
    for (const auto& t : enumerate_topologies_direct(n)) b.push_back(t.open_family());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::logic_error("enumeration cross-check failed at n=" + std::to_string(n));
  }
  if (!filter) return all;
  std::vector<FiniteTopology> out;
  for (auto& t : all)
    if (has_property(t, *filter)) out.push_back(std::move(t));
  return out;
}

std::uint64_t count_topologies(int n, std::optional<Property> filter) {
  return enumerate_topologies(n, filter).size();
}

std::vector<FiniteTopology> enumerate_topologies_by_closure(int n) {
  check_ground(n);
  if (n > 5) fail(errc::too_large, "closure search capped at 5 points");
  const Mask full = full_mask(n);
  FamilyMask start = (FamilyMask{1} << 0) | (FamilyMask{1} << full);
  std::unordered_set<FamilyMask> seen{start};
  std::queue<FamilyMask> work;
  work.push(start);
  while (!work.empty()) {
    const FamilyMask f = work.front();
    work.pop();
    for (Mask s = 0; s <= full; ++s) {
      if (family_contains(f, s)) continue;
      const FamilyMask g = close_family(f | (FamilyMask{1} << s));
      if (seen.insert(g).second) work.push(g);
    }
  }
  std::vector<FamilyMask> fams(seen.begin(), seen.end());
  std::sort(fams.begin(), fams.end());
  std::vector<FiniteTopology> out;
  out.reserve(fams.size());
  for (FamilyMask f : fams) out.push_back(FiniteTopology::from_family(n, f));
  return out;
}

std::vector<FiniteTopology> enumerate_topologies_direct(int n) {
  check_ground(n);
  if (n > 4) fail(errc::too_large, "direct family filter capped at 4 points");
  const Mask full = full_mask(n);
  const FamilyMask base = (FamilyMask{1} << 0) | (FamilyMask{1} << full);
  // Choose any subfamily of the proper nonempty subsets and keep the lattices.
  std::vector<Mask> mids;
  for (Mask s = 1; s < full; ++s) mids.push_back(s);
  std::vector<FiniteTopology> out;
  const std::uint64_t limit = std::uint64_t{1} << mids.size();
  for (std::uint64_t pick = 0; pick < limit; ++pick) {
    FamilyMask f = base;
    for (std::size_t k = 0; k < mids.size(); ++k)
      if (pick >> k & 1u) f |= FamilyMask{1} << mids[k];
    if (close_family(f) == f) out.push_back(FiniteTopology::from_family(n, f));
  }
  return out;
}

std::vector<FiniteTopology> minimal_in_class(int n, Property p) {
  check_ground(n);
  if (n > 4) fail(errc::too_large, "minimality sweep capped at 4 points");
  std::vector<FiniteTopology> members = enumerate_topologies(n, p);
  std::vector<FiniteTopology> out;
  for (const auto& t : members) {
    bool minimal = true;
    for (const auto& s : members)
      if (t.strictly_finer_than(s)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const FiniteTopology& a, const FiniteTopology& b) {
    return a.open_family() < b.open_family();
  });
  return out;
}

bool strongly_irreducible(const FiniteTopology& t) {
  const int n = t.ground_size();
  if (n > 4) fail(errc::too_large, "strong irreducibility sweep capped at 4 points");
  // If T is the join of strictly coarser topologies, accumulate that family
  // one member at a time: the first accumulated join that reaches T splits it
  // as (previous accumulation) v (new member), both strictly coarser. So a
  // counterexample exists iff a two-element one does.
  std::vector<FiniteTopology> coarser;
  for (auto& s : enumerate_topologies(n))
    if (t.strictly_finer_than(s)) coarser.push_back(std::move(s));
  for (std::size_t i = 0; i < coarser.size(); ++i)
    for (std::size_t j = i; j < coarser.size(); ++j)
      if (join({coarser[i], coarser[j]}) == t) return false;
  return true;
}

std::optional<std::uint32_t> sober_join_width(const FiniteTopology& t) {
  const int n = t.ground_size();
  if (n > 4) fail(errc::too_large, "sober join width capped at 4 points");
  if (is_sober(t)) return 1;
  // Sober topologies are T0, joins of T0 topologies are T0, and every T0
  // topology on a finite carrier is sober. So non-sober here means non-T0,
  // and no family of sober topologies can join to T at all.
  if (is_t0(t)) throw std::logic_error("finite T0 topology reported non-sober");
  return std::nullopt;
}

}  // namespace topo
