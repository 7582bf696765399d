#include "toposcope/order.hpp"

#include <utility>

namespace topo {

FiniteTopology alexandroff_topology(const Preorder& p) {
  const int n = p.ground_size();
  std::vector<Mask> opens;
  for (Mask u = 0; ; ++u) {
    bool upper = true;
    for (int x = 0; x < n && upper; ++x)
      if ((u >> x & 1u) && (p.up_set(x) & ~u)) upper = false;
    if (upper) opens.push_back(u);
    if (u == full_mask(n)) break;
  }
  return FiniteTopology::from_opens(n, std::move(opens));
}

bool is_directed(const Preorder& p, Mask d) {
  check_subset(p.ground_size(), d);
  if (d == 0) return false;
  const int n = p.ground_size();
  for (int x = 0; x < n; ++x) {
    if (!(d >> x & 1u)) continue;
    for (int y = 0; y < n; ++y) {
      if (!(d >> y & 1u)) continue;
      if ((p.up_set(x) & p.up_set(y) & d) == 0) return false;
    }
  }
  return true;
}

std::optional<int> sup_of(const Poset& p, Mask s) {
  check_subset(p.ground_size(), s);
  const int n = p.ground_size();
  Mask ub = full_mask(n);
  for (int x = 0; x < n; ++x)
    if (s >> x & 1u) ub &= p.up_set(x);
  for (int m = 0; m < n; ++m)
    if ((ub >> m & 1u) && (ub & ~p.up_set(m)) == 0) return m;
  return std::nullopt;
}

FiniteTopology scott_topology(const Poset& p) {
  const int n = p.ground_size();
  std::vector<Mask> opens;
  for (Mask u = 0; ; ++u) {
    bool upper = true;
    for (int x = 0; x < n && upper; ++x)
      if ((u >> x & 1u) && (p.up_set(x) & ~u)) upper = false;
    bool scott = upper;
    if (scott)
      for (Mask d = 1; d <= full_mask(n) && scott; ++d) {
        if (!is_directed(p.relation(), d)) continue;
        const auto s = sup_of(p, d);
        if (s && (u >> *s & 1u) && (d & u) == 0) scott = false;
      }
    if (scott) opens.push_back(u);
    if (u == full_mask(n)) break;
  }
  return FiniteTopology::from_opens(n, std::move(opens));
}

FiniteTopology upper_topology(const Poset& p) {
  const int n = p.ground_size();
  std::vector<Mask> subbase;
  for (int x = 0; x < n; ++x) subbase.push_back(full_mask(n) & ~p.down_set(x));
  return FiniteTopology::from_subbase(n, subbase);
}

bool is_chain(const Poset& p) {
  const int n = p.ground_size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!p.leq(x, y) && !p.leq(y, x)) return false;
  return true;
}

bool is_dcpo(const Poset& p) {
  for (Mask d = 1; d <= full_mask(p.ground_size()); ++d) {
    if (!is_directed(p.relation(), d)) continue;
    if (!sup_of(p, d)) return false;
  }
  return true;
}

bool is_sup_complete(const Poset& p) {
  for (Mask s = 1; s <= full_mask(p.ground_size()); ++s) {
    if (!sup_of(p, s)) return false;
  }
  return true;
}

bool way_below(const Poset& p, int x, int y) {
  check_point(p.ground_size(), x);
  check_point(p.ground_size(), y);
  for (Mask d = 1; d <= full_mask(p.ground_size()); ++d) {
    if (!is_directed(p.relation(), d)) continue;
    const auto s = sup_of(p, d);
    if (!s || !p.leq(y, *s)) continue;
    if ((d & p.up_set(x)) == 0) return false;
  }
  return true;
}

bool is_domain(const Poset& p) {
  if (!is_dcpo(p)) return false;
  const int n = p.ground_size();
  for (int y = 0; y < n; ++y) {
    Mask below = 0;
    for (int x = 0; x < n; ++x)
      if (way_below(p, x, y)) below |= Mask{1} << x;
    if (!is_directed(p.relation(), below)) return false;
    const auto s = sup_of(p, below);
    if (!s || *s != y) return false;
  }
  return true;
}

std::vector<Preorder> enumerate_preorders(int n) {
  check_ground(n);
  if (n > 5) fail(errc::too_large, "preorder enumeration capped at 5 points");
  std::vector<Preorder> out;
  if (n == 0) {
    out.emplace_back(0, std::vector<Mask>{});
    return out;
  }
  // Off-diagonal bit positions in row-major order keep the stream sorted by
  // the row-major encoding.
  std::vector<std::pair<int, int>> pos;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) pos.emplace_back(x, y);
  const std::uint64_t limit = std::uint64_t{1} << pos.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    std::vector<Mask> up(n);
    for (int x = 0; x < n; ++x) up[x] = Mask{1} << x;
    for (std::size_t k = 0; k < pos.size(); ++k)
      if (bits >> k & 1u) up[pos[k].first] |= Mask{1} << pos[k].second;
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y = 0; y < n && transitive; ++y)
        if ((up[x] >> y & 1u) && (up[y] & ~up[x])) transitive = false;
    if (transitive) out.emplace_back(n, std::move(up));
  }
  return out;
}

std::vector<Poset> enumerate_posets(int n) {
  std::vector<Poset> out;
  for (auto& p : enumerate_preorders(n))
    if (p.antisymmetric()) out.emplace_back(std::move(p));
  return out;
}

}  // namespace topo
