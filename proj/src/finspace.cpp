#include "toposcope/finspace.hpp"

#include <algorithm>
#include <utility>

namespace topo {

namespace {

FamilyMask family_of(int n, const std::vector<Mask>& sets) {
  FamilyMask f = 0;
  for (Mask s : sets) {
    check_subset(n, s);
    f |= FamilyMask{1} << s;
  }
  return f;
}

}  // namespace

FiniteTopology::FiniteTopology(int n, FamilyMask family) : n_(n), family_(family) {
  opens_ = family_members(family_);
}

FiniteTopology FiniteTopology::from_opens(int n, std::vector<Mask> opens) {
  check_ground(n);
  const FamilyMask f = family_of(n, opens);
  if (!family_contains(f, 0) || !family_contains(f, full_mask(n)))
    fail(errc::not_a_topology, "empty or full set missing");
  const auto members = family_members(f);
  for (Mask a : members)
    for (Mask b : members) {
      if (!family_contains(f, a | b)) fail(errc::not_a_topology, "not closed under union: " + set_to_string(a) + ", " + set_to_string(b));
      if (!family_contains(f, a & b)) fail(errc::not_a_topology, "not closed under intersection: " + set_to_string(a) + ", " + set_to_string(b));
    }
  return FiniteTopology(n, f);
}

FiniteTopology FiniteTopology::from_subbase(int n, const std::vector<Mask>& sets) {
  check_ground(n);
  FamilyMask f = family_of(n, sets);
  f |= FamilyMask{1} << 0;
  f |= FamilyMask{1} << full_mask(n);
  return FiniteTopology(n, close_family(f));
}

FiniteTopology FiniteTopology::from_family(int n, FamilyMask opens) {
  return from_opens(n, family_members(opens));
}

FiniteTopology FiniteTopology::indiscrete(int n) {
  check_ground(n);
  FamilyMask f = FamilyMask{1} << 0;
  f |= FamilyMask{1} << full_mask(n);
  return FiniteTopology(n, f);
}

FiniteTopology FiniteTopology::discrete(int n) {
  check_ground(n);
  FamilyMask f = 0;
  for (Mask s = 0; s <= full_mask(n); ++s) f |= FamilyMask{1} << s;
  return FiniteTopology(n, f);
}

FamilyMask FiniteTopology::closed_family() const {
  const Mask full = full_mask(n_);
  FamilyMask c = 0;
  for (Mask u : opens_) c |= FamilyMask{1} << (full & ~u);
  return c;
}

std::vector<Mask> FiniteTopology::closed_sets() const { return family_members(closed_family()); }

bool FiniteTopology::is_open(Mask a) const {
  check_subset(n_, a);
  return family_contains(family_, a);
}

bool FiniteTopology::is_closed(Mask a) const {
  check_subset(n_, a);
  return family_contains(family_, full_mask(n_) & ~a);
}

Mask FiniteTopology::closure(Mask a) const {
  check_subset(n_, a);
  // Intersection of the closed supersets; the full set always qualifies.
  Mask c = full_mask(n_);
  for (Mask u : opens_) {
    const Mask k = full_mask(n_) & ~u;
    if ((a & ~k) == 0) c &= k;
  }
  return c;
}

Mask FiniteTopology::interior(Mask a) const {
  check_subset(n_, a);
  Mask best = 0;
  for (Mask u : opens_)
    if ((u & ~a) == 0) best |= u;
  return best;
}

Mask FiniteTopology::point_closure(int x) const {
  check_point(n_, x);
  return closure(Mask{1} << x);
}

Mask FiniteTopology::point_closure_hull(Mask a) const {
  check_subset(n_, a);
  Mask h = 0;
  for (int x = 0; x < n_; ++x)
    if (a >> x & 1u) h |= point_closure(x);
  return h;
}

Mask FiniteTopology::saturation(Mask a) const {
  check_subset(n_, a);
  Mask s = full_mask(n_);
  for (Mask u : opens_)
    if ((a & ~u) == 0) s &= u;
  return s;
}

Preorder FiniteTopology::specialization() const {
  std::vector<Mask> up(n_);
  for (int y = 0; y < n_; ++y) {
    const Mask cl = point_closure(y);
    for (int x = 0; x < n_; ++x)
      if (cl >> x & 1u) up[x] |= Mask{1} << y;
  }
  return Preorder(n_, std::move(up));
}

FiniteTopology FiniteTopology::subspace(Mask m) const {
  check_subset(n_, m);
  std::vector<int> points;
  for (int x = 0; x < n_; ++x)
    if (m >> x & 1u) points.push_back(x);
  std::vector<Mask> opens;
  for (Mask u : opens_) {
    Mask r = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (u >> points[i] & 1u) r |= Mask{1} << i;
    opens.push_back(r);
  }
  return from_opens(static_cast<int>(points.size()), std::move(opens));
}

bool FiniteTopology::finer_than(const FiniteTopology& o) const {
  return n_ == o.n_ && (o.family_ & ~family_) == 0;
}

bool FiniteTopology::strictly_finer_than(const FiniteTopology& o) const {
  return finer_than(o) && family_ != o.family_;
}

std::string FiniteTopology::encode() const {
  std::string out = "[";
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(opens_[i]);
  }
  out += "]";
  return out;
}

bool is_irreducible(const FiniteTopology& t, Mask a) {
  check_subset(t.ground_size(), a);
  if (a == 0 || !t.is_closed(a)) return false;
  for (Mask u : t.opens()) {
    if (!(a & u)) continue;
    for (Mask v : t.opens()) {
      if (!(a & v)) continue;
      if (!(a & u & v)) return false;
    }
  }
  return true;
}

std::vector<Mask> irreducible_closed_sets(const FiniteTopology& t) {
  std::vector<Mask> out;
  for (Mask c : t.closed_sets())
    if (c != 0 && is_irreducible(t, c)) out.push_back(c);
  return out;
}

const char* property_name(Property p) {
  switch (p) {
    case Property::T0: return "t0";
    case Property::T1: return "t1";
    case Property::T2: return "t2";
    case Property::TD: return "td";
    case Property::Sober: return "sober";
    case Property::DSpace: return "d-space";
    case Property::WellFiltered: return "well-filtered";
  }
  return "?";
}

std::optional<Property> property_from_name(const std::string& name) {
  for (Property p : {Property::T0, Property::T1, Property::T2, Property::TD,
                     Property::Sober, Property::DSpace, Property::WellFiltered})
    if (name == property_name(p)) return p;
  return std::nullopt;
}

bool is_t0(const FiniteTopology& t) {
  const int n = t.ground_size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (t.point_closure(x) == t.point_closure(y)) return false;
  return true;
}

bool is_t1(const FiniteTopology& t) {
  const int n = t.ground_size();
  for (int x = 0; x < n; ++x)
    if (t.point_closure(x) != (Mask{1} << x)) return false;
  return true;
}

bool is_t2(const FiniteTopology& t) {
  const int n = t.ground_size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool separated = false;
      for (Mask u : t.opens()) {
        if (!(u >> x & 1u)) continue;
        for (Mask v : t.opens())
          if ((v >> y & 1u) && !(u & v)) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

bool is_td(const FiniteTopology& t) {
  const int n = t.ground_size();
  for (int x = 0; x < n; ++x)
    if (!t.is_closed(t.point_closure(x) & ~(Mask{1} << x))) return false;
  return true;
}

bool is_td_open_point(const FiniteTopology& t) {
  const int n = t.ground_size();
  for (int x = 0; x < n; ++x) {
    const Mask cl = t.point_closure(x);
    bool found = false;
    for (Mask u : t.opens())
      if ((u & cl) == (Mask{1} << x)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool is_sober(const FiniteTopology& t) {
  const int n = t.ground_size();
  for (Mask c : irreducible_closed_sets(t)) {
    int generators = 0;
    for (int x = 0; x < n; ++x)
      if (t.point_closure(x) == c) ++generators;
    if (generators != 1) return false;
  }
  return true;
}

bool is_d_space(const FiniteTopology& t) {
  if (!is_t0(t)) return false;
  const int n = t.ground_size();
  const Preorder o = t.specialization();
  for (Mask d = 1; d <= full_mask(n); ++d) {
    bool directed = true;
    for (int x = 0; x < n && directed; ++x) {
      if (!(d >> x & 1u)) continue;
      for (int y = 0; y < n && directed; ++y) {
        if (!(d >> y & 1u)) continue;
        if ((o.up_set(x) & o.up_set(y) & d) == 0) directed = false;
      }
    }
    if (!directed) continue;
    Mask upper = full_mask(n);
    for (int x = 0; x < n; ++x)
      if (d >> x & 1u) upper &= o.up_set(x);
    for (Mask u : t.opens())
      if ((upper & ~u) == 0 && (d & u) == 0) return false;
  }
  return true;
}

namespace {

// Depth-first walk over filtered families of nonempty saturated sets. The
// candidate list is in canonical order, a linear extension of inclusion, so
// every filtered family is met through filtered prefixes: its minimum member
// (finite filtered families have one) comes first.
bool well_filtered_walk(const FiniteTopology& t, const std::vector<Mask>& sats,
                        std::vector<Mask>& fam, Mask inter, std::size_t next) {
  if (!fam.empty()) {
    for (Mask u : t.opens()) {
      if ((inter & ~u) != 0) continue;
      bool member_inside = false;
      for (Mask k : fam)
        if ((k & ~u) == 0) {
          member_inside = true;
          break;
        }
      if (!member_inside) return false;
    }
  }
  for (std::size_t i = next; i < sats.size(); ++i) {
    const Mask s = sats[i];
    bool filtered = true;
    for (Mask k : fam) {
      const Mask meet_needed = k & s;
      bool has_lower = ((s & ~k) == 0) || ((k & ~s) == 0);
      if (!has_lower)
        for (Mask m : fam)
          if ((m & ~meet_needed) == 0) {
            has_lower = true;
            break;
          }
      if (!has_lower) {
        filtered = false;
        break;
      }
    }
    if (!filtered) continue;
    fam.push_back(s);
    if (!well_filtered_walk(t, sats, fam, inter & s, i + 1)) return false;
    fam.pop_back();
  }
  return true;
}

}  // namespace

bool is_well_filtered(const FiniteTopology& t) {
  if (!is_t0(t)) return false;
  const int n = t.ground_size();
  std::vector<Mask> sats;
  for (Mask s = 1; s <= full_mask(n); ++s)
    if (t.saturation(s) == s) sats.push_back(s);
  canonical_sort(sats);
  std::vector<Mask> fam;
  return well_filtered_walk(t, sats, fam, full_mask(n), 0);
}

bool has_property(const FiniteTopology& t, Property p) {
  switch (p) {
    case Property::T0: return is_t0(t);
    case Property::T1: return is_t1(t);
    case Property::T2: return is_t2(t);
    case Property::TD: return is_td(t);
    case Property::Sober: return is_sober(t);
    case Property::DSpace: return is_d_space(t);
    case Property::WellFiltered: return is_well_filtered(t);
  }
  fail(errc::bad_param, "unknown property");
}

Soberification soberify(const FiniteTopology& t) {
  if (!is_t0(t)) fail(errc::not_t0, "soberification carrier would collide points");
  Soberification s;
  s.carrier = irreducible_closed_sets(t);
  const int k = static_cast<int>(s.carrier.size());
  std::vector<Mask> opens;
  for (Mask u : t.opens()) {
    Mask du = 0;
    for (int i = 0; i < k; ++i)
      if (s.carrier[i] & u) du |= Mask{1} << i;
    opens.push_back(du);
  }
  s.space = FiniteTopology::from_opens(k, std::move(opens));
  const int n = t.ground_size();
  s.point_map.resize(n, -1);
  for (int x = 0; x < n; ++x) {
    const Mask cx = t.point_closure(x);
    for (int i = 0; i < k; ++i)
      if (s.carrier[i] == cx) s.point_map[x] = i;
  }
  return s;
}

}  // namespace topo
