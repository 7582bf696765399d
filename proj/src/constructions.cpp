#include "toposcope/constructions.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "toposcope/lattice.hpp"
#include "toposcope/order.hpp"

namespace topo {

std::vector<Mask> specialization_classes(const FiniteTopology& t) {
  const int n = t.ground_size();
  std::vector<Mask> classes;
  Mask assigned = 0;
  for (int x = 0; x < n; ++x) {
    if (assigned >> x & 1u) continue;
    Mask cls = 0;
    for (int y = 0; y < n; ++y)
      if (t.point_closure(y) == t.point_closure(x)) cls |= Mask{1} << y;
    classes.push_back(cls);
    assigned |= cls;
  }
  return classes;  // ordered by least element
}

ChoiceFunction choice_from_representatives(const FiniteTopology& t, const std::vector<int>& reps) {
  ChoiceFunction f;
  f.classes = specialization_classes(t);
  if (reps.size() != f.classes.size()) fail(errc::bad_partition, "one representative per class required");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    check_point(t.ground_size(), reps[i]);
    if (!(f.classes[i] >> reps[i] & 1u)) fail(errc::bad_partition, "representative outside its class");
    f.pick.push_back(reps[i]);
  }
  return f;
}

std::vector<ChoiceFunction> all_choice_functions(const FiniteTopology& t) {
  const auto classes = specialization_classes(t);
  std::vector<ChoiceFunction> out;
  std::vector<int> reps(classes.size(), 0);
  const auto members = [](Mask m) {
    std::vector<int> xs;
    for (int x = 0; x < 32; ++x)
      if (m >> x & 1u) xs.push_back(x);
    return xs;
  };
  std::vector<std::vector<int>> pools;
  std::size_t total = 1;
  for (Mask c : classes) {
    pools.push_back(members(c));
    total *= pools.back().size();
  }
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rem = k;
    std::vector<int> pick;
    for (const auto& pool : pools) {
      pick.push_back(pool[rem % pool.size()]);
      rem /= pool.size();
    }
    out.push_back(choice_from_representatives(t, pick));
  }
  return out;
}

FiniteTopology sober_join_factor(const FiniteTopology& t, Mask a, int in_a, int out_a) {
  const int n = t.ground_size();
  check_subset(n, a);
  check_point(n, in_a);
  check_point(n, out_a);
  if (!is_t1(t)) fail(errc::not_t1, "sober join factors require a T1 space");
  if (!t.is_closed(a)) fail(errc::precondition_violated, "attachment set must be closed");
  if (a == 0 || a == full_mask(n)) fail(errc::precondition_violated, "attachment set must be proper and nonempty");
  if (!(a >> in_a & 1u)) fail(errc::precondition_violated, "in_a must lie in the attachment set");
  if (a >> out_a & 1u) fail(errc::precondition_violated, "out_a must lie outside the attachment set");
  const Mask full = full_mask(n);
  const Mask pins = (Mask{1} << in_a) | (Mask{1} << out_a);
  std::vector<Mask> opens{0, full};
  for (Mask u = 0; u <= full; ++u) {
    if ((u & pins) == pins) opens.push_back(u);
    if ((u & a) == 0 && (u >> out_a & 1u)) opens.push_back(u);
  }
  return FiniteTopology::from_opens(n, std::move(opens));
}

std::vector<FiniteTopology> t1_join_decomposition(const FiniteTopology& t) {
  if (!is_t1(t)) fail(errc::not_t1, "join decomposition requires a T1 space");
  const int n = t.ground_size();
  const Mask full = full_mask(n);
  std::vector<FiniteTopology> factors;
  for (Mask a : t.closed_sets()) {
    if (a == 0 || a == full) continue;
    int in_a = std::countr_zero(a);
    int out_a = std::countr_zero(full & ~a);
    factors.push_back(sober_join_factor(t, a, in_a, out_a));
  }
  if (factors.empty()) return {t};
  if (join(factors) != t) throw std::logic_error("join decomposition failed to recover the space");
  return factors;
}

FiniteTopology t0_refinement(const FiniteTopology& t, const ChoiceFunction& f) {
  const int n = t.ground_size();
  const auto classes = specialization_classes(t);
  if (f.classes != classes || f.pick.size() != classes.size())
    fail(errc::bad_partition, "choice function does not match the specialization classes");
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (!(classes[i] >> f.pick[i] & 1u)) fail(errc::bad_partition, "representative outside its class");
  // Closed subbase: the closed sets of t plus, per class, every set that
  // keeps the representative inside its class.
  std::vector<Mask> closed_subbase = t.closed_sets();
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Mask s = 0; s <= full_mask(n); ++s)
      if ((s >> f.pick[i] & 1u) && (s & ~classes[i]) == 0) closed_subbase.push_back(s);
  FamilyMask cf = (FamilyMask{1} << 0) | (FamilyMask{1} << full_mask(n));
  for (Mask s : closed_subbase) cf |= FamilyMask{1} << s;
  cf = close_family(cf);
  FamilyMask opens = 0;
  for (Mask s = 0; s <= full_mask(n); ++s)
    if (family_contains(cf, s)) opens |= FamilyMask{1} << (full_mask(n) & ~s);
  FiniteTopology r = FiniteTopology::from_family(n, opens);
  if (!r.finer_than(t)) throw std::logic_error("refinement lost opens of the base space");
  if (!is_t0(r)) throw std::logic_error("refinement failed to separate the classes");
  return r;
}

FiniteTopology direct_sum_extension(int n, Mask m, const FiniteTopology& sub) {
  check_ground(n);
  check_subset(n, m);
  if (sub.ground_size() != popcount(m)) fail(errc::bad_subspace, "subspace topology size does not match the subset");
  std::vector<int> points;
  for (int x = 0; x < n; ++x)
    if (m >> x & 1u) points.push_back(x);
  const auto embed = [&](Mask rel) {
    Mask abs = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (rel >> i & 1u) abs |= Mask{1} << points[i];
    return abs;
  };
  // Closed sets: an embedded closed set of `sub` united with anything outside m.
  const Mask outside = full_mask(n) & ~m;
  FamilyMask closed = 0;
  for (Mask b : sub.closed_sets()) {
    const Mask eb = embed(b);
    Mask a = 0;
    while (true) {  // subsets of `outside`
      closed |= FamilyMask{1} << (eb | a);
      if (a == outside) break;
      a = (a - outside) & outside;  // next subset
    }
  }
  FamilyMask opens = 0;
  for (Mask s = 0; s <= full_mask(n); ++s)
    if (family_contains(closed, s)) opens |= FamilyMask{1} << (full_mask(n) & ~s);
  FiniteTopology r = FiniteTopology::from_family(n, opens);
  if (r.subspace(m) != sub) throw std::logic_error("direct sum does not restrict to the summand");
  return r;
}

FiniteTopology attached_pair_extension(int n, int open_pt, int closed_pt) {
  check_point(n, open_pt);
  check_point(n, closed_pt);
  if (open_pt == closed_pt) fail(errc::equal_points, "pair extension needs two points");
  const Mask m = (Mask{1} << open_pt) | (Mask{1} << closed_pt);
  // Two-point T0 topology: the open point's singleton is relatively open.
  const int open_idx = open_pt < closed_pt ? 0 : 1;
  FiniteTopology mu = FiniteTopology::from_opens(2, {0, Mask{1} << open_idx, 3});
  return direct_sum_extension(n, m, mu);
}

MeetDecomposition meet_sober_decomposition(const FiniteTopology& t) {
  const int n = t.ground_size();
  if (n > 4) fail(errc::too_large, "meet decomposition sweep capped at 4 points");
  MeetDecomposition d;
  if (is_t0(t)) {
    d.factors = {t};
    return d;
  }
  for (const auto& f : all_choice_functions(t)) d.refinement_factors.push_back(t0_refinement(t, f));
  for (int a = 0; a < n; ++a) {
    const Mask cl = t.point_closure(a);
    for (int y = 0; y < n; ++y)
      if (y != a && (cl >> y & 1u)) d.pair_factors.push_back(attached_pair_extension(n, a, y));
  }
  std::vector<FiniteTopology> all = d.refinement_factors;
  all.insert(all.end(), d.pair_factors.begin(), d.pair_factors.end());
  std::sort(all.begin(), all.end(), [](const FiniteTopology& x, const FiniteTopology& y) {
    return x.open_family() < y.open_family();
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto& f : all) {
    if (!is_sober(f)) throw std::logic_error("meet decomposition produced a non-sober factor");
    if (!f.finer_than(t)) throw std::logic_error("meet decomposition produced a non-refining factor");
  }
  if (meet(all) != t) throw std::logic_error("meet decomposition does not recover the space");
  d.factors = std::move(all);
  // Which non-closed sets does stage one miss? (The data behind keeping the
  // pair factors around.)
  for (Mask s = 0; s <= full_mask(n); ++s) {
    if (t.is_closed(s)) continue;
    bool cut = false;
    for (const auto& f : d.refinement_factors)
      if (!f.is_closed(s)) {
        cut = true;
        break;
      }
    if (!cut) d.pair_stage_needed.push_back(s);
  }
  return d;
}

Poset single_edge_poset(int n, int a, int b) {
  check_point(n, a);
  check_point(n, b);
  if (a == b) fail(errc::equal_points, "edge needs two points");
  std::vector<Mask> up(n);
  for (int x = 0; x < n; ++x) up[x] = Mask{1} << x;
  up[a] |= Mask{1} << b;
  return Poset(Preorder(n, std::move(up)));
}

std::vector<FiniteTopology> alexandroff_meet_decomposition(const Poset& p) {
  const int n = p.ground_size();
  std::vector<FiniteTopology> factors;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.leq(a, b)) factors.push_back(alexandroff_topology(single_edge_poset(n, a, b).relation()));
  if (factors.empty()) return {FiniteTopology::discrete(n)};
  if (meet(factors) != alexandroff_topology(p.relation()))
    throw std::logic_error("single-edge meet does not recover the Alexandroff topology");
  return factors;
}

FiniteTopology link_pair_coarsening(const FiniteTopology& t, NoncomparablePair pair) {
  const int n = t.ground_size();
  check_point(n, pair.x);
  check_point(n, pair.y);
  if (!is_t0(t)) fail(errc::not_t0, "coarsening requires a T0 space");
  const Preorder o = t.specialization();
  if (pair.x == pair.y || o.leq(pair.x, pair.y) || o.leq(pair.y, pair.x))
    fail(errc::comparable_pair, "points must be noncomparable");
  FamilyMask f = 0;
  for (Mask u : t.opens())
    if ((u >> pair.x & 1u) || !((u >> pair.x & 1u) || (u >> pair.y & 1u))) f |= FamilyMask{1} << u;
  FiniteTopology r = FiniteTopology::from_family(n, f);
  if (!t.strictly_finer_than(r)) throw std::logic_error("coarsening did not drop any open");
  if (!is_t0(r)) throw std::logic_error("coarsening lost T0");
  return r;
}

MinimalSoberCertificate minimal_sober_certificate(const FiniteTopology& t) {
  if (!is_sober(t)) fail(errc::not_sober, "minimality certificate requires a sober space");
  MinimalSoberCertificate c;
  const Poset p{t.specialization()};
  const int n = t.ground_size();
  for (int x = 0; x < n && !c.witness_pair; ++x)
    for (int y = x + 1; y < n && !c.witness_pair; ++y)
      if (!p.leq(x, y) && !p.leq(y, x)) c.witness_pair = NoncomparablePair{x, y};
  if (c.witness_pair) {
    c.minimal = false;
    c.coarser_sober = link_pair_coarsening(t, *c.witness_pair);
    if (!is_sober(*c.coarser_sober)) throw std::logic_error("coarsening lost sobriety");
    return c;
  }
  // Total specialization order: minimal iff the topology is the Scott
  // topology of that chain. On a finite carrier every topology is the up-set
  // topology of its specialization order, which for a chain is the Scott
  // topology, so the comparison cannot fail here.
  const FiniteTopology scott = scott_topology(p);
  if (t != scott) throw std::logic_error("finite topology differs from its chain Scott topology");
  c.minimal = true;
  return c;
}

}  // namespace topo
