#include <doctest.h>

#include <algorithm>
#include <vector>

#include "toposcope/constructions.hpp"
#include "toposcope/lattice.hpp"
#include "toposcope/order.hpp"

using namespace topo;

namespace {
const FiniteTopology kTwoGlued = FiniteTopology::from_opens(3, {0, 3, 7});  // 0 ~ 1, 2 apart
}

TEST_CASE("specialization classes and choice functions") {
  CHECK(specialization_classes(kTwoGlued) == std::vector<Mask>{3, 4});
  CHECK(specialization_classes(FiniteTopology::discrete(3)) == std::vector<Mask>{1, 2, 4});
  CHECK(specialization_classes(FiniteTopology::indiscrete(2)) == std::vector<Mask>{3});

  const auto fs = all_choice_functions(kTwoGlued);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].pick == std::vector<int>{0, 2});
  CHECK(fs[1].pick == std::vector<int>{1, 2});

  CHECK_NOTHROW(choice_from_representatives(kTwoGlued, {1, 2}));
  CHECK_THROWS_AS(choice_from_representatives(kTwoGlued, {2, 2}), topo_error);
  CHECK_THROWS_AS(choice_from_representatives(kTwoGlued, {0}), topo_error);
}

TEST_CASE("attached sober factor of a closed set") {
  const auto t = FiniteTopology::discrete(3);
  const auto f = sober_join_factor(t, 1, 0, 1);
  CHECK(f.opens() == std::vector<Mask>{0, 2, 3, 6, 7});
  CHECK(is_sober(f));
  CHECK(t.strictly_finer_than(f));
  CHECK(f.is_closed(1));
  CHECK(f.point_closure(0) == 1);  // the attachment set is the closure of the inner pick
  CHECK(f.point_closure(1) == 7);  // the outer pick is generic
  CHECK(irreducible_closed_sets(f) == std::vector<Mask>{1, 4, 7});

  CHECK_THROWS_AS(sober_join_factor(kTwoGlued, 4, 2, 0), topo_error);             // not T1
  CHECK_THROWS_AS(sober_join_factor(t, 0, 0, 1), topo_error);                     // empty set
  CHECK_THROWS_AS(sober_join_factor(t, 7, 0, 1), topo_error);                     // full set
  CHECK_THROWS_AS(sober_join_factor(t, 1, 1, 0), topo_error);                     // picks swapped

  // Every valid pick on every proper nonempty closed set of the discrete
  // space matches the closed-family formula and the irreducible list.
  for (int n = 2; n <= 4; ++n) {
    const auto d = FiniteTopology::discrete(n);
    const Mask full = full_mask(n);
    for (Mask a = 1; a < full; ++a)
      for (int in_a = 0; in_a < n; ++in_a) {
        if (!(a >> in_a & 1u)) continue;
        for (int out_a = 0; out_a < n; ++out_a) {
          if (a >> out_a & 1u) continue;
          const auto g = sober_join_factor(d, a, in_a, out_a);
          CHECK(is_sober(g));
          CHECK(d.finer_than(g));
          const Mask pins = (Mask{1} << in_a) | (Mask{1} << out_a);
          FamilyMask closed = FamilyMask{1} << full;
          for (Mask s = 0; s <= full; ++s)
            if (!(s & pins)) {
              closed |= FamilyMask{1} << s;
              closed |= FamilyMask{1} << (s | a);
            }
          CHECK(g.closed_family() == closed);
          std::vector<Mask> irr{a, full};
          for (int x = 0; x < n; ++x)
            if (!(pins >> x & 1u)) irr.push_back(Mask{1} << x);
          canonical_sort(irr);
          CHECK(irreducible_closed_sets(g) == irr);
        }
      }
  }
}

TEST_CASE("discrete topologies decompose as joins of attached factors") {
  for (int n = 0; n <= 4; ++n) {
    const auto d = FiniteTopology::discrete(n);
    const auto fam = t1_join_decomposition(d);
    const std::size_t proper = n < 1 ? 0 : (std::size_t{1} << n) - 2;
    CHECK(fam.size() == std::max<std::size_t>(proper, 1));
    CHECK(join(fam) == d);
    for (const auto& f : fam) CHECK(is_sober(f));
  }
  CHECK(t1_join_decomposition(FiniteTopology::discrete(1)) ==
        std::vector<FiniteTopology>{FiniteTopology::discrete(1)});
  CHECK_THROWS_AS(t1_join_decomposition(kTwoGlued), topo_error);
}

TEST_CASE("choice refinements pin one representative per class") {
  const auto fs = all_choice_functions(kTwoGlued);
  const auto r0 = t0_refinement(kTwoGlued, fs[0]);
  CHECK(r0.opens() == std::vector<Mask>{0, 2, 4, 3, 6, 7});
  const auto r1 = t0_refinement(kTwoGlued, fs[1]);
  CHECK(r1.opens() == std::vector<Mask>{0, 1, 4, 3, 5, 7});

  // Closure law: inside a class everything collapses onto the pick.
  for (int n = 0; n <= 3; ++n)
    for (const auto& t : enumerate_topologies(n))
      for (const auto& f : all_choice_functions(t)) {
        const auto r = t0_refinement(t, f);
        CHECK(is_t0(r));
        CHECK(r.finer_than(t));
        for (std::size_t i = 0; i < f.classes.size(); ++i)
          for (int a = 0; a < n; ++a) {
            if (!(f.classes[i] >> a & 1u)) continue;
            const Mask expect = (Mask{1} << a) | (Mask{1} << f.pick[i]);
            CHECK(r.point_closure(a) == expect);
          }
      }

  // A T0 space has singleton classes, so every point closure collapses and
  // the refinement is discrete on a finite carrier.
  const auto s = FiniteTopology::from_opens(2, {0, 2, 3});
  const auto fs2 = all_choice_functions(s);
  REQUIRE(fs2.size() == 1);
  CHECK(t0_refinement(s, fs2[0]) == FiniteTopology::discrete(2));
}

TEST_CASE("direct sum extensions") {
  const auto sub = FiniteTopology::from_opens(2, {0, 1, 3});  // {0} open
  const auto ext = direct_sum_extension(3, 3, sub);
  CHECK(ext.opens() == std::vector<Mask>{0, 1, 4, 3, 5, 7});
  CHECK(ext.subspace(3) == sub);
  CHECK(is_sober(ext));

  CHECK(direct_sum_extension(2, 3, FiniteTopology::indiscrete(2)) == FiniteTopology::indiscrete(2));
  CHECK(direct_sum_extension(3, 2, FiniteTopology::discrete(1)) == FiniteTopology::discrete(3));
  CHECK_THROWS_AS(direct_sum_extension(3, 3, FiniteTopology::discrete(3)), topo_error);

  // The embedded subspace is closed, and T0/T1/sobriety transfer exactly.
  for (Mask m : {Mask{3}, Mask{5}, Mask{6}})
    for (const auto& mu : enumerate_topologies(2)) {
      const auto e = direct_sum_extension(3, m, mu);
      CHECK(e.is_closed(m));
      CHECK(e.subspace(m) == mu);
      CHECK(is_t0(e) == is_t0(mu));
      CHECK(is_t1(e) == is_t1(mu));
      CHECK(is_sober(e) == is_sober(mu));
    }
}

TEST_CASE("single edge posets and attached pairs") {
  const auto p = single_edge_poset(3, 0, 1);
  CHECK(p.leq(0, 1));
  CHECK(!p.leq(1, 0));
  CHECK(alexandroff_topology(p.relation()).opens() == std::vector<Mask>{0, 2, 4, 3, 6, 7});
  CHECK_THROWS_AS(single_edge_poset(3, 1, 1), topo_error);

  CHECK(attached_pair_extension(3, 1, 0) == alexandroff_topology(p.relation()));

  for (int n = 2; n <= 4; ++n)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        CHECK(is_sober(alexandroff_topology(single_edge_poset(n, a, b).relation())));
      }
}

TEST_CASE("alexandroff meet decompositions") {
  const auto c3 = Poset{Preorder::chain(3)};
  const auto fam = alexandroff_meet_decomposition(c3);
  CHECK(fam.size() == 3);
  CHECK(meet(fam) == alexandroff_topology(c3.relation()));

  const auto anti = alexandroff_meet_decomposition(Poset{Preorder::discrete(2)});
  REQUIRE(anti.size() == 1);
  CHECK(anti[0] == FiniteTopology::discrete(2));
}

TEST_CASE("meet decompositions into sober refinements") {
  const auto di = meet_sober_decomposition(FiniteTopology::indiscrete(2));
  REQUIRE(di.factors.size() == 2);
  CHECK(di.factors[0] == FiniteTopology::from_opens(2, {0, 1, 3}));
  CHECK(di.factors[1] == FiniteTopology::from_opens(2, {0, 2, 3}));
  CHECK(meet(di.factors) == FiniteTopology::indiscrete(2));

  const auto ds = meet_sober_decomposition(FiniteTopology::discrete(2));
  REQUIRE(ds.factors.size() == 1);
  CHECK(ds.factors[0] == FiniteTopology::discrete(2));
  CHECK(ds.pair_stage_needed.empty());

  // The glued example needs both choice refinements, and its stage-one meet
  // overshoots (so the pair stage is genuinely required).
  const auto dg = meet_sober_decomposition(kTwoGlued);
  const auto fs = all_choice_functions(kTwoGlued);
  REQUIRE(dg.refinement_factors.size() == 2);
  CHECK(dg.refinement_factors[0] == t0_refinement(kTwoGlued, fs[0]));
  CHECK(dg.refinement_factors[1] == t0_refinement(kTwoGlued, fs[1]));
  CHECK(!dg.pair_stage_needed.empty());
  CHECK(meet(dg.factors) == kTwoGlued);

  for (int n = 0; n <= 3; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      const auto d = meet_sober_decomposition(t);
      CHECK(meet(d.factors) == t);
      for (const auto& f : d.factors) {
        CHECK(is_sober(f));
        CHECK(f.finer_than(t));
      }
      if (is_t0(t)) {
        CHECK(d.factors.size() == 1);
        CHECK(d.pair_stage_needed.empty());
      }
    }
}

TEST_CASE("link pair coarsening") {
  const auto d2 = FiniteTopology::discrete(2);
  const auto s = link_pair_coarsening(d2, {0, 1});
  CHECK(s.opens() == std::vector<Mask>{0, 1, 3});
  CHECK(s.point_closure(0) == 3);
  CHECK(s.point_closure(1) == 2);

  const auto d3 = FiniteTopology::discrete(3);
  const auto s3 = link_pair_coarsening(d3, {0, 1});
  CHECK(s3.opens() == std::vector<Mask>{0, 1, 4, 3, 5, 7});
  CHECK(s3.point_closure(1) == 2);
  CHECK(s3.point_closure(0) == 3);

  CHECK_THROWS_AS(link_pair_coarsening(FiniteTopology::indiscrete(2), {0, 1}), topo_error);
  CHECK_THROWS_AS(link_pair_coarsening(FiniteTopology::from_opens(2, {0, 2, 3}), {0, 1}), topo_error);
}

TEST_CASE("minimal sober certificates") {
  const auto chain3 = alexandroff_topology(Preorder::chain(3));
  CHECK(minimal_sober_certificate(chain3).minimal);
  CHECK(minimal_sober_certificate(FiniteTopology::from_opens(2, {0, 2, 3})).minimal);

  const auto c = minimal_sober_certificate(FiniteTopology::discrete(2));
  CHECK(!c.minimal);
  REQUIRE(c.witness_pair.has_value());
  CHECK(c.witness_pair->x == 0);
  CHECK(c.witness_pair->y == 1);
  REQUIRE(c.coarser_sober.has_value());
  CHECK(*c.coarser_sober == FiniteTopology::from_opens(2, {0, 1, 3}));

  CHECK_THROWS_AS(minimal_sober_certificate(FiniteTopology::indiscrete(2)), topo_error);

  // Certificates agree with the minimal class membership.
  const auto mins = minimal_in_class(3, Property::Sober);
  for (const auto& t : enumerate_topologies(3, Property::Sober)) {
    const bool in_class = std::any_of(mins.begin(), mins.end(),
                                      [&](const FiniteTopology& m) { return m == t; });
    CHECK(minimal_sober_certificate(t).minimal == in_class);
  }
}
