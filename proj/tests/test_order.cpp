#include <doctest.h>

#include <vector>

#include "toposcope/lattice.hpp"
#include "toposcope/order.hpp"

using namespace topo;

TEST_CASE("alexandroff topology of chains and antichains") {
  CHECK(alexandroff_topology(Preorder::chain(2)).opens() == std::vector<Mask>{0, 2, 3});
  CHECK(alexandroff_topology(Preorder::discrete(2)) == FiniteTopology::discrete(2));
  CHECK(alexandroff_topology(Preorder::chain(3)).opens() == std::vector<Mask>{0, 4, 6, 7});
}

TEST_CASE("scott topology matches the up-set topology on finite posets") {
  const Poset c3{Preorder::chain(3)};
  CHECK(scott_topology(c3).opens() == std::vector<Mask>{0, 4, 6, 7});
  CHECK(scott_topology(Poset{Preorder::discrete(3)}) == FiniteTopology::discrete(3));
  // The Scott construction is quantified over directed subsets; its collapse
  // onto the Alexandroff topology is the cross-implementation oracle.
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n))
      CHECK(scott_topology(p) == alexandroff_topology(p.relation()));
}

TEST_CASE("upper topology") {
  const Poset c3{Preorder::chain(3)};
  CHECK(upper_topology(c3).opens() == std::vector<Mask>{0, 4, 6, 7});
  CHECK(upper_topology(Poset{Preorder::discrete(2)}) == FiniteTopology::discrete(2));
  // On chains the upper and Scott topologies coincide; on general posets the
  // upper topology can only be coarser.
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      CHECK(scott_topology(p).finer_than(upper_topology(p)));
      if (is_chain(p)) CHECK(upper_topology(p) == scott_topology(p));
    }
}

TEST_CASE("order predicates") {
  CHECK(is_chain(Poset{Preorder::chain(3)}));
  CHECK(!is_chain(Poset{Preorder::discrete(2)}));
  CHECK(way_below(Poset{Preorder::chain(2)}, 0, 1));

  for (int n = 0; n <= 3; ++n)
    for (const auto& p : enumerate_posets(n)) {
      if (n > 0) CHECK(is_dcpo(p));
      CHECK(is_domain(p) == is_dcpo(p));
      // way-below collapses to the order itself on finite posets.
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) CHECK(way_below(p, x, y) == p.leq(x, y));
    }

  CHECK(is_sup_complete(Poset{Preorder::chain(4)}));
  CHECK(!is_sup_complete(Poset{Preorder::discrete(2)}));
}

TEST_CASE("directed subsets and sups") {
  const Poset c3{Preorder::chain(3)};
  CHECK(is_directed(c3.relation(), 0b111));
  CHECK(!is_directed(c3.relation(), 0));
  CHECK(!is_directed(Preorder::discrete(2), 0b11));
  CHECK(sup_of(c3, 0b011) == 1);
  CHECK(sup_of(c3, 0) == 0);  // empty set: least element
  CHECK(!sup_of(Poset{Preorder::discrete(2)}, 0b11).has_value());
}

TEST_CASE("round trips between preorders and topologies") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& p : enumerate_preorders(n))
      CHECK(alexandroff_topology(p).specialization() == p);
    // Finite topologies are exactly the up-set topologies of their
    // specialization preorders.
    for (const auto& t : enumerate_topologies(n))
      CHECK(alexandroff_topology(t.specialization()) == t);
    for (const auto& p : enumerate_posets(n))
      CHECK(scott_topology(p).specialization() == p.relation());
  }
}

TEST_CASE("alexandroff closed irreducible sets are directed lower sets") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      const auto t = alexandroff_topology(p.relation());
      CHECK(is_td(t));
      FamilyMask irr = 0;
      for (Mask c : irreducible_closed_sets(t)) irr |= FamilyMask{1} << c;
      FamilyMask expected = 0;
      for (Mask a = 1; a <= full_mask(n); ++a) {
        Mask lower = 0;
        for (int x = 0; x < n; ++x)
          if (a >> x & 1u) lower |= p.down_set(x);
        if (lower == a && is_directed(p.relation(), a)) expected |= FamilyMask{1} << a;
      }
      CHECK(irr == expected);
    }
}

TEST_CASE("enumeration counts") {
  const std::vector<std::size_t> preorder_counts = {1, 1, 4, 29, 355};
  const std::vector<std::size_t> poset_counts = {1, 1, 3, 19, 219};
  for (int n = 0; n <= 4; ++n) {
    CHECK(enumerate_preorders(n).size() == preorder_counts[n]);
    CHECK(enumerate_posets(n).size() == poset_counts[n]);
  }
  CHECK_THROWS_AS(enumerate_preorders(6), topo_error);
  // The stream is strictly increasing in the bit encoding.
  const auto ps = enumerate_preorders(3);
  for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1].encode() < ps[i].encode());
}

TEST_CASE("preorder validation") {
  CHECK_THROWS_AS(Preorder(2, {1, 1}), topo_error);           // not reflexive at 1
  CHECK_THROWS_AS(Preorder(3, {3, 6, 4}), topo_error);        // 0<=1<=2 but not 0<=2
  CHECK_NOTHROW(Preorder(3, {7, 6, 4}));
  CHECK_THROWS_AS(Poset{Preorder(2, {3, 3})}, topo_error);    // not antisymmetric
}
