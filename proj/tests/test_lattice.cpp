#include <doctest.h>

#include <vector>

#include "toposcope/lattice.hpp"
#include "toposcope/order.hpp"

using namespace topo;

namespace {
const FiniteTopology kS01 = FiniteTopology::from_opens(2, {0, 2, 3});
const FiniteTopology kS10 = FiniteTopology::from_opens(2, {0, 1, 3});
}  // namespace

TEST_CASE("meet and join basics") {
  CHECK(meet({kS01, kS10}) == FiniteTopology::indiscrete(2));
  CHECK(join({kS01, kS10}) == FiniteTopology::discrete(2));
  CHECK(meet({kS01}) == kS01);
  CHECK(join({kS01, FiniteTopology::indiscrete(2)}) == kS01);

  // Meet of all T0 topologies on two points is indiscrete.
  std::vector<FiniteTopology> t0s;
  for (const auto& t : enumerate_topologies(2, Property::T0)) t0s.push_back(t);
  CHECK(t0s.size() == 3);
  CHECK(meet(t0s) == FiniteTopology::indiscrete(2));

  CHECK_THROWS_AS(meet({}), topo_error);
  CHECK_THROWS_AS(join({}), topo_error);
  CHECK_THROWS_AS(meet({kS01, FiniteTopology::discrete(3)}), topo_error);
}

TEST_CASE("join is the least upper bound") {
  const auto all = enumerate_topologies(3);
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto j = join({a, b});
      CHECK(j.finer_than(a));
      CHECK(j.finer_than(b));
      for (const auto& c : all)
        if (c.finer_than(a) && c.finer_than(b)) CHECK(c.finer_than(j));
      const auto m = meet({a, b});
      CHECK(a.finer_than(m));
      CHECK(b.finer_than(m));
      for (const auto& c : all)
        if (a.finer_than(c) && b.finer_than(c)) CHECK(m.finer_than(c));
    }
}

TEST_CASE("lattice laws by exhaustion on three points") {
  const auto all = enumerate_topologies(3);
  const auto bot = FiniteTopology::indiscrete(3);
  const auto top = FiniteTopology::discrete(3);
  for (const auto& a : all) {
    CHECK(meet({a, bot}) == bot);
    CHECK(join({a, top}) == top);
    for (const auto& b : all) {
      CHECK(meet({a, b}) == meet({b, a}));
      CHECK(join({a, b}) == join({b, a}));
      CHECK(meet({a, join({a, b})}) == a);
      CHECK(join({a, meet({a, b})}) == a);
    }
  }
  // Associativity on a deterministic sample of triples.
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 4)
      for (std::size_t k = 0; k < all.size(); k += 5) {
        const auto &a = all[i], &b = all[j], &c = all[k];
        CHECK(join({a, join({b, c})}) == join({join({a, b}), c}));
        CHECK(meet({a, meet({b, c})}) == meet({meet({a, b}), c}));
      }
}

TEST_CASE("enumeration counts and canonical order") {
  const std::vector<std::size_t> counts = {1, 1, 4, 29, 355};
  for (int n = 0; n <= 4; ++n) CHECK(enumerate_topologies(n).size() == counts[n]);
  CHECK(enumerate_topologies(3, Property::T0).size() == 19);
  CHECK(count_topologies(3) == 29);
  CHECK(count_topologies(3, Property::T0) == 19);
  CHECK_THROWS_AS(enumerate_topologies(6), topo_error);

  const auto ts = enumerate_topologies(3);
  for (std::size_t i = 1; i < ts.size(); ++i)
    CHECK(ts[i - 1].specialization().encode() < ts[i].specialization().encode());
}

TEST_CASE("minimal members of property classes") {
  const auto min2 = minimal_in_class(2, Property::Sober);
  REQUIRE(min2.size() == 2);
  CHECK(min2[0] == kS10);
  CHECK(min2[1] == kS01);

  const auto min3 = minimal_in_class(3, Property::Sober);
  CHECK(min3.size() == 6);
  for (const auto& t : min3) CHECK(is_chain(Poset{t.specialization()}));

  for (Property p : {Property::DSpace, Property::WellFiltered, Property::T0}) {
    const auto other = minimal_in_class(3, p);
    REQUIRE(other.size() == min3.size());
    for (std::size_t i = 0; i < other.size(); ++i) CHECK(other[i] == min3[i]);
  }
}

TEST_CASE("strong irreducibility") {
  CHECK(strongly_irreducible(FiniteTopology::indiscrete(2)));
  CHECK(strongly_irreducible(FiniteTopology::indiscrete(3)));
  CHECK(!strongly_irreducible(FiniteTopology::discrete(2)));
  CHECK(strongly_irreducible(kS01));

  // Audit of the pair reduction: joins of families never exceed what joins of
  // pairs of strictly coarser members reach. Full exhaustion at n=2, families
  // of size <= 3 at n=3.
  const auto all2 = enumerate_topologies(2);
  for (const auto& t : all2) {
    std::vector<FiniteTopology> down;
    for (const auto& u : all2)
      if (t.strictly_finer_than(u)) down.push_back(u);
    bool family_hit = false;
    for (std::uint32_t pick = 1; pick < (1u << down.size()); ++pick) {
      std::vector<FiniteTopology> fam;
      for (std::size_t i = 0; i < down.size(); ++i)
        if (pick >> i & 1u) fam.push_back(down[i]);
      if (join(fam) == t) family_hit = true;
    }
    CHECK(strongly_irreducible(t) == !family_hit);
  }
  const auto all3 = enumerate_topologies(3);
  for (const auto& t : all3) {
    std::vector<FiniteTopology> down;
    for (const auto& u : all3)
      if (t.strictly_finer_than(u)) down.push_back(u);
    bool triple_hit = false;
    for (std::size_t i = 0; i < down.size() && !triple_hit; ++i)
      for (std::size_t j = i; j < down.size() && !triple_hit; ++j)
        for (std::size_t k = j; k < down.size() && !triple_hit; ++k)
          if (join({down[i], down[j], down[k]}) == t) triple_hit = true;
    CHECK(strongly_irreducible(t) == !triple_hit);
  }
}

TEST_CASE("sober join width") {
  CHECK(sober_join_width(kS01) == 1u);
  CHECK(!sober_join_width(FiniteTopology::indiscrete(2)).has_value());
  for (const auto& t : enumerate_topologies(3))
    CHECK(sober_join_width(t).has_value() == is_t0(t));
}

TEST_CASE("irreducible closed sets under joins") {
  // T0 topologies have exactly one irreducible closed set per point.
  for (int n = 0; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n, Property::T0))
      CHECK(irreducible_closed_sets(t).size() == static_cast<std::size_t>(n));

  // Joins of sober topologies stay sober, and each irreducible closed set of
  // the join is the intersection of its closures in the factors.
  const auto all = enumerate_topologies(3);
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto j = join({a, b});
      if (is_sober(a) && is_sober(b)) CHECK(is_sober(j));
      for (Mask c : irreducible_closed_sets(j)) CHECK((a.closure(c) & b.closure(c)) == c);
    }
}
