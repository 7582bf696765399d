#include "toposcope/suites.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "toposcope/constructions.hpp"
#include "toposcope/lattice.hpp"
#include "toposcope/order.hpp"
#include "toposcope/symnat.hpp"

namespace topo {

void SuiteParams::set(const std::string& key, const std::string& value) { kv_[key] = value; }

bool SuiteParams::has(const std::string& key) const { return kv_.count(key) != 0; }

int SuiteParams::get_int(const std::string& key, int fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    fail(errc::bad_param, "parameter " + key + "=" + it->second + " is not an integer");
  }
}

std::uint64_t SuiteParams::get_u64(const std::string& key, std::uint64_t fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    fail(errc::bad_param, "parameter " + key + "=" + it->second + " is not a nonnegative integer");
  }
}

int effective_ground_cap() {
  const char* env = std::getenv("TOPOSCOPE_MAX_N");
  if (!env || !*env) return 4;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return std::clamp(v, 1, kMaxGround);
  } catch (const std::exception&) {
    fail(errc::bad_param, std::string("TOPOSCOPE_MAX_N=") + env + " is not an integer");
  }
}

namespace {

bool skip_if_large(VerificationReport& r, int requested, int hard_limit) {
  const int cap = std::min(effective_ground_cap(), hard_limit);
  if (requested <= cap) return false;
  r.verdict = Verdict::Skip;
  r.add("skipped: ground size " + std::to_string(requested) + " exceeds the effective cap " +
            std::to_string(cap) + " (TOPOSCOPE_MAX_N, hard limit " + std::to_string(hard_limit) + ")",
        0);
  return true;
}

std::string flag(bool b) { return b ? "1" : "0"; }

// ---------------------------------------------------------------------------
// enum-cross: three independent enumerations against the pinned counts.

constexpr std::array<std::uint64_t, 6> kTopologyCounts = {1, 1, 4, 29, 355, 6942};
constexpr std::array<std::uint64_t, 6> kT0Counts = {1, 1, 3, 19, 219, 4231};

VerificationReport suite_enum_cross(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "enum-cross";
  const int n = params.get_int("n", 5);
  r.set_param("n", std::to_string(n));
  if (skip_if_large(r, n, 5)) return r;
  std::uint64_t seen = 0, t0_seen = 0, direct_seen = 0;
  std::optional<std::string> ce, t0_ce, direct_ce;
  for (int k = 0; k <= n; ++k) {
    const auto by_preorder = enumerate_topologies(k);
    const auto by_closure = enumerate_topologies_by_closure(k);
    std::vector<FamilyMask> a, b;
    for (const auto& t : by_preorder) a.push_back(t.open_family());
    for (const auto& t : by_closure) b.push_back(t.open_family());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    seen += a.size();
    if (a != b || a.size() != kTopologyCounts[k])
      ce = "n=" + std::to_string(k) + ": preorder=" + std::to_string(a.size()) +
           " closure=" + std::to_string(b.size()) + " expected=" + std::to_string(kTopologyCounts[k]);
    std::uint64_t t0 = 0;
    for (const auto& t : by_preorder) t0 += is_t0(t);
    t0_seen += t0;
    if (t0 != kT0Counts[k])
      t0_ce = "n=" + std::to_string(k) + ": t0=" + std::to_string(t0) + " expected=" + std::to_string(kT0Counts[k]);
    if (k <= 4) {
      std::vector<FamilyMask> c;
      for (const auto& t : enumerate_topologies_direct(k)) c.push_back(t.open_family());
      std::sort(c.begin(), c.end());
      direct_seen += c.size();
      if (c != a)
        direct_ce = "n=" + std::to_string(k) + ": direct=" + std::to_string(c.size()) +
                    " preorder=" + std::to_string(a.size());
    }
  }
  r.add("preorder and closure-search enumerations agree and match the pinned counts 1,1,4,29,355,6942", seen, ce);
  r.add("T0 counts match the pinned 1,1,3,19,219,4231", t0_seen, t0_ce);
  r.add("direct family filter agrees on every ground size it covers", direct_seen, direct_ce);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// sobriety-collapse: T0, sober, d-space and well-filtered coincide.

VerificationReport suite_sobriety_collapse(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "sobriety-collapse";
  const int max_n = params.get_int("max-n", 4);
  r.set_param("max-n", std::to_string(max_n));
  if (skip_if_large(r, max_n, 5)) return r;
  std::uint64_t seen = 0;
  std::optional<std::string> ce;
  for (int k = 0; k <= max_n; ++k)
    for (const auto& t : enumerate_topologies(k)) {
      const bool t0 = is_t0(t), sober = is_sober(t), d = is_d_space(t), wf = is_well_filtered(t);
      ++seen;
      if (t0 != sober || sober != d || d != wf)
        if (!ce)
          ce = "n=" + std::to_string(k) + " " + t.encode() + " t0=" + flag(t0) + " sober=" + flag(sober) +
               " d=" + flag(d) + " wf=" + flag(wf);
    }
  r.add("T0, sobriety, d-space and well-filteredness coincide on every finite topology", seen, ce);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// t1-join: the discrete topology is the join of its attached sober factors.

VerificationReport suite_t1_join(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "t1-join";
  const int n = params.get_int("n", 3);
  r.set_param("n", std::to_string(n));
  if (skip_if_large(r, n, kMaxGround)) return r;
  const FiniteTopology t = FiniteTopology::discrete(n);
  const auto factors = t1_join_decomposition(t);
  std::uint64_t checked = 0;
  std::optional<std::string> sober_ce, shape_ce, irr_ce;
  const Mask full = full_mask(n);
  std::vector<Mask> proper_closed;
  for (Mask a : t.closed_sets())
    if (a != 0 && a != full) proper_closed.push_back(a);
  for (const auto& f : factors) {
    ++checked;
    if (!is_sober(f) || !t.finer_than(f))
      if (!sober_ce) sober_ce = f.encode();
  }
  // Re-derive each factor's closed family and irreducible closed sets from
  // the attachment data and compare exactly. Factors follow the canonical
  // closed-set order of the decomposition.
  for (std::size_t idx = 0; idx < proper_closed.size(); ++idx) {
    const Mask a = proper_closed[idx];
    const int in_a = std::countr_zero(a);
    const int out_a = std::countr_zero(full & ~a);
    const Mask pins = (Mask{1} << in_a) | (Mask{1} << out_a);
    FamilyMask expect_closed = FamilyMask{1} << full;
    for (Mask s = 0; s <= full; ++s)
      if ((s & pins) == 0) {
        expect_closed |= FamilyMask{1} << s;
        expect_closed |= FamilyMask{1} << (s | a);
      }
    const auto& f = factors[idx];
    if (f.closed_family() != expect_closed)
      if (!shape_ce) shape_ce = "A=" + set_to_string(a) + " got=" + f.encode();
    std::vector<Mask> expect_irr{a, full};
    for (int x = 0; x < n; ++x)
      if (!(pins >> x & 1u)) expect_irr.push_back(Mask{1} << x);
    canonical_sort(expect_irr);
    if (irreducible_closed_sets(f) != expect_irr)
      if (!irr_ce) irr_ce = "A=" + set_to_string(a);
    ++checked;
  }
  const bool join_ok = join(factors) == t;
  const bool count_ok = proper_closed.empty() ? factors.size() == 1 : factors.size() == proper_closed.size();
  r.add("every attached factor is sober and coarser than the discrete topology", factors.size(), sober_ce);
  r.add("factor closed families match the attachment formula", checked,
        shape_ce ? shape_ce : (count_ok ? std::nullopt : std::optional<std::string>("factor count mismatch")));
  r.add("factor irreducible closed sets are the off-pin singletons plus the attachment set and the carrier",
        checked, irr_ce);
  r.add("the join of the factors is the discrete topology", 1,
        join_ok ? std::nullopt : std::optional<std::string>("join mismatch at n=" + std::to_string(n)));
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// meet-sober: every topology is the meet of its sober refinements.

VerificationReport suite_meet_sober(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "meet-sober";
  const int max_n = params.get_int("max-n", 4);
  r.set_param("max-n", std::to_string(max_n));
  if (skip_if_large(r, max_n, 4)) return r;
  std::uint64_t seen = 0, pair_needed = 0, t0_seen = 0;
  std::optional<std::string> ce, fallback_ce, t0_ce;
  for (int k = 0; k <= max_n; ++k) {
    const auto all = enumerate_topologies(k);
    for (const auto& t : all) {
      ++seen;
      const auto d = meet_sober_decomposition(t);
      bool ok = meet(d.factors) == t;
      for (const auto& f : d.factors)
        if (!is_sober(f) || !f.finer_than(t)) ok = false;
      if (!ok && !ce) ce = "n=" + std::to_string(k) + " " + t.encode();
      if (!d.pair_stage_needed.empty()) ++pair_needed;
      if (is_t0(t)) {
        ++t0_seen;
        if (d.factors.size() != 1 || d.factors[0] != t)
          if (!t0_ce) t0_ce = t.encode();
      }
      // Enumeration fallback: the meet of all sober refinements.
      std::vector<FiniteTopology> sober_refinements;
      for (const auto& mu : all)
        if (mu.finer_than(t) && is_sober(mu)) sober_refinements.push_back(mu);
      if (meet(sober_refinements) != t)
        if (!fallback_ce) fallback_ce = "n=" + std::to_string(k) + " " + t.encode();
    }
  }
  r.add("constructed sober refinements meet to the input topology", seen, ce);
  r.add("the meet of all sober refinements is the input topology", seen, fallback_ce);
  r.add("T0 inputs decompose as themselves", t0_seen, t0_ce);
  r.add("inputs whose refinement stage misses some non-closed set (pair stage required)", pair_needed);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// alexandroff-meet: up-set topologies are meets of single-edge factors.

VerificationReport suite_alexandroff_meet(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "alexandroff-meet";
  const int max_n = params.get_int("max-n", 4);
  r.set_param("max-n", std::to_string(max_n));
  if (skip_if_large(r, max_n, 5)) return r;
  std::uint64_t posets = 0, factors_seen = 0;
  std::optional<std::string> ce, sober_ce;
  for (int k = 0; k <= max_n; ++k)
    for (const auto& p : enumerate_posets(k)) {
      ++posets;
      const auto factors = alexandroff_meet_decomposition(p);
      factors_seen += factors.size();
      if (meet(factors) != alexandroff_topology(p.relation()))
        if (!ce) ce = "poset encode=" + std::to_string(p.relation().encode());
      for (const auto& f : factors)
        if (!is_sober(f))
          if (!sober_ce) sober_ce = f.encode();
    }
  r.add("single-edge factors meet to the up-set topology of the poset", posets, ce);
  r.add("every single-edge factor is sober", factors_seen, sober_ce);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// upper-sets: properties that climb the lattice, and joins above a common
// sober bound.

VerificationReport suite_upper_sets(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "upper-sets";
  const int max_n = params.get_int("max-n", 4);
  r.set_param("max-n", std::to_string(max_n));
  if (skip_if_large(r, max_n, 4)) return r;
  std::uint64_t pairs = 0, join_pairs = 0, triples = 0;
  std::optional<std::string> td_ce, t1s_ce, tds_ce, join_ce, triple_ce;
  for (int k = 0; k <= max_n; ++k) {
    const auto ts = enumerate_topologies(k);
    const std::size_t m = ts.size();
    std::vector<bool> td(m), t1(m), sober(m);
    for (std::size_t i = 0; i < m; ++i) {
      td[i] = is_td(ts[i]);
      t1[i] = is_t1(ts[i]);
      sober[i] = is_sober(ts[i]);
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (!ts[j].finer_than(ts[i])) continue;
        ++pairs;
        if (td[i] && !td[j])
          if (!td_ce) td_ce = ts[i].encode() + " < " + ts[j].encode();
        if (t1[i] && sober[i] && !(t1[j] && sober[j]))
          if (!t1s_ce) t1s_ce = ts[i].encode() + " < " + ts[j].encode();
        if (td[i] && sober[i] && !sober[j])
          if (!tds_ce) tds_ce = ts[i].encode() + " < " + ts[j].encode();
      }
    // Pairs dominating a common sober topology have a sober join.
    std::vector<std::vector<bool>> qualifies(m, std::vector<bool>(m, false));
    for (std::size_t b = 0; b < m; ++b) {
      if (!sober[b]) continue;
      std::vector<std::size_t> above;
      for (std::size_t i = 0; i < m; ++i)
        if (ts[i].finer_than(ts[b])) above.push_back(i);
      for (std::size_t i : above)
        for (std::size_t j : above)
          if (sober[i] && sober[j]) qualifies[i][j] = true;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        if (!qualifies[i][j]) continue;
        ++join_pairs;
        if (!is_sober(join({ts[i], ts[j]})))
          if (!join_ce) join_ce = ts[i].encode() + " v " + ts[j].encode();
      }
    if (k == 3) {
      // Explicit triple sweep at n=3: bound, then the two joinands.
      for (std::size_t b = 0; b < m; ++b) {
        if (!sober[b]) continue;
        for (std::size_t i = 0; i < m; ++i) {
          if (!sober[i] || !ts[i].finer_than(ts[b])) continue;
          for (std::size_t j = 0; j < m; ++j) {
            if (!sober[j] || !ts[j].finer_than(ts[b])) continue;
            ++triples;
            if (!is_sober(join({ts[i], ts[j]})))
              if (!triple_ce) triple_ce = ts[b].encode() + " <= " + ts[i].encode() + "," + ts[j].encode();
          }
        }
      }
    }
  }
  r.add("the TD property ascends to finer topologies", pairs, td_ce);
  r.add("T1 plus sober ascends to finer topologies", pairs, t1s_ce);
  r.add("TD plus sober forces sobriety of every finer topology", pairs, tds_ce);
  r.add("sober pairs above a common sober topology have a sober join", join_pairs, join_ce);
  r.add("explicit (bound, pair) triples at n=3 have sober joins", triples, triple_ce);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// link-coarsening: the noncomparable-pair coarsening and its closure/order laws.

VerificationReport suite_link_coarsening(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "link-coarsening";
  const int max_n = params.get_int("max-n", 4);
  r.set_param("max-n", std::to_string(max_n));
  if (skip_if_large(r, max_n, 4)) return r;
  std::uint64_t coarsenings = 0;
  std::optional<std::string> strict_ce, props_ce, closure_ce, order_ce;
  for (int k = 2; k <= max_n; ++k)
    for (const auto& t : enumerate_topologies(k, Property::T0)) {
      const Preorder o = t.specialization();
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
          if (x == y || o.leq(x, y) || o.leq(y, x)) continue;
          ++coarsenings;
          const FiniteTopology s = link_pair_coarsening(t, {x, y});
          if (!t.strictly_finer_than(s))
            if (!strict_ce) strict_ce = t.encode() + " xy=" + std::to_string(x) + "," + std::to_string(y);
          if (!is_t0(s) || !is_sober(s) || !is_d_space(s) || !is_well_filtered(s))
            if (!props_ce) props_ce = s.encode();
          const Mask cly = t.point_closure(y);
          for (int a = 0; a < k; ++a) {
            const Mask cla = t.point_closure(a);
            const Mask want = (cla >> x & 1u) ? (cla | cly) : cla;
            if (s.point_closure(a) != want)
              if (!closure_ce)
                closure_ce = t.encode() + " xy=" + std::to_string(x) + "," + std::to_string(y) +
                             " a=" + std::to_string(a);
          }
          const Preorder so = s.specialization();
          for (int u = 0; u < k; ++u)
            for (int v = 0; v < k; ++v) {
              const bool want = o.leq(u, v) || (o.leq(u, y) && o.leq(x, v));
              if (so.leq(u, v) != want)
                if (!order_ce)
                  order_ce = t.encode() + " xy=" + std::to_string(x) + "," + std::to_string(y) +
                             " uv=" + std::to_string(u) + "," + std::to_string(v);
            }
        }
    }
  r.add("the coarsening is strictly coarser and stays T0, sober, d-space and well-filtered",
        coarsenings, strict_ce ? strict_ce : props_ce);
  r.add("pointwise closure law: closures absorb the linked point exactly when they contain x",
        coarsenings, closure_ce);
  r.add("specialization law: the new order adds exactly the pairs below-y cross above-x",
        coarsenings, order_ce);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// minimal-sober: the minimal members of the sober class are the chains.

VerificationReport suite_minimal_sober(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "minimal-sober";
  const int n = params.get_int("n", 3);
  r.set_param("n", std::to_string(n));
  if (skip_if_large(r, n, 4)) return r;
  const auto ms = minimal_in_class(n, Property::Sober);
  std::uint64_t factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  // Expected: the up-set topology of every total order on n points.
  std::set<FamilyMask> expected;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    std::vector<Mask> up(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) up[perm[i]] |= Mask{1} << perm[j];
    expected.insert(alexandroff_topology(Preorder(n, up)).open_family());
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<FamilyMask> got;
  for (const auto& t : ms) got.insert(t.open_family());
  const bool chains_ok = got == expected && ms.size() == (n == 0 ? 1 : factorial);
  r.add("the minimal sober topologies are exactly the up-set topologies of the total orders",
        ms.size(), chains_ok ? std::nullopt : std::optional<std::string>("minimal class mismatch at n=" + std::to_string(n)));
  std::optional<std::string> class_ce;
  for (Property p : {Property::DSpace, Property::WellFiltered, Property::T0}) {
    std::set<FamilyMask> other;
    for (const auto& t : minimal_in_class(n, p)) other.insert(t.open_family());
    if (other != got)
      if (!class_ce) class_ce = std::string("class ") + property_name(p);
  }
  r.add("minimal sober, minimal d-space, minimal well-filtered and minimal T0 classes coincide", 4, class_ce);
  // Certificates agree with membership, and rejected spaces come with a
  // verified strictly coarser sober witness.
  std::uint64_t certs = 0;
  std::optional<std::string> cert_ce;
  for (const auto& t : enumerate_topologies(n, Property::Sober)) {
    ++certs;
    const auto c = minimal_sober_certificate(t);
    const bool in_class = got.count(t.open_family()) != 0;
    bool ok = c.minimal == in_class;
    if (!c.minimal) {
      ok = ok && c.witness_pair.has_value() && c.coarser_sober.has_value();
      if (ok) ok = t.strictly_finer_than(*c.coarser_sober) && is_sober(*c.coarser_sober);
    }
    if (!ok && !cert_ce) cert_ce = t.encode();
  }
  r.add("minimality certificates match the sweep and carry verified witnesses", certs, cert_ce);
  // Soberification maps minimal T0 spaces onto minimal sober spaces.
  std::uint64_t lifted = 0;
  std::optional<std::string> lift_ce;
  for (const auto& t : minimal_in_class(n, Property::T0)) {
    ++lifted;
    const auto s = soberify(t);
    if (!minimal_sober_certificate(s.space).minimal)
      if (!lift_ce) lift_ce = t.encode();
  }
  r.add("soberification carries minimal T0 spaces to minimal sober spaces", lifted, lift_ce);
  // On every finite chain the upper and Scott topologies coincide.
  std::uint64_t chains = 0;
  std::optional<std::string> chain_ce;
  for (int k = 0; k <= 5; ++k) {
    std::vector<int> cp(k);
    for (int i = 0; i < k; ++i) cp[i] = i;
    do {
      std::vector<Mask> up(k);
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) up[cp[i]] |= Mask{1} << cp[j];
      const Poset chain{Preorder(k, up)};
      ++chains;
      if (upper_topology(chain) != scott_topology(chain))
        if (!chain_ce) chain_ce = "chain encode=" + std::to_string(chain.relation().encode());
    } while (std::next_permutation(cp.begin(), cp.end()));
  }
  r.add("upper and Scott topologies coincide on every chain with at most 5 points", chains, chain_ce);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// cofinite-join: the cofinite topology splits into two pinned sober factors.

VerificationReport suite_cofinite_join(const SuiteParams&) {
  VerificationReport r;
  r.suite = "cofinite-join";
  r.set_param("carrier", "{1,2,3,...}");
  const UPSet carrier = positive_integers();
  const std::vector<std::vector<std::uint64_t>> gaps = {
      {1}, {3}, {1, 2}, {5, 17}, {2, 9, 40}, {}, {1, 2, 3, 4, 5}};
  std::uint64_t witnesses = 0;
  std::optional<std::string> ce;
  for (const auto& g : gaps) {
    const UPSet u = carrier - UPSet::finite_set(g);
    const auto w = cofinite_join_witness(u, carrier);
    ++witnesses;
    const bool ok = pinned_cofinite_open(w.v1, 1, carrier) && pinned_cofinite_open(w.v2, 2, carrier) &&
                    (w.v1 & w.v2) == u;
    if (!ok && !ce) ce = u.to_string();
  }
  // Pinned example: removing the pin itself makes the first factor the whole
  // carrier and leaves the open as the second factor.
  const UPSet u1 = carrier - UPSet::singleton(1);
  const auto w1 = cofinite_join_witness(u1, carrier);
  const bool example_ok = w1.v1 == carrier && w1.v2 == u1;
  r.add("cofinite opens split as intersections of pinned-cofinite opens", witnesses, ce);
  r.add("removing pin 1 yields factors (carrier, open)", 1,
        example_ok ? std::nullopt : std::optional<std::string>(w1.v1.to_string() + " / " + w1.v2.to_string()));
  const auto cert = cofinite_not_sober_certificate();
  r.add("cofinite topology: T1, carrier irreducible closed, no generic point (so not sober)",
        cert.samples,
        cert.all_ok() ? std::nullopt
                      : std::optional<std::string>(
                            "t1=" + flag(cert.singletons_closed) + " irr=" + flag(cert.carrier_irreducible) +
                            " fin=" + flag(cert.union_of_two_finite_finite) + " gen=" + flag(cert.no_generic_point) +
                            " sob=" + flag(cert.pinned_factors_sober) + " join=" + flag(cert.join_recovers_cofinite)));
  r.add("sober join width of the cofinite topology is exactly 2 (not 1: not sober; at most 2: the pinned split)",
        1, (cert.all_ok() && !ce) ? std::nullopt : std::optional<std::string>("width argument incomplete"));
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// crt-chain: Hausdorff separations, CRT witnesses and re-based intersections
// in the prime-residue chain topologies.

VerificationReport suite_crt_chain(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "crt-chain";
  const int max_index = params.get_int("max-index", 4);
  const int max_point = params.get_int("max-point", 20);
  r.set_param("max-index", std::to_string(max_index));
  r.set_param("max-point", std::to_string(max_point));
  r.set_param("carrier", "{0,1,2,...}");
  if (max_index < 1 || max_point < 1) fail(errc::bad_param, "max-index and max-point must be positive");

  // Hausdorff separations in every stage.
  std::uint64_t separations = 0;
  std::optional<std::string> sep_ce;
  for (int stage = 1; stage <= max_index; ++stage)
    for (std::uint64_t a = 0; a + 1 <= static_cast<std::uint64_t>(max_point); ++a)
      for (std::uint64_t b = a + 1; b <= static_cast<std::uint64_t>(max_point); ++b) {
        const auto [ba, bb] = hausdorff_separation(stage, a, b);
        ++separations;
        const bool ok = ba.contains(a) && bb.contains(b) && ba.in_chain_stage(stage) &&
                        bb.in_chain_stage(stage) && !basic_open_meet(ba, bb).has_value() &&
                        (ba.to_upset() & bb.to_upset()).is_empty();
        if (!ok && !sep_ce)
          sep_ce = "stage=" + std::to_string(stage) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
      }
  r.add("every sampled point pair separates by disjoint residue classes in every stage", separations, sep_ce);

  // Exhaustive CRT oracle over pairwise-coprime prime-power moduli.
  const std::vector<std::uint64_t> base = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49};
  std::vector<std::vector<std::uint64_t>> moduli_sets;
  std::vector<std::uint64_t> current;
  const std::uint64_t product_cap = 10000;
  const auto coprime_all = [&](std::uint64_t m) {
    for (std::uint64_t c : current)
      if (std::gcd(c, m) != 1) return false;
    return true;
  };
  const std::function<void(std::size_t, std::uint64_t)> grow = [&](std::size_t from, std::uint64_t prod) {
    if (!current.empty()) moduli_sets.push_back(current);
    for (std::size_t i = from; i < base.size(); ++i) {
      if (prod * base[i] > product_cap || !coprime_all(base[i])) continue;
      current.push_back(base[i]);
      grow(i + 1, prod * base[i]);
      current.pop_back();
    }
  };
  grow(0, 1);
  std::uint64_t crt_cases = 0;
  std::optional<std::string> crt_ce;
  for (const auto& ms : moduli_sets) {
    std::uint64_t L = 1;
    for (std::uint64_t m : ms) L *= m;
    // One scan of the window classifies every residue combination at once.
    std::vector<std::uint64_t> combo_of(L);
    for (std::uint64_t x = 0; x < L; ++x) {
      std::uint64_t key = 0;
      for (std::uint64_t m : ms) key = key * m + (x % m);
      combo_of[x] = key;
    }
    std::vector<std::uint64_t> hits(L, 0), where(L, 0);
    for (std::uint64_t x = 0; x < L; ++x) {
      ++hits[combo_of[x]];
      where[combo_of[x]] = x;
    }
    std::vector<Congruence> cs(ms.size());
    std::vector<std::uint64_t> digits(ms.size(), 0);
    for (std::uint64_t combo = 0; combo < L; ++combo) {
      std::uint64_t rem = combo;
      for (std::size_t i = ms.size(); i-- > 0;) {
        digits[i] = rem % ms[i];
        rem /= ms[i];
      }
      for (std::size_t i = 0; i < ms.size(); ++i) cs[i] = {digits[i], ms[i]};
      const auto sol = crt_solve(cs);
      ++crt_cases;
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < ms.size(); ++i) key = key * ms[i] + digits[i];
      const bool ok = sol && sol->modulus == L && hits[key] == 1 && sol->value == where[key];
      if (!ok && !crt_ce) {
        crt_ce = "moduli={";
        for (std::uint64_t m : ms) *crt_ce += std::to_string(m) + ",";
        *crt_ce += "} combo=" + std::to_string(combo);
      }
    }
  }
  r.add("CRT solutions match one full window scan for every residue combination "
        "(pairwise-coprime prime-power moduli, product <= 10000)",
        crt_cases, crt_ce);

  // Inconsistent and consistent non-coprime systems.
  std::uint64_t mixed = 0;
  std::optional<std::string> mixed_ce;
  for (std::uint64_t m1 : {2, 4, 6, 8, 9, 12})
    for (std::uint64_t m2 : {2, 3, 4, 6, 10, 12})
      for (std::uint64_t a1 = 0; a1 < m1; ++a1)
        for (std::uint64_t a2 = 0; a2 < m2; ++a2) {
          const auto sol = crt_solve({{a1, m1}, {a2, m2}});
          const std::uint64_t L = std::lcm(m1, m2);
          std::optional<std::uint64_t> brute;
          for (std::uint64_t x = 0; x < L; ++x)
            if (x % m1 == a1 && x % m2 == a2) {
              brute = x;
              break;
            }
          ++mixed;
          const bool ok = sol.has_value() == brute.has_value() &&
                          (!sol || (sol->value == *brute && sol->modulus == L));
          if (!ok && !mixed_ce)
            mixed_ce = std::to_string(a1) + " mod " + std::to_string(m1) + " & " + std::to_string(a2) +
                       " mod " + std::to_string(m2);
        }
  r.add("non-coprime systems solve or refute exactly as the window scan does", mixed, mixed_ce);

  // Common points of basic opens with separated prime supports.
  const int max_support = 8;
  std::uint64_t witnesses = 0;
  std::optional<std::string> wit_ce;
  // Singleton supports: every residue combination.
  for (int i = 1; i <= max_support; ++i)
    for (int j = i + 1; j <= max_support; ++j) {
      const std::uint64_t pi = nth_prime(i), pj = nth_prime(j);
      for (std::uint64_t a = 0; a < pi; ++a)
        for (std::uint64_t b = 0; b < pj; ++b) {
          const BasicOpen b1({{a, pi}}), b2({{b, pj}});
          const BigInt w = common_point_witness(b1, b2);
          ++witnesses;
          bool ok = b1.contains(w) && b2.contains(w) && w < BigInt(pi) * pj;
          if (ok)
            for (BigInt x = 0; x < w; ++x)
              if (b1.contains(x) && b2.contains(x)) ok = false;
          if (!ok && !wit_ce)
            wit_ce = "[" + std::to_string(a) + "]_" + std::to_string(pi) + " & [" + std::to_string(b) +
                     "]_" + std::to_string(pj);
        }
    }
  // Larger supports with deterministic residues.
  for (int split = 1; split < max_support; ++split)
    for (int s1 = 1; s1 <= split; ++s1)
      for (int s2 = 1; s2 <= max_support - split; ++s2) {
        std::vector<Congruence> c1, c2;
        for (int i = split - s1 + 1; i <= split; ++i) {
          const std::uint64_t p = nth_prime(i);
          c1.push_back({(static_cast<std::uint64_t>(i) * 7 + 3) % p, p});
        }
        for (int j = split + 1; j <= split + s2; ++j) {
          const std::uint64_t p = nth_prime(j);
          c2.push_back({(static_cast<std::uint64_t>(j) * 5 + 1) % p, p});
        }
        const BasicOpen b1(c1), b2(c2);
        const BigInt w = common_point_witness(b1, b2);
        ++witnesses;
        if (!(b1.contains(w) && b2.contains(w)))
          if (!wit_ce) wit_ce = b1.to_string() + " & " + b2.to_string();
      }
  r.add("separated-support basic opens expose least common points via CRT", witnesses, wit_ce);

  // Overlapping supports refuse the direct witness and succeed after
  // re-basing at fresh primes around a member of the second open.
  std::uint64_t rebased = 0;
  std::optional<std::string> reb_ce;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      for (int k = j + 1; k <= max_support; ++k) {
        const std::uint64_t pi = nth_prime(i), pj = nth_prime(j), pk = nth_prime(k);
        const BasicOpen b1({{1 % pi, pi}, {2 % pk, pk}});
        const BasicOpen b2({{0, pj}});
        bool overlap_detected = false;
        try {
          common_point_witness(b1, b2);
        } catch (const topo_error& e) {
          overlap_detected = e.code() == errc::index_overlap;
        }
        const auto sol = crt_solve({{0, pj}});
        const auto w = common_point_witness_rebased(b1, b2, sol->value);
        ++rebased;
        const bool ok = overlap_detected && b2.contains(sol->value) && w.rebased.contains(w.point) &&
                        b1.contains(w.point) && w.rebased.min_prime_index() > b1.max_prime_index() &&
                        w.rebased.min_prime_index() > b2.max_prime_index() &&
                        w.rebased.contains(sol->value);
        if (!ok && !reb_ce) reb_ce = b1.to_string() + " vs " + b2.to_string();
      }
  r.add("overlapping supports are detected and resolved by re-basing at fresh primes", rebased, reb_ce);
  r.add("meet of the chain stages: T1 (separations above), carrier irreducible (re-based common points), "
        "so the meet is T1 and not sober",
        separations + rebased);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// primorial-complement: the primorial set is closed in every chain stage.

VerificationReport suite_primorial_complement(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "primorial-complement";
  const int max_x = params.get_int("max-x", 50);
  r.set_param("max-x", std::to_string(max_x));
  r.set_param("carrier", "{0,1,2,...}");
  if (max_x < 1) fail(errc::bad_param, "max-x must be positive");
  std::uint64_t certs = 0;
  std::optional<std::string> ce;
  for (std::uint64_t x = 1; x <= static_cast<std::uint64_t>(max_x); ++x) {
    if (is_primorial_point(x)) continue;
    std::size_t m = 1;
    while (nth_prime(m) <= x) ++m;
    for (std::size_t stage : {m, m + 1}) {
      const auto cert = primorial_complement_open_certificate(x, stage);
      ++certs;
      if (!cert.ok() && !ce) ce = "x=" + std::to_string(x) + " m=" + std::to_string(stage);
    }
  }
  r.add("every non-member below the bound has a stage-open certificate at its least stage and the next",
        certs, ce);
  std::uint64_t rejected = 0;
  std::optional<std::string> rej_ce;
  for (std::uint64_t x : {std::uint64_t{0}, std::uint64_t{2}, std::uint64_t{6}, std::uint64_t{30}}) {
    bool threw = false;
    try {
      primorial_complement_open_certificate(x, 5);
    } catch (const topo_error& e) {
      threw = e.code() == errc::precondition_violated;
    }
    ++rejected;
    if (!threw && !rej_ce) rej_ce = "x=" + std::to_string(x);
  }
  r.add("members of the primorial set are rejected as certificate anchors", rejected, rej_ce);
  const bool members_ok = is_primorial_point(0) && is_primorial_point(2) && is_primorial_point(6) &&
                          is_primorial_point(30) && is_primorial_point(210) && is_primorial_point(2310) &&
                          !is_primorial_point(1) && !is_primorial_point(4) && !is_primorial_point(12) &&
                          !is_primorial_point(60);
  r.add("primorial membership predicate matches the defining products", 10,
        members_ok ? std::nullopt : std::optional<std::string>("membership table broken"));
  r.add("hence the complement of the primorial set is open in every chain stage: "
        "the set is closed in every stage and in their meet",
        certs);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// upset-algebra: canonical forms and Boolean laws, exhaustive plus random.

VerificationReport suite_upset_algebra(const SuiteParams& params) {
  VerificationReport r;
  r.suite = "upset-algebra";
  const std::uint64_t random_cases = params.get_u64("random", 10000);
  const std::uint64_t seed = params.get_u64("seed", 20240917);
  r.set_param("random", std::to_string(random_cases));
  r.set_param("seed", std::to_string(seed));

  // Exhaustive: every raw form with threshold <= 8 and period <= 6.
  std::uint64_t raw_forms = 0;
  std::optional<std::string> canon_ce;
  for (std::uint64_t q = 1; q <= 6; ++q)
    for (std::uint64_t n = 0; n <= 8; ++n)
      for (std::uint64_t pm = 0; pm < (std::uint64_t{1} << q); ++pm)
        for (std::uint64_t pf = 0; pf < (std::uint64_t{1} << n); ++pf) {
          std::vector<bool> prefix(n), mask(q);
          for (std::uint64_t i = 0; i < n; ++i) prefix[i] = pf >> i & 1u;
          for (std::uint64_t i = 0; i < q; ++i) mask[i] = pm >> i & 1u;
          const UPSet s(prefix, mask);
          ++raw_forms;
          bool ok = true;
          const std::uint64_t window = n + 3 * q + 12;
          for (std::uint64_t x = 0; x < window && ok; ++x) {
            const bool raw = x < n ? prefix[x] : mask[x % q];
            if (s.contains(x) != raw) ok = false;
          }
          // Canonical minimality: no shorter period, no lower threshold.
          if (s.period() > 1) {
            for (std::uint64_t d = 1; d < s.period() && ok; ++d) {
              if (s.period() % d != 0) continue;
              bool periodic = true;
              for (std::uint64_t i = 0; i < s.period() && periodic; ++i)
                if (s.period_mask()[i] != s.period_mask()[i % d]) periodic = false;
              if (periodic) ok = false;
            }
          }
          if (s.threshold() > 0 &&
              s.prefix_bits().back() == s.period_mask()[(s.threshold() - 1) % s.period()])
            ok = false;
          if (complement(complement(s)) != s) ok = false;
          if (s.is_finite() && !complement(s).is_cofinite()) ok = false;
          std::uint64_t brute = 0;
          for (std::uint64_t x = 0; x < window; ++x) brute += s.contains(x);
          if (s.count_below(window) != brute) ok = false;
          if (!ok && !canon_ce) canon_ce = s.to_string();
        }
  r.add("canonicalization preserves membership and reaches minimal period and threshold "
        "(all raw forms, threshold <= 8, period <= 6)",
        raw_forms, canon_ce);

  // Random Boolean-law cases with pointwise window oracles.
  std::mt19937_64 rng(seed);
  const auto random_set = [&rng]() {
    std::uniform_int_distribution<std::uint64_t> qd(1, 10), nd(0, 10), bit(0, 1);
    const std::uint64_t q = qd(rng), n = nd(rng);
    std::vector<bool> prefix(n), mask(q);
    for (std::uint64_t i = 0; i < n; ++i) prefix[i] = bit(rng);
    for (std::uint64_t i = 0; i < q; ++i) mask[i] = bit(rng);
    return UPSet(std::move(prefix), std::move(mask));
  };
  std::uint64_t laws = 0;
  std::optional<std::string> law_ce;
  for (std::uint64_t c = 0; c < random_cases; ++c) {
    const UPSet a = random_set(), b = random_set(), d = random_set();
    const std::uint64_t lcm_all = std::lcm(std::lcm(a.period(), b.period()), d.period());
    const std::uint64_t window = std::max({a.threshold(), b.threshold(), d.threshold()}) + 2 * lcm_all + 2;
    bool ok = true;
    const UPSet u = a | b, i = a & b, diff = a - b;
    if (complement(u) != (complement(a) & complement(b))) ok = false;
    if (complement(i) != (complement(a) | complement(b))) ok = false;
    if ((a & (b | d)) != ((a & b) | (a & d))) ok = false;
    if ((a | (b & d)) != ((a | b) & (a | d))) ok = false;
    if (diff != (a & complement(b))) ok = false;
    if ((a | (a & b)) != a || (a & (a | b)) != a) ok = false;
    if ((diff | i) != a) ok = false;
    for (std::uint64_t x = 0; x < window && ok; ++x) {
      const bool xa = a.contains(x), xb = b.contains(x);
      if (u.contains(x) != (xa || xb)) ok = false;
      if (i.contains(x) != (xa && xb)) ok = false;
      if (diff.contains(x) != (xa && !xb)) ok = false;
      if (complement(a).contains(x) != !xa) ok = false;
    }
    if (a.subset_of(b) != ((a - b).is_empty())) ok = false;
    ++laws;
    if (!ok && !law_ce) law_ce = "case " + std::to_string(c) + ": a=" + a.to_string() + " b=" + b.to_string();
  }
  r.add("Boolean laws and pointwise window oracles hold on seeded random triples", laws, law_ce);
  r.finalize();
  return r;
}

}  // namespace

const std::map<std::string, SuiteFn>& suite_registry() {
  static const std::map<std::string, SuiteFn> reg = {
      {"enum-cross", suite_enum_cross},
      {"sobriety-collapse", suite_sobriety_collapse},
      {"t1-join", suite_t1_join},
      {"meet-sober", suite_meet_sober},
      {"alexandroff-meet", suite_alexandroff_meet},
      {"upper-sets", suite_upper_sets},
      {"link-coarsening", suite_link_coarsening},
      {"minimal-sober", suite_minimal_sober},
      {"cofinite-join", suite_cofinite_join},
      {"crt-chain", suite_crt_chain},
      {"primorial-complement", suite_primorial_complement},
      {"upset-algebra", suite_upset_algebra},
  };
  return reg;
}

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
  const auto& reg = suite_registry();
  const auto it = reg.find(name);
  if (it == reg.end()) fail(errc::unknown_suite, "no suite named " + name);
  try {
    return it->second(params);
  } catch (const topo_error& e) {
    if (e.code() == errc::bad_param) throw;
    VerificationReport r;
    r.suite = name;
    for (const auto& [k, v] : params.raw()) r.set_param(k, v);
    r.verdict = Verdict::Fail;
    r.add(std::string("suite aborted: ") + e.what(), 0, std::string(e.what()));
    return r;
  } catch (const std::exception& e) {
    VerificationReport r;
    r.suite = name;
    for (const auto& [k, v] : params.raw()) r.set_param(k, v);
    r.verdict = Verdict::Fail;
    r.add(std::string("suite aborted: ") + e.what(), 0, std::string(e.what()));
    return r;
  }
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : suite_registry()) names.push_back(k);
  return names;
}

}  // namespace topo
