#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toposcope/errors.hpp"

namespace topo {

using BigInt = boost::multiprecision::cpp_int;

// Ultimately periodic subset of {0,1,2,...}: membership below the threshold N
// is tabulated, membership of x >= N is mask[x mod q]. Canonical form: q is
// the minimal period of the tail, N is the least threshold for that tail, so
// structural equality is set equality. Finite sets carry an all-false mask,
// cofinite sets an all-true one.
class UPSet {
 public:
  UPSet();  // empty set

  // Raw constructor; canonicalizes. prefix.size() must equal threshold.
  UPSet(std::vector<bool> prefix, std::vector<bool> period_mask);

  static UPSet empty();
  static UPSet naturals();
  static UPSet finite_set(const std::vector<std::uint64_t>& xs);
  static UPSet singleton(std::uint64_t x);
  // {x : x >= from}
  static UPSet from_value(std::uint64_t from);
  // [a]_m = {x : x == a mod m}, 0 <= a < m.
  static UPSet residue_class(std::uint64_t a, std::uint64_t m);

  bool contains(std::uint64_t x) const;
  bool is_empty() const;
  bool is_finite() const;
  bool is_cofinite() const;
  std::uint64_t min() const;  // errc::empty_set_min on the empty set
  // Number of members below `bound`.
  std::uint64_t count_below(std::uint64_t bound) const;

  std::uint64_t threshold() const { return prefix_.size(); }
  std::uint64_t period() const { return mask_.size(); }
  const std::vector<bool>& prefix_bits() const { return prefix_; }
  const std::vector<bool>& period_mask() const { return mask_; }

  bool subset_of(const UPSet& o) const;
  bool operator==(const UPSet& o) const { return prefix_ == o.prefix_ && mask_ == o.mask_; }
  bool operator!=(const UPSet& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<bool> prefix_;
  std::vector<bool> mask_;  // size >= 1 after canonicalization
};

UPSet operator|(const UPSet& a, const UPSet& b);
UPSet operator&(const UPSet& a, const UPSet& b);
UPSet operator-(const UPSet& a, const UPSet& b);
UPSet complement(const UPSet& a);

// x == residue mod modulus, 0 <= residue < modulus, modulus >= 1.
struct Congruence {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;

  bool operator==(const Congruence&) const = default;
};

struct CrtSolution {
  BigInt value;    // least nonnegative solution
  BigInt modulus;  // lcm of the input moduli
};

// Simultaneous congruences, moduli not assumed coprime; nullopt when the
// system is inconsistent. The empty system solves to 0 mod 1.
std::optional<CrtSolution> crt_solve(const std::vector<Congruence>& cs);

// p_1 = 2, p_2 = 3, ... (1-based).
std::uint64_t nth_prime(std::size_t k);
std::optional<std::size_t> prime_index_of(std::uint64_t p);

// Finite intersection of residue classes with pairwise distinct prime moduli;
// the empty intersection is the whole carrier. These are the basic opens of
// the prime-residue chain topologies: stage n admits exactly the classes
// [a]_{p_t} with t >= n as subbasic sets.
class BasicOpen {
 public:
  BasicOpen() = default;  // whole carrier
  explicit BasicOpen(std::vector<Congruence> cs);

  static BasicOpen whole();

  const std::vector<Congruence>& congruences() const { return cs_; }
  bool whole_carrier() const { return cs_.empty(); }
  bool contains(const BigInt& x) const;
  // Smallest/largest prime index among the moduli; 0 when unconstrained.
  std::size_t min_prime_index() const;
  std::size_t max_prime_index() const;
  // Membership of every modulus' index in [stage, infinity): the open belongs
  // to chain stage `stage`.
  bool in_chain_stage(std::size_t stage) const;

  UPSet to_upset() const;  // errc::size_limit if the modulus product is huge
  std::string to_string() const;

 private:
  std::vector<Congruence> cs_;  // sorted by modulus, distinct prime moduli
};

// The arithmetic progression {first + k*step}.
struct Progression {
  BigInt first;
  BigInt step;
  UPSet to_upset() const;  // errc::size_limit when step is huge
};

// Intersection of two basic opens: the full solution progression, or nullopt
// when two congruences at one prime conflict.
std::optional<Progression> basic_open_meet(const BasicOpen& a, const BasicOpen& b);

// Disjoint basic opens around a != b inside chain stage `stage`: both are
// residue classes of the least prime p_m with m >= stage and p_m > a + b
// (so a and b have distinct residues).
std::pair<BasicOpen, BasicOpen> hausdorff_separation(std::size_t stage, std::uint64_t a, std::uint64_t b);

// Least common point of two basic opens whose prime-index supports are
// disjoint with max indices of `a` strictly below min indices of `b`;
// errc::index_overlap otherwise.
BigInt common_point_witness(const BasicOpen& a, const BasicOpen& b);

// Basic open at the `count` primes starting from index first_index whose
// residues pin `member`; contains `member` by construction.
BasicOpen rebase_basic_open(const BasicOpen& b, const BigInt& member, std::size_t first_index, std::size_t count);

struct RebasedWitness {
  BasicOpen rebased;  // replacement for the second open, at fresh higher primes
  BigInt point;       // common point of the first open and the rebased open
};

// Overlapping-support variant: re-bases `b` at primes above both supports,
// around its supplied member, then intersects. `member` must lie in b.
RebasedWitness common_point_witness_rebased(const BasicOpen& a, const BasicOpen& b, const BigInt& member);

UPSet positive_integers();

// For cofinite U on the carrier: opens pinned at 1 and at 2 whose
// intersection is exactly U. Both are verified before returning.
struct CofiniteJoinWitness {
  UPSet v1;  // cofinite, contains 1
  UPSet v2;  // cofinite, contains 2
};

CofiniteJoinWitness cofinite_join_witness(const UPSet& u, const UPSet& carrier = positive_integers());

// Open of the pinned-cofinite topology: empty, or cofinite in the carrier and
// containing `pin`.
bool pinned_cofinite_open(const UPSet& u, std::uint64_t pin, const UPSet& carrier = positive_integers());

// Mechanically checkable record that the cofinite topology on an infinite
// carrier is T1 but not sober, and that its sober-join width is exactly two:
// the carrier is irreducible (sampled cofinite opens pairwise meet; their
// complements stay finite under union), no point closure reaches the carrier,
// and the two pinned-cofinite factors are sober and join to it.
struct CofiniteSobrietyCertificate {
  bool singletons_closed = false;       // T1 on samples
  bool carrier_irreducible = false;     // sampled cofinite opens pairwise meet
  bool union_of_two_finite_finite = false;
  bool no_generic_point = false;        // sampled closures stay finite
  bool pinned_factors_sober = false;    // sampled irreducible closeds have unique generic points
  bool join_recovers_cofinite = false;  // sampled U split as V1 /\ V2
  std::uint64_t samples = 0;
  bool all_ok() const;
};

CofiniteSobrietyCertificate cofinite_not_sober_certificate();

// Membership predicate of the sober factor attached to a finite set A inside
// the cofinite topology on {0,1,2,...}: U is open iff U is cofinite and
// contains both in_a and out_a, or U misses A, contains out_a, and U union A
// is cofinite. in_a must lie in A, out_a must not.
bool sober_join_factor_contains(const UPSet& a, std::uint64_t in_a, std::uint64_t out_a, const UPSet& u);

// x == 0 or x is a product 2*3*...*p_k.
bool is_primorial_point(const BigInt& x);

// Exact record that the complement of A = {0} union {primorials} contains a
// stage-m basic open around x, namely the residues of x at p_m,...,p_{2m}.
// Argument, fully checked: x itself is outside A; every other member of the
// open is at least x + p_m*...*p_{2m}, which clears every primorial up to
// P_m (the head); and every member of A past the head is divisible by p_m
// while x is not. Requires 1 <= x < p_m and x not in A.
struct PrimorialComplementCertificate {
  std::uint64_t x = 0;
  std::size_t stage = 0;           // m
  BasicOpen open;                  // [x]_{p_m} /\ ... /\ [x]_{p_{2m}}
  std::vector<BigInt> head;        // primorials P_1..P_m
  BigInt tail_start;               // x + p_m*...*p_{2m}
  bool x_not_in_a = false;
  bool x_in_open = false;
  bool x_escapes_modulus = false;  // x mod p_m != 0: excludes 0 and all primorials past the head
  bool tail_beyond_head = false;   // tail_start > max(head)
  bool head_misses_open = false;   // pointwise: no head member lies in the open
  bool ok() const;
};

PrimorialComplementCertificate primorial_complement_open_certificate(std::uint64_t x, std::size_t m);

// The space A union {b} where A is infinite and coinfinite, b outside A:
// closed sets are the finite subsets plus every subset containing b. T1 and
// sober; irreducibility of any closed set with two or more points is refuted
// constructively.
class AnchoredCofiniteSpace {
 public:
  AnchoredCofiniteSpace(UPSet a, std::uint64_t b);

  const UPSet& carrier() const { return m_; }
  const UPSet& base() const { return a_; }
  std::uint64_t anchor() const { return b_; }

  bool is_closed(const UPSet& s) const;
  bool is_open(const UPSet& s) const;
  UPSet closure_of_point(std::uint64_t x) const;

  struct Refutation {
    UPSet f, g;  // proper closed cover of the refuted set
  };
  // s closed with at least two members.
  Refutation irreducibility_refutation(const UPSet& s) const;

  struct Certificate {
    bool anchored_closed_sets_valid = false;  // sampled closure algebra
    bool singletons_closed = false;
    bool carrier_closed = false;
    bool multipoint_closeds_refuted = false;  // sampled |S| >= 2 refutations
    bool base_not_closed = false;             // A itself is not closed
    std::uint64_t samples = 0;
    bool all_ok() const;
  };
  Certificate sobriety_certificate() const;

 private:
  UPSet a_;
  std::uint64_t b_;
  UPSet m_;
};

}  // namespace topo
