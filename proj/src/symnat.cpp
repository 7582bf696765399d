#include "toposcope/symnat.hpp"

#include <algorithm>
#include <numeric>

namespace topo {

namespace {

// Periods and thresholds stay modest in every workload (the largest moduli
// products are below 1e7); the cap turns runaway lcm growth into an error
// instead of an allocation storm.
constexpr std::uint64_t kSizeLimit = std::uint64_t{1} << 24;

void check_size(std::uint64_t v, const char* what) {
  if (v > kSizeLimit) fail(errc::size_limit, std::string(what) + " exceeds the representation cap");
}

}  // namespace

UPSet::UPSet() : mask_{false} {}

UPSet::UPSet(std::vector<bool> prefix, std::vector<bool> period_mask)
    : prefix_(std::move(prefix)), mask_(std::move(period_mask)) {
  if (mask_.empty()) mask_ = {false};
  check_size(prefix_.size(), "threshold");
  check_size(mask_.size(), "period");
  canonicalize();
}

void UPSet::canonicalize() {
  // Minimal period first: the tail set is determined by the mask, so shrink
  // the mask before touching the threshold.
  const std::size_t q = mask_.size();
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < q && periodic; ++i)
      if (mask_[i] != mask_[i % d]) periodic = false;
    if (periodic) {
      mask_.resize(d);
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == mask_[(prefix_.size() - 1) % mask_.size()])
    prefix_.pop_back();
}

UPSet UPSet::empty() { return UPSet(); }

UPSet UPSet::naturals() { return UPSet({}, {true}); }

UPSet UPSet::finite_set(const std::vector<std::uint64_t>& xs) {
  if (xs.empty()) return empty();
  const std::uint64_t top = *std::max_element(xs.begin(), xs.end());
  check_size(top + 1, "threshold");
  std::vector<bool> prefix(top + 1, false);
  for (std::uint64_t x : xs) prefix[x] = true;
  return UPSet(std::move(prefix), {false});
}

UPSet UPSet::singleton(std::uint64_t x) { return finite_set({x}); }

UPSet UPSet::from_value(std::uint64_t from) {
  check_size(from, "threshold");
  return UPSet(std::vector<bool>(from, false), {true});
}

UPSet UPSet::residue_class(std::uint64_t a, std::uint64_t m) {
  if (m == 0) fail(errc::bad_param, "modulus must be positive");
  if (a >= m) fail(errc::bad_param, "residue must lie below the modulus");
  check_size(m, "period");
  std::vector<bool> mask(m, false);
  mask[a] = true;
  return UPSet({}, std::move(mask));
}

bool UPSet::contains(std::uint64_t x) const {
  if (x < prefix_.size()) return prefix_[x];
  return mask_[x % mask_.size()];
}

bool UPSet::is_empty() const {
  return std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; }) &&
         std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

bool UPSet::is_finite() const {
  return std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

bool UPSet::is_cofinite() const {
  return std::all_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

std::uint64_t UPSet::min() const {
  for (std::size_t i = 0; i < prefix_.size(); ++i)
    if (prefix_[i]) return i;
  const std::uint64_t n = prefix_.size();
  for (std::uint64_t x = n; x < n + mask_.size(); ++x)
    if (mask_[x % mask_.size()]) return x;
  fail(errc::empty_set_min, "minimum of the empty set");
}

std::uint64_t UPSet::count_below(std::uint64_t bound) const {
  std::uint64_t count = 0;
  const std::uint64_t n = prefix_.size();
  for (std::uint64_t i = 0; i < std::min(bound, n); ++i) count += prefix_[i];
  if (bound <= n) return count;
  const std::uint64_t q = mask_.size();
  const std::uint64_t span = bound - n;
  const std::uint64_t in_mask = static_cast<std::uint64_t>(std::count(mask_.begin(), mask_.end(), true));
  count += (span / q) * in_mask;
  for (std::uint64_t x = n + (span / q) * q; x < bound; ++x) count += mask_[x % q];
  return count;
}

bool UPSet::subset_of(const UPSet& o) const { return (*this - o).is_empty(); }

std::string UPSet::to_string() const {
  std::string head = "{";
  bool first = true;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (!prefix_[i]) continue;
    if (!first) head += ",";
    head += std::to_string(i);
    first = false;
  }
  head += "}";
  if (is_finite()) return head;
  std::string tail = "{x>=" + std::to_string(prefix_.size()) + ": x mod " + std::to_string(mask_.size()) + " in {";
  first = true;
  for (std::size_t r = 0; r < mask_.size(); ++r) {
    if (!mask_[r]) continue;
    if (!first) tail += ",";
    tail += std::to_string(r);
    first = false;
  }
  tail += "}}";
  return head == "{}" ? tail : head + " u " + tail;
}

namespace {

template <typename Op>
UPSet combine(const UPSet& a, const UPSet& b, Op op) {
  const std::uint64_t n = std::max(a.threshold(), b.threshold());
  const std::uint64_t qa = a.period(), qb = b.period();
  const std::uint64_t g = std::gcd(qa, qb);
  const std::uint64_t q = qa / g * qb;
  check_size(q, "period");
  std::vector<bool> prefix(n), mask(q);
  for (std::uint64_t i = 0; i < n; ++i) prefix[i] = op(a.contains(i), b.contains(i));
  for (std::uint64_t r = 0; r < q; ++r)
    mask[r] = op(a.period_mask()[r % qa], b.period_mask()[r % qb]);
  return UPSet(std::move(prefix), std::move(mask));
}

}  // namespace

UPSet operator|(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

UPSet operator&(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

UPSet operator-(const UPSet& a, const UPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

UPSet complement(const UPSet& a) {
  std::vector<bool> prefix = a.prefix_bits(), mask = a.period_mask();
  prefix.flip();
  mask.flip();
  return UPSet(std::move(prefix), std::move(mask));
}

namespace {

BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  BigInt x1, y1;
  const BigInt g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::optional<CrtSolution> crt_solve(const std::vector<Congruence>& cs) {
  BigInt value = 0, modulus = 1;
  for (const Congruence& c : cs) {
    if (c.modulus == 0) fail(errc::bad_param, "zero modulus");
    if (c.residue >= c.modulus) fail(errc::bad_param, "residue at least the modulus");
    const BigInt m2 = c.modulus, a2 = c.residue;
    BigInt p, q;
    const BigInt g = egcd(modulus, m2, p, q);
    if ((a2 - value) % g != 0) return std::nullopt;
    const BigInt lcm = modulus / g * m2;
    const BigInt scale = m2 / g;
    BigInt t = ((a2 - value) / g % scale) * p % scale;
    BigInt next = (value + modulus * t) % lcm;
    if (next < 0) next += lcm;
    value = next;
    modulus = lcm;
  }
  return CrtSolution{value, modulus};
}

namespace {

std::vector<std::uint64_t>& prime_table() {
  static std::vector<std::uint64_t> primes{2, 3};
  return primes;
}

void extend_primes_to_index(std::size_t k) {
  auto& primes = prime_table();
  std::uint64_t cand = primes.back();
  while (primes.size() < k) {
    cand += 2;
    bool ok = true;
    for (std::uint64_t p : primes) {
      if (p * p > cand) break;
      if (cand % p == 0) {
        ok = false;
        break;
      }
    }
    if (ok) primes.push_back(cand);
  }
}

void extend_primes_past(std::uint64_t v) {
  while (prime_table().back() <= v) extend_primes_to_index(prime_table().size() + 1);
}

}  // namespace

std::uint64_t nth_prime(std::size_t k) {
  if (k == 0) fail(errc::bad_param, "prime indices are 1-based");
  extend_primes_to_index(k);
  return prime_table()[k - 1];
}

std::optional<std::size_t> prime_index_of(std::uint64_t p) {
  if (p < 2) return std::nullopt;
  extend_primes_past(p);
  const auto& primes = prime_table();
  const auto it = std::lower_bound(primes.begin(), primes.end(), p);
  if (it == primes.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - primes.begin()) + 1;
}

BasicOpen::BasicOpen(std::vector<Congruence> cs) : cs_(std::move(cs)) {
  std::sort(cs_.begin(), cs_.end(), [](const Congruence& a, const Congruence& b) { return a.modulus < b.modulus; });
  for (std::size_t i = 0; i < cs_.size(); ++i) {
    if (!prime_index_of(cs_[i].modulus)) fail(errc::bad_param, "modulus " + std::to_string(cs_[i].modulus) + " is not prime");
    if (cs_[i].residue >= cs_[i].modulus) fail(errc::bad_param, "residue at least the modulus");
    if (i && cs_[i].modulus == cs_[i - 1].modulus) fail(errc::bad_param, "repeated prime modulus");
  }
}

BasicOpen BasicOpen::whole() { return BasicOpen(); }

bool BasicOpen::contains(const BigInt& x) const {
  if (x < 0) return false;
  for (const Congruence& c : cs_)
    if (x % c.modulus != c.residue) return false;
  return true;
}

std::size_t BasicOpen::min_prime_index() const {
  return cs_.empty() ? 0 : *prime_index_of(cs_.front().modulus);
}

std::size_t BasicOpen::max_prime_index() const {
  return cs_.empty() ? 0 : *prime_index_of(cs_.back().modulus);
}

bool BasicOpen::in_chain_stage(std::size_t stage) const {
  return cs_.empty() || min_prime_index() >= stage;
}

UPSet BasicOpen::to_upset() const {
  const auto sol = crt_solve(cs_);
  // Distinct prime moduli are coprime, so the system always solves.
  if (!sol) throw std::logic_error("coprime congruences reported inconsistent");
  return Progression{sol->value, sol->modulus}.to_upset();
}

std::string BasicOpen::to_string() const {
  if (cs_.empty()) return "N";
  std::string out;
  for (std::size_t i = 0; i < cs_.size(); ++i) {
    if (i) out += " & ";
    out += "[" + std::to_string(cs_[i].residue) + "]_" + std::to_string(cs_[i].modulus);
  }
  return out;
}

UPSet Progression::to_upset() const {
  if (step <= 0) fail(errc::bad_param, "progression step must be positive");
  if (first < 0) fail(errc::bad_param, "progression start must be nonnegative");
  if (step > kSizeLimit || first > kSizeLimit) fail(errc::size_limit, "progression too wide to tabulate");
  const auto f = static_cast<std::uint64_t>(first);
  const auto s = static_cast<std::uint64_t>(step);
  return UPSet::residue_class(f % s, s) & UPSet::from_value(f);
}

std::optional<Progression> basic_open_meet(const BasicOpen& a, const BasicOpen& b) {
  std::vector<Congruence> merged = a.congruences();
  for (const Congruence& c : b.congruences()) {
    bool dup = false;
    for (const Congruence& d : merged)
      if (d.modulus == c.modulus) {
        if (d.residue != c.residue) return std::nullopt;
        dup = true;
        break;
      }
    if (!dup) merged.push_back(c);
  }
  const auto sol = crt_solve(merged);
  if (!sol) throw std::logic_error("coprime congruences reported inconsistent");
  return Progression{sol->value, sol->modulus};
}

std::pair<BasicOpen, BasicOpen> hausdorff_separation(std::size_t stage, std::uint64_t a, std::uint64_t b) {
  if (stage == 0) fail(errc::bad_param, "chain stages are 1-based");
  if (a == b) fail(errc::equal_points, "separation needs distinct points");
  std::size_t m = stage;
  while (nth_prime(m) <= a + b) ++m;
  const std::uint64_t p = nth_prime(m);
  return {BasicOpen({{a % p, p}}), BasicOpen({{b % p, p}})};
}

BigInt common_point_witness(const BasicOpen& a, const BasicOpen& b) {
  if (!a.whole_carrier() && !b.whole_carrier() && a.max_prime_index() >= b.min_prime_index())
    fail(errc::index_overlap, "prime supports are not separated");
  std::vector<Congruence> merged = a.congruences();
  merged.insert(merged.end(), b.congruences().begin(), b.congruences().end());
  const auto sol = crt_solve(merged);
  if (!sol) throw std::logic_error("coprime congruences reported inconsistent");
  if (!a.contains(sol->value) || !b.contains(sol->value))
    throw std::logic_error("witness escaped its defining congruences");
  return sol->value;
}

BasicOpen rebase_basic_open(const BasicOpen& b, const BigInt& member, std::size_t first_index, std::size_t count) {
  if (count == 0) fail(errc::bad_param, "rebasing needs at least one congruence");
  if (first_index == 0) fail(errc::bad_param, "prime indices are 1-based");
  if (!b.contains(member)) fail(errc::precondition_violated, "rebasing point must lie in the open");
  std::vector<Congruence> cs;
  for (std::size_t i = first_index; i < first_index + count; ++i) {
    const std::uint64_t p = nth_prime(i);
    cs.push_back({static_cast<std::uint64_t>(member % p), p});
  }
  return BasicOpen(std::move(cs));
}

RebasedWitness common_point_witness_rebased(const BasicOpen& a, const BasicOpen& b, const BigInt& member) {
  const std::size_t fresh = std::max(a.max_prime_index(), b.max_prime_index()) + 1;
  const std::size_t count = std::max<std::size_t>(1, b.congruences().size());
  RebasedWitness w{rebase_basic_open(b, member, fresh, count), 0};
  w.point = common_point_witness(a, w.rebased);
  return w;
}

UPSet positive_integers() { return UPSet::from_value(1); }

bool pinned_cofinite_open(const UPSet& u, std::uint64_t pin, const UPSet& carrier) {
  if (u.is_empty()) return true;
  return u.subset_of(carrier) && u.contains(pin) && (carrier - u).is_finite();
}

CofiniteJoinWitness cofinite_join_witness(const UPSet& u, const UPSet& carrier) {
  if (!carrier.contains(1) || !carrier.contains(2))
    fail(errc::precondition_violated, "carrier must contain the pins 1 and 2");
  if (u.is_empty()) return {UPSet::empty(), UPSet::empty()};
  if (!u.subset_of(carrier)) fail(errc::precondition_violated, "open must lie inside the carrier");
  if (!(carrier - u).is_finite()) fail(errc::not_cofinite, "open must be cofinite in the carrier");
  CofiniteJoinWitness w{u | UPSet::singleton(1), u | UPSet::singleton(2)};
  if (!pinned_cofinite_open(w.v1, 1, carrier) || !pinned_cofinite_open(w.v2, 2, carrier))
    throw std::logic_error("join factors left their topologies");
  if ((w.v1 & w.v2) != u) throw std::logic_error("join factors do not intersect to the open");
  return w;
}

namespace {

// Closed sets of the pinned-cofinite topology: finite sets avoiding the pin,
// plus the carrier.
bool pinned_cofinite_closed(const UPSet& s, std::uint64_t pin, const UPSet& carrier) {
  if (s == carrier) return true;
  return s.subset_of(carrier) && s.is_finite() && !s.contains(pin);
}

}  // namespace

bool CofiniteSobrietyCertificate::all_ok() const {
  return singletons_closed && carrier_irreducible && union_of_two_finite_finite &&
         no_generic_point && pinned_factors_sober && join_recovers_cofinite;
}

CofiniteSobrietyCertificate cofinite_not_sober_certificate() {
  const UPSet carrier = positive_integers();
  CofiniteSobrietyCertificate cert;
  cert.singletons_closed = true;
  cert.no_generic_point = true;
  cert.carrier_irreducible = true;
  cert.union_of_two_finite_finite = true;
  cert.pinned_factors_sober = true;
  cert.join_recovers_cofinite = true;

  std::vector<std::vector<std::uint64_t>> pin_sets = {
      {1}, {2}, {1, 2}, {3}, {1, 2, 3}, {5, 17}, {2, 9, 40}, {1, 2, 3, 4, 5}};
  std::vector<UPSet> opens;
  for (const auto& f : pin_sets) opens.push_back(carrier - UPSet::finite_set(f));

  // T1: singleton complements are cofinite opens; closures stay pointwise.
  for (std::uint64_t x = 1; x <= 10; ++x) {
    const UPSet rest = carrier - UPSet::singleton(x);
    if (!(carrier - rest).is_finite() || rest.is_empty()) cert.singletons_closed = false;
    // Closed sets are the finite ones and the carrier; the smallest closed
    // superset of {x} is {x} itself, so no point is generic.
    if (UPSet::singleton(x) == carrier) cert.no_generic_point = false;
    ++cert.samples;
  }

  // Any two nonempty cofinite opens intersect: their missing parts are finite
  // while the carrier is not.
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i; j < opens.size(); ++j) {
      const UPSet common = opens[i] & opens[j];
      if (common.is_empty()) cert.carrier_irreducible = false;
      const UPSet gaps = (carrier - opens[i]) | (carrier - opens[j]);
      if (!gaps.is_finite() || (carrier - common) != gaps) cert.union_of_two_finite_finite = false;
      ++cert.samples;
    }

  // The two pinned factors are sober: every sampled closed set either is a
  // singleton (its own unique generic point), splits into two proper closed
  // pieces, or is the carrier, whose unique generic point is the pin.
  for (std::uint64_t pin : {std::uint64_t{1}, std::uint64_t{2}}) {
    for (const auto& f : pin_sets) {
      std::vector<std::uint64_t> avoiding;
      for (std::uint64_t x : f)
        if (x != pin) avoiding.push_back(x);
      if (avoiding.size() < 2) continue;
      const UPSet s = UPSet::finite_set(avoiding);
      const UPSet left = UPSet::singleton(s.min());
      const UPSet right = s - left;
      const bool split = pinned_cofinite_closed(left, pin, carrier) &&
                         pinned_cofinite_closed(right, pin, carrier) && (left | right) == s &&
                         left != s && right != s;
      if (!split) cert.pinned_factors_sober = false;
      ++cert.samples;
    }
    // carrier = closure of the pin: every closed proper set misses the pin.
    for (const auto& f : pin_sets) {
      const UPSet closed = UPSet::finite_set(f);
      if (pinned_cofinite_closed(closed, pin, carrier) && closed.contains(pin))
        cert.pinned_factors_sober = false;
      ++cert.samples;
    }
  }

  for (const auto& u : opens) {
    const auto w = cofinite_join_witness(u, carrier);
    if ((w.v1 & w.v2) != u) cert.join_recovers_cofinite = false;
    ++cert.samples;
  }
  return cert;
}

bool sober_join_factor_contains(const UPSet& a, std::uint64_t in_a, std::uint64_t out_a, const UPSet& u) {
  if (a.is_empty() || !a.is_finite()) fail(errc::precondition_violated, "attachment set must be finite and nonempty");
  if (!a.contains(in_a)) fail(errc::precondition_violated, "in_a must lie in the attachment set");
  if (a.contains(out_a)) fail(errc::precondition_violated, "out_a must lie outside the attachment set");
  const UPSet whole = UPSet::naturals();
  const bool big = (whole - u).is_finite() && u.contains(in_a) && u.contains(out_a);
  const bool side = (u & a).is_empty() && u.contains(out_a) && (whole - (u | a)).is_finite();
  return big || side;
}

bool is_primorial_point(const BigInt& x) {
  if (x == 0) return true;
  // Products 2, 2*3, 2*3*5, ...; the empty product 1 is not a member.
  BigInt prod = 1;
  std::size_t k = 1;
  do prod *= nth_prime(k++);
  while (prod < x);
  return prod == x;
}

bool PrimorialComplementCertificate::ok() const {
  return x_not_in_a && x_in_open && x_escapes_modulus && tail_beyond_head && head_misses_open;
}

PrimorialComplementCertificate primorial_complement_open_certificate(std::uint64_t x, std::size_t m) {
  if (m == 0) fail(errc::bad_param, "chain stages are 1-based");
  if (x == 0 || x >= nth_prime(m))
    fail(errc::precondition_violated, "point must satisfy 1 <= x < p_m");
  if (is_primorial_point(x)) fail(errc::precondition_violated, "point must avoid the primorial set");
  PrimorialComplementCertificate cert;
  cert.x = x;
  cert.stage = m;
  std::vector<Congruence> cs;
  BigInt q = 1;
  for (std::size_t i = m; i <= 2 * m; ++i) {
    const std::uint64_t p = nth_prime(i);
    cs.push_back({x % p, p});
    q *= p;
  }
  cert.open = BasicOpen(std::move(cs));
  BigInt prod = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    prod *= nth_prime(k);
    cert.head.push_back(prod);
  }
  cert.tail_start = BigInt(x) + q;
  cert.x_not_in_a = !is_primorial_point(x);
  cert.x_in_open = cert.open.contains(x);
  cert.x_escapes_modulus = (x % nth_prime(m)) != 0;
  cert.tail_beyond_head = cert.tail_start > cert.head.back();
  cert.head_misses_open = true;
  for (const BigInt& h : cert.head)
    if (cert.open.contains(h)) cert.head_misses_open = false;
  return cert;
}

AnchoredCofiniteSpace::AnchoredCofiniteSpace(UPSet a, std::uint64_t b) : a_(std::move(a)), b_(b) {
  if (a_.is_finite()) fail(errc::precondition_violated, "base set must be infinite");
  if (a_.is_cofinite()) fail(errc::precondition_violated, "base set must have infinite complement");
  if (a_.contains(b_)) fail(errc::precondition_violated, "anchor must lie outside the base set");
  m_ = a_ | UPSet::singleton(b_);
}

bool AnchoredCofiniteSpace::is_closed(const UPSet& s) const {
  if (!s.subset_of(m_)) return false;
  return s.is_finite() || s.contains(b_);
}

bool AnchoredCofiniteSpace::is_open(const UPSet& s) const {
  return s.subset_of(m_) && is_closed(m_ - s);
}

UPSet AnchoredCofiniteSpace::closure_of_point(std::uint64_t x) const {
  if (!m_.contains(x)) fail(errc::bad_point, "point outside the carrier");
  return UPSet::singleton(x);  // singletons are finite, hence closed
}

AnchoredCofiniteSpace::Refutation AnchoredCofiniteSpace::irreducibility_refutation(const UPSet& s) const {
  if (!is_closed(s)) fail(errc::precondition_violated, "refutation requires a closed set");
  UPSet rest = s - UPSet::singleton(s.min());
  if (rest.is_empty()) fail(errc::precondition_violated, "refutation requires at least two points");
  // Split off the least member different from the anchor.
  const std::uint64_t s1 = s.min() == b_ ? rest.min() : s.min();
  const UPSet single = UPSet::singleton(s1);
  Refutation r;
  if (s == (UPSet::singleton(b_) | single)) {
    r.f = single;
    r.g = UPSet::singleton(b_);
  } else {
    r.f = (UPSet::singleton(b_) | single) & s;
    r.g = s - single;
  }
  if (!is_closed(r.f) || !is_closed(r.g)) throw std::logic_error("refutation pieces are not closed");
  if ((r.f | r.g) != s || r.f == s || r.g == s) throw std::logic_error("refutation pieces do not split the set");
  return r;
}

bool AnchoredCofiniteSpace::Certificate::all_ok() const {
  return anchored_closed_sets_valid && singletons_closed && carrier_closed &&
         multipoint_closeds_refuted && base_not_closed;
}

AnchoredCofiniteSpace::Certificate AnchoredCofiniteSpace::sobriety_certificate() const {
  Certificate cert;
  cert.carrier_closed = is_closed(m_);
  cert.base_not_closed = !is_closed(a_);
  cert.singletons_closed = true;
  std::vector<std::uint64_t> pts{b_};
  {
    // First few members of the base set.
    std::uint64_t x = a_.min();
    for (int k = 0; k < 4; ++k) {
      pts.push_back(x);
      std::uint64_t next = x + 1;
      while (!a_.contains(next)) ++next;
      x = next;
    }
  }
  for (std::uint64_t x : pts) {
    if (!is_closed(closure_of_point(x))) cert.singletons_closed = false;
    ++cert.samples;
  }
  // Closure algebra on samples: unions and intersections of closeds stay closed.
  std::vector<UPSet> closeds{m_, UPSet::singleton(b_), UPSet::finite_set({pts[1], pts[2]}),
                             (a_ - UPSet::singleton(pts[1])) | UPSet::singleton(b_)};
  cert.anchored_closed_sets_valid = true;
  for (const auto& f : closeds)
    for (const auto& g : closeds) {
      if (!is_closed(f | g) || !is_closed(f & g)) cert.anchored_closed_sets_valid = false;
      ++cert.samples;
    }
  cert.multipoint_closeds_refuted = true;
  std::vector<UPSet> multi{m_, UPSet::finite_set({pts[1], pts[2]}),
                           UPSet::finite_set({pts[1], pts[2], pts[3]}) | UPSet::singleton(b_),
                           (a_ - UPSet::singleton(pts[1])) | UPSet::singleton(b_),
                           UPSet::singleton(b_) | UPSet::singleton(pts[3])};
  for (const auto& s : multi) {
    const auto r = irreducibility_refutation(s);
    if ((r.f | r.g) != s) cert.multipoint_closeds_refuted = false;
    ++cert.samples;
  }
  return cert;
}

}  // namespace topo
