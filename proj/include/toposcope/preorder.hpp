#pragma once

#include <cstdint>
#include <vector>

#include "toposcope/sets.hpp"

namespace topo {

// Reflexive transitive relation on {0,...,n-1}, stored as up-set rows:
// up(x) = {y : x <= y}. Validated on construction.
class Preorder {
 public:
  Preorder(int n, std::vector<Mask> up);

  static Preorder discrete(int n);  // equality only (an antichain)
  static Preorder chain(int n);     // 0 <= 1 <= ... <= n-1

  int ground_size() const { return n_; }
  bool leq(int x, int y) const;
  Mask up_set(int x) const;    // {y : x <= y}
  Mask down_set(int y) const;  // {x : x <= y}
  bool antisymmetric() const;

  // Row-major bit encoding: bit x*n+y is set iff x <= y. Enumeration streams
  // preorders in increasing encode() order.
  std::uint64_t encode() const;

  bool operator==(const Preorder& o) const { return n_ == o.n_ && up_ == o.up_; }

 private:
  int n_;
  std::vector<Mask> up_;
};

// A preorder whose relation is antisymmetric.
class Poset {
 public:
  explicit Poset(Preorder p);

  int ground_size() const { return p_.ground_size(); }
  bool leq(int x, int y) const { return p_.leq(x, y); }
  Mask up_set(int x) const { return p_.up_set(x); }
  Mask down_set(int y) const { return p_.down_set(y); }
  const Preorder& relation() const { return p_; }

  bool operator==(const Poset& o) const { return p_ == o.p_; }

 private:
  Preorder p_;
};

}  // namespace topo
