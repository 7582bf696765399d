#include "toposcope/preorder.hpp"

#include <utility>

namespace topo {

Preorder::Preorder(int n, std::vector<Mask> up) : n_(n), up_(std::move(up)) {
  check_ground(n_);
  if (static_cast<int>(up_.size()) != n_) fail(errc::bad_set, "up-set table size mismatch");
  for (int x = 0; x < n_; ++x) {
    check_subset(n_, up_[x]);
    if (!(up_[x] >> x & 1u)) fail(errc::bad_set, "relation not reflexive at " + std::to_string(x));
  }
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (up_[x] >> y & 1u)
        if ((up_[y] & ~up_[x]) != 0) fail(errc::bad_set, "relation not transitive at " + std::to_string(x) + "<=" + std::to_string(y));
}

Preorder Preorder::discrete(int n) {
  check_ground(n);
  std::vector<Mask> up(n);
  for (int x = 0; x < n; ++x) up[x] = Mask{1} << x;
  return Preorder(n, std::move(up));
}

Preorder Preorder::chain(int n) {
  check_ground(n);
  std::vector<Mask> up(n);
  for (int x = 0; x < n; ++x) up[x] = full_mask(n) & ~((Mask{1} << x) - 1u);
  return Preorder(n, std::move(up));
}

bool Preorder::leq(int x, int y) const {
  check_point(n_, x);
  check_point(n_, y);
  return up_[x] >> y & 1u;
}

Mask Preorder::up_set(int x) const {
  check_point(n_, x);
  return up_[x];
}

Mask Preorder::down_set(int y) const {
  check_point(n_, y);
  Mask d = 0;
  for (int x = 0; x < n_; ++x)
    if (up_[x] >> y & 1u) d |= Mask{1} << x;
  return d;
}

bool Preorder::antisymmetric() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if ((up_[x] >> y & 1u) && (up_[y] >> x & 1u)) return false;
  return true;
}

std::uint64_t Preorder::encode() const {
  std::uint64_t bits = 0;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (up_[x] >> y & 1u) bits |= std::uint64_t{1} << (x * n_ + y);
  return bits;
}

Poset::Poset(Preorder p) : p_(std::move(p)) {
  if (!p_.antisymmetric()) fail(errc::bad_set, "relation is not antisymmetric");
}

}  // namespace topo
