#include "toposcope/sets.hpp"

#include <algorithm>

namespace topo {

std::string set_to_string(Mask a) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < 32; ++x) {
    if (!(a >> x & 1u)) continue;
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  out += "}";
  return out;
}

void canonical_sort(std::vector<Mask>& sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

FamilyMask close_family(FamilyMask f) {
  // Fixpoint under pairwise union and intersection. New members are queued so
  // each pair is combined a bounded number of times; at most 64 members.
  Mask worklist[64];
  int wn = 0;
  for (int s = 0; s < 64; ++s)
    if (f >> s & 1u) worklist[wn++] = static_cast<Mask>(s);
  for (int i = 0; i < wn; ++i) {
    const Mask a = worklist[i];
    for (int j = 0; j <= i; ++j) {
      const Mask b = worklist[j];
      const Mask u = a | b, v = a & b;
      if (!(f >> u & 1u)) {
        f |= FamilyMask{1} << u;
        worklist[wn++] = u;
      }
      if (!(f >> v & 1u)) {
        f |= FamilyMask{1} << v;
        worklist[wn++] = v;
      }
    }
  }
  return f;
}

std::vector<Mask> family_members(FamilyMask f) {
  std::vector<Mask> out;
  for (int s = 0; s < 64; ++s)
    if (f >> s & 1u) out.push_back(static_cast<Mask>(s));
  canonical_sort(out);
  return out;
}

}  // namespace topo
