#include "labeled_scan.hpp"

#include <bit>

namespace kfg {
namespace detail {

Topology topology_from_neighbourhoods(int n, const std::vector<Code>& nbhd) {
  std::vector<Code> point_cl(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (nbhd[x] >> y & 1) point_cl[y] |= Code(1) << x;
  std::vector<Code> table(size_t(1) << n, 0);
  for (Code s = 1; s < table.size(); ++s) {
    Code low = s & (~s + 1);
    table[s] = table[s ^ low] | point_cl[std::countr_zero(low)];
  }
  return Topology(n, std::move(table));
}

namespace {

void scan(int n, int x, std::vector<Code>& nbhd,
          const std::function<void(const Topology&)>& fn) {
  if (x == n) {
    fn(topology_from_neighbourhoods(n, nbhd));
    return;
  }
  const Code full = universe_mask(n);
  for (Code mask = 0; mask <= full; ++mask) {
    if (!(mask >> x & 1)) continue;
    bool ok = true;
    for (int y = 0; y < x && ok; ++y) {
      if ((mask >> y & 1) && (nbhd[y] & ~mask)) ok = false;
      if ((nbhd[y] >> x & 1) && (mask & ~nbhd[y])) ok = false;
    }
    if (!ok) continue;
    nbhd[x] = mask;
    scan(n, x + 1, nbhd, fn);
  }
}

}  // namespace

void for_each_labeled_preorder(int n, const std::function<void(const Topology&)>& fn) {
  std::vector<Code> nbhd(n, 0);
  scan(n, 0, nbhd, fn);
}

}  // namespace detail
}  // namespace kfg
