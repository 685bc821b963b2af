#include <algorithm>

#include "posetforge/kernels.hpp"
#include "posetforge/poset.hpp"
#include "posetforge/transversal.hpp"

namespace posetforge::kernels::serial {

std::vector<Bitset> closure(std::span<const std::vector<int>> upper, std::span<const int> topo) {
  const std::size_t n = upper.size();
  std::vector<Bitset> up(n, Bitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int x = *it;
    up[x].set(x);
    for (int y : upper[x]) up[x] |= up[y];
  }
  return up;
}

std::vector<BigInt> moebius(const Poset& p) {
  std::vector<BigInt> mu(p.size());
  for (int x : p.linear_extension()) {
    if (x == p.zero()) {
      mu[x] = 1;
      continue;
    }
    BigInt acc = 0;
    p.down(x).for_each([&](int y) {
      if (y != x) acc += mu[y];
    });
    mu[x] = -acc;
  }
  return mu;
}

namespace {

template <bool Up>
int least_bound(const Poset& p, int x, int y) {
  const Bitset common = Up ? (p.up(x) & p.up(y)) : (p.down(x) & p.down(y));
  const std::size_t c = common.count();
  for (std::size_t z = common.find_first(); z != Bitset::npos; z = common.find_next(z)) {
    const Bitset& row = Up ? p.up(static_cast<int>(z)) : p.down(static_cast<int>(z));
    if (row.count() == c) return static_cast<int>(z);
  }
  return -1;
}

}  // namespace

std::vector<int> join_table(const Poset& p) {
  const int n = p.size();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x) * n + y] = least_bound<true>(p, x, y);
  return t;
}

std::vector<int> meet_table(const Poset& p) {
  const int n = p.size();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x) * n + y] = least_bound<false>(p, x, y);
  return t;
}

std::vector<int> evaluate_join_rule(const ProductSpace& space,
                                    std::span<const std::vector<int>> tops,
                                    std::span<const int> join_table, int n, int zero) {
  const std::size_t count = space.size().value();
  std::vector<int> f(count);
  for (std::size_t t = 0; t < count; ++t) {
    int acc = zero;
    for (int i = 0; i < space.arity(); ++i)
      acc = join_table[static_cast<std::size_t>(acc) * n + tops[i][space.coord(t, i)]];
    f[t] = acc;
  }
  return f;
}

}  // namespace posetforge::kernels::serial
