#include <algorithm>

#include "posetforge/kernels.hpp"
#include "posetforge/poset.hpp"
#include "posetforge/transversal.hpp"

namespace posetforge::kernels::omp {

namespace {

// Groups vertices into antichain layers by longest path, measured from the
// sinks (from_top) or from the sources.
std::vector<std::vector<int>> layers(std::span<const std::vector<int>> upper,
                                     std::span<const int> topo, bool from_top) {
  const std::size_t n = upper.size();
  std::vector<int> depth(n, 0);
  int deepest = 0;
  if (from_top) {
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
      for (int y : upper[*it]) depth[*it] = std::max(depth[*it], depth[y] + 1);
  } else {
    for (int x : topo)
      for (int y : upper[x]) depth[y] = std::max(depth[y], depth[x] + 1);
  }
  for (int d : depth) deepest = std::max(deepest, d);
  std::vector<std::vector<int>> out(n == 0 ? 0 : deepest + 1);
  for (int x : topo) out[depth[x]].push_back(x);
  return out;
}

}  // namespace

std::vector<Bitset> closure(std::span<const std::vector<int>> upper, std::span<const int> topo) {
  const std::size_t n = upper.size();
  std::vector<Bitset> up(n, Bitset(n));
  for (const auto& layer : layers(upper, topo, /*from_top=*/true)) {
    const auto m = static_cast<std::ptrdiff_t>(layer.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < m; ++k) {
      const int x = layer[k];
      up[x].set(x);
      for (int y : upper[x]) up[x] |= up[y];
    }
  }
  return up;
}

std::vector<BigInt> moebius(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> by_level;
  for (int x : p.linear_extension()) {
    const auto lv = static_cast<std::size_t>(p.level(x));
    if (by_level.size() <= lv) by_level.resize(lv + 1);
    by_level[lv].push_back(x);
  }
  std::vector<BigInt> mu(n);
  mu[p.zero()] = 1;
  // Everything strictly below x has a smaller level, so each level is an
  // independent batch.
  for (std::size_t lv = 1; lv < by_level.size(); ++lv) {
    const auto& layer = by_level[lv];
    const auto m = static_cast<std::ptrdiff_t>(layer.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < m; ++k) {
      const int x = layer[k];
      BigInt acc = 0;
      p.down(x).for_each([&](int y) {
        if (y != x) acc += mu[y];
      });
      mu[x] = -acc;
    }
  }
  return mu;
}

namespace {

template <bool Up>
std::vector<int> bound_table(const Poset& p) {
  const int n = p.size();
  std::vector<std::size_t> row_count(n);
  for (int z = 0; z < n; ++z) row_count[z] = Up ? p.up(z).count() : p.down(z).count();
  std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
#pragma omp parallel for schedule(dynamic, 4)
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Bitset common = Up ? (p.up(x) & p.up(y)) : (p.down(x) & p.down(y));
      const std::size_t c = common.count();
      for (std::size_t z = common.find_first(); z != Bitset::npos; z = common.find_next(z)) {
        if (row_count[z] == c) {
          t[static_cast<std::size_t>(x) * n + y] = static_cast<int>(z);
          break;
        }
      }
    }
  }
  return t;
}

}  // namespace

std::vector<int> join_table(const Poset& p) { return bound_table<true>(p); }
std::vector<int> meet_table(const Poset& p) { return bound_table<false>(p); }

std::vector<int> evaluate_join_rule(const ProductSpace& space,
                                    std::span<const std::vector<int>> tops,
                                    std::span<const int> join_table, int n, int zero) {
  const auto count = static_cast<std::ptrdiff_t>(space.size().value());
  std::vector<int> f(count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    int acc = zero;
    for (int i = 0; i < space.arity(); ++i)
      acc = join_table[static_cast<std::size_t>(acc) * n +
                       tops[i][space.coord(static_cast<std::size_t>(t), i)]];
    f[t] = acc;
  }
  return f;
}

}  // namespace posetforge::kernels::omp
