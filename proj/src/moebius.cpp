#include "posetforge/moebius.hpp"

#include <algorithm>

#include "posetforge/errors.hpp"
#include "posetforge/kernels.hpp"

namespace posetforge {

MoebiusTable moebius(const Poset& p) { return MoebiusTable{kernels::omp::moebius(p)}; }

BigInt moebius_interval(const Poset& p, int x, int y) {
  if (!p.leq(x, y))
    throw NotComparableError("mu(x, y) needs '" + p.label(x) + "' <= '" + p.label(y) + "'");
  const Bitset span = p.up(x) & p.down(y);
  std::vector<BigInt> mu(p.size());
  for (int z : p.linear_extension()) {
    if (!span.test(z)) continue;
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    BigInt acc = 0;
    (p.down(z) & span).for_each([&](int u) {
      if (u != z) acc += mu[u];
    });
    mu[z] = -acc;
  }
  return mu[y];
}

int RankFn::rank_of_poset() const {
  return rho.empty() ? 0 : *std::max_element(rho.begin(), rho.end());
}

void validate_atom_partition(const Poset& p, const AtomPartition& blocks) {
  const ElementSet all = atoms(p);
  ElementSet seen = p.empty_set();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.width() != static_cast<std::size_t>(p.size()))
      throw PartitionError("block " + std::to_string(i) + " has the wrong width");
    if (!b.is_subset_of(all)) {
      const int bad = static_cast<int>((b - all).find_first());
      throw PartitionError("block " + std::to_string(i) + " contains non-atom '" + p.label(bad) + "'");
    }
    if (b.intersects(seen)) {
      const int bad = static_cast<int>((b & seen).find_first());
      throw PartitionError("atom '" + p.label(bad) + "' appears in two blocks");
    }
    seen |= b;
  }
  if (!(seen == all)) {
    const int bad = static_cast<int>((all - seen).find_first());
    throw PartitionError("atom '" + p.label(bad) + "' is in no block");
  }
}

RankFn generalized_rank(const Poset& p, const AtomPartition& blocks) {
  validate_atom_partition(p, blocks);
  RankFn r;
  r.rho.resize(p.size());
  const ElementSet all = atoms(p);
  for (int x = 0; x < p.size(); ++x) {
    const ElementSet below = all & p.down(x);
    int k = 0;
    for (const auto& b : blocks)
      if (b.intersects(below)) ++k;
    r.rho[x] = k;
  }
  return r;
}

RankFn classic_rank(const Poset& p) {
  std::vector<int> shortest(p.size(), 0), longest(p.size(), 0);
  for (int y : p.linear_extension()) {
    if (y == p.zero()) continue;
    shortest[y] = -1;
    for (int x : p.lower_covers(y)) {
      shortest[y] = shortest[y] < 0 ? shortest[x] + 1 : std::min(shortest[y], shortest[x] + 1);
      longest[y] = std::max(longest[y], longest[x] + 1);
    }
    if (shortest[y] != longest[y])
      throw NotRankedError("saturated chains to '" + p.label(y) + "' have lengths " +
                           std::to_string(shortest[y]) + " and " + std::to_string(longest[y]));
  }
  return RankFn{longest};
}

AtomPartition singleton_blocks(const Poset& p) {
  AtomPartition out;
  atoms(p).for_each([&](int a) {
    ElementSet b = p.empty_set();
    b.set(a);
    out.push_back(std::move(b));
  });
  return out;
}

LaurentPoly char_poly(const Poset& p, const MoebiusTable& mu, const RankFn& rho, int m) {
  if (rho.rho.size() != static_cast<std::size_t>(p.size()))
    throw InvalidIndexError("rank function size does not match the poset");
  if (m < rho.rank_of_poset())
    throw RankBoundError("m = " + std::to_string(m) + " is below rho(P) = " +
                         std::to_string(rho.rank_of_poset()));
  LaurentPoly chi;
  for (int x = 0; x < p.size(); ++x) chi.add_term(mu[x], m - rho(x));
  return chi;
}

LaurentPoly char_poly(const Poset& p, const RankFn& rho, int m) {
  return char_poly(p, moebius(p), rho, m);
}

}  // namespace posetforge
