#pragma once

#include <vector>

#include "posetforge/bigint.hpp"
#include "posetforge/laurent.hpp"
#include "posetforge/poset.hpp"

namespace posetforge {

/// mu[x] = mu(0̂, x).
struct MoebiusTable {
  std::vector<BigInt> mu;
  const BigInt& operator[](int x) const { return mu[x]; }
};

MoebiusTable moebius(const Poset& p);
BigInt moebius_interval(const Poset& p, int x, int y);

/// A map rho: P -> N. No monotonicity is assumed.
struct RankFn {
  std::vector<int> rho;
  int operator()(int x) const { return rho[x]; }
  int rank_of_poset() const;  // max rho, 0 for the empty map
};

/// Ordered partition of the atoms. Empty blocks are allowed.
using AtomPartition = std::vector<ElementSet>;

/// Throws PartitionError unless the blocks are disjoint and cover atoms(p)
/// exactly.
void validate_atom_partition(const Poset& p, const AtomPartition& blocks);

/// rho(x) = number of blocks containing an atom below x.
RankFn generalized_rank(const Poset& p, const AtomPartition& blocks);

/// Length of saturated 0̂-x chains; throws NotRankedError when two lengths occur.
RankFn classic_rank(const Poset& p);

/// Singleton blocks in atom index order.
AtomPartition singleton_blocks(const Poset& p);

/// chi(P, t) = sum_x mu(x) t^(m - rho(x)); throws RankBoundError if m < rho(P).
LaurentPoly char_poly(const Poset& p, const RankFn& rho, int m);
LaurentPoly char_poly(const Poset& p, const MoebiusTable& mu, const RankFn& rho, int m);

}  // namespace posetforge
