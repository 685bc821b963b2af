#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "posetforge/errors.hpp"
#include "posetforge/families.hpp"
#include "posetforge/quotient.hpp"
#include "posetforge/transversal.hpp"

using namespace posetforge;

namespace {

bool is_order_iso(const Poset& p, const Poset& q, const std::vector<int>& phi) {
  if (p.size() != q.size() || static_cast<int>(phi.size()) != p.size()) return false;
  std::vector<int> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < p.size(); ++i)
    if (sorted[i] != i) return false;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != q.leq(phi[x], phi[y])) return false;
  return true;
}

// Same order with the elements renumbered by a random permutation; 0̂ stays
// wherever the permutation sends it.
Poset shuffled(const Poset& p, std::uint64_t seed) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(seed));
  std::vector<std::string> labels(p.size());
  for (int x = 0; x < p.size(); ++x) labels[perm[x]] = p.label(x);
  std::vector<Cover> covers;
  for (auto [a, b] : p.cover_pairs()) covers.emplace_back(perm[a], perm[b]);
  return Poset::from_covers(std::move(labels), covers);
}

}  // namespace

TEST_CASE("identity and obvious non-isomorphism") {
  Poset t4 = tamari(4);
  auto phi = is_isomorphic(t4, t4);
  REQUIRE(phi);
  CHECK(is_order_iso(t4, t4, *phi));
  CHECK_FALSE(is_isomorphic(boolean_lattice(2), chain(2)).has_value());
  CHECK_FALSE(is_isomorphic(boolean_lattice(2), chain(3)).has_value());
}

TEST_CASE("shuffled copies are recognised and the map is verified") {
  for (Poset p : {tamari(4), partition_lattice(4), weighted_partitions(3), divisor_lattice(60),
                  random_poset(25, 0.2, 3)}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Poset q = shuffled(p, seed);
      auto phi = is_isomorphic(p, q);
      REQUIRE(phi);
      CHECK(is_order_iso(p, q, *phi));
    }
  }
}

TEST_CASE("posets with equal invariants can still differ") {
  // Two 6-element posets of height 2 with identical degree sequences.
  Poset a = Poset::from_covers({"0", "x", "y", "z", "u", "v"},
                               {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
  Poset b = Poset::from_covers({"0", "x", "y", "z", "u", "v"},
                               {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {1, 5}, {3, 5}});
  CHECK(is_isomorphic(a, b).has_value());  // relabelling x <-> y
  Poset c = Poset::from_covers({"0", "x", "y", "z", "u", "v"},
                               {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {1, 5}, {2, 5}});
  CHECK_FALSE(is_isomorphic(a, c).has_value());
}

TEST_CASE("pentagon equals the quotient of its two-path product by the join") {
  Poset t3 = oracle::pentagon();
  AtomPartition blocks{ElementSet::from_indices(5, {1}), ElementSet::from_indices(5, {2})};
  TransversalSystem sys = join_system(t3, blocks);
  CHECK(sys.space().size() == 12u);
  // Materialize the product order and collapse the join fibers.
  const int n = 12;
  std::vector<std::string> labels;
  for (int t = 0; t < n; ++t) labels.push_back(sys.space().describe(t, t3));
  Poset prod = Poset::from_order(labels, [&](int a, int b) { return sys.space().leq(a, b); });
  auto res = quotient(prod, QuotientMap::kernel(sys.table()));
  REQUIRE(std::holds_alternative<Quotient>(res));
  auto phi = is_isomorphic(std::get<Quotient>(res).poset, t3);
  REQUIRE(phi);
  CHECK(is_order_iso(std::get<Quotient>(res).poset, t3, *phi));
}

TEST_CASE("resource limit") {
  Limits lim;
  lim.isomorphism_elements = 10;
  CHECK_THROWS_AS(is_isomorphic(tamari(4), tamari(4), lim), ResourceLimitError);
}
