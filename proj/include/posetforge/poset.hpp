#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetforge/bigint.hpp"
#include "posetforge/bitset.hpp"
#include "posetforge/limits.hpp"

namespace posetforge {

using Cover = std::pair<int, int>;  // (lower, upper)

/// A finite poset with a minimum element.
///
/// Elements are dense indices 0..n-1 with a side table of labels. The order
/// relation is stored once as two bit-rows per element (up-set and down-set)
/// and the object is immutable after construction, so every query is a pure
/// read and may be shared across threads.
class Poset {
 public:
  /// Builds from an arbitrary generating relation: `relations` may contain
  /// non-cover pairs, which are dropped by transitive reduction.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<Cover>& relations);

  /// Builds from a complete order predicate leq(i, j).
  template <typename Leq>
  static Poset from_order(std::vector<std::string> labels, Leq&& leq) {
    const std::size_t n = labels.size();
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i == j || leq(static_cast<int>(i), static_cast<int>(j))) up[i].set(j);
    return from_up_rows(std::move(labels), std::move(up));
  }

  /// Builds from reflexive up-set rows; validates they form a partial order.
  static Poset from_up_rows(std::vector<std::string> labels, std::vector<Bitset> up);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(const std::string& label) const;
  int index_of(const std::string& label) const;  // throws InvalidIndexError

  int zero() const { return zero_; }
  std::optional<int> top() const { return top_; }
  int require_top() const;  // throws NoMaximumError

  bool leq(int x, int y) const { return up_[x].test(y); }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  bool covers(int x, int y) const;  // x ⋖ y

  const Bitset& up(int x) const { return up_[x]; }
  const Bitset& down(int x) const { return down_[x]; }
  const std::vector<int>& upper_covers(int x) const { return upper_covers_[x]; }
  const std::vector<int>& lower_covers(int x) const { return lower_covers_[x]; }
  const std::vector<Cover>& cover_pairs() const { return covers_; }

  /// Elements sorted so that x < y implies x appears before y.
  const std::vector<int>& linear_extension() const { return linear_extension_; }
  /// Length of the longest chain from the minimum to x.
  int level(int x) const { return level_[x]; }

  Bitset empty_set() const { return Bitset(labels_.size()); }
  Bitset full_set() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.covers_ == b.covers_;
  }

 private:
  Poset() = default;
  void finish(const std::vector<std::vector<int>>* candidates);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::vector<int>> upper_covers_;
  std::vector<std::vector<int>> lower_covers_;
  std::vector<Cover> covers_;
  std::vector<int> linear_extension_;
  std::vector<int> level_;
  int zero_ = 0;
  std::optional<int> top_;
};

// ---- Structural queries -------------------------------------------------

ElementSet atoms(const Poset& p);
ElementSet atoms_below(const Poset& p, int x);
ElementSet coatoms(const Poset& p);  // requires a maximum
ElementSet maximal_elements(const Poset& p);
ElementSet lower_ideal(const Poset& p, const ElementSet& xs);
ElementSet upper_set_with_zero(const Poset& p, const ElementSet& as);

// ---- Constructions ------------------------------------------------------

Poset interval(const Poset& p, int x, int y);
/// Induced order on `keep`, which must contain a unique minimal element.
Poset induced_subposet(const Poset& p, const ElementSet& keep);
Poset dual(const Poset& p);
Poset product(const Poset& p, const Poset& q);

// ---- Lattice operations -------------------------------------------------

std::optional<int> try_join(const Poset& p, int x, int y);
std::optional<int> try_meet(const Poset& p, int x, int y);
int join(const Poset& p, int x, int y);  // throws NotALatticeError
int meet(const Poset& p, int x, int y);
bool is_lattice(const Poset& p);

/// Precomputed join and meet tables; construction throws NotALatticeError.
class Lattice {
 public:
  explicit Lattice(const Poset& p);
  int size() const { return static_cast<int>(n_); }
  int join(int x, int y) const { return join_[x * n_ + y]; }
  int meet(int x, int y) const { return meet_[x * n_ + y]; }
  int join_of(const ElementSet& xs) const;  // join of the empty set is 0̂
  int meet_of(const ElementSet& xs) const;  // meet of the empty set is 1̂
  int zero() const { return zero_; }
  int top() const { return top_; }

 private:
  std::size_t n_;
  int zero_;
  std::vector<int> join_;
  std::vector<int> meet_;
  int top_;
};

// ---- Chains ------------------------------------------------------------

/// counts[i] = number of chains x = z_0 < z_1 < ... < z_i = y.
struct ChainVector {
  std::vector<BigInt> counts;
};

ChainVector chain_count_vector(const Poset& p, int x, int y);
int longest_chain_length(const Poset& p);

// ---- Isomorphism --------------------------------------------------------

/// Returns an order isomorphism p -> q (as image indices) if one exists.
/// Throws ResourceLimitError above `limits.isomorphism_elements`.
std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q,
                                              const Limits& limits = default_limits());

}  // namespace posetforge
