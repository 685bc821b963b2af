#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "posetforge/moebius.hpp"
#include "posetforge/poset.hpp"

namespace posetforge {

/// An equivalence relation on a poset, stored as an explicit class partition.
struct QuotientMap {
  std::vector<int> class_of;              // element -> class id
  std::vector<std::vector<int>> classes;  // class id -> members (ascending)

  int class_count() const { return static_cast<int>(classes.size()); }

  /// Throws PartitionError unless `classes` partitions 0..n-1.
  static QuotientMap from_classes(int n, std::vector<std::vector<int>> classes);
  /// Smallest equivalence containing the given pairs (union-find).
  static QuotientMap from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  /// Classes are the fibers of `value`, in order of first appearance.
  static QuotientMap kernel(const std::vector<int>& value);
  static QuotientMap identity(int n);
};

/// The class relation of a quotient that fails to be antisymmetric.
struct PreorderReport {
  int class_x;
  int class_y;  // X <= Y and Y <= X with X != Y
  std::string message;
};

struct Quotient {
  Poset poset;  // element i of `poset` is class i of `map`
  QuotientMap map;
};

/// Classes ordered by X <= Y iff x <= y for some x in X, y in Y (transitively
/// closed). Returns a PreorderReport when that relation is not antisymmetric.
std::variant<Quotient, PreorderReport> quotient(const Poset& p, const QuotientMap& q);

struct HomogeneityWitness {
  int condition;  // 1 or 2
  int class_x;
  int class_y;    // -1 for condition 1
  int element;    // offending x in X
};

struct HomogeneityResult {
  bool homogeneous;
  std::optional<HomogeneityWitness> witness;
};

HomogeneityResult is_homogeneous(const Poset& p, const QuotientMap& q);

struct ClassSum {
  int class_id;
  BigInt sum;     // sum of mu over L(X)
  bool vanishes;
};

/// One entry per nonzero class; throws NotHomogeneousError.
std::vector<ClassSum> summation_condition(const Poset& p, const QuotientMap& q);
std::vector<ClassSum> summation_condition(const Poset& p, const MoebiusTable& mu,
                                          const QuotientMap& q);

/// Checks mu(X) = sum_{x in X} mu(x) for every class against the quotient's own
/// Möbius table. Throws HypothesisError when the quotient is not homogeneous
/// or the summation condition fails.
bool quotient_moebius_check(const Poset& p, const QuotientMap& q);

struct CoatomCollapse {
  Quotient quotient;
  int top_class;  // [1̂] = {c, 1̂}
};

/// Identifies the coatom c with 1̂. Throws TooSmallError (|P| < 3),
/// NoMaximumError, NotCoatomError.
CoatomCollapse collapse_coatom(const Poset& p, int c);

}  // namespace posetforge
