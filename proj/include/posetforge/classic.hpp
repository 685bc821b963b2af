#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetforge/moebius.hpp"
#include "posetforge/poset.hpp"
#include "posetforge/transversal.hpp"

namespace posetforge {

struct EqualityCheck {
  BigInt lhs;
  BigInt rhs;
  bool equal() const { return lhs == rhs; }
};

// ---- Hall, Weisner, crosscut ------------------------------------------------

/// mu(x, y) against the alternating sum of chain counts.
EqualityCheck hall_check(const Poset& p, int x, int y);

/// mu(1̂) against -sum of mu(x) over x != 1̂ with x ∨ a = 1̂.
/// Throws NotALatticeError; InvalidIndexError when a = 0̂.
EqualityCheck weisner_check(const Poset& lattice, int a);

/// Throws NotACrosscutError naming a maximal chain that misses c, or the
/// offending element when c is not an antichain inside P minus {0̂, 1̂}.
void validate_crosscut(const Poset& lattice, const ElementSet& c);

/// Atoms, coatoms, then further crosscuts from a backtracking search, at most
/// limits.crosscut_results in total and each of at most limits.crosscut_size
/// elements. Empty for lattices with fewer than 3 elements.
std::vector<ElementSet> find_crosscuts(const Poset& lattice,
                                       const Limits& limits = default_limits());

/// mu(1̂) against the sum of (-1)^|B| over B ⊆ c with ∨B = 1̂ and ∧B = 0̂.
EqualityCheck crosscut_check(const Poset& lattice, const ElementSet& c);

/// Chains 0̂ -> 1̂ split by whether they pass through the coatom c.
struct ChainSplit {
  std::vector<BigInt> all;      // c_i
  std::vector<BigInt> avoiding; // a_i
  std::vector<BigInt> through;  // b_i
  bool holds() const;           // c_i = a_i + b_i for every i
};

ChainSplit hall_chain_split(const Poset& p, int coatom);

// ---- Coatom collapse ------------------------------------------------------

struct CoatomLemmaCheck {
  BigInt mu_class;  // mu([1̂]) in the quotient
  BigInt mu_c;
  BigInt mu_top;
  bool iso_to_deletion = false;  // quotient ≅ P minus {c}
  bool lattice = false;          // P is a lattice
  bool joins_preserved = true;   // [x] ∨ [y] = [x ∨ y]
  bool meets_preserved = true;   // [x] ∧ [y] = [x ∧ y] when neither is [1̂]
  bool moebius_holds() const { return mu_class == mu_c + mu_top; }
  bool holds() const { return moebius_holds() && iso_to_deletion && joins_preserved && meets_preserved; }
};

CoatomLemmaCheck coatom_lemma_check(const Poset& p, int coatom);

// ---- Left modularity and LL lattices ---------------------------------------

/// y ∨ (x ∧ z) = (y ∨ x) ∧ z for all y <= z.
bool is_left_modular(const Poset& lattice, int x);

/// Throws InvalidIndexError unless mc runs weakly upward from 0̂ to 1̂.
void validate_multichain(const Poset& p, const std::vector<int>& mc);
bool is_saturated(const Poset& p, const std::vector<int>& mc);

/// A_i = atoms below x_i and not below x_(i-1), for i = 1..len-1.
AtomPartition induced_partition(const Poset& p, const std::vector<int>& mc);

struct ConditionResult {
  bool holds = true;
  std::string witness;  // element or atom sequence
};

ConditionResult meet_condition(const Poset& lattice, const std::vector<int>& mc);
ConditionResult level_condition(const Poset& lattice, const std::vector<int>& mc);

struct LLResult {
  bool left_modular = false;
  bool saturated = false;
  ConditionResult level;
  bool ll() const { return left_modular && level.holds; }
};

LLResult is_ll(const Poset& lattice, const std::vector<int>& mc);

/// A maximal 0̂-1̂ chain of left-modular elements, if any.
std::optional<std::vector<int>> find_left_modular_chain(const Poset& lattice);

/// Requires an LL lattice with a saturated multichain (HypothesisError).
/// Runs the complete factorization check with the join system, generalized
/// rank over the induced partition and m = longest chain.
TheoremReport blass_sagan_check(const Poset& lattice, const std::vector<int>& mc,
                                const Limits& limits = default_limits());

}  // namespace posetforge
