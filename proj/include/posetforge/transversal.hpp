#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posetforge/laurent.hpp"
#include "posetforge/limits.hpp"
#include "posetforge/moebius.hpp"
#include "posetforge/poset.hpp"

namespace posetforge {

/// RT_S: saturated chains from 0̂ inside S ordered by containment.
///
/// Nodes are numbered breadth-first, so a parent precedes its children, node 0
/// is the one-element chain {0̂} and the atoms are nodes 1..atom_count().
/// `top[node]` is the chain's maximum in P. The tree order is the ancestor
/// relation; `tree_poset` materializes it as a Poset when needed.
struct RootedTree {
  std::vector<int> top;
  std::vector<int> parent;  // -1 for the root
  std::vector<int> depth;
  std::vector<std::vector<int>> children;

  int size() const { return static_cast<int>(top.size()); }
  int atom_count() const { return static_cast<int>(children[0].size()); }
  bool is_atom(int node) const { return node != 0 && parent[node] == 0; }
  bool leq(int a, int b) const;
  /// Möbius value: 1 at the root, -1 at atoms, 0 elsewhere.
  int mu(int node) const { return node == 0 ? 1 : (parent[node] == 0 ? -1 : 0); }
  /// The chain of P elements from 0̂ to top[node].
  std::vector<int> chain(int node) const;
};

/// Labels are chains "0 < a < b" written with P's labels.
Poset tree_poset(const RootedTree& tree, const Poset& p);

enum class Saturation { in_poset, in_subposet };

/// Throws ZeroMissingError if 0̂ is not in s, ResourceLimitError when the
/// number of chains exceeds limits.rooted_tree_nodes.
RootedTree rooted_tree(const Poset& p, const ElementSet& s,
                       Saturation reading = Saturation::in_poset,
                       const Limits& limits = default_limits());

/// True when the saturated-in-P and saturated-in-S readings give different
/// chain collections for s.
bool rooted_tree_readings_disagree(const Poset& p, const ElementSet& s);

/// RT over the upper set of `atom_block` together with 0̂. Throws NotAtomsError.
RootedTree complete_tree(const Poset& p, const ElementSet& atom_block,
                         const Limits& limits = default_limits());

/// Product of rooted trees, addressed by mixed-radix tuple index.
///
/// Coordinate 0 is the most significant digit. Because tree nodes are numbered
/// parent-before-child, increasing any coordinate along a tree edge increases
/// the index, so index order is a linear extension of the product order.
///
/// With `atoms_only` each tree is truncated to its root and atoms. The result
/// is the subproduct of atomic tuples, which carries all nonzero Möbius values.
class ProductSpace {
 public:
  ProductSpace() = default;
  explicit ProductSpace(std::vector<RootedTree> trees, bool atoms_only = false);

  bool atoms_only() const { return atoms_only_; }

  int arity() const { return static_cast<int>(trees_.size()); }
  const RootedTree& tree(int i) const { return trees_[i]; }
  const std::vector<RootedTree>& trees() const { return trees_; }

  /// Number of tuples, or nullopt when it overflows size_t.
  std::optional<std::size_t> size() const { return size_; }
  bool fits(const Limits& limits) const {
    return size_ && *size_ <= limits.product_tuples;
  }

  int coord(std::size_t t, int i) const {
    return static_cast<int>((t / stride_[i]) % radix_[i]);
  }
  std::size_t with_coord(std::size_t t, int i, int node) const {
    return t + (static_cast<std::size_t>(node) - coord(t, i)) * stride_[i];
  }
  std::vector<int> decode(std::size_t t) const;
  std::size_t encode(std::span<const int> nodes) const;

  bool leq(std::size_t a, std::size_t b) const;
  int support_size(std::size_t t) const;
  bool is_atomic(std::size_t t) const;
  /// Möbius value in the product: product of the tree values.
  int mu(std::size_t t) const;

  /// All tuples whose coordinates are atoms or roots, in increasing index.
  std::vector<std::size_t> atomic_tuples() const;

  /// "(a, 0̂)" using top labels of P.
  std::string describe(std::size_t t, const Poset& p) const;

 private:
  std::vector<RootedTree> trees_;
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> stride_;
  std::optional<std::size_t> size_ = 1;
  bool atoms_only_ = false;
};

enum class SystemKind { transversal, complete };

/// A product of rooted trees together with a map f into P.
///
/// f is tabulated over every tuple of the space. Join-rule systems (f(t) = ∨ t
/// on a lattice) whose full product exceeds the tuple cap are built over the
/// atomic subproduct instead; checks that need the full product are then
/// reported as skipped.
class TransversalSystem {
 public:
  static TransversalSystem tabulated(Poset p, std::vector<RootedTree> trees,
                                     std::vector<int> f, SystemKind kind,
                                     std::optional<AtomPartition> partition = std::nullopt);

  const Poset& poset() const { return poset_; }
  const ProductSpace& space() const { return space_; }
  SystemKind kind() const { return kind_; }
  const std::optional<AtomPartition>& partition() const { return partition_; }
  bool uses_join_rule() const { return join_rule_; }

  bool atoms_only() const { return space_.atoms_only(); }
  const std::vector<int>& table() const { return table_; }
  int f(std::size_t t) const { return table_[t]; }

  /// Same trees and kind with a replaced table (for building variants).
  TransversalSystem with_table(std::vector<int> f) const;

 private:
  friend TransversalSystem join_system(const Poset& lattice, const AtomPartition& blocks,
                                       const Limits& limits);
  explicit TransversalSystem(Poset p) : poset_(std::move(p)) {}

  Poset poset_;
  ProductSpace space_;
  SystemKind kind_ = SystemKind::transversal;
  std::optional<AtomPartition> partition_;
  std::vector<int> table_;
  bool join_rule_ = false;
};

/// Complete system on a lattice: complete trees over the blocks, f = join.
TransversalSystem join_system(const Poset& lattice, const AtomPartition& blocks,
                              const Limits& limits = default_limits());

// ---- Fibers ----------------------------------------------------------------

std::vector<std::size_t> fibers(const TransversalSystem& sys, int x);
std::vector<std::size_t> atomic_fibers(const TransversalSystem& sys, int x);

// ---- Checks -----------------------------------------------------------------

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  CheckStatus status = CheckStatus::passed;
  std::string witness;  // empty when passed
  std::string detail;

  bool passed() const { return status == CheckStatus::passed; }
  bool failed() const { return status == CheckStatus::failed; }
};

struct Validation {
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Order preserving, surjective, trivial zero fiber.
Validation validate_transversal(const TransversalSystem& sys);
/// Order preserving and constant tuples map to their value, plus the derived
/// consequences: surjectivity, trivial zero fiber, t_j <= f(t).
Validation validate_complete(const TransversalSystem& sys);

struct LowerIdealSum {
  BigInt direct;   // sum of mu over L(T_x) in the product
  BigInt formula;  // prod (1 - N_i)
  bool equal() const { return direct == formula; }
};

/// Throws NotCompleteError for non-complete systems.
LowerIdealSum lower_ideal_mu_sum(const TransversalSystem& sys, int x);
/// f-free variant: L(T_x) taken as the atomic tuples of the complete-tree
/// product with every coordinate <= x.
LowerIdealSum lower_ideal_mu_sum(const Poset& p, const AtomPartition& blocks, int x);

struct TheoremReport {
  std::string theorem;
  std::vector<CheckResult> hypotheses;
  std::vector<CheckResult> conclusions;
  LaurentPoly chi;
  LaurentPoly factored;
  int m = 0;
  int n = 0;

  bool hypotheses_hold() const;
  bool conclusions_hold() const;  // every conclusion passed or skipped
  const CheckResult* first_failure() const;
};

/// Transversal factorization theorem for an arbitrary rooted-tree system.
TheoremReport check_theorem_A(const TransversalSystem& sys, const RankFn& rho, int m,
                              const Limits& limits = default_limits());
/// Complete-system factorization theorem; blocks come from the system.
TheoremReport check_theorem_B(const TransversalSystem& sys, const RankFn& rho, int m,
                              const Limits& limits = default_limits());

struct IffReport {
  std::vector<CheckResult> hypotheses;
  bool factorization_holds = false;
  bool unique_block_holds = false;
  std::optional<int> witness_rank;  // k = min rho over T when factorization fails
  BigInt chi_coefficient;           // of t^(m-k)
  BigInt factored_coefficient;
  LaurentPoly chi;
  LaurentPoly factored;

  bool agree() const { return factorization_holds == unique_block_holds; }
};

/// Throws HypothesisError naming the failed hypothesis.
IffReport check_theorem_iff(const TransversalSystem& sys, const RankFn& rho, int m);

// ---- Atomic complex ---------------------------------------------------------

/// Faces are the atomic tuples of L(T_x), a complex closed under replacing
/// coordinates by 0̂; facets are the atomic transversals T_x^a.
struct AtomicComplex {
  std::vector<std::size_t> faces;
  std::vector<int> face_dims;  // |supp| - 1, so the empty face has -1
  std::vector<std::size_t> facets;
  std::vector<int> facet_dims;
};

AtomicComplex atomic_complex(const TransversalSystem& sys, int x);
BigInt reduced_euler(const AtomicComplex& cx);
bool is_pure(const AtomicComplex& cx, int d);

}  // namespace posetforge
