#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posetforge/poset.hpp"
#include "posetforge/transversal.hpp"

namespace posetforge {

// Generators throw SizeLimitError when the element count would exceed the
// family's default cap, or POSET_FORGE_CAP when that variable is set.

// ---- Standard lattices --------------------------------------------------

Poset boolean_lattice(int n);       // subsets of {1..n}, labels "{}", "{1,3}"
Poset chain(int k);                 // 0 < 1 < ... < k
Poset divisor_lattice(long n);      // divisors of n under divisibility
Poset partition_lattice(int n);     // set partitions of {1..n}, labels "12/3"
Poset rank_two_lattice(int atoms);  // M_n: 0 < a1..an < 1

// ---- Tamari lattices ----------------------------------------------------

/// A full binary bracketing of x1..x(k+1), stored as a preorder code:
/// true for an internal node, false for a leaf.
struct Paren {
  std::vector<bool> code;

  int size() const;  // number of internal nodes
  std::string to_string() const;  // "((x1x2)(x3x4))"
  static Paren parse(const std::string& s);  // throws FormatError
  friend auto operator<=>(const Paren&, const Paren&) = default;
};

std::vector<Paren> all_parens(int n);
/// Parens covering p: one rotation ((AB)C) -> (A(BC)) at some node.
std::vector<Paren> rotations(const Paren& p);

using LBVector = std::vector<int>;

bool is_lb_vector(const LBVector& v);
LBVector left_bracket_vector(const Paren& p);
std::string lb_label(const LBVector& v);  // "(1,1,3)"

/// Bracketings of x1..x(n+1) under rotation; labels from Paren::to_string.
Poset tamari(int n);
/// Valid left-bracket vectors of length n under the componentwise order.
Poset tamari_vectors(int n);
/// ±1 when 2^k2 3^k3 ... n^kn is square free, else 0.
int tamari_mobius_formula(const LBVector& v);

// ---- m-Tamari -----------------------------------------------------------

/// N/E words from (0,0) to (mn, n) whose prefixes satisfy m * #N >= #E.
std::vector<std::string> ballot_paths(int m, int n);
/// Ballot paths where Q covers P when Q swaps an E with the shortest balanced
/// factor of P that starts at the following N. The minimum is found by search.
Poset m_tamari(int m, int n);
std::uint64_t fuss_catalan(int m, int n);

// ---- Weighted partitions ------------------------------------------------

struct WeightedPartition {
  std::vector<std::vector<int>> blocks;  // sorted blocks, ordered by minimum
  std::vector<int> weights;

  std::string to_string() const;  // "12^0/3^0"
  friend bool operator==(const WeightedPartition&, const WeightedPartition&) = default;
};

std::vector<WeightedPartition> all_weighted_partitions(int n);
/// Direct order test: b coarsens a and each block of b made from k blocks of a
/// carries weight sum + d with d in {0, ..., k-1}.
bool weighted_leq(const WeightedPartition& a, const WeightedPartition& b);
/// Built from two-block merges and closed transitively.
Poset weighted_partitions(int n);

/// The two-star system on weighted partitions of {1,2,3}: S_1 holds 12^0/3^0,
/// 13^0/2^0, 12^1/3^0 and S_2 holds 1^0/23^0, 13^1/2^0, 1^0/23^1 (each with
/// 0̂). A pair with a 0̂ maps to its other entry and a pair of atoms maps to
/// 123^w with w the sum of their weights. The blocks are recorded as the
/// system's partition.
TransversalSystem weighted3_system();

// ---- Random test posets -------------------------------------------------

/// 0̂ below a random DAG on n - 1 further elements.
Poset random_poset(int n, double density, std::uint64_t seed);
/// Intersection-closed family of subsets of a ground set, with the full set;
/// a lattice under inclusion.
Poset random_lattice(int ground, int generators, std::uint64_t seed);

}  // namespace posetforge
