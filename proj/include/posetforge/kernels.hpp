#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version and
// an OpenMP version with identical results; the library calls the OpenMP
// versions, tests compare the two, and bench/ times them.

#include <span>
#include <vector>

#include "posetforge/bigint.hpp"
#include "posetforge/bitset.hpp"

namespace posetforge {

class Poset;
class ProductSpace;

namespace kernels {

// closure: reflexive-transitive closure of a DAG given as upper adjacency
//   lists; `topo` lists vertices with every edge pointing forward.
// moebius: mu(0̂, x) for every x.
// join_table / meet_table: n*n row-major, -1 where no bound exists.
// evaluate_join_rule: f(t) = join of coordinate top labels for every tuple of
//   the product; tops[i][node] is the element of P labelling a tree node.

namespace serial {
std::vector<Bitset> closure(std::span<const std::vector<int>> upper, std::span<const int> topo);
std::vector<BigInt> moebius(const Poset& p);
std::vector<int> join_table(const Poset& p);
std::vector<int> meet_table(const Poset& p);
std::vector<int> evaluate_join_rule(const ProductSpace& space,
                                    std::span<const std::vector<int>> tops,
                                    std::span<const int> join_table, int n, int zero);
}  // namespace serial

namespace omp {
std::vector<Bitset> closure(std::span<const std::vector<int>> upper, std::span<const int> topo);
std::vector<BigInt> moebius(const Poset& p);
std::vector<int> join_table(const Poset& p);
std::vector<int> meet_table(const Poset& p);
std::vector<int> evaluate_join_rule(const ProductSpace& space,
                                    std::span<const std::vector<int>> tops,
                                    std::span<const int> join_table, int n, int zero);
}  // namespace omp

}  // namespace kernels
}  // namespace posetforge
