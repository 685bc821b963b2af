#pragma once

#include <vector>

#include "posetforge/transversal.hpp"

namespace posetforge::detail {

// reach[s] = f-values of all tuples t >= s, filled in decreasing index order.
std::vector<Bitset> reach(const TransversalSystem& sys);

// For each atomic tuple s (in atomic_tuples() order) the set of x with
// s in L(T_x). Uses `reach` on full products and the coordinate test
// t_i <= x on atoms-only complete systems.
std::vector<Bitset> atomic_lower_ideal_rows(const TransversalSystem& sys,
                                            const std::vector<std::size_t>& atomic);

std::string element_list(const Poset& p, const std::vector<int>& xs);

}  // namespace posetforge::detail
