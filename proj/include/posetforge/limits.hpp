#pragma once

#include <cstddef>
#include <optional>

namespace posetforge {

// Size caps. Defaults are compiled in; the POSET_FORGE_CAP environment
// variable, when set to a positive integer, replaces the element-count caps
// of the family generators and the isomorphism search.
struct Limits {
  std::size_t isomorphism_elements = 2000;
  std::size_t product_tuples = 1'000'000;
  std::size_t rooted_tree_nodes = 200'000;
  std::size_t crosscut_chains = 200'000;
  std::size_t crosscut_results = 64;
  std::size_t crosscut_size = 24;
};

const Limits& default_limits();

// Element-count override from POSET_FORGE_CAP, if any.
std::optional<std::size_t> env_element_cap();

}  // namespace posetforge
