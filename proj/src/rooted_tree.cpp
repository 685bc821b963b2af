#include <algorithm>
#include <string>

#include "posetforge/errors.hpp"
#include "posetforge/transversal.hpp"

namespace posetforge {

bool RootedTree::leq(int a, int b) const {
  while (depth[b] > depth[a]) b = parent[b];
  return a == b;
}

std::vector<int> RootedTree::chain(int node) const {
  std::vector<int> out;
  for (int v = node; v >= 0; v = parent[v]) out.push_back(top[v]);
  std::reverse(out.begin(), out.end());
  return out;
}

Poset tree_poset(const RootedTree& tree, const Poset& p) {
  std::vector<std::string> labels(tree.size());
  std::vector<Cover> covers;
  for (int v = 0; v < tree.size(); ++v) {
    if (tree.parent[v] < 0) {
      labels[v] = p.label(tree.top[v]);
    } else {
      labels[v] = labels[tree.parent[v]] + " < " + p.label(tree.top[v]);
      covers.emplace_back(tree.parent[v], v);
    }
  }
  return Poset::from_covers(std::move(labels), covers);
}

namespace {

// Elements of s that cover x, either in P or in the induced order on s.
std::vector<int> steps(const Poset& p, const ElementSet& s, int x, Saturation reading) {
  std::vector<int> out;
  if (reading == Saturation::in_poset) {
    for (int y : p.upper_covers(x))
      if (s.test(y)) out.push_back(y);
    return out;
  }
  Bitset above = p.up(x) & s;
  above.reset(x);
  above.for_each([&](int y) {
    if (p.down(y).intersection_count(above) == 1) out.push_back(y);
  });
  return out;
}

}  // namespace

RootedTree rooted_tree(const Poset& p, const ElementSet& s, Saturation reading,
                       const Limits& limits) {
  if (!s.test(p.zero())) throw ZeroMissingError("the set must contain the minimum element");
  RootedTree t;
  t.top.push_back(p.zero());
  t.parent.push_back(-1);
  t.depth.push_back(0);
  t.children.emplace_back();
  for (std::size_t v = 0; v < t.top.size(); ++v) {
    for (int y : steps(p, s, t.top[v], reading)) {
      if (t.top.size() >= limits.rooted_tree_nodes)
        throw ResourceLimitError("rooted tree exceeds " + std::to_string(limits.rooted_tree_nodes) +
                                 " chains");
      const int node = static_cast<int>(t.top.size());
      t.top.push_back(y);
      t.parent.push_back(static_cast<int>(v));
      t.depth.push_back(t.depth[v] + 1);
      t.children.emplace_back();
      t.children[v].push_back(node);
    }
  }
  return t;
}

bool rooted_tree_readings_disagree(const Poset& p, const ElementSet& s) {
  auto chains = [&](Saturation r) {
    const auto t = rooted_tree(p, s, r);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < t.size(); ++v) out.push_back(t.chain(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  return chains(Saturation::in_poset) != chains(Saturation::in_subposet);
}

RootedTree complete_tree(const Poset& p, const ElementSet& atom_block, const Limits& limits) {
  if (!atom_block.is_subset_of(atoms(p)))
    throw NotAtomsError("block contains an element that is not an atom");
  return rooted_tree(p, upper_set_with_zero(p, atom_block), Saturation::in_poset, limits);
}

}  // namespace posetforge
