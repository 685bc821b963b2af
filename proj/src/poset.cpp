#include "posetforge/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "posetforge/errors.hpp"
#include "posetforge/kernels.hpp"

namespace posetforge {

namespace {

// Kahn's algorithm; throws CycleError naming one vertex left on a cycle.
std::vector<int> topological_order(const std::vector<std::vector<int>>& upper,
                                   const std::vector<std::string>& labels) {
  const std::size_t n = upper.size();
  std::vector<int> indeg(n, 0);
  for (const auto& ys : upper)
    for (int y : ys) ++indeg[y];
  std::queue<int> ready;
  for (std::size_t x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(static_cast<int>(x));
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int x = ready.front();
    ready.pop();
    order.push_back(x);
    for (int y : upper[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (order.size() != n) {
    for (std::size_t x = 0; x < n; ++x)
      if (indeg[x] > 0) throw CycleError("cover relation has a cycle through '" + labels[x] + "'");
  }
  return order;
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels, const std::vector<Cover>& relations) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw NoMinimumError("a poset needs at least one element");
  std::vector<std::vector<int>> upper(n);
  std::set<Cover> seen;
  for (auto [x, y] : relations) {
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw InvalidIndexError("cover (" + std::to_string(x) + "," + std::to_string(y) +
                              ") references an element outside 0.." + std::to_string(n - 1));
    if (x == y) throw CycleError("relation pair (" + labels[x] + "," + labels[x] + ") is a loop");
    if (seen.insert({x, y}).second) upper[x].push_back(y);
  }
  const auto topo = topological_order(upper, labels);

  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = kernels::omp::closure(upper, topo);
  p.finish(&upper);
  return p;
}

Poset Poset::from_up_rows(std::vector<std::string> labels, std::vector<Bitset> up) {
  const std::size_t n = labels.size();
  if (n == 0) throw NoMinimumError("a poset needs at least one element");
  if (up.size() != n) throw InvalidIndexError("order rows do not match label count");
  for (std::size_t x = 0; x < n; ++x) {
    if (up[x].width() != n) throw InvalidIndexError("order row has the wrong width");
    up[x].set(x);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (int y : up[x].to_indices()) {
      if (static_cast<std::size_t>(y) == x) continue;
      if (up[y].test(x))
        throw CycleError("'" + labels[x] + "' and '" + labels[y] + "' are mutually below each other");
      if (!up[y].is_subset_of(up[x]))
        throw InvalidIndexError("order relation is not transitive at '" + labels[x] + "' <= '" +
                                labels[y] + "'");
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.finish(nullptr);
  return p;
}

void Poset::finish(const std::vector<std::vector<int>>* candidates) {
  const int n = size();
  index_.clear();
  index_.reserve(n);
  for (int i = 0; i < n; ++i)
    if (!index_.emplace(labels_[i], i).second)
      throw DuplicateLabelError("duplicate label '" + labels_[i] + "'");

  down_.assign(n, Bitset(n));
  for (int x = 0; x < n; ++x) up_[x].for_each([&](int y) { down_[y].set(x); });

  std::vector<int> zeros;
  for (int x = 0; x < n; ++x)
    if (up_[x].count() == static_cast<std::size_t>(n)) zeros.push_back(x);
  if (zeros.size() != 1) throw NoMinimumError("poset has no minimum element");
  zero_ = zeros.front();

  top_.reset();
  for (int x = 0; x < n; ++x)
    if (down_[x].count() == static_cast<std::size_t>(n)) top_ = x;

  // |down(x)| strictly increases along x < y, so sorting by it is a linear
  // extension; ties broken by index for determinism.
  std::vector<std::size_t> down_count(n);
  for (int x = 0; x < n; ++x) down_count[x] = down_[x].count();
  linear_extension_.resize(n);
  std::iota(linear_extension_.begin(), linear_extension_.end(), 0);
  std::stable_sort(linear_extension_.begin(), linear_extension_.end(),
                   [&](int a, int b) { return down_count[a] < down_count[b]; });

  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  covers_.clear();
  // A cover of a DAG's closure is always one of its generating edges, so when
  // the edges are known only they need testing.
  auto add_if_cover = [&](int x, int y) {
    if (up_[x].intersection_count(down_[y]) == 2) {
      upper_covers_[x].push_back(y);
      lower_covers_[y].push_back(x);
      covers_.emplace_back(x, y);
    }
  };
  for (int x = 0; x < n; ++x) {
    if (candidates != nullptr) {
      std::vector<int> ys = (*candidates)[x];
      std::sort(ys.begin(), ys.end());
      for (int y : ys) add_if_cover(x, y);
    } else {
      up_[x].for_each([&](int y) {
        if (y != x) add_if_cover(x, y);
      });
    }
  }
  std::sort(covers_.begin(), covers_.end());

  level_.assign(n, 0);
  for (int y : linear_extension_)
    for (int x : lower_covers_[y]) level_[y] = std::max(level_[y], level_[x] + 1);
}

std::optional<int> Poset::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Poset::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw InvalidIndexError("no element labelled '" + label + "'");
}

int Poset::require_top() const {
  if (!top_) throw NoMaximumError("poset has no maximum element");
  return *top_;
}

bool Poset::covers(int x, int y) const {
  const auto& ys = upper_covers_[x];
  return std::find(ys.begin(), ys.end(), y) != ys.end();
}

Bitset Poset::full_set() const {
  Bitset b(labels_.size());
  b.set_all();
  return b;
}

// ---------------------------------------------------------------------------

ElementSet atoms(const Poset& p) {
  return Bitset::from_indices(p.size(), p.upper_covers(p.zero()));
}

ElementSet atoms_below(const Poset& p, int x) { return atoms(p) & p.down(x); }

ElementSet coatoms(const Poset& p) {
  return Bitset::from_indices(p.size(), p.lower_covers(p.require_top()));
}

ElementSet maximal_elements(const Poset& p) {
  ElementSet out = p.empty_set();
  for (int x = 0; x < p.size(); ++x)
    if (p.upper_covers(x).empty()) out.set(x);
  return out;
}

ElementSet lower_ideal(const Poset& p, const ElementSet& xs) {
  ElementSet out = p.empty_set();
  xs.for_each([&](int x) { out |= p.down(x); });
  return out;
}

ElementSet upper_set_with_zero(const Poset& p, const ElementSet& as) {
  ElementSet out = p.empty_set();
  as.for_each([&](int a) { out |= p.up(a); });
  out.set(p.zero());
  return out;
}

Poset induced_subposet(const Poset& p, const ElementSet& keep) {
  const auto members = keep.to_indices();
  const std::size_t k = members.size();
  std::vector<std::string> labels;
  labels.reserve(k);
  for (int x : members) labels.push_back(p.label(x));
  std::vector<Bitset> up(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (p.leq(members[i], members[j])) up[i].set(j);
  return Poset::from_up_rows(std::move(labels), std::move(up));
}

Poset interval(const Poset& p, int x, int y) {
  if (!p.leq(x, y))
    throw NotComparableError("interval needs '" + p.label(x) + "' <= '" + p.label(y) + "'");
  return induced_subposet(p, p.up(x) & p.down(y));
}

Poset dual(const Poset& p) {
  p.require_top();
  std::vector<Cover> reversed;
  reversed.reserve(p.cover_pairs().size());
  for (auto [x, y] : p.cover_pairs()) reversed.emplace_back(y, x);
  return Poset::from_covers(p.labels(), reversed);
}

Poset product(const Poset& p, const Poset& q) {
  const int np = p.size(), nq = q.size();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(np) * nq);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  std::vector<Cover> covers;
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b) {
      for (int a2 : p.upper_covers(a)) covers.emplace_back(a * nq + b, a2 * nq + b);
      for (int b2 : q.upper_covers(b)) covers.emplace_back(a * nq + b, a * nq + b2);
    }
  return Poset::from_covers(std::move(labels), covers);
}

// ---------------------------------------------------------------------------

std::optional<int> try_join(const Poset& p, int x, int y) {
  const Bitset common = p.up(x) & p.up(y);
  const std::size_t c = common.count();
  std::optional<int> out;
  common.for_each([&](int z) {
    if (!out && p.up(z).count() == c) out = z;
  });
  return out;
}

std::optional<int> try_meet(const Poset& p, int x, int y) {
  const Bitset common = p.down(x) & p.down(y);
  const std::size_t c = common.count();
  std::optional<int> out;
  common.for_each([&](int z) {
    if (!out && p.down(z).count() == c) out = z;
  });
  return out;
}

int join(const Poset& p, int x, int y) {
  if (auto z = try_join(p, x, y)) return *z;
  throw NotALatticeError("'" + p.label(x) + "' and '" + p.label(y) + "' have no join");
}

int meet(const Poset& p, int x, int y) {
  if (auto z = try_meet(p, x, y)) return *z;
  throw NotALatticeError("'" + p.label(x) + "' and '" + p.label(y) + "' have no meet");
}

bool is_lattice(const Poset& p) {
  const auto table = kernels::omp::join_table(p);
  return std::find(table.begin(), table.end(), -1) == table.end();
}

Lattice::Lattice(const Poset& p)
    : n_(static_cast<std::size_t>(p.size())),
      zero_(p.zero()),
      join_(kernels::omp::join_table(p)),
      top_(-1) {
  for (std::size_t i = 0; i < join_.size(); ++i)
    if (join_[i] < 0)
      throw NotALatticeError("'" + p.label(static_cast<int>(i / n_)) + "' and '" +
                             p.label(static_cast<int>(i % n_)) + "' have no join");
  meet_ = kernels::omp::meet_table(p);
  top_ = p.require_top();
}

int Lattice::join_of(const ElementSet& xs) const {
  int acc = zero_;
  xs.for_each([&](int x) { acc = join(acc, x); });
  return acc;
}

int Lattice::meet_of(const ElementSet& xs) const {
  int acc = top_;
  xs.for_each([&](int x) { acc = meet(acc, x); });
  return acc;
}

// ---------------------------------------------------------------------------

ChainVector chain_count_vector(const Poset& p, int x, int y) {
  if (!p.leq(x, y))
    throw NotComparableError("no chains from '" + p.label(x) + "' to '" + p.label(y) + "'");
  const Bitset span = p.up(x) & p.down(y);
  const std::size_t len = span.count();
  // ways[z][i]: chains x = z_0 < ... < z_i = z
  std::vector<std::vector<BigInt>> ways(p.size());
  for (int z : p.linear_extension()) {
    if (!span.test(z)) continue;
    auto& w = ways[z];
    w.assign(len, 0);
    if (z == x) {
      w[0] = 1;
      continue;
    }
    (p.down(z) & span).for_each([&](int u) {
      if (u == z) return;
      for (std::size_t i = 0; i + 1 < len; ++i)
        if (ways[u][i] != 0) w[i + 1] += ways[u][i];
    });
  }
  ChainVector out{ways[y]};
  while (out.counts.size() > 1 && out.counts.back() == 0) out.counts.pop_back();
  return out;
}

int longest_chain_length(const Poset& p) {
  int best = 0;
  for (int x = 0; x < p.size(); ++x) best = std::max(best, p.level(x));
  return best;
}

}  // namespace posetforge
