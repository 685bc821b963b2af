#include "posetforge/families.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "family_detail.hpp"
#include "posetforge/errors.hpp"

namespace posetforge {

namespace detail {

void check_family_size(const std::string& family, std::uint64_t count, std::uint64_t default_cap) {
  const std::uint64_t cap = env_element_cap().value_or(default_cap);
  if (count > cap)
    throw SizeLimitError(family + " would have " +
                         (count == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                              : std::to_string(count)) +
                         " elements, above the cap of " + std::to_string(cap));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

namespace {

void require_positive(const char* what, long v, long lo = 1) {
  if (v < lo)
    throw InvalidIndexError(std::string(what) + " must be at least " + std::to_string(lo));
}

std::string subset_label(std::uint64_t mask, int ground) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < ground; ++i)
    if (mask >> i & 1) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

// Restricted growth strings of length n.
std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) out.push_back({});
  else {
    a[0] = 0;
    rec(rec, 1, 1);
  }
  return out;
}

std::vector<std::vector<int>> blocks_of(const std::vector<int>& rgs) {
  int k = 0;
  for (int b : rgs) k = std::max(k, b + 1);
  std::vector<std::vector<int>> blocks(k);
  for (std::size_t i = 0; i < rgs.size(); ++i) blocks[rgs[i]].push_back(static_cast<int>(i) + 1);
  return blocks;
}

std::uint64_t bell(int n) {
  std::vector<std::vector<std::uint64_t>> tri{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> row{tri.back().back()};
    for (auto v : tri.back()) row.push_back(row.back() + v);
    tri.push_back(row);
  }
  return tri[n][0];
}

}  // namespace

Poset boolean_lattice(int n) {
  require_positive("n", n, 0);
  detail::check_family_size("boolean(" + std::to_string(n) + ")",
                            n >= 63 ? std::numeric_limits<std::uint64_t>::max() : 1ULL << n, 4096);
  const std::uint64_t count = 1ULL << n;
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (std::uint64_t s = 0; s < count; ++s) {
    labels.push_back(subset_label(s, n));
    for (int i = 0; i < n; ++i)
      if (!(s >> i & 1)) covers.emplace_back(static_cast<int>(s), static_cast<int>(s | 1ULL << i));
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset chain(int k) {
  require_positive("k", k, 0);
  detail::check_family_size("chain(" + std::to_string(k) + ")", static_cast<std::uint64_t>(k) + 1,
                            100000);
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (int i = 0; i <= k; ++i) {
    labels.push_back(std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset divisor_lattice(long n) {
  require_positive("n", n);
  std::vector<long> divs;
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  detail::check_family_size("divisor(" + std::to_string(n) + ")", divs.size(), 10000);
  std::map<long, int> index;
  std::vector<std::string> labels;
  for (long d : divs) {
    index[d] = static_cast<int>(labels.size());
    labels.push_back(std::to_string(d));
  }
  std::vector<long> primes;
  long rest = n;
  for (long q = 2; q * q <= rest; ++q)
    if (rest % q == 0) {
      primes.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  if (rest > 1) primes.push_back(rest);
  std::vector<Cover> covers;
  for (long d : divs)
    for (long q : primes)
      if ((n / d) % q == 0) covers.emplace_back(index[d], index[d * q]);
  return Poset::from_covers(std::move(labels), covers);
}

Poset partition_lattice(int n) {
  require_positive("n", n);
  detail::check_family_size("partition(" + std::to_string(n) + ")", n > 20 ? ~0ULL : bell(n), 877);
  const auto parts = set_partitions(n);
  std::vector<std::string> labels;
  for (const auto& rgs : parts) {
    std::string s;
    for (const auto& b : blocks_of(rgs)) {
      if (!s.empty()) s += "/";
      for (int x : b) s += std::to_string(x);
    }
    labels.push_back(s);
  }
  return Poset::from_order(std::move(labels), [&](int i, int j) {
    const auto& a = parts[i];
    const auto& b = parts[j];
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (a[x] == a[y] && b[x] != b[y]) return false;
    return true;
  });
}

Poset rank_two_lattice(int atoms) {
  require_positive("atoms", atoms);
  detail::check_family_size("rank-two(" + std::to_string(atoms) + ")",
                            static_cast<std::uint64_t>(atoms) + 2, 100000);
  std::vector<std::string> labels{"0"};
  std::vector<Cover> covers;
  for (int i = 1; i <= atoms; ++i) labels.push_back("a" + std::to_string(i));
  labels.push_back("1");
  for (int i = 1; i <= atoms; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, atoms + 1);
  }
  return Poset::from_covers(std::move(labels), covers);
}

// ---- Weighted partitions ------------------------------------------------

std::string WeightedPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += "/";
    for (int x : blocks[i]) s += std::to_string(x);
    s += "^" + std::to_string(weights[i]);
  }
  return s;
}

namespace {

std::uint64_t weighted_count(int n) {
  // a(n) = sum_k C(n-1, k-1) k a(n-k): the block holding n has k elements and k weights.
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) a[m] += detail::binomial(m - 1, k - 1) * k * a[m - k];
  return a[n];
}

}  // namespace

std::vector<WeightedPartition> all_weighted_partitions(int n) {
  std::vector<WeightedPartition> out;
  for (const auto& rgs : set_partitions(n)) {
    WeightedPartition wp{blocks_of(rgs), {}};
    wp.weights.assign(wp.blocks.size(), 0);
    while (true) {
      out.push_back(wp);
      std::size_t i = wp.blocks.size();
      while (i > 0 && wp.weights[i - 1] + 1 == static_cast<int>(wp.blocks[i - 1].size()))
        wp.weights[--i] = 0;
      if (i == 0) break;
      ++wp.weights[i - 1];
    }
  }
  return out;
}

bool weighted_leq(const WeightedPartition& a, const WeightedPartition& b) {
  std::map<int, int> block_of_b;
  for (std::size_t j = 0; j < b.blocks.size(); ++j)
    for (int x : b.blocks[j]) block_of_b[x] = static_cast<int>(j);
  std::vector<int> merged(b.blocks.size(), 0), weight(b.blocks.size(), 0);
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    const int j = block_of_b.at(a.blocks[i].front());
    for (int x : a.blocks[i])
      if (block_of_b.at(x) != j) return false;
    ++merged[j];
    weight[j] += a.weights[i];
  }
  for (std::size_t j = 0; j < b.blocks.size(); ++j) {
    const int d = b.weights[j] - weight[j];
    if (d < 0 || d > merged[j] - 1) return false;
  }
  return true;
}

Poset weighted_partitions(int n) {
  require_positive("n", n);
  detail::check_family_size("weighted-partition(" + std::to_string(n) + ")",
                            n > 15 ? ~0ULL : weighted_count(n), weighted_count(5));
  const auto all = all_weighted_partitions(n);
  std::map<std::string, int> index;
  std::vector<std::string> labels;
  for (const auto& wp : all) {
    index[wp.to_string()] = static_cast<int>(labels.size());
    labels.push_back(wp.to_string());
  }
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& wp = all[i];
    for (std::size_t a = 0; a < wp.blocks.size(); ++a)
      for (std::size_t b = a + 1; b < wp.blocks.size(); ++b)
        for (int d = 0; d <= 1; ++d) {
          WeightedPartition next;
          std::vector<int> joined = wp.blocks[a];
          joined.insert(joined.end(), wp.blocks[b].begin(), wp.blocks[b].end());
          std::sort(joined.begin(), joined.end());
          for (std::size_t c = 0; c < wp.blocks.size(); ++c) {
            if (c == b) continue;
            next.blocks.push_back(c == a ? joined : wp.blocks[c]);
            next.weights.push_back(c == a ? wp.weights[a] + wp.weights[b] + d : wp.weights[c]);
          }
          covers.emplace_back(static_cast<int>(i), index.at(next.to_string()));
        }
  }
  return Poset::from_covers(std::move(labels), covers);
}

TransversalSystem weighted3_system() {
  Poset p = weighted_partitions(3);
  std::map<std::string, int> weight;
  for (const auto& wp : all_weighted_partitions(3)) {
    int w = 0;
    for (int x : wp.weights) w += x;
    weight[wp.to_string()] = w;
  }
  const std::vector<std::vector<std::string>> names{{"12^0/3^0", "13^0/2^0", "12^1/3^0"},
                                                    {"1^0/23^0", "13^1/2^0", "1^0/23^1"}};
  AtomPartition blocks;
  std::vector<RootedTree> trees;
  for (const auto& group : names) {
    ElementSet b = p.empty_set();
    for (const auto& n : group) b.set(p.index_of(n));
    blocks.push_back(b);
    ElementSet s = b;
    s.set(p.zero());
    trees.push_back(rooted_tree(p, s));
  }
  const ProductSpace space(trees);
  std::vector<int> f(*space.size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    const int x = trees[0].top[space.coord(t, 0)];
    const int y = trees[1].top[space.coord(t, 1)];
    if (x == p.zero()) f[t] = y;
    else if (y == p.zero()) f[t] = x;
    else f[t] = p.index_of("123^" + std::to_string(weight.at(p.label(x)) + weight.at(p.label(y))));
  }
  return TransversalSystem::tabulated(std::move(p), std::move(trees), std::move(f),
                                      SystemKind::transversal, std::move(blocks));
}

// ---- Random ---------------------------------------------------------------

Poset random_poset(int n, double density, std::uint64_t seed) {
  require_positive("n", n);
  detail::check_family_size("random poset", n, 100000);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(density);
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  for (int j = 1; j < n; ++j) {
    covers.emplace_back(0, j);
    for (int i = 1; i < j; ++i)
      if (edge(rng)) covers.emplace_back(i, j);
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset random_lattice(int ground, int generators, std::uint64_t seed) {
  if (ground < 1 || ground > 20) throw InvalidIndexError("ground set size must be in 1..20");
  require_positive("generators", generators, 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, (1ULL << ground) - 1);
  const std::uint64_t full = (1ULL << ground) - 1;
  std::set<std::uint64_t> family{full};
  for (int i = 0; i < generators; ++i) family.insert(pick(rng));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint64_t> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j)
        grew |= family.insert(snapshot[i] & snapshot[j]).second;
    detail::check_family_size("random lattice", family.size(), 5000);
  }
  const std::vector<std::uint64_t> sets(family.begin(), family.end());
  std::vector<std::string> labels;
  for (auto s : sets) labels.push_back(subset_label(s, ground));
  return Poset::from_order(std::move(labels),
                           [&](int i, int j) { return (sets[i] & ~sets[j]) == 0; });
}

}  // namespace posetforge
