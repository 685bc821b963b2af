#include "posetforge/quotient.hpp"

#include <algorithm>
#include <map>

#include <boost/pending/disjoint_sets.hpp>

#include "posetforge/errors.hpp"

namespace posetforge {

QuotientMap QuotientMap::from_classes(int n, std::vector<std::vector<int>> classes) {
  QuotientMap q;
  q.class_of.assign(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto& members = classes[c];
    if (members.empty()) throw PartitionError("class " + std::to_string(c) + " is empty");
    std::sort(members.begin(), members.end());
    for (int x : members) {
      if (x < 0 || x >= n) throw PartitionError("class member " + std::to_string(x) + " out of range");
      if (q.class_of[x] >= 0)
        throw PartitionError("element " + std::to_string(x) + " appears in two classes");
      q.class_of[x] = static_cast<int>(c);
    }
  }
  for (int x = 0; x < n; ++x)
    if (q.class_of[x] < 0) throw PartitionError("element " + std::to_string(x) + " is in no class");
  q.classes = std::move(classes);
  return q;
}

QuotientMap QuotientMap::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> rank(n), parent(n);
  boost::disjoint_sets<int*, int*> sets(rank.data(), parent.data());
  for (int x = 0; x < n; ++x) sets.make_set(x);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw PartitionError("pair references an unknown element");
    sets.union_set(a, b);
  }
  std::vector<int> root(n);
  for (int x = 0; x < n; ++x) root[x] = sets.find_set(x);
  return kernel(root);
}

QuotientMap QuotientMap::kernel(const std::vector<int>& value) {
  std::map<int, int> id;
  std::vector<std::vector<int>> classes;
  for (std::size_t x = 0; x < value.size(); ++x) {
    auto [it, fresh] = id.try_emplace(value[x], static_cast<int>(classes.size()));
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(static_cast<int>(x));
  }
  return from_classes(static_cast<int>(value.size()), std::move(classes));
}

QuotientMap QuotientMap::identity(int n) {
  std::vector<int> v(n);
  for (int x = 0; x < n; ++x) v[x] = x;
  return kernel(v);
}

namespace {

void check_map(const Poset& p, const QuotientMap& q) {
  if (q.class_of.size() != static_cast<std::size_t>(p.size()))
    throw PartitionError("quotient map does not cover the poset");
}

std::vector<Bitset> member_sets(const Poset& p, const QuotientMap& q) {
  std::vector<Bitset> out(q.class_count(), p.empty_set());
  for (int c = 0; c < q.class_count(); ++c)
    for (int x : q.classes[c]) out[c].set(x);
  return out;
}

// X <= Y iff some x in X lies below some y in Y.
std::vector<Bitset> raw_class_relation(const Poset& p, const QuotientMap& q) {
  const int k = q.class_count();
  std::vector<Bitset> rel(k, Bitset(k));
  for (int c = 0; c < k; ++c)
    for (int x : q.classes[c]) p.up(x).for_each([&](int y) { rel[c].set(q.class_of[y]); });
  return rel;
}

std::string class_label(const Poset& p, const std::vector<int>& members) {
  if (members.size() == 1) return p.label(members.front());
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    s += p.label(members[i]);
  }
  return s + "}";
}

}  // namespace

std::variant<Quotient, PreorderReport> quotient(const Poset& p, const QuotientMap& q) {
  check_map(p, q);
  const int k = q.class_count();
  auto rel = raw_class_relation(p, q);
  for (int z = 0; z < k; ++z)
    for (int c = 0; c < k; ++c)
      if (rel[c].test(z)) rel[c] |= rel[z];
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (rel[a].test(b) && rel[b].test(a))
        return PreorderReport{a, b,
                              "classes " + class_label(p, q.classes[a]) + " and " +
                                  class_label(p, q.classes[b]) +
                                  " are each below the other: the relation is reflexive and "
                                  "transitive but not antisymmetric"};
  std::vector<std::string> labels;
  labels.reserve(k);
  for (const auto& members : q.classes) labels.push_back(class_label(p, members));
  return Quotient{Poset::from_up_rows(std::move(labels), std::move(rel)), q};
}

HomogeneityResult is_homogeneous(const Poset& p, const QuotientMap& q) {
  check_map(p, q);
  const int zc = q.class_of[p.zero()];
  if (q.classes[zc].size() != 1) {
    const int other = q.classes[zc].front() == p.zero() ? q.classes[zc][1] : q.classes[zc].front();
    return {false, HomogeneityWitness{1, zc, -1, other}};
  }
  const auto members = member_sets(p, q);
  const auto rel = raw_class_relation(p, q);
  for (int a = 0; a < q.class_count(); ++a) {
    for (int b : rel[a].to_indices()) {
      for (int x : q.classes[a])
        if (!p.up(x).intersects(members[b])) return {false, HomogeneityWitness{2, a, b, x}};
    }
  }
  return {true, std::nullopt};
}

std::vector<ClassSum> summation_condition(const Poset& p, const MoebiusTable& mu,
                                          const QuotientMap& q) {
  if (!is_homogeneous(p, q).homogeneous)
    throw NotHomogeneousError("summation condition needs a homogeneous quotient");
  const auto members = member_sets(p, q);
  const int zc = q.class_of[p.zero()];
  std::vector<ClassSum> out;
  for (int c = 0; c < q.class_count(); ++c) {
    if (c == zc) continue;
    BigInt sum = 0;
    lower_ideal(p, members[c]).for_each([&](int y) { sum += mu[y]; });
    out.push_back({c, sum, sum == 0});
  }
  return out;
}

std::vector<ClassSum> summation_condition(const Poset& p, const QuotientMap& q) {
  return summation_condition(p, moebius(p), q);
}

bool quotient_moebius_check(const Poset& p, const QuotientMap& q) {
  const auto h = is_homogeneous(p, q);
  if (!h.homogeneous)
    throw HypothesisError("quotient is not homogeneous (condition " +
                          std::to_string(h.witness->condition) + ")");
  const auto mu = moebius(p);
  for (const auto& s : summation_condition(p, mu, q))
    if (!s.vanishes)
      throw HypothesisError("summation condition fails for class " + std::to_string(s.class_id));
  auto result = quotient(p, q);
  // Homogeneous quotients of finite posets are posets.
  const auto& quo = std::get<Quotient>(result);
  const auto mu_q = moebius(quo.poset);
  for (int c = 0; c < q.class_count(); ++c) {
    BigInt sum = 0;
    for (int x : q.classes[c]) sum += mu[x];
    if (sum != mu_q[c]) return false;
  }
  return true;
}

CoatomCollapse collapse_coatom(const Poset& p, int c) {
  if (p.size() < 3) throw TooSmallError("coatom collapse needs at least 3 elements");
  const int top = p.require_top();
  if (!p.covers(c, top)) throw NotCoatomError("'" + p.label(c) + "' is not a coatom");
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < p.size(); ++x)
    if (x != c && x != top) classes.push_back({x});
  classes.push_back({c, top});
  auto q = QuotientMap::from_classes(p.size(), std::move(classes));
  auto result = quotient(p, q);
  auto& quo = std::get<Quotient>(result);
  const int top_class = q.class_of[top];
  return CoatomCollapse{std::move(quo), top_class};
}

}  // namespace posetforge
