#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "posetforge/errors.hpp"
#include "posetforge/families.hpp"
#include "posetforge/quotient.hpp"
#include "posetforge/transversal.hpp"

using namespace posetforge;

namespace {

// Raw class relation: X <= Y iff some x in X is below some y in Y.
bool class_leq(const Poset& p, const QuotientMap& q, int X, int Y) {
  for (int x : q.classes[X])
    for (int y : q.classes[Y])
      if (p.leq(x, y)) return true;
  return false;
}

bool homogeneous_oracle(const Poset& p, const QuotientMap& q) {
  if (q.classes[q.class_of[p.zero()]].size() != 1) return false;
  for (int X = 0; X < q.class_count(); ++X)
    for (int Y = 0; Y < q.class_count(); ++Y) {
      if (!class_leq(p, q, X, Y)) continue;
      for (int x : q.classes[X]) {
        bool lifted = false;
        for (int y : q.classes[Y]) lifted |= p.leq(x, y);
        if (!lifted) return false;
      }
    }
  return true;
}

QuotientMap random_map(int n, std::mt19937_64& rng) {
  std::vector<int> value(n);
  const int k = 2 + static_cast<int>(rng() % (n - 1));
  value[0] = 0;
  for (int x = 1; x < n; ++x) value[x] = 1 + static_cast<int>(rng() % (k - 1));
  return QuotientMap::kernel(value);
}

}  // namespace

TEST_CASE("quotient map constructors") {
  auto q = QuotientMap::from_pairs(5, {{1, 3}, {3, 4}});
  CHECK(q.class_count() == 3);
  CHECK(q.class_of[1] == q.class_of[4]);
  CHECK(QuotientMap::kernel({0, 1, 1, 2, 0}).classes ==
        std::vector<std::vector<int>>{{0, 4}, {1, 2}, {3}});
  CHECK(QuotientMap::identity(3).class_count() == 3);
  CHECK_THROWS_AS(QuotientMap::from_classes(3, {{0, 1}, {1, 2}}), PartitionError);
  CHECK_THROWS_AS(QuotientMap::from_classes(3, {{0, 1}}), PartitionError);
  CHECK_THROWS_AS(QuotientMap::from_pairs(3, {{0, 7}}), PartitionError);
}

TEST_CASE("identifying the ends of a 3-chain gives a preorder") {
  Poset c = chain(2);
  auto res = quotient(c, QuotientMap::from_classes(3, {{0, 2}, {1}}));
  REQUIRE(std::holds_alternative<PreorderReport>(res));
  auto rep = std::get<PreorderReport>(res);
  CHECK(rep.class_x != rep.class_y);
  CHECK(rep.message.find("not antisymmetric") != std::string::npos);
}

TEST_CASE("singleton classes give the poset back") {
  Poset t = tamari(4);
  auto res = quotient(t, QuotientMap::identity(t.size()));
  REQUIRE(std::holds_alternative<Quotient>(res));
  const Poset& q = std::get<Quotient>(res).poset;
  CHECK(q.labels() == t.labels());
  for (int x = 0; x < t.size(); ++x) CHECK(q.up(x) == t.up(x));
  CHECK(is_homogeneous(t, QuotientMap::identity(t.size())).homogeneous);
}

TEST_CASE("homogeneity witnesses") {
  Poset b2 = boolean_lattice(2);
  auto r = is_homogeneous(b2, QuotientMap::from_classes(4, {{0, 1}, {2}, {3}}));
  CHECK_FALSE(r.homogeneous);
  REQUIRE(r.witness);
  CHECK(r.witness->condition == 1);
  // 0 < a < c and 0 < b: the class {a, b} sits below {c} only through a.
  Poset v = Poset::from_covers({"0", "a", "b", "c"}, {{0, 1}, {0, 2}, {1, 3}});
  auto s = is_homogeneous(v, QuotientMap::from_classes(4, {{0}, {1, 2}, {3}}));
  CHECK_FALSE(s.homogeneous);
  REQUIRE(s.witness);
  CHECK(s.witness->element == 2);
  CHECK(s.witness->condition == 2);
}

TEST_CASE("summation condition") {
  Poset b2 = boolean_lattice(2);
  // the class {a, b} has lower ideal {0̂, a, b}
  auto sums = summation_condition(b2, QuotientMap::from_classes(4, {{0}, {1, 2}, {3}}));
  REQUIRE(sums.size() == 2);
  bool saw_false = false;
  for (auto& s : sums)
    if (!s.vanishes) {
      saw_false = true;
      CHECK(s.sum == -1);
    }
  CHECK(saw_false);
  auto top = summation_condition(chain(1), QuotientMap::identity(2));
  REQUIRE(top.size() == 1);
  CHECK(top[0].vanishes);
  CHECK_THROWS_AS(summation_condition(b2, QuotientMap::from_classes(4, {{0, 1}, {2}, {3}})),
                  NotHomogeneousError);
}

TEST_CASE("weighted system kernel satisfies summation and the Möbius sum") {
  TransversalSystem sys = weighted3_system();
  const auto& sp = sys.space();
  const int n = static_cast<int>(*sp.size());
  std::vector<std::string> labels;
  for (int t = 0; t < n; ++t) labels.push_back(sp.describe(t, sys.poset()));
  Poset prod = Poset::from_order(labels, [&](int a, int b) { return sp.leq(a, b); });
  QuotientMap k = QuotientMap::kernel(sys.table());
  CHECK(k.class_count() == 10);
  CHECK(is_homogeneous(prod, k).homogeneous);
  for (auto& s : summation_condition(prod, k)) CHECK(s.vanishes);
  CHECK(quotient_moebius_check(prod, k));
}

TEST_CASE("coatom collapse") {
  Poset c = chain(2);
  auto col = collapse_coatom(c, 1);
  CHECK(col.quotient.poset.size() == 2);
  CHECK(moebius(col.quotient.poset)[col.top_class] == -1);
  Poset b2 = boolean_lattice(2);
  auto cb = collapse_coatom(b2, 1);
  CHECK(moebius(cb.quotient.poset)[cb.top_class] == 0);
  Poset b3 = boolean_lattice(3);
  auto c3 = collapse_coatom(b3, b3.index_of("{1,2}"));
  CHECK(moebius(c3.quotient.poset)[c3.top_class] == 0);
  CHECK(is_homogeneous(b3, c3.quotient.map).homogeneous);
  CHECK_THROWS_AS(collapse_coatom(chain(1), 0), TooSmallError);
  CHECK_THROWS_AS(collapse_coatom(b3, b3.index_of("{1}")), NotCoatomError);
  CHECK_THROWS_AS(collapse_coatom(random_poset(5, 0.0, 1), 1), NoMaximumError);
}

TEST_CASE("property: homogeneity matches the definition on random quotients") {
  std::mt19937_64 rng(11);
  int homogeneous = 0;
  for (int round = 0; round < 300; ++round) {
    Poset p = random_poset(7, 0.4, rng());
    QuotientMap q = random_map(p.size(), rng);
    CHECK(is_homogeneous(p, q).homogeneous == homogeneous_oracle(p, q));
    homogeneous += homogeneous_oracle(p, q);
  }
  CHECK(homogeneous > 0);
}

TEST_CASE("property: homogeneous + summation implies mu(X) = sum of mu(x)") {
  std::mt19937_64 rng(5);
  int exercised = 0;
  for (int round = 0; round < 2000 && exercised < 40; ++round) {
    Poset p = random_poset(8, 0.35, rng());
    QuotientMap q = random_map(p.size(), rng);
    if (!homogeneous_oracle(p, q)) continue;
    auto res = quotient(p, q);
    if (!std::holds_alternative<Quotient>(res)) continue;
    bool summation = true;
    for (auto& s : summation_condition(p, q)) summation &= s.vanishes;
    if (!summation) {
      CHECK_THROWS_AS(quotient_moebius_check(p, q), HypothesisError);
      continue;
    }
    ++exercised;
    const Poset& qp = std::get<Quotient>(res).poset;
    auto mq = oracle::mu_from_zero(qp);
    auto mp = oracle::mu_from_zero(p);
    for (int X = 0; X < q.class_count(); ++X) {
      BigInt s = 0;
      for (int x : q.classes[X]) s += mp[x];
      CHECK(mq[X] == s);
    }
    CHECK(quotient_moebius_check(p, q));
  }
  CHECK(exercised > 0);
}
