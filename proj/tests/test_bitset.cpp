#include <doctest.h>

#include <random>
#include <set>

#include "posetforge/bitset.hpp"

using posetforge::Bitset;

TEST_CASE("set, reset, count across word boundaries") {
  Bitset b(130);
  CHECK(b.none());
  b.set(0);
  b.set(63);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 4);
  CHECK(b.test(64));
  b.reset(64);
  CHECK_FALSE(b.test(64));
  CHECK(b.to_indices() == std::vector<int>{0, 63, 129});
  CHECK(b.find_first() == 0);
  CHECK(b.find_next(0) == 63);
  CHECK(b.find_next(63) == 129);
  CHECK(b.find_next(129) == Bitset::npos);
}

TEST_CASE("set_all respects the width") {
  Bitset b(70);
  b.set_all();
  CHECK(b.count() == 70);
  b.clear();
  CHECK(b.none());
}

TEST_CASE("set algebra agrees with std::set") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const int w = 1 + static_cast<int>(rng() % 200);
    std::set<int> sa, sb;
    Bitset a(w), b(w);
    for (int i = 0; i < w; ++i) {
      if (rng() % 3 == 0) sa.insert(i), a.set(i);
      if (rng() % 3 == 0) sb.insert(i), b.set(i);
    }
    std::set<int> u, in, d;
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(u, u.end()));
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(in, in.end()));
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(d, d.end()));
    auto vec = [](const std::set<int>& s) { return std::vector<int>(s.begin(), s.end()); };
    CHECK((a | b).to_indices() == vec(u));
    CHECK((a & b).to_indices() == vec(in));
    CHECK((a - b).to_indices() == vec(d));
    CHECK(a.intersection_count(b) == in.size());
    CHECK(a.intersects(b) == !in.empty());
    CHECK(a.is_subset_of(b) == std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
    std::vector<int> seen;
    a.for_each([&](int i) { seen.push_back(i); });
    CHECK(seen == vec(sa));
    CHECK(Bitset::from_indices(w, vec(sa)) == a);
  }
}
