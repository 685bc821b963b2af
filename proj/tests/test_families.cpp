#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "oracles.hpp"
#include "posetforge/errors.hpp"
#include "posetforge/families.hpp"
#include "posetforge/moebius.hpp"

using namespace posetforge;

namespace {

std::uint64_t catalan_rec(int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[n];
}

// Restricted growth strings of length n.
std::vector<std::vector<int>> rgs(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  if (n > 0) rec(rec, 1, 0);
  return out;
}

bool iso(const Poset& a, const Poset& b) { return is_isomorphic(a, b).has_value(); }

}  // namespace

TEST_CASE("standard lattices") {
  CHECK(boolean_lattice(0).size() == 1);
  CHECK(boolean_lattice(4).size() == 16);
  CHECK(chain(3).label(3) == "3");
  Poset b3 = boolean_lattice(3);
  CHECK(moebius(b3)[*b3.top()] == -1);
  Poset d12 = divisor_lattice(12);
  CHECK(d12.size() == 6);
  CHECK(moebius(d12)[d12.index_of("12")] == 0);
  CHECK(moebius(d12)[d12.index_of("6")] == 1);
  for (int n = 1; n <= 5; ++n) CHECK(partition_lattice(n).size() == static_cast<int>(rgs(n).size()));
  Poset pi3 = partition_lattice(3);
  CHECK(char_poly(pi3, classic_rank(pi3), 2) == shifted_root_product(0, {1, 2}));
  Poset m3 = rank_two_lattice(3);
  CHECK(m3.size() == 5);
  CHECK(moebius(m3)[*m3.top()] == 2);
  CHECK_THROWS_AS(boolean_lattice(20), SizeLimitError);
}

TEST_CASE("divisor lattices match divisibility") {
  for (long n : {1L, 2L, 30L, 36L, 60L, 97L}) {
    Poset d = divisor_lattice(n);
    for (int x = 0; x < d.size(); ++x)
      for (int y = 0; y < d.size(); ++y) {
        long a = std::stol(d.label(x)), b = std::stol(d.label(y));
        CHECK(d.leq(x, y) == (b % a == 0));
      }
  }
}

TEST_CASE("partition lattice order is refinement") {
  Poset p = partition_lattice(4);
  CHECK(p.label(p.zero()) == "1/2/3/4");
  CHECK(p.label(*p.top()) == "1234");
  auto blocks = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == '/') out.push_back(cur), cur.clear();
      else cur += c;
    }
    out.push_back(cur);
    return out;
  };
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      bool refines = true;
      for (auto& bx : blocks(p.label(x))) {
        bool inside = false;
        for (auto& by : blocks(p.label(y)))
          inside |= std::all_of(bx.begin(), bx.end(), [&](char c) { return by.find(c) != std::string::npos; });
        refines &= inside;
      }
      CHECK(p.leq(x, y) == refines);
    }
}

TEST_CASE("bracketings") {
  auto p = Paren::parse("((x1x2)(x3x4))");
  CHECK(p.size() == 3);
  CHECK(p.to_string() == "((x1x2)(x3x4))");
  CHECK(left_bracket_vector(p) == LBVector{1, 1, 3});
  CHECK(left_bracket_vector(Paren::parse("(((x1x2)x3)x4)")) == LBVector{1, 1, 1});
  CHECK(left_bracket_vector(Paren::parse("(x1(x2(x3x4)))")) == LBVector{1, 2, 3});
  CHECK(lb_label({1, 1, 3}) == "(1,1,3)");
  CHECK_THROWS_AS(Paren::parse("((x1x2)"), FormatError);
  CHECK_THROWS_AS(Paren::parse("(x2x1)"), FormatError);
  CHECK(rotations(Paren::parse("(((x1x2)x3)x4)")).size() == 2);
  CHECK(rotations(Paren::parse("(x1(x2(x3x4)))")).empty());
}

TEST_CASE("Catalan counts and the vector encoding") {
  for (int n = 1; n <= 7; ++n) {
    auto all = all_parens(n);
    CHECK(all.size() == catalan_rec(n));
    std::set<LBVector> vs;
    for (auto& p : all) {
      CHECK(Paren::parse(p.to_string()) == p);
      auto v = left_bracket_vector(p);
      CHECK(is_lb_vector(v));
      vs.insert(v);
    }
    CHECK(vs.size() == all.size());
  }
  CHECK(tamari(1).size() == 1);
  CHECK(tamari(3).size() == 5);
  CHECK(tamari(4).size() == 14);
  CHECK(iso(tamari(3), oracle::pentagon()));
  CHECK_FALSE(is_lb_vector({1, 2, 2, 3}));  // [2,3] and [3,4] overlap
  CHECK(is_lb_vector({1, 2, 2}));
  CHECK_FALSE(is_lb_vector({1, 3}));
}

TEST_CASE("the vector order is the rotation order") {
  for (int n = 1; n <= 5; ++n) {
    Poset t = tamari(n);
    Poset v = tamari_vectors(n);
    REQUIRE(v.size() == t.size());
    // explicit map through the vector of each bracketing
    for (int x = 0; x < t.size(); ++x)
      for (int y = 0; y < t.size(); ++y) {
        int vx = v.index_of(lb_label(left_bracket_vector(Paren::parse(t.label(x)))));
        int vy = v.index_of(lb_label(left_bracket_vector(Paren::parse(t.label(y)))));
        CHECK(t.leq(x, y) == v.leq(vx, vy));
      }
  }
}

TEST_CASE("joins of vectors are componentwise maxima") {
  Poset v = tamari_vectors(5);
  auto parse = [](const std::string& s) {
    LBVector out;
    int cur = 0;
    for (char c : s.substr(1)) {
      if (std::isdigit(static_cast<unsigned char>(c))) cur = cur * 10 + (c - '0');
      else out.push_back(cur), cur = 0;
    }
    return out;
  };
  Lattice l(v);
  for (int x = 0; x < v.size(); ++x)
    for (int y = 0; y < v.size(); ++y) {
      auto a = parse(v.label(x)), b = parse(v.label(y));
      LBVector m(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
      CHECK(v.label(l.join(x, y)) == lb_label(m));
    }
  Poset v3 = tamari_vectors(3);
  CHECK(v3.label(join(v3, v3.index_of("(1,1,3)"), v3.index_of("(1,2,2)"))) == "(1,2,3)");
}

TEST_CASE("Möbius formula on small Tamari lattices") {
  CHECK(tamari_mobius_formula({1, 1, 1}) == 1);
  CHECK(tamari_mobius_formula({1, 2, 3}) == 1);
  CHECK(tamari_mobius_formula({1, 2, 2}) == 0);
  CHECK(tamari_mobius_formula({1, 1, 3}) == -1);
  for (int n = 2; n <= 5; ++n) {
    Poset v = tamari_vectors(n);
    auto mu = oracle::mu_from_zero(v);
    for (int x = 0; x < v.size(); ++x) {
      LBVector w;
      for (char c : v.label(x))
        if (std::isdigit(static_cast<unsigned char>(c))) w.push_back(c - '0');
      CHECK(tamari_mobius_formula(w) == mu[x]);
    }
  }
}

TEST_CASE("ballot paths and m-Tamari") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n) {
      // brute force over all words with the right letter counts
      std::uint64_t count = 0;
      const int len = n + m * n;
      for (std::uint64_t mask = 0; mask < (1ULL << len); ++mask) {
        if (__builtin_popcountll(mask) != n) continue;
        int north = 0, east = 0;
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) {
          if (mask >> i & 1) ++north;
          else ++east;
          ok = east <= m * north;
        }
        count += ok;
      }
      CHECK(ballot_paths(m, n).size() == count);
      CHECK(fuss_catalan(m, n) == count);
    }
  CHECK(m_tamari(2, 2).size() == 3);
  CHECK(m_tamari(2, 3).size() == 12);
  for (int n = 1; n <= 4; ++n) CHECK(iso(m_tamari(1, n), tamari(n)));
  Poset mt = m_tamari(2, 3);
  CHECK(mt.top().has_value());
  CHECK(is_lattice(mt));
}

TEST_CASE("weighted partitions") {
  for (int n = 1; n <= 5; ++n) {
    // one weight choice per element of {0..|B|-1} for every block
    std::uint64_t expected = 0;
    for (auto& a : rgs(n)) {
      std::map<int, int> size;
      for (int v : a) ++size[v];
      std::uint64_t prod = 1;
      for (auto [b, s] : size) prod *= s;
      expected += prod;
    }
    CHECK(all_weighted_partitions(n).size() == expected);
  }
  CHECK(weighted_partitions(4).size() == 41);
  CHECK(weighted_partitions(1).size() == 1);
  Poset w2 = weighted_partitions(2);
  CHECK(w2.size() == 3);
  CHECK(char_poly(w2, classic_rank(w2), 1) == LaurentPoly::linear(2));
  CHECK(weighted3_system().poset() == weighted_partitions(3));
}

TEST_CASE("the weighted order generated by merges equals the direct test") {
  for (int n = 1; n <= 4; ++n) {
    auto all = all_weighted_partitions(n);
    Poset w = weighted_partitions(n);
    for (auto& a : all)
      for (auto& b : all)
        CHECK(w.leq(w.index_of(a.to_string()), w.index_of(b.to_string())) == weighted_leq(a, b));
  }
}

TEST_CASE("environment cap") {
  ::setenv("POSET_FORGE_CAP", "10", 1);
  CHECK_THROWS_AS(tamari(4), SizeLimitError);
  CHECK(tamari(3).size() == 5);
  ::unsetenv("POSET_FORGE_CAP");
  CHECK(tamari(4).size() == 14);
}

TEST_CASE("random generators are deterministic") {
  CHECK(random_poset(20, 0.3, 9) == random_poset(20, 0.3, 9));
  CHECK(random_lattice(5, 6, 9) == random_lattice(5, 6, 9));
  for (std::uint64_t s = 1; s <= 10; ++s) CHECK(is_lattice(random_lattice(5, 6, s)));
}
