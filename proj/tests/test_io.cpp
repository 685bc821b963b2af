#include <doctest.h>

#include <regex>

#include "oracles.hpp"
#include "posetforge/errors.hpp"
#include "posetforge/families.hpp"
#include "posetforge/io.hpp"

using namespace posetforge;
using io::json;

TEST_CASE("poset JSON round trip") {
  for (Poset p : {tamari(4), weighted_partitions(3), partition_lattice(4), random_poset(30, 0.2, 4),
                  chain(0)}) {
    json j = io::poset_to_json(p);
    Poset q = io::poset_from_json(json::parse(j.dump()));
    CHECK(q == p);
    for (int x = 0; x < p.size(); ++x) CHECK(q.up(x) == p.up(x));
  }
}

TEST_CASE("malformed poset JSON") {
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"covers": []})")), FormatError);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"labels": ["a"], "covers": [[0]]})")),
                  FormatError);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"labels": [1], "covers": []})")), FormatError);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"labels": ["a","b"], "covers": [[0,1],[1,0]]})")),
                  CycleError);
}

TEST_CASE("DOT output has one edge per cover") {
  for (Poset p : {tamari(4), boolean_lattice(3), oracle::pentagon()}) {
    const std::string dot = io::poset_to_dot(p);
    std::regex edge("->");
    auto n = std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge), std::sregex_iterator());
    CHECK(n == static_cast<long>(p.cover_pairs().size()));
    CHECK(dot.find("rankdir=BT") != std::string::npos);
  }
}

TEST_CASE("partitions and numbers") {
  auto q = QuotientMap::from_classes(4, {{0}, {1, 2}, {3}});
  auto back = io::partition_from_json(io::partition_to_json(q), 4);
  CHECK(back.classes == q.classes);
  CHECK_THROWS_AS(io::partition_from_json(json::parse(R"({"classes": [[0, 1]]})"), 3), PartitionError);
  CHECK(io::bigint_to_json(BigInt(-5)) == json(-5));
  CHECK(io::bigint_to_json(BigInt(1) << 80) == json("1208925819614629174706176"));
  auto lj = io::laurent_to_json(shifted_root_product(1, {1, 1}));
  CHECK(lj["3"] == 1);
  CHECK(lj["2"] == -2);
  CHECK(lj["1"] == 1);
}

TEST_CASE("system JSON") {
  Poset p = oracle::pentagon();
  json spec = json::parse(R"({"kind": "complete", "blocks": [[1], [2]], "join": true})");
  auto sys = io::system_from_json(p, spec);
  CHECK(sys.kind() == SystemKind::complete);
  CHECK(*sys.space().size() == 12);
  // Re-read the tabulated form: complete trees from the blocks, f from the table.
  json dumped = json::parse(io::system_to_json(sys).dump());
  auto again = io::system_from_json(p, dumped);
  CHECK(again.table() == sys.table());
  CHECK(again.kind() == sys.kind());
  CHECK(again.partition().has_value());

  json paths = {{"kind", "transversal"}, {"sets", {{0, 1, 4}, {0, 2, 3, 4}}}, {"f", dumped["f"]}};
  auto ps = io::system_from_json(p, paths);
  CHECK(ps.table() == sys.table());
  CHECK(validate_transversal(ps).ok());
  CHECK_THROWS_AS(io::system_from_json(p, json::parse(R"({"kind": "other", "blocks": [[1], [2]], "join": true})")),
                  FormatError);
  CHECK_THROWS_AS(io::system_from_json(p, json::parse(R"({"sets": [[0, 1]], "f": [[[0], 0]]})")),
                  FormatError);
  CHECK_THROWS_AS(io::system_from_json(p, json::parse(R"({"sets": [[0, 1]], "f": [[[5], 0]]})")),
                  InvalidIndexError);
}

TEST_CASE("report JSON") {
  auto w = weighted3_system();
  auto rep = check_theorem_B(w, classic_rank(w.poset()), 2);
  json j = io::report_to_json(rep);
  CHECK(j["theorem"] == "complete factorization");
  CHECK(j["hypotheses_hold"] == false);
  bool found = false;
  for (auto& h : j["hypotheses"])
    if (h["name"] == "unique atom block") {
      found = true;
      CHECK(h["witness"] == "123^1");
    }
  CHECK(found);
  CHECK(io::report_to_text(rep).find("unique atom block") != std::string::npos);
}
