#include "posetforge/io.hpp"

#include <limits>
#include <sstream>

#include "posetforge/errors.hpp"

namespace posetforge::io {

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (auto [x, y] : p.cover_pairs()) covers.push_back({x, y});
  return {{"labels", p.labels()}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
  auto labels = get_field<std::vector<std::string>>(j, "labels");
  auto pairs = get_field<std::vector<std::vector<int>>>(j, "covers");
  if (labels.empty()) throw FormatError("a poset needs at least one element");
  std::vector<Cover> covers;
  for (const auto& c : pairs) {
    if (c.size() != 2) throw FormatError("each cover must be a pair [i, j]");
    covers.emplace_back(c[0], c[1]);
  }
  return Poset::from_covers(std::move(labels), covers);
}

std::string poset_to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int x = 0; x < p.size(); ++x)
    out << "  n" << x << " [label=\"" << dot_escape(p.label(x)) << "\"];\n";
  for (auto [x, y] : p.cover_pairs()) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

json partition_to_json(const QuotientMap& q) { return {{"classes", q.classes}}; }

QuotientMap partition_from_json(const json& j, int n) {
  return QuotientMap::from_classes(n, get_field<std::vector<std::vector<int>>>(j, "classes"));
}

json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json laurent_to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.coefficients()) out[std::to_string(e)] = bigint_to_json(c);
  return out;
}

TransversalSystem system_from_json(const Poset& p, const json& j, const Limits& limits) {
  const std::string kind = j.value("kind", std::string("transversal"));
  if (kind != "transversal" && kind != "complete")
    throw FormatError("kind must be 'transversal' or 'complete'");
  auto to_set = [&](const std::vector<int>& xs) {
    ElementSet s = p.empty_set();
    for (int x : xs) {
      if (x < 0 || x >= p.size()) throw FormatError("element index out of range");
      s.set(x);
    }
    return s;
  };
  std::vector<RootedTree> trees;
  std::optional<AtomPartition> partition;
  if (j.contains("blocks")) {
    partition.emplace();
    for (const auto& b : get_field<std::vector<std::vector<int>>>(j, "blocks"))
      partition->push_back(to_set(b));
    if (j.value("join", false)) return join_system(p, *partition, limits);
    for (const auto& b : *partition) trees.push_back(complete_tree(p, b, limits));
  } else {
    for (const auto& s : get_field<std::vector<std::vector<int>>>(j, "sets"))
      trees.push_back(rooted_tree(p, to_set(s), Saturation::in_poset, limits));
  }
  ProductSpace space(trees);
  if (!space.fits(limits)) throw ResourceLimitError("tree product exceeds the tuple cap");
  std::vector<int> f(*space.size(), -1);
  if (!j.contains("f") || !j.at("f").is_array()) throw FormatError("missing field 'f'");
  for (const auto& entry : j.at("f")) {
    if (!entry.is_array() || entry.size() != 2) throw FormatError("f entries are [[nodes], element]");
    const auto nodes = entry[0].get<std::vector<int>>();
    const int x = entry[1].get<int>();
    if (x < 0 || x >= p.size()) throw FormatError("f value out of range");
    f[space.encode(nodes)] = x;
  }
  for (std::size_t t = 0; t < f.size(); ++t)
    if (f[t] < 0) throw FormatError("f is missing tuple " + space.describe(t, p));
  return TransversalSystem::tabulated(p, std::move(trees), std::move(f),
                                      kind == "complete" ? SystemKind::complete : SystemKind::transversal,
                                      std::move(partition));
}

json tree_to_json(const RootedTree& t, const Poset& p) {
  json nodes = json::array();
  for (int v = 0; v < t.size(); ++v) {
    std::string chain;
    for (int x : t.chain(v)) chain += (chain.empty() ? "" : " < ") + p.label(x);
    nodes.push_back({{"node", v}, {"parent", t.parent[v]}, {"top", t.top[v]}, {"chain", chain}});
  }
  return {{"size", t.size()}, {"atoms", t.atom_count()}, {"nodes", nodes}};
}

json system_to_json(const TransversalSystem& sys) {
  const auto& sp = sys.space();
  json trees = json::array();
  for (const auto& t : sp.trees()) trees.push_back(tree_to_json(t, sys.poset()));
  json f = json::array();
  for (std::size_t t = 0; t < sys.table().size(); ++t) f.push_back({sp.decode(t), sys.f(t)});
  json out = {{"kind", sys.kind() == SystemKind::complete ? "complete" : "transversal"},
              {"atoms_only", sys.atoms_only()},
              {"trees", trees},
              {"f", f}};
  if (sys.partition()) {
    json blocks = json::array();
    for (const auto& b : *sys.partition()) blocks.push_back(b.to_indices());
    out["blocks"] = blocks;
  }
  return out;
}

json check_to_json(const CheckResult& c) {
  json out = {{"name", c.name}, {"status", status_name(c.status)}};
  if (!c.witness.empty()) out["witness"] = c.witness;
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

json validation_to_json(const Validation& v) {
  json checks = json::array();
  for (const auto& c : v.checks) checks.push_back(check_to_json(c));
  return {{"ok", v.ok()}, {"checks", checks}};
}

json report_to_json(const TheoremReport& r) {
  json hyp = json::array(), con = json::array();
  for (const auto& c : r.hypotheses) hyp.push_back(check_to_json(c));
  for (const auto& c : r.conclusions) con.push_back(check_to_json(c));
  return {{"theorem", r.theorem},
          {"m", r.m},
          {"n", r.n},
          {"hypotheses_hold", r.hypotheses_hold()},
          {"conclusions_hold", r.conclusions_hold()},
          {"hypotheses", hyp},
          {"conclusions", con},
          {"chi", r.chi.to_string()},
          {"factored", r.factored.to_string()}};
}

json iff_to_json(const IffReport& r) {
  json hyp = json::array();
  for (const auto& c : r.hypotheses) hyp.push_back(check_to_json(c));
  json out = {{"hypotheses", hyp},
              {"factorization_holds", r.factorization_holds},
              {"unique_block_holds", r.unique_block_holds},
              {"agree", r.agree()},
              {"chi", r.chi.to_string()},
              {"factored", r.factored.to_string()}};
  if (r.witness_rank) {
    out["witness_rank"] = *r.witness_rank;
    out["chi_coefficient"] = bigint_to_json(r.chi_coefficient);
    out["factored_coefficient"] = bigint_to_json(r.factored_coefficient);
  }
  return out;
}

std::string report_to_text(const TheoremReport& r) {
  std::ostringstream out;
  out << r.theorem << " (m = " << r.m << ", n = " << r.n << ")\n";
  auto section = [&](const char* title, const std::vector<CheckResult>& list) {
    out << title << ":\n";
    for (const auto& c : list) {
      out << "  [" << status_name(c.status) << "] " << c.name;
      if (!c.witness.empty()) out << " at " << c.witness;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
  };
  section("hypotheses", r.hypotheses);
  if (!r.conclusions.empty()) section("conclusions", r.conclusions);
  out << "chi = " << r.chi.to_string() << "\nproduct form = " << r.factored.to_string() << "\n";
  return out.str();
}

}  // namespace posetforge::io
