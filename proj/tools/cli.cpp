#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posetforge/classic.hpp"
#include "posetforge/errors.hpp"
#include "posetforge/families.hpp"
#include "posetforge/io.hpp"
#include "posetforge/quotient.hpp"
#include "posetforge/transversal.hpp"

namespace posetforge::cli {

namespace {

using io::json;

// Raised when a proven identity fails to hold: always a bug, exit code 3.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format;  // empty: the command's default
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  double density = 0.3;

  std::string rank = "classic";
  std::string blocks;
  int m = -1;

  std::string classes, pairs, collapse;
  std::string set, complete, reading = "poset";
  std::string system;

  std::string what;
  std::string x, y, a, chain, element;
  std::string other;
};

struct Context {
  Options opt;
  std::istream& in;
  std::ostream& out;
};

json read_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON input: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open '" + path + "'");
  return read_json(f);
}

Poset read_poset(Context& ctx) {
  return io::poset_from_json(ctx.opt.input.empty() ? read_json(ctx.in) : read_json_file(ctx.opt.input));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

// Splits on `sep` outside parentheses so labels such as "(1,1,3)" survive.
std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out{""};
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) out.emplace_back();
    else out.back() += c;
  }
  for (auto& t : out) t = trim(t);
  return out;
}

// A label, then an index, then a single letter naming an atom by position.
int parse_element(const Poset& p, const std::string& token) {
  if (auto x = p.find(token)) return *x;
  if (!token.empty() && std::all_of(token.begin(), token.end(), ::isdigit)) {
    const long v = std::stol(token);
    if (v >= 0 && v < p.size()) return static_cast<int>(v);
  }
  if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'z') {
    const auto list = atoms(p).to_indices();
    const std::size_t k = token[0] - 'a';
    if (k < list.size()) return list[k];
  }
  throw FormatError("unknown element '" + token + "'");
}

ElementSet parse_set(const Poset& p, const std::string& spec) {
  ElementSet s = p.empty_set();
  for (const auto& t : split(spec, ','))
    if (!t.empty()) s.set(parse_element(p, t));
  return s;
}

AtomPartition parse_blocks(const Poset& p, const std::string& spec) {
  if (spec.empty() || spec == "singletons") return singleton_blocks(p);
  AtomPartition blocks;
  for (const auto& b : split(spec, ';')) blocks.push_back(parse_set(p, b));
  validate_atom_partition(p, blocks);
  return blocks;
}

RankFn parse_rank(const Poset& p, const Options& opt) {
  if (opt.rank == "classic") return classic_rank(p);
  if (opt.rank == "generalized") return generalized_rank(p, parse_blocks(p, opt.blocks));
  const json j = opt.rank.front() == '[' ? json::parse(opt.rank) : read_json_file(opt.rank);
  RankFn r{j.get<std::vector<int>>()};
  if (r.rho.size() != static_cast<std::size_t>(p.size()))
    throw FormatError("rank list has the wrong length");
  if (std::any_of(r.rho.begin(), r.rho.end(), [](int v) { return v < 0; }))
    throw FormatError("rank values must be nonnegative");
  return r;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw FormatError(std::string("expected an integer for ") + what + ", got '" + s + "'");
}

void emit_poset(Context& ctx, const Poset& p) {
  if (ctx.opt.format == "dot") ctx.out << io::poset_to_dot(p);
  else if (ctx.opt.format == "text") {
    for (int x = 0; x < p.size(); ++x) ctx.out << x << " " << p.label(x) << "\n";
    for (auto [x, y] : p.cover_pairs()) ctx.out << p.label(x) << " < " << p.label(y) << "\n";
  } else {
    ctx.out << io::poset_to_json(p).dump() << "\n";
  }
}

void emit(Context& ctx, const json& j, const std::string& text) {
  if (ctx.opt.format == "text") ctx.out << text;
  else ctx.out << j.dump(2) << "\n";
}

// ---- build ---------------------------------------------------------------

int cmd_build(Context& ctx) {
  const auto& o = ctx.opt;
  auto need = [&](std::size_t k) {
    if (o.params.size() != k)
      throw FormatError("family '" + o.family + "' takes " + std::to_string(k) + " parameter(s)");
  };
  auto arg = [&](std::size_t i) { return parse_int(o.params[i], "family parameter"); };
  Poset p = [&] {
    if (o.family == "tamari") return need(1), tamari(arg(0));
    if (o.family == "tamari-vec") return need(1), tamari_vectors(arg(0));
    if (o.family == "m-tamari") return need(2), m_tamari(arg(0), arg(1));
    if (o.family == "weighted-partition") return need(1), weighted_partitions(arg(0));
    if (o.family == "boolean") return need(1), boolean_lattice(arg(0));
    if (o.family == "chain") return need(1), chain(arg(0));
    if (o.family == "divisor") return need(1), divisor_lattice(arg(0));
    if (o.family == "partition") return need(1), partition_lattice(arg(0));
    if (o.family == "rank-two") return need(1), rank_two_lattice(arg(0));
    if (o.family == "random-poset") return need(1), random_poset(arg(0), o.density, o.seed);
    if (o.family == "random-lattice") return need(2), random_lattice(arg(0), arg(1), o.seed);
    throw FormatError("unknown family '" + o.family + "'");
  }();
  emit_poset(ctx, p);
  return ok;
}

// ---- invariants ------------------------------------------------------------

int cmd_mu(Context& ctx) {
  const Poset p = read_poset(ctx);
  const auto mu = moebius(p);
  json j = json::object();
  std::ostringstream text;
  for (int x = 0; x < p.size(); ++x) {
    j[p.label(x)] = io::bigint_to_json(mu[x]);
    text << p.label(x) << " " << mu[x] << "\n";
  }
  emit(ctx, j, text.str());
  return ok;
}

int cmd_chi(Context& ctx) {
  if (ctx.opt.format.empty()) ctx.opt.format = "text";
  const Poset p = read_poset(ctx);
  const RankFn rho = parse_rank(p, ctx.opt);
  const int m = ctx.opt.m >= 0 ? ctx.opt.m : std::max(longest_chain_length(p), rho.rank_of_poset());
  const auto chi = char_poly(p, rho, m);
  const auto fac = factor_over_naturals(chi);
  json j = {{"m", m}, {"chi", chi.to_string()}, {"coefficients", io::laurent_to_json(chi)}};
  std::string text = chi.to_string();
  if (fac) {
    j["factored"] = fac->to_string();
    json roots = json::array();
    for (const auto& r : fac->roots) roots.push_back(io::bigint_to_json(r));
    j["roots"] = roots;
    if (fac->to_string() != text) text += " = " + fac->to_string();
  } else {
    j["factored"] = nullptr;
  }
  emit(ctx, j, text + "\n");
  return ok;
}

int cmd_quotient(Context& ctx) {
  const Poset p = read_poset(ctx);
  const auto& o = ctx.opt;
  if (!o.collapse.empty()) {
    const auto c = collapse_coatom(p, parse_element(p, o.collapse));
    emit_poset(ctx, c.quotient.poset);
    return ok;
  }
  QuotientMap q = QuotientMap::identity(p.size());
  if (!o.classes.empty()) {
    q = io::partition_from_json(json::parse(o.classes), p.size());
  } else if (!o.pairs.empty()) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& item : split(o.pairs, ';')) {
      const auto sides = split(item, '=');
      if (sides.size() != 2) throw FormatError("pairs are written 'x=y;u=v'");
      pairs.emplace_back(parse_element(p, sides[0]), parse_element(p, sides[1]));
    }
    q = QuotientMap::from_pairs(p.size(), pairs);
  }
  const auto result = quotient(p, q);
  if (const auto* bad = std::get_if<PreorderReport>(&result)) {
    emit(ctx, {{"preorder", true}, {"message", bad->message}}, bad->message + "\n");
    return check_failed;
  }
  emit_poset(ctx, std::get<Quotient>(result).poset);
  return ok;
}

int cmd_rooted_tree(Context& ctx) {
  const Poset p = read_poset(ctx);
  const auto& o = ctx.opt;
  RootedTree t;
  if (!o.complete.empty()) {
    t = complete_tree(p, parse_set(p, o.complete));
  } else {
    ElementSet s = parse_set(p, o.set);
    t = rooted_tree(p, s, o.reading == "subposet" ? Saturation::in_subposet : Saturation::in_poset);
  }
  std::ostringstream text;
  for (int v = 0; v < t.size(); ++v) {
    text << v << " ";
    const auto c = t.chain(v);
    for (std::size_t i = 0; i < c.size(); ++i) text << (i ? " < " : "") << p.label(c[i]);
    text << "\n";
  }
  emit(ctx, io::tree_to_json(t, p), text.str());
  return ok;
}

// ---- systems -----------------------------------------------------------

TransversalSystem load_system(Context& ctx) {
  const auto& o = ctx.opt;
  if (o.system == "weighted3") return weighted3_system();
  if (!o.system.empty()) {
    const json j = read_json_file(o.system);
    const Poset p = j.contains("poset") ? io::poset_from_json(j.at("poset")) : read_poset(ctx);
    return io::system_from_json(p, j);
  }
  const Poset p = read_poset(ctx);
  return join_system(p, parse_blocks(p, o.blocks));
}

int cmd_system(Context& ctx) {
  const auto sys = load_system(ctx);
  const auto v = sys.kind() == SystemKind::complete ? validate_complete(sys) : validate_transversal(sys);
  json j = io::system_to_json(sys);
  j["validation"] = io::validation_to_json(v);
  std::ostringstream text;
  for (const auto& c : v.checks)
    text << (c.failed() ? "FAIL " : c.passed() ? "ok   " : "skip ") << c.name
         << (c.witness.empty() ? "" : " at " + c.witness) << "\n";
  emit(ctx, j, text.str());
  return v.ok() ? ok : check_failed;
}

// ---- checks ------------------------------------------------------------

int report_result(Context& ctx, const TheoremReport& r) {
  emit(ctx, io::report_to_json(r), io::report_to_text(r));
  if (!r.hypotheses_hold()) return check_failed;
  if (!r.conclusions_hold())
    throw InvariantViolation("conclusion failed although the hypotheses hold: " +
                             r.first_failure()->name);
  return ok;
}

int rank_m(const Poset& p, const RankFn& rho, int m) {
  return m >= 0 ? m : std::max(longest_chain_length(p), rho.rank_of_poset());
}

int check_equalities(Context& ctx, const std::string& name, const json& failures, std::size_t count) {
  const bool good = failures.empty();
  std::ostringstream text;
  text << name << ": " << count << " checked, " << failures.size() << " unequal\n";
  emit(ctx, {{"check", name}, {"checked", count}, {"failures", failures}, {"ok", good}}, text.str());
  if (!good) throw InvariantViolation(name + " identity failed");
  return ok;
}

int cmd_check(Context& ctx) {
  const auto& o = ctx.opt;
  const std::string& w = o.what;

  if (w == "theorem-a" || w == "theorem-b" || w == "iff" || w == "complex") {
    const auto sys = load_system(ctx);
    const Poset& p = sys.poset();
    Options ro = o;
    if (ro.blocks.empty() && sys.partition()) {
      // Generalized rank over the system's own blocks.
      std::string spec;
      for (std::size_t i = 0; i < sys.partition()->size(); ++i) {
        if (i) spec += ";";
        bool first = true;
        (*sys.partition())[i].for_each([&](int x) {
          spec += (first ? "" : ",") + std::to_string(x);
          first = false;
        });
      }
      ro.blocks = spec;
    }
    const RankFn rho = parse_rank(p, ro);
    const int m = rank_m(p, rho, o.m);
    if (w == "theorem-a") return report_result(ctx, check_theorem_A(sys, rho, m));
    if (w == "theorem-b") return report_result(ctx, check_theorem_B(sys, rho, m));
    if (w == "iff") {
      const auto r = check_theorem_iff(sys, rho, m);
      emit(ctx, io::iff_to_json(r),
           std::string("factorization ") + (r.factorization_holds ? "holds" : "fails") +
               ", unique atom block " + (r.unique_block_holds ? "holds" : "fails") + "\n");
      if (!r.agree()) throw InvariantViolation("the two sides of the equivalence disagree");
      return ok;
    }
    json rows = json::array();
    std::ostringstream text;
    bool good = true;
    for (int x = 0; x < p.size(); ++x) {
      if (!o.element.empty() && x != parse_element(p, o.element)) continue;
      const auto cx = atomic_complex(sys, x);
      const BigInt e = reduced_euler(cx);
      const bool pure = is_pure(cx, rho(x) - 1);
      rows.push_back({{"element", p.label(x)},
                      {"faces", cx.faces.size()},
                      {"facets", cx.facets.size()},
                      {"reduced_euler", io::bigint_to_json(e)},
                      {"pure", pure}});
      text << p.label(x) << ": faces " << cx.faces.size() << ", facets " << cx.facets.size()
           << ", reduced Euler " << e << (pure ? ", pure" : ", not pure") << "\n";
      good = good && e == (x == p.zero() ? -1 : 0) && pure;
    }
    emit(ctx, {{"elements", rows}, {"summation_and_purity", good}}, text.str());
    return good ? ok : check_failed;
  }

  const Poset p = read_poset(ctx);
  if (w == "hall") {
    json failures = json::array();
    std::size_t count = 0;
    auto one = [&](int x, int y) {
      ++count;
      const auto r = hall_check(p, x, y);
      if (!r.equal()) failures.push_back({p.label(x), p.label(y)});
    };
    if (!o.x.empty() || !o.y.empty()) {
      one(o.x.empty() ? p.zero() : parse_element(p, o.x),
          o.y.empty() ? p.require_top() : parse_element(p, o.y));
    } else {
      for (int x = 0; x < p.size(); ++x) p.up(x).for_each([&](int y) { one(x, y); });
    }
    return check_equalities(ctx, "hall", failures, count);
  }
  if (w == "weisner") {
    json failures = json::array();
    std::size_t count = 0;
    for (int a = 0; a < p.size(); ++a) {
      if (a == p.zero() || (!o.a.empty() && a != parse_element(p, o.a))) continue;
      ++count;
      if (!weisner_check(p, a).equal()) failures.push_back(p.label(a));
    }
    return check_equalities(ctx, "weisner", failures, count);
  }
  if (w == "crosscut") {
    json failures = json::array();
    const auto cuts = find_crosscuts(p);
    for (const auto& c : cuts)
      if (!crosscut_check(p, c).equal()) failures.push_back(c.to_indices());
    return check_equalities(ctx, "crosscut", failures, cuts.size());
  }
  if (w == "coatom-collapse") {
    json failures = json::array();
    std::size_t count = 0;
    if (p.size() < 3) throw TooSmallError("coatom collapse needs at least 3 elements");
    coatoms(p).for_each([&](int c) {
      if (!o.a.empty() && c != parse_element(p, o.a)) return;
      ++count;
      if (!coatom_lemma_check(p, c).holds()) failures.push_back(p.label(c));
    });
    return check_equalities(ctx, "coatom-collapse", failures, count);
  }
  if (w == "tamari-mobius") {
    const auto mu = moebius(p);
    json failures = json::array();
    for (int x = 0; x < p.size(); ++x) {
      const auto& label = p.label(x);
      LBVector v;
      if (label.find('x') != std::string::npos) {
        v = left_bracket_vector(Paren::parse(label));
      } else {
        const std::string inner = label.substr(1, label.size() - 2);
        for (const auto& t : split(inner, ',')) v.push_back(parse_int(t, "vector entry"));
      }
      if (mu[x] != tamari_mobius_formula(v)) failures.push_back(label);
    }
    return check_equalities(ctx, "tamari-mobius", failures, p.size());
  }
  if (w == "ll") {
    std::vector<int> mc;
    if (!o.chain.empty()) {
      for (const auto& t : split(o.chain, ';')) mc.push_back(parse_element(p, t));
    } else if (auto found = find_left_modular_chain(p)) {
      mc = *found;
    } else {
      emit(ctx, {{"ll", false}, {"detail", "no maximal left-modular chain"}},
           "no maximal left-modular chain\n");
      return check_failed;
    }
    const auto r = is_ll(p, mc);
    const auto meet = meet_condition(p, mc);
    json chain_labels = json::array();
    for (int x : mc) chain_labels.push_back(p.label(x));
    json j = {{"chain", chain_labels},
              {"left_modular", r.left_modular},
              {"saturated", r.saturated},
              {"level_condition", r.level.holds},
              {"meet_condition", meet.holds},
              {"ll", r.ll()}};
    if (!r.level.holds) j["level_witness"] = r.level.witness;
    if (!meet.holds) j["meet_witness"] = meet.witness;
    std::string text = std::string("LL: ") + (r.ll() ? "yes" : "no") + "\n";
    int code = r.ll() ? ok : check_failed;
    if (r.ll() && r.saturated) {
      const auto rep = blass_sagan_check(p, mc);
      j["factorization"] = io::report_to_json(rep);
      text += io::report_to_text(rep);
      if (!rep.hypotheses_hold() || !rep.conclusions_hold())
        throw InvariantViolation("LL factorization failed on an LL lattice");
    }
    emit(ctx, j, text);
    return code;
  }
  throw FormatError("unknown check '" + w + "'");
}

int cmd_iso(Context& ctx) {
  const Poset p = read_poset(ctx);
  const Poset q = io::poset_from_json(read_json_file(ctx.opt.other));
  const auto map = is_isomorphic(p, q);
  json j = {{"isomorphic", map.has_value()}};
  std::string text = map ? "isomorphic\n" : "not isomorphic\n";
  if (map) {
    json m = json::object();
    for (int x = 0; x < p.size(); ++x) m[p.label(x)] = q.label((*map)[x]);
    j["map"] = m;
  }
  emit(ctx, j, text);
  return map ? ok : check_failed;
}

int cmd_export(Context& ctx) {
  emit_poset(ctx, read_poset(ctx));
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{Options{}, in, out};
  auto& o = ctx.opt;
  CLI::App app{"Möbius functions, characteristic polynomials and factorization checks for finite posets"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input,-i", o.input, "Read the poset from this JSON file instead of stdin");
  app.add_option("--format,-f", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--seed", o.seed, "Seed for random families");

  auto* build = app.add_subcommand("build", "Generate a poset family");
  build->add_option("family", o.family, "tamari, tamari-vec, m-tamari, weighted-partition, boolean, "
                                        "chain, divisor, partition, rank-two, random-poset, random-lattice")
      ->required();
  build->add_option("params", o.params, "Family parameters");
  build->add_option("--density", o.density, "Edge density for random-poset");

  auto add_rank = [&](CLI::App* cmd) {
    cmd->add_option("--rank", o.rank, "classic, generalized, or a JSON list / file of ranks");
    cmd->add_option("--blocks", o.blocks, "Atom partition, blocks separated by ';' ('singletons')");
    cmd->add_option("--m", o.m, "Exponent bound m (default: longest chain length)");
  };
  auto* mu = app.add_subcommand("mu", "Möbius function from 0̂");
  auto* chi = app.add_subcommand("chi", "Characteristic polynomial");
  add_rank(chi);
  auto* quo = app.add_subcommand("quotient", "Quotient by an equivalence relation");
  quo->add_option("--classes", o.classes, "JSON {\"classes\": [[...], ...]}");
  quo->add_option("--pairs", o.pairs, "Generating pairs 'x=y;u=v'");
  quo->add_option("--collapse", o.collapse, "Identify this coatom with 1̂");
  auto* tree = app.add_subcommand("rooted-tree", "Saturated chains from 0̂ inside a set");
  tree->add_option("--set", o.set, "Elements of S, comma separated (0̂ must be included)");
  tree->add_option("--complete", o.complete, "Atoms A for the tree over their upper set");
  tree->add_option("--reading", o.reading, "Saturation in the poset or in the subposet")
      ->check(CLI::IsMember({"poset", "subposet"}));
  auto* sys = app.add_subcommand("system", "Build and validate a transversal system");
  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", o.system, "System JSON file, or 'weighted3'");
    cmd->add_option("--blocks", o.blocks, "Atom blocks for a join system ('singletons')");
  };
  add_system(sys);
  auto* check = app.add_subcommand("check", "Run a theorem check");
  check->add_option("what", o.what, "hall, weisner, crosscut, ll, coatom-collapse, tamari-mobius, "
                                    "theorem-a, theorem-b, iff, complex")
      ->required();
  check->add_option("--system", o.system, "System JSON file, or 'weighted3'");
  check->add_option("--rank", o.rank, "classic, generalized, or a JSON list / file of ranks");
  check->add_option("--blocks", o.blocks, "Atom partition, blocks separated by ';' ('singletons')");
  check->add_option("--m", o.m, "Exponent bound m (default: longest chain length)");
  check->add_option("--x", o.x, "Lower end for hall");
  check->add_option("--y", o.y, "Upper end for hall");
  check->add_option("--a", o.a, "Element for weisner or coatom for coatom-collapse");
  check->add_option("--chain", o.chain, "Multichain for ll, elements separated by ';'");
  check->add_option("--element", o.element, "Element for complex");
  auto* iso = app.add_subcommand("iso", "Order isomorphism search");
  iso->add_option("--other", o.other, "Second poset JSON file")->required();
  auto* exp = app.add_subcommand("export", "Re-emit a poset as JSON, DOT or text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return usage;
  }

  try {
    if (*build) return cmd_build(ctx);
    if (*mu) return cmd_mu(ctx);
    if (*chi) return cmd_chi(ctx);
    if (*quo) return cmd_quotient(ctx);
    if (*tree) return cmd_rooted_tree(ctx);
    if (*sys) return cmd_system(ctx);
    if (*check) return cmd_check(ctx);
    if (*iso) return cmd_iso(ctx);
    if (*exp) return cmd_export(ctx);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return invariant;
  } catch (const HypothesisError& e) {
    err << "hypothesis failed: " << e.what() << "\n";
    return check_failed;
  } catch (const PosetError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return invariant;
  }
  return usage;
}

}  // namespace posetforge::cli
