#include "posetforge/classic.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "posetforge/errors.hpp"
#include "posetforge/quotient.hpp"

namespace posetforge {

EqualityCheck hall_check(const Poset& p, int x, int y) {
  EqualityCheck r{moebius_interval(p, x, y), 0};
  const auto chains = chain_count_vector(p, x, y);
  for (std::size_t i = 0; i < chains.counts.size(); ++i)
    r.rhs += i % 2 ? -chains.counts[i] : chains.counts[i];
  return r;
}

EqualityCheck weisner_check(const Poset& lattice, int a) {
  const Lattice l(lattice);
  if (a == l.zero()) throw InvalidIndexError("Weisner's theorem needs a nonzero element");
  const auto mu = moebius(lattice);
  EqualityCheck r{mu[l.top()], 0};
  for (int x = 0; x < lattice.size(); ++x)
    if (x != l.top() && l.join(x, a) == l.top()) r.rhs -= mu[x];
  return r;
}

namespace {

// A 0̂-1̂ path along covers that avoids `blocked`, or nothing.
std::optional<std::vector<int>> avoiding_chain(const Poset& p, int top, const ElementSet& blocked) {
  std::vector<int> prev(p.size(), -2);
  std::vector<int> queue{p.zero()};
  prev[p.zero()] = -1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int x = queue[k];
    if (x == top) {
      std::vector<int> path;
      for (int v = top; v >= 0; v = prev[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int y : p.upper_covers(x))
      if (prev[y] == -2 && !blocked.test(y)) {
        prev[y] = x;
        queue.push_back(y);
      }
  }
  return std::nullopt;
}

std::string chain_text(const Poset& p, const std::vector<int>& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? " < " : "") + p.label(chain[i]);
  return s;
}

bool is_antichain(const Poset& p, const ElementSet& c) {
  bool ok = true;
  c.for_each([&](int x) { ok = ok && (p.up(x) & c).count() == 1; });
  return ok;
}

}  // namespace

void validate_crosscut(const Poset& lattice, const ElementSet& c) {
  const int top = lattice.require_top();
  if (c.test(lattice.zero()) || c.test(top))
    throw NotACrosscutError("a crosscut may not contain 0̂ or 1̂");
  if (!is_antichain(lattice, c)) throw NotACrosscutError("the set is not an antichain");
  if (auto chain = avoiding_chain(lattice, top, c))
    throw NotACrosscutError("maximal chain " + chain_text(lattice, *chain) + " misses the set");
}

std::vector<ElementSet> find_crosscuts(const Poset& lattice, const Limits& limits) {
  std::vector<ElementSet> out;
  if (lattice.size() < 3) return out;
  const int top = lattice.require_top();
  std::set<std::vector<int>> seen;
  auto record = [&](const ElementSet& c) {
    if (out.size() < limits.crosscut_results && seen.insert(c.to_indices()).second) out.push_back(c);
  };
  record(atoms(lattice));
  record(coatoms(lattice));
  std::size_t budget = limits.crosscut_chains;
  std::function<void(ElementSet&, std::size_t)> rec = [&](ElementSet& chosen, std::size_t size) {
    if (out.size() >= limits.crosscut_results || budget == 0) return;
    --budget;
    const auto chain = avoiding_chain(lattice, top, chosen);
    if (!chain) {
      record(chosen);
      return;
    }
    if (size >= limits.crosscut_size) return;
    for (std::size_t k = 1; k + 1 < chain->size(); ++k) {
      const int x = (*chain)[k];
      if ((lattice.up(x) | lattice.down(x)).intersects(chosen)) continue;
      chosen.set(x);
      rec(chosen, size + 1);
      chosen.reset(x);
    }
  };
  ElementSet chosen = lattice.empty_set();
  rec(chosen, 0);
  return out;
}

EqualityCheck crosscut_check(const Poset& lattice, const ElementSet& c) {
  validate_crosscut(lattice, c);
  const Lattice l(lattice);
  const auto mu = moebius(lattice);
  const auto members = c.to_indices();
  EqualityCheck r{mu[l.top()], 0};
  std::function<void(std::size_t, int, int, bool, bool)> rec = [&](std::size_t k, int j, int m,
                                                                    bool odd, bool nonempty) {
    if (k == members.size()) {
      if (nonempty && j == l.top() && m == l.zero()) r.rhs += odd ? -1 : 1;
      return;
    }
    rec(k + 1, j, m, odd, nonempty);
    rec(k + 1, l.join(j, members[k]), l.meet(m, members[k]), !odd, true);
  };
  rec(0, l.zero(), l.top(), false, false);
  return r;
}

bool ChainSplit::holds() const {
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != avoiding[i] + through[i]) return false;
  return true;
}

ChainSplit hall_chain_split(const Poset& p, int coatom) {
  if (p.size() < 3) throw TooSmallError("the split needs at least 3 elements");
  const int top = p.require_top();
  if (!p.covers(coatom, top)) throw NotCoatomError("'" + p.label(coatom) + "' is not a coatom");
  ChainSplit s;
  s.all = chain_count_vector(p, p.zero(), top).counts;
  ElementSet keep = p.full_set();
  keep.reset(coatom);
  const Poset rest = induced_subposet(p, keep);
  s.avoiding = chain_count_vector(rest, rest.zero(), rest.index_of(p.label(top))).counts;
  const auto below = chain_count_vector(p, p.zero(), coatom).counts;
  const auto above = chain_count_vector(p, coatom, top).counts;
  s.through.assign(below.size() + above.size(), 0);
  for (std::size_t i = 0; i < below.size(); ++i)
    for (std::size_t j = 0; j < above.size(); ++j) s.through[i + j] += below[i] * above[j];
  const std::size_t len = std::max({s.all.size(), s.avoiding.size(), s.through.size()});
  s.all.resize(len, 0);
  s.avoiding.resize(len, 0);
  s.through.resize(len, 0);
  return s;
}

CoatomLemmaCheck coatom_lemma_check(const Poset& p, int coatom) {
  const auto collapse = collapse_coatom(p, coatom);
  const auto& quo = collapse.quotient;
  const auto mu = moebius(p);
  const auto mu_q = moebius(quo.poset);
  CoatomLemmaCheck r;
  r.mu_class = mu_q[collapse.top_class];
  r.mu_c = mu[coatom];
  r.mu_top = mu[p.require_top()];
  ElementSet keep = p.full_set();
  keep.reset(coatom);
  r.iso_to_deletion = is_isomorphic(quo.poset, induced_subposet(p, keep)).has_value();
  r.lattice = is_lattice(p);
  if (!r.lattice) return r;
  if (!is_lattice(quo.poset)) {
    r.joins_preserved = r.meets_preserved = false;
    return r;
  }
  const Lattice l(p), lq(quo.poset);
  const auto& cls = quo.map.class_of;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (cls[l.join(x, y)] != lq.join(cls[x], cls[y])) r.joins_preserved = false;
      if (cls[x] != collapse.top_class && cls[y] != collapse.top_class &&
          cls[l.meet(x, y)] != lq.meet(cls[x], cls[y]))
        r.meets_preserved = false;
    }
  return r;
}

namespace {

bool left_modular(const Poset& p, const Lattice& l, int x) {
  for (int y = 0; y < p.size(); ++y) {
    bool ok = true;
    p.up(y).for_each([&](int z) {
      if (ok && l.join(y, l.meet(x, z)) != l.meet(l.join(y, x), z)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_left_modular(const Poset& lattice, int x) {
  const Lattice l(lattice);
  return left_modular(lattice, l, x);
}

void validate_multichain(const Poset& p, const std::vector<int>& mc) {
  const int top = p.require_top();
  if (mc.size() < 2) throw InvalidIndexError("a multichain needs at least 0̂ and 1̂");
  for (int x : mc)
    if (x < 0 || x >= p.size()) throw InvalidIndexError("multichain element out of range");
  if (mc.front() != p.zero() || mc.back() != top)
    throw InvalidIndexError("a multichain must run from 0̂ to 1̂");
  for (std::size_t i = 1; i < mc.size(); ++i)
    if (!p.leq(mc[i - 1], mc[i]))
      throw InvalidIndexError("multichain is not weakly increasing at '" + p.label(mc[i]) + "'");
}

bool is_saturated(const Poset& p, const std::vector<int>& mc) {
  for (std::size_t i = 1; i < mc.size(); ++i)
    if (mc[i - 1] != mc[i] && !p.covers(mc[i - 1], mc[i])) return false;
  return true;
}

AtomPartition induced_partition(const Poset& p, const std::vector<int>& mc) {
  validate_multichain(p, mc);
  AtomPartition blocks;
  for (std::size_t i = 1; i < mc.size(); ++i)
    blocks.push_back(atoms_below(p, mc[i]) - atoms_below(p, mc[i - 1]));
  return blocks;
}

ConditionResult meet_condition(const Poset& lattice, const std::vector<int>& mc) {
  validate_multichain(lattice, mc);
  const Lattice l(lattice);
  const Bitset atom_set = atoms(lattice);
  ConditionResult r;
  for (int x = 0; x < lattice.size(); ++x) {
    if (x == l.zero() || atom_set.test(x)) continue;
    if (l.join_of(atoms_below(lattice, x)) != x) continue;
    std::size_t i = 0;
    while (!lattice.leq(x, mc[i])) ++i;
    if (l.meet(x, mc[i - 1]) == l.zero()) {
      r.holds = false;
      r.witness = lattice.label(x);
      return r;
    }
  }
  return r;
}

ConditionResult level_condition(const Poset& lattice, const std::vector<int>& mc) {
  const auto blocks = induced_partition(lattice, mc);
  const Lattice l(lattice);
  ConditionResult r;
  std::vector<int> seq;
  // Extend a ⊲ b_1 ⊲ ... with atoms from blocks after `from`.
  std::function<bool(int, std::size_t, int)> rec = [&](int a, std::size_t from, int join) {
    for (std::size_t j = from; j < blocks.size(); ++j) {
      for (int b : blocks[j].to_indices()) {
        const int next = l.join(join, b);
        seq.push_back(b);
        if (lattice.leq(a, next)) {
          r.holds = false;
          r.witness = lattice.label(a);
          for (int s : seq) r.witness += " < " + lattice.label(s);
          return false;
        }
        if (!rec(a, j + 1, next)) return false;
        seq.pop_back();
      }
    }
    return true;
  };
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int a : blocks[i].to_indices())
      if (!rec(a, i + 1, l.zero())) return r;
  return r;
}

LLResult is_ll(const Poset& lattice, const std::vector<int>& mc) {
  validate_multichain(lattice, mc);
  const Lattice l(lattice);
  LLResult r;
  r.left_modular = std::all_of(mc.begin(), mc.end(),
                               [&](int x) { return left_modular(lattice, l, x); });
  r.saturated = is_saturated(lattice, mc);
  r.level = level_condition(lattice, mc);
  return r;
}

std::optional<std::vector<int>> find_left_modular_chain(const Poset& lattice) {
  const Lattice l(lattice);
  const int top = l.top();
  std::vector<char> good(lattice.size());
  for (int x = 0; x < lattice.size(); ++x) good[x] = left_modular(lattice, l, x);
  std::vector<char> dead(lattice.size(), 0);
  std::vector<int> chain{lattice.zero()};
  std::function<bool(int)> rec = [&](int x) {
    if (x == top) return true;
    for (int y : lattice.upper_covers(x)) {
      if (!good[y] || dead[y]) continue;
      chain.push_back(y);
      if (rec(y)) return true;
      chain.pop_back();
    }
    dead[x] = 1;
    return false;
  };
  if (rec(lattice.zero())) return chain;
  return std::nullopt;
}

TheoremReport blass_sagan_check(const Poset& lattice, const std::vector<int>& mc,
                                const Limits& limits) {
  const auto ll = is_ll(lattice, mc);
  if (!ll.left_modular) throw HypothesisError("the multichain is not left-modular");
  if (!ll.saturated) throw HypothesisError("the multichain is not saturated");
  if (!ll.level.holds) throw HypothesisError("level condition fails at " + ll.level.witness);
  const auto blocks = induced_partition(lattice, mc);
  const auto sys = join_system(lattice, blocks, limits);
  auto rep = check_theorem_B(sys, generalized_rank(lattice, blocks), longest_chain_length(lattice),
                             limits);
  rep.theorem = "LL factorization";
  return rep;
}

}  // namespace posetforge
