#include "posetforge/transversal.hpp"

#include <string>

#include "posetforge/errors.hpp"
#include "posetforge/kernels.hpp"
#include "system_detail.hpp"

namespace posetforge {

namespace detail {

std::vector<Bitset> reach(const TransversalSystem& sys) {
  const auto& sp = sys.space();
  const std::size_t count = sp.size().value();
  std::vector<Bitset> r(count, sys.poset().empty_set());
  for (std::size_t t = count; t-- > 0;) {
    r[t].set(sys.f(t));
    for (int i = 0; i < sp.arity(); ++i) {
      const int node = sp.coord(t, i);
      for (int c : sp.tree(i).children[node]) {
        if (sp.atoms_only() && node != 0) break;
        r[t] |= r[sp.with_coord(t, i, c)];
      }
    }
  }
  return r;
}

std::vector<Bitset> atomic_lower_ideal_rows(const TransversalSystem& sys,
                                            const std::vector<std::size_t>& atomic) {
  const auto& p = sys.poset();
  const auto& sp = sys.space();
  std::vector<Bitset> out;
  out.reserve(atomic.size());
  if (!sp.atoms_only()) {
    auto r = reach(sys);
    for (auto s : atomic) out.push_back(std::move(r[s]));
    return out;
  }
  for (auto s : atomic) {
    Bitset row = p.full_set();
    for (int i = 0; i < sp.arity(); ++i)
      if (int node = sp.coord(s, i)) row &= p.up(sp.tree(i).top[node]);
    out.push_back(std::move(row));
  }
  return out;
}

std::string element_list(const Poset& p, const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += p.label(xs[i]);
  }
  return s;
}

}  // namespace detail

TransversalSystem TransversalSystem::tabulated(Poset p, std::vector<RootedTree> trees,
                                               std::vector<int> f, SystemKind kind,
                                               std::optional<AtomPartition> partition) {
  if (partition) validate_atom_partition(p, *partition);
  TransversalSystem sys(std::move(p));
  sys.space_ = ProductSpace(std::move(trees));
  if (!sys.space_.size() || *sys.space_.size() != f.size())
    throw InvalidIndexError("table size does not match the tree product");
  for (int v : f)
    if (v < 0 || v >= sys.poset_.size()) throw InvalidIndexError("table value out of range");
  sys.kind_ = kind;
  sys.partition_ = std::move(partition);
  sys.table_ = std::move(f);
  return sys;
}

TransversalSystem TransversalSystem::with_table(std::vector<int> f) const {
  if (f.size() != table_.size()) throw InvalidIndexError("table size does not match");
  TransversalSystem sys = *this;
  sys.table_ = std::move(f);
  sys.join_rule_ = false;
  return sys;
}

TransversalSystem join_system(const Poset& lattice, const AtomPartition& blocks,
                              const Limits& limits) {
  validate_atom_partition(lattice, blocks);
  const auto joins = kernels::omp::join_table(lattice);
  for (int v : joins)
    if (v < 0) throw NotALatticeError("join rule needs a lattice");
  std::vector<RootedTree> trees;
  for (const auto& b : blocks) trees.push_back(complete_tree(lattice, b, limits));
  TransversalSystem sys(lattice);
  sys.space_ = ProductSpace(trees);
  if (!sys.space_.fits(limits)) {
    sys.space_ = ProductSpace(std::move(trees), true);
    if (!sys.space_.fits(limits))
      throw ResourceLimitError("atomic tuple product exceeds " +
                               std::to_string(limits.product_tuples) + " tuples");
  }
  std::vector<std::vector<int>> tops;
  for (const auto& t : sys.space_.trees()) tops.push_back(t.top);
  sys.table_ = kernels::omp::evaluate_join_rule(sys.space_, tops, joins, lattice.size(),
                                                lattice.zero());
  sys.kind_ = SystemKind::complete;
  sys.partition_ = blocks;
  sys.join_rule_ = true;
  return sys;
}

std::vector<std::size_t> fibers(const TransversalSystem& sys, int x) {
  std::vector<std::size_t> out;
  const auto& table = sys.table();
  for (std::size_t t = 0; t < table.size(); ++t)
    if (table[t] == x) out.push_back(t);
  return out;
}

std::vector<std::size_t> atomic_fibers(const TransversalSystem& sys, int x) {
  std::vector<std::size_t> out;
  for (auto t : sys.space().atomic_tuples())
    if (sys.f(t) == x) out.push_back(t);
  return out;
}

bool Validation::ok() const {
  for (const auto& c : checks)
    if (c.failed()) return false;
  return true;
}

namespace {

CheckResult order_preserving(const TransversalSystem& sys) {
  const auto& p = sys.poset();
  const auto& sp = sys.space();
  CheckResult r{"order preserving"};
  for (std::size_t t = 0; t < sys.table().size(); ++t) {
    for (int i = 0; i < sp.arity(); ++i) {
      const int node = sp.coord(t, i);
      if (sp.atoms_only() && node != 0) continue;
      for (int c : sp.tree(i).children[node]) {
        const auto u = sp.with_coord(t, i, c);
        if (!p.leq(sys.f(t), sys.f(u))) {
          r.status = CheckStatus::failed;
          r.witness = sp.describe(t, p) + " <= " + sp.describe(u, p);
          r.detail = "f values " + p.label(sys.f(t)) + " and " + p.label(sys.f(u)) +
                     " are not in order";
          return r;
        }
      }
    }
  }
  return r;
}

CheckResult surjective(const TransversalSystem& sys) {
  const auto& p = sys.poset();
  CheckResult r{"surjective"};
  if (sys.atoms_only()) {
    r.status = CheckStatus::skipped;
    r.detail = "only atomic tuples are tabulated";
    return r;
  }
  Bitset hit = p.empty_set();
  for (int v : sys.table()) hit.set(v);
  for (int x = 0; x < p.size(); ++x)
    if (!hit.test(x)) {
      r.status = CheckStatus::failed;
      r.witness = p.label(x);
      r.detail = "no tuple maps to " + p.label(x);
      return r;
    }
  return r;
}

CheckResult zero_fiber(const TransversalSystem& sys) {
  const auto& p = sys.poset();
  CheckResult r{"trivial zero fiber"};
  if (sys.f(0) != p.zero()) {
    r.status = CheckStatus::failed;
    r.witness = sys.space().describe(0, p);
    r.detail = "the zero tuple maps to " + p.label(sys.f(0));
    return r;
  }
  for (std::size_t t = 1; t < sys.table().size(); ++t)
    if (sys.f(t) == p.zero()) {
      r.status = CheckStatus::failed;
      r.witness = sys.space().describe(t, p);
      r.detail = "a nonzero tuple maps to the minimum";
      return r;
    }
  return r;
}

}  // namespace

Validation validate_transversal(const TransversalSystem& sys) {
  return {{order_preserving(sys), surjective(sys), zero_fiber(sys)}};
}

Validation validate_complete(const TransversalSystem& sys) {
  const auto& p = sys.poset();
  const auto& sp = sys.space();
  Validation v;
  CheckResult trees{"complete trees"};
  if (!sys.partition() || sys.partition()->size() != static_cast<std::size_t>(sp.arity())) {
    trees.status = CheckStatus::failed;
    trees.detail = "the system has no atom partition matching its trees";
  } else {
    for (int i = 0; i < sp.arity(); ++i) {
      const auto expected = complete_tree(p, (*sys.partition())[i]);
      if (expected.top != sp.tree(i).top || expected.parent != sp.tree(i).parent) {
        trees.status = CheckStatus::failed;
        trees.witness = std::to_string(i);
        trees.detail = "tree " + std::to_string(i) + " is not the complete tree of its block";
        break;
      }
    }
  }
  v.checks.push_back(trees);
  v.checks.push_back(order_preserving(sys));

  CheckResult constant{"constant tuples"};
  CheckResult below{"coordinates below value"};
  for (std::size_t t = 0; t < sys.table().size(); ++t) {
    int common = -1;
    bool uniform = true;
    for (int i = 0; i < sp.arity(); ++i) {
      const int node = sp.coord(t, i);
      if (node == 0) continue;
      const int y = sp.tree(i).top[node];
      if (below.passed() && !p.leq(y, sys.f(t))) {
        below.status = CheckStatus::failed;
        below.witness = sp.describe(t, p);
        below.detail = "coordinate " + p.label(y) + " is not below " + p.label(sys.f(t));
      }
      if (common < 0) common = y;
      else if (common != y) uniform = false;
    }
    if (common < 0) common = p.zero();
    if (uniform && constant.passed() && sys.f(t) != common) {
      constant.status = CheckStatus::failed;
      constant.witness = sp.describe(t, p);
      constant.detail = "maps to " + p.label(sys.f(t)) + " instead of " + p.label(common);
    }
  }
  v.checks.push_back(constant);
  v.checks.push_back(surjective(sys));
  v.checks.push_back(zero_fiber(sys));
  v.checks.push_back(below);
  return v;
}

namespace {

BigInt block_formula(const Poset& p, const AtomPartition& blocks, int x) {
  const Bitset ax = atoms_below(p, x);
  BigInt prod = 1;
  for (const auto& b : blocks) prod *= 1 - static_cast<long>(b.intersection_count(ax));
  return prod;
}

}  // namespace

LowerIdealSum lower_ideal_mu_sum(const TransversalSystem& sys, int x) {
  if (sys.kind() != SystemKind::complete || !sys.partition())
    throw NotCompleteError("lower ideal sum needs a complete system");
  const auto atomic = sys.space().atomic_tuples();
  const auto rows = detail::atomic_lower_ideal_rows(sys, atomic);
  BigInt direct = 0;
  for (std::size_t k = 0; k < atomic.size(); ++k)
    if (rows[k].test(x)) direct += sys.space().mu(atomic[k]);
  return {direct, block_formula(sys.poset(), *sys.partition(), x)};
}

LowerIdealSum lower_ideal_mu_sum(const Poset& p, const AtomPartition& blocks, int x) {
  validate_atom_partition(p, blocks);
  // Coordinate i ranges over 0̂ and the atoms of block i; only those below x count.
  BigInt direct = 0;
  std::vector<std::vector<int>> choices;
  for (const auto& b : blocks) {
    std::vector<int> c{p.zero()};
    b.for_each([&](int a) { c.push_back(a); });
    choices.push_back(std::move(c));
  }
  std::vector<std::size_t> digit(blocks.size(), 0);
  while (true) {
    bool inside = true;
    int support = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const int a = choices[i][digit[i]];
      if (a != p.zero()) ++support;
      if (!p.leq(a, x)) inside = false;
    }
    if (inside) direct += support % 2 ? -1 : 1;
    std::size_t i = blocks.size();
    while (i > 0 && digit[i - 1] + 1 == choices[i - 1].size()) digit[--i] = 0;
    if (i == 0) break;
    ++digit[i - 1];
  }
  return {direct, block_formula(p, blocks, x)};
}

AtomicComplex atomic_complex(const TransversalSystem& sys, int x) {
  const auto& sp = sys.space();
  const auto atomic = sp.atomic_tuples();
  const auto rows = detail::atomic_lower_ideal_rows(sys, atomic);
  AtomicComplex cx;
  for (std::size_t k = 0; k < atomic.size(); ++k) {
    const auto t = atomic[k];
    if (rows[k].test(x)) {
      cx.faces.push_back(t);
      cx.face_dims.push_back(sp.support_size(t) - 1);
    }
    if (sys.f(t) == x) {
      cx.facets.push_back(t);
      cx.facet_dims.push_back(sp.support_size(t) - 1);
    }
  }
  return cx;
}

BigInt reduced_euler(const AtomicComplex& cx) {
  BigInt e = 0;
  for (int d : cx.face_dims) e += (d % 2 == 0) ? 1 : -1;
  return e;
}

bool is_pure(const AtomicComplex& cx, int d) {
  for (int k : cx.facet_dims)
    if (k != d) return false;
  return true;
}

}  // namespace posetforge
