#include <algorithm>
#include <string>

#include "posetforge/errors.hpp"
#include "posetforge/quotient.hpp"
#include "posetforge/transversal.hpp"
#include "system_detail.hpp"

namespace posetforge {

bool TheoremReport::hypotheses_hold() const {
  return std::none_of(hypotheses.begin(), hypotheses.end(),
                      [](const CheckResult& c) { return c.failed(); });
}

bool TheoremReport::conclusions_hold() const {
  return std::none_of(conclusions.begin(), conclusions.end(),
                      [](const CheckResult& c) { return c.failed(); });
}

const CheckResult* TheoremReport::first_failure() const {
  for (const auto* list : {&hypotheses, &conclusions})
    for (const auto& c : *list)
      if (c.failed()) return &c;
  return nullptr;
}

namespace {

constexpr std::size_t kMaterializedQuotientTuples = 4096;

void check_rank_args(const Poset& p, const RankFn& rho, int m) {
  if (rho.rho.size() != static_cast<std::size_t>(p.size()))
    throw InvalidIndexError("rank function has the wrong length");
  if (m < rho.rank_of_poset())
    throw RankBoundError("m = " + std::to_string(m) + " is below the rank of the poset (" +
                         std::to_string(rho.rank_of_poset()) + ")");
}

CheckResult fold(std::string name, const Validation& v) {
  CheckResult r{std::move(name)};
  for (const auto& c : v.checks)
    if (c.failed()) {
      r.status = CheckStatus::failed;
      r.witness = c.witness;
      r.detail = c.name + ": " + c.detail;
      return r;
    }
  return r;
}

CheckResult support_equals_rank(const TransversalSystem& sys, const RankFn& rho) {
  const auto& p = sys.poset();
  const auto& sp = sys.space();
  CheckResult r{"atomic support equals rank"};
  for (auto t : sp.atomic_tuples()) {
    const int x = sys.f(t);
    if (sp.support_size(t) != rho(x)) {
      r.status = CheckStatus::failed;
      r.witness = sp.describe(t, p);
      r.detail = "support " + std::to_string(sp.support_size(t)) + " but rho(" + p.label(x) +
                 ") = " + std::to_string(rho(x));
      return r;
    }
  }
  return r;
}

CheckResult lifting(const TransversalSystem& sys, const std::vector<Bitset>* reach) {
  const auto& p = sys.poset();
  const auto& sp = sys.space();
  CheckResult r{"lifting"};
  if (!reach) {
    r.status = CheckStatus::skipped;
    r.detail = "the full tree product exceeds the tuple cap";
    return r;
  }
  for (std::size_t s = 0; s < reach->size(); ++s) {
    const Bitset missing = p.up(sys.f(s)) - (*reach)[s];
    if (missing.any()) {
      const int y = missing.find_first();
      r.status = CheckStatus::failed;
      r.witness = sp.describe(s, p);
      r.detail = "tuple in the fiber of " + p.label(sys.f(s)) + " lies below no tuple of the fiber of " +
                 p.label(y);
      return r;
    }
  }
  return r;
}

CheckResult summation(const TransversalSystem& sys) {
  const auto& p = sys.poset();
  const auto& sp = sys.space();
  CheckResult r{"summation condition"};
  const auto atomic = sp.atomic_tuples();
  const auto rows = detail::atomic_lower_ideal_rows(sys, atomic);
  std::vector<BigInt> sum(p.size());
  for (std::size_t k = 0; k < atomic.size(); ++k) {
    const int m = sp.mu(atomic[k]);
    rows[k].for_each([&](int x) { sum[x] += m; });
  }
  std::vector<int> bad;
  for (int x = 0; x < p.size(); ++x)
    if (x != p.zero() && sum[x] != 0) bad.push_back(x);
  if (!bad.empty()) {
    r.status = CheckStatus::failed;
    r.witness = detail::element_list(p, bad);
    r.detail = "mu sums over the lower ideal of the fiber of " + p.label(bad.front()) + " to " +
               sum[bad.front()].str();
  }
  return r;
}

CheckResult unique_block(const Poset& p, const AtomPartition& blocks) {
  CheckResult r{"unique atom block"};
  std::vector<int> bad;
  for (int x = 0; x < p.size(); ++x) {
    if (x == p.zero()) continue;
    const Bitset ax = atoms_below(p, x);
    if (std::none_of(blocks.begin(), blocks.end(),
                     [&](const ElementSet& b) { return b.intersection_count(ax) == 1; }))
      bad.push_back(x);
  }
  if (!bad.empty()) {
    r.status = CheckStatus::failed;
    r.witness = detail::element_list(p, bad);
    r.detail = "no block meets the atoms below " + p.label(bad.front()) + " exactly once";
  }
  return r;
}

// The map induced by f from the kernel quotient to P is an isomorphism.
CheckResult isomorphism(const TransversalSystem& sys, const std::vector<Bitset>* reach) {
  const auto& p = sys.poset();
  const auto& sp = sys.space();
  CheckResult r{"quotient isomorphic to P"};
  if (sp.atoms_only()) {
    r.status = CheckStatus::skipped;
    r.detail = "the full tree product exceeds the tuple cap";
    return r;
  }
  const std::size_t count = sp.size().value();
  if (count <= kMaterializedQuotientTuples) {
    // The empty product is the one-tuple poset.
    Poset prod = Poset::from_covers({"()"}, {});
    if (sp.arity() > 0) prod = tree_poset(sp.tree(0), p);
    for (int i = 1; i < sp.arity(); ++i) prod = product(prod, tree_poset(sp.tree(i), p));
    const auto q = QuotientMap::kernel(sys.table());
    const auto result = quotient(prod, q);
    if (const auto* bad = std::get_if<PreorderReport>(&result)) {
      r.status = CheckStatus::failed;
      r.detail = bad->message;
      return r;
    }
    const auto& quo = std::get<Quotient>(result);
    std::vector<int> image(q.class_count());
    for (int c = 0; c < q.class_count(); ++c) image[c] = sys.f(q.classes[c].front());
    for (int a = 0; a < q.class_count(); ++a)
      for (int b = 0; b < q.class_count(); ++b)
        if (quo.poset.leq(a, b) != p.leq(image[a], image[b])) {
          r.status = CheckStatus::failed;
          r.witness = p.label(image[a]) + ", " + p.label(image[b]);
          r.detail = "the induced map does not reflect the order";
          return r;
        }
    if (q.class_count() != p.size() || !is_isomorphic(quo.poset, p)) {
      r.status = CheckStatus::failed;
      r.detail = "the kernel quotient is not isomorphic to P";
    }
    return r;
  }
  // Class X_x lies below X_y iff y is reachable from some tuple of T_x.
  std::vector<Bitset> rows(p.size(), p.empty_set());
  for (std::size_t s = 0; s < count; ++s) rows[sys.f(s)] |= (*reach)[s];
  for (int z = 0; z < p.size(); ++z)
    for (int x = 0; x < p.size(); ++x)
      if (rows[x].test(z)) rows[x] |= rows[z];
  for (int x = 0; x < p.size(); ++x)
    if (rows[x] != p.up(x)) {
      r.status = CheckStatus::failed;
      r.witness = p.label(x);
      r.detail = "the class order above the fiber of " + p.label(x) + " differs from P";
      return r;
    }
  return r;
}

CheckResult moebius_count(const TransversalSystem& sys, const RankFn& rho, const MoebiusTable& mu) {
  const auto& p = sys.poset();
  const auto& sp = sys.space();
  CheckResult r{"mu equals signed atomic fiber size"};
  std::vector<long> count(p.size(), 0);
  for (auto t : sp.atomic_tuples()) ++count[sys.f(t)];
  for (int x = 0; x < p.size(); ++x) {
    const BigInt expected = BigInt(rho(x) % 2 ? -count[x] : count[x]);
    if (mu[x] != expected) {
      r.status = CheckStatus::failed;
      r.witness = p.label(x);
      r.detail = "mu = " + mu[x].str() + " but the signed atomic fiber size is " + expected.str();
      return r;
    }
  }
  return r;
}

LaurentPoly factored_form(int m, const std::vector<long>& sizes) {
  LaurentPoly out = LaurentPoly::monomial(1, m - static_cast<int>(sizes.size()));
  for (long s : sizes) out = out * LaurentPoly::linear(s);
  return out;
}

CheckResult chi_check(const LaurentPoly& chi, const LaurentPoly& factored) {
  CheckResult r{"factored characteristic polynomial"};
  if (chi != factored) {
    r.status = CheckStatus::failed;
    r.witness = chi.to_string();
    r.detail = "expected " + factored.to_string();
  }
  return r;
}

TheoremReport run_theorem(std::string name, const TransversalSystem& sys, const RankFn& rho,
                          int m, bool complete) {
  const auto& p = sys.poset();
  check_rank_args(p, rho, m);
  TheoremReport rep;
  rep.theorem = std::move(name);
  rep.m = m;
  rep.n = sys.space().arity();
  const auto mu = moebius(p);
  rep.chi = char_poly(p, mu, rho, m);

  std::vector<long> sizes;
  std::optional<std::vector<Bitset>> reach;
  if (!sys.atoms_only()) reach = detail::reach(sys);
  const auto* reach_ptr = reach ? &*reach : nullptr;

  if (complete) {
    for (const auto& b : sys.partition().value_or(AtomPartition{})) sizes.push_back(b.count());
    rep.hypotheses.push_back(fold("complete transversal function", validate_complete(sys)));
    rep.hypotheses.push_back(support_equals_rank(sys, rho));
    if (sys.partition()) rep.hypotheses.push_back(unique_block(p, *sys.partition()));
  } else {
    for (const auto& t : sys.space().trees()) sizes.push_back(t.atom_count());
    rep.hypotheses.push_back(fold("transversal function", validate_transversal(sys)));
    rep.hypotheses.push_back(lifting(sys, reach_ptr));
    rep.hypotheses.push_back(support_equals_rank(sys, rho));
    rep.hypotheses.push_back(summation(sys));
  }
  rep.factored = factored_form(m, sizes);
  if (rep.hypotheses_hold()) {
    rep.conclusions.push_back(isomorphism(sys, reach_ptr));
    rep.conclusions.push_back(moebius_count(sys, rho, mu));
    rep.conclusions.push_back(chi_check(rep.chi, rep.factored));
  }
  return rep;
}

}  // namespace

TheoremReport check_theorem_A(const TransversalSystem& sys, const RankFn& rho, int m,
                              const Limits&) {
  return run_theorem("transversal factorization", sys, rho, m, false);
}

TheoremReport check_theorem_B(const TransversalSystem& sys, const RankFn& rho, int m,
                              const Limits&) {
  return run_theorem("complete factorization", sys, rho, m, true);
}

IffReport check_theorem_iff(const TransversalSystem& sys, const RankFn& rho, int m) {
  const auto& p = sys.poset();
  check_rank_args(p, rho, m);
  IffReport rep;
  auto require = [&](CheckResult c) {
    if (c.failed())
      throw HypothesisError(c.name + " fails at " + c.witness + (c.detail.empty() ? "" : ": ") +
                            c.detail);
    rep.hypotheses.push_back(std::move(c));
  };
  require(fold("complete transversal function", validate_complete(sys)));
  const auto& blocks = *sys.partition();
  require(support_equals_rank(sys, rho));

  CheckResult strict{"strictly increasing rank"};
  for (auto [x, y] : p.cover_pairs())
    if (rho(x) >= rho(y)) {
      strict.status = CheckStatus::failed;
      strict.witness = p.label(x) + " < " + p.label(y);
      strict.detail = "rho does not increase along this cover";
      break;
    }
  require(strict);

  // T: nonzero elements with no block meeting their atoms exactly once.
  Bitset t_set = p.empty_set();
  std::vector<int> blocks_hit(p.size(), 0);
  for (int x = 0; x < p.size(); ++x) {
    const Bitset ax = atoms_below(p, x);
    bool unique = false;
    for (const auto& b : blocks) {
      const auto k = b.intersection_count(ax);
      unique = unique || k == 1;
      blocks_hit[x] += k != 0;
    }
    if (x != p.zero() && !unique) t_set.set(x);
  }
  CheckResult parity{"parity on minimal elements"};
  int first = -1;
  t_set.for_each([&](int x) {
    if ((p.down(x) & t_set).count() != 1 || !parity.passed()) return;
    if (first < 0) first = x;
    else if (blocks_hit[x] % 2 != blocks_hit[first] % 2) {
      parity.status = CheckStatus::failed;
      parity.witness = p.label(first) + ", " + p.label(x);
      parity.detail = "minimal elements of T meet blocks of different parity";
    }
  });
  require(parity);

  const auto mu = moebius(p);
  rep.chi = char_poly(p, mu, rho, m);
  std::vector<long> sizes;
  for (const auto& b : blocks) sizes.push_back(b.count());
  rep.factored = factored_form(m, sizes);
  rep.factorization_holds = rep.chi == rep.factored;
  rep.unique_block_holds = t_set.none();
  if (t_set.any()) {
    int k = -1;
    t_set.for_each([&](int x) { k = k < 0 ? rho(x) : std::min(k, rho(x)); });
    rep.witness_rank = k;
    rep.chi_coefficient = rep.chi.coefficient(m - k);
    rep.factored_coefficient = rep.factored.coefficient(m - k);
  }
  return rep;
}

}  // namespace posetforge
