#include <string>

#include "posetforge/errors.hpp"
#include "posetforge/transversal.hpp"

namespace posetforge {

ProductSpace::ProductSpace(std::vector<RootedTree> trees, bool atoms_only)
    : trees_(std::move(trees)), atoms_only_(atoms_only) {
  const std::size_t n = trees_.size();
  radix_.resize(n);
  stride_.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    radix_[i] = atoms_only ? trees_[i].atom_count() + 1 : trees_[i].size();
  std::size_t total = 1;
  for (std::size_t i = n; i-- > 0;) {
    stride_[i] = total;
    if (size_ && __builtin_mul_overflow(total, radix_[i], &total)) size_.reset();
  }
  if (size_) size_ = total;
}

std::vector<int> ProductSpace::decode(std::size_t t) const {
  std::vector<int> out(arity());
  for (int i = 0; i < arity(); ++i) out[i] = coord(t, i);
  return out;
}

std::size_t ProductSpace::encode(std::span<const int> nodes) const {
  if (nodes.size() != radix_.size()) throw InvalidIndexError("tuple has the wrong arity");
  std::size_t t = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < 0 || static_cast<std::size_t>(nodes[i]) >= radix_[i])
      throw InvalidIndexError("tuple coordinate " + std::to_string(i) + " out of range");
    t += static_cast<std::size_t>(nodes[i]) * stride_[i];
  }
  return t;
}

bool ProductSpace::leq(std::size_t a, std::size_t b) const {
  for (int i = 0; i < arity(); ++i)
    if (!trees_[i].leq(coord(a, i), coord(b, i))) return false;
  return true;
}

int ProductSpace::support_size(std::size_t t) const {
  int s = 0;
  for (int i = 0; i < arity(); ++i) s += coord(t, i) != 0;
  return s;
}

bool ProductSpace::is_atomic(std::size_t t) const {
  for (int i = 0; i < arity(); ++i)
    if (coord(t, i) > trees_[i].atom_count()) return false;
  return true;
}

int ProductSpace::mu(std::size_t t) const {
  int m = 1;
  for (int i = 0; i < arity() && m != 0; ++i) m *= trees_[i].mu(coord(t, i));
  return m;
}

std::vector<std::size_t> ProductSpace::atomic_tuples() const {
  std::vector<std::size_t> out;
  std::vector<int> digits(arity(), 0);
  while (true) {
    out.push_back(encode(digits));
    int i = arity() - 1;
    while (i >= 0 && digits[i] == trees_[i].atom_count()) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  return out;
}

std::string ProductSpace::describe(std::size_t t, const Poset& p) const {
  std::string s = "(";
  for (int i = 0; i < arity(); ++i) {
    if (i) s += ", ";
    s += p.label(trees_[i].top[coord(t, i)]);
  }
  return s + ")";
}

}  // namespace posetforge
