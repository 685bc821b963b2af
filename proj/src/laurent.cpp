#include "posetforge/laurent.hpp"

#include <cassert>
#include <sstream>

namespace posetforge {

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly p;
  p.add_term(c, exponent);
  return p;
}

LaurentPoly LaurentPoly::linear(const BigInt& r) {
  LaurentPoly p = monomial(1, 1);
  p.add_term(-r, 0);
  return p;
}

int LaurentPoly::min_exponent() const {
  assert(!coeffs_.empty());
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  assert(!coeffs_.empty());
  return coeffs_.rbegin()->first;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const BigInt& c, int exponent) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt LaurentPoly::evaluate(const BigInt& t) const {
  assert(is_polynomial());
  BigInt acc = 0;
  int e = is_zero() ? 0 : max_exponent();
  // Horner over every exponent from the top down.
  for (; e >= 0; --e) acc = acc * t + coefficient(e);
  return acc;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(-c, e);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ca * cb, ea + eb);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------

LaurentPoly shifted_root_product(int shift, const std::vector<BigInt>& roots) {
  LaurentPoly p = LaurentPoly::monomial(1, shift);
  for (const auto& r : roots) p = p * LaurentPoly::linear(r);
  return p;
}

LaurentPoly NaturalFactorization::expand() const {
  return LaurentPoly::constant(lead) * shifted_root_product(0, roots);
}

std::string NaturalFactorization::to_string() const {
  std::ostringstream os;
  if (lead < 0) os << '-';
  std::size_t i = 0;
  std::size_t zeros = 0;
  while (i < roots.size() && roots[i] == 0) ++i, ++zeros;
  if (zeros > 0) {
    os << 't';
    if (zeros > 1) os << '^' << zeros;
  }
  while (i < roots.size()) {
    std::size_t j = i;
    while (j < roots.size() && roots[j] == roots[i]) ++j;
    os << "(t-" << roots[i] << ')';
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  if (roots.empty()) os << '1';
  return os.str();
}

namespace {

// Descending coefficients of a polynomial with nonzero constant term.
std::vector<BigInt> dense_descending(const LaurentPoly& p, int shift) {
  const int degree = p.max_exponent() - shift;
  std::vector<BigInt> c(degree + 1);
  for (const auto& [e, v] : p.coefficients()) c[degree - (e - shift)] = v;
  return c;
}

// Synthetic division by (t - r); returns false when r is not a root.
bool divide_out(std::vector<BigInt>& c, const BigInt& r) {
  std::vector<BigInt> q(c.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    carry = carry * r + c[i];
    q[i] = carry;
  }
  if (carry * r + c.back() != 0) return false;
  c = std::move(q);
  return true;
}

}  // namespace

std::optional<NaturalFactorization> factor_over_naturals(const LaurentPoly& p) {
  if (p.is_zero() || !p.is_polynomial()) return std::nullopt;
  const BigInt lead = p.coefficient(p.max_exponent());
  if (lead != 1 && lead != -1) return std::nullopt;

  NaturalFactorization out;
  out.lead = lead > 0 ? 1 : -1;
  const int zero_roots = p.min_exponent();
  out.roots.assign(zero_roots, BigInt(0));

  std::vector<BigInt> c = dense_descending(p, zero_roots);
  if (lead < 0)
    for (auto& v : c) v = -v;
  // Every remaining root is positive. With d roots summing to S the smallest
  // is at most S/d, which bounds the trial values.
  BigInt r = 1;
  while (c.size() > 1) {
    const std::size_t d = c.size() - 1;
    const BigInt sum = -c[1];
    if (sum <= 0 || r * d > sum) return std::nullopt;
    if (divide_out(c, r))
      out.roots.push_back(r);
    else
      ++r;
  }
  return out;
}

}  // namespace posetforge
