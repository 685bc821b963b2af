#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "posetforge/bigint.hpp"

namespace posetforge {

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, int exponent);
  /// t - r
  static LaurentPoly linear(const BigInt& r);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_polynomial() const { return is_zero() || min_exponent() >= 0; }
  int min_exponent() const;  // requires non-zero
  int max_exponent() const;
  BigInt coefficient(int exponent) const;
  const std::map<int, BigInt>& coefficients() const { return coeffs_; }

  void add_term(const BigInt& c, int exponent);
  BigInt evaluate(const BigInt& t) const;  // requires is_polynomial()

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "t^3 - 2t^2 + t"; descending exponents, explicit signs.
  std::string to_string() const;

 private:
  std::map<int, BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// p = lead * prod (t - roots[i]) with lead = ±1 and every root in N.
struct NaturalFactorization {
  int lead = 1;
  std::vector<BigInt> roots;  // ascending, with multiplicity

  LaurentPoly expand() const;
  /// "t(t-1)^2", "(t-3)^2", "-t^2(t-4)".
  std::string to_string() const;
};

/// Factors p over nonnegative integer roots; nullopt if p is not of that form.
std::optional<NaturalFactorization> factor_over_naturals(const LaurentPoly& p);

/// t^shift * prod (t - roots[i]); shift may be negative.
LaurentPoly shifted_root_product(int shift, const std::vector<BigInt>& roots);

}  // namespace posetforge
