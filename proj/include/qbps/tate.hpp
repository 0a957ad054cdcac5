#pragma once

#include "qbps/util.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace qbps {

// Laurent polynomial in t = q^{1/2} with exact rational coefficients.
// Character conventions used throughout: L^{k/2} contributes t^k, a Tate
// class in cohomological degree j contributes t^j, and a shift V[k]
// multiplies the character by t^{-k}.
class TatePoly {
public:
  TatePoly() = default;
  explicit TatePoly(const Rational& c);
  explicit TatePoly(long long c);
  static TatePoly monomial(int exp, const Rational& c = Rational(1));

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  const std::map<int, Rational>& terms() const { return c_; }
  Rational coeff(int exp) const;
  void set_coeff(int exp, const Rational& c);
  int min_exp() const;  // throws internal_error on zero
  int max_exp() const;

  TatePoly operator+(const TatePoly& o) const;
  TatePoly operator-(const TatePoly& o) const;
  TatePoly operator-() const;
  TatePoly operator*(const TatePoly& o) const;
  TatePoly& operator+=(const TatePoly& o);
  TatePoly& operator-=(const TatePoly& o);
  TatePoly scaled(const Rational& c) const;
  TatePoly shifted(int dexp) const;  // multiply by t^dexp
  TatePoly pow(unsigned e) const;
  bool operator==(const TatePoly& o) const { return c_ == o.c_; }

  // Signed Adams operation: t^j -> (-1)^{j(k+1)} t^{jk}.
  TatePoly psi(int k) const;
  // Plain substitution t -> t^k (k may be negative for t -> t^{-1} duality).
  TatePoly subst_power(int k) const;

  std::string str() const;                          // e.g. "t^-3 + t^-1"
  nlohmann::json to_json() const;                   // {"t^-3":"1","t^-1":"1"}
  static TatePoly from_json(const nlohmann::json&);

private:
  std::map<int, Rational> c_;  // exponent -> nonzero coefficient
};

// Ratio of two TatePoly, kept in reduced canonical form: the denominator
// has t-valuation 0, leading coefficient 1, and no common factor with the
// numerator.  Equality is decided by cross-multiplication.
class TateRational {
public:
  TateRational() : num_(), den_(Rational(1)) {}
  TateRational(const TatePoly& num);  // NOLINT(google-explicit-constructor)
  TateRational(const TatePoly& num, const TatePoly& den);
  explicit TateRational(const Rational& c);
  static TateRational monomial(int exp, const Rational& c = Rational(1));
  // 1 / (1 - c t^exp)
  static TateRational geometric(int exp, const Rational& c = Rational(1));

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  const TatePoly& num() const { return num_; }
  const TatePoly& den() const { return den_; }
  bool is_polynomial() const;
  TatePoly as_polynomial() const;  // throws internal_error if not polynomial

  TateRational operator+(const TateRational& o) const;
  TateRational operator-(const TateRational& o) const;
  TateRational operator-() const;
  TateRational operator*(const TateRational& o) const;
  TateRational operator/(const TateRational& o) const;  // throws on zero divisor
  TateRational& operator+=(const TateRational& o);
  bool operator==(const TateRational& o) const;

  TateRational psi(int k) const;
  TateRational subst_power(int k) const;

  // Formal Laurent expansion, highest exponents first, down to t^lo
  // (used by tests and oracles; rendering stays exact).
  TatePoly expand_descending(int lo) const;
  // Lowest exponents first, up to t^hi.
  TatePoly expand_ascending(int hi) const;

  std::string str() const;
  nlohmann::json to_json() const;  // {"num": {...}, "den": {...}}

private:
  void reduce();
  TatePoly num_, den_;
};

}  // namespace qbps
