#pragma once

#include "rhom/exactla/rational.hpp"

#include <map>
#include <ostream>
#include <optional>
#include <string>

namespace rhom {

/// Laurent polynomial in one formal indeterminate nu with rational
/// coefficients. Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(int c) : Laurent(Rational(c)) {}  // NOLINT: scalar promotion
  Laurent(const Rational& c);               // NOLINT: scalar promotion

  static Laurent monomial(const Rational& c, int exponent);
  static Laurent nu(int exponent = 1) { return monomial(Rational(1), exponent); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Single term c*nu^k with c != 0.
  bool is_monomial() const { return terms_.size() == 1; }

  /// Exponent range; both throw std::domain_error on zero.
  int min_exponent() const;
  int max_exponent() const;
  Rational coefficient(int exponent) const;
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& nu_value) const;
  Laurent shifted(int k) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const Rational& c);
  /// Exact division; throws std::domain_error if o does not divide *this.
  Laurent& operator/=(const Laurent& o);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend Laurent operator*(Laurent a, const Rational& c) { return a *= c; }
  friend Laurent operator*(const Rational& c, Laurent a) { return a *= c; }
  friend Laurent operator/(Laurent a, const Laurent& b) { return a /= b; }
  Laurent operator-() const;

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  std::string to_string(const std::string& var = "nu") const;

 private:
  std::map<int, Rational> terms_;
};

inline bool is_zero(const Laurent& x) { return x.is_zero(); }

/// Quotient if b divides a in Q[nu, nu^-1], otherwise nullopt.
std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b);

/// Generator of the ideal (a, b), normalized to lowest exponent 0 and leading
/// coefficient 1. gcd(0, 0) = 0.
Laurent gcd(const Laurent& a, const Laurent& b);

inline std::ostream& operator<<(std::ostream& os, const Laurent& l) { return os << l.to_string(); }

}  // namespace rhom
