#pragma once

#include "rhom/exactla/laurent.hpp"

#include <string>

namespace rhom {

/// Element of Q(nu). Stored reduced: gcd(num, den) = 1 and den normalized to
/// lowest exponent 0 with leading coefficient 1, so equal values compare equal
/// structurally.
class Fraction {
 public:
  Fraction() : num_(), den_(1) {}
  Fraction(int c) : Fraction(Laurent(c)) {}              // NOLINT
  Fraction(const Rational& c) : Fraction(Laurent(c)) {}  // NOLINT
  Fraction(const Laurent& num) : num_(num), den_(1) {}   // NOLINT
  Fraction(const Laurent& num, const Laurent& den);

  const Laurent& numerator() const { return num_; }
  const Laurent& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the value lies in Q[nu, nu^-1].
  bool is_laurent() const { return den_.is_one(); }
  bool is_constant() const { return is_laurent() && num_.is_constant(); }

  /// Throws std::domain_error when the denominator vanishes at nu_value.
  Rational evaluate(const Rational& nu_value) const;

  Fraction& operator+=(const Fraction& o);
  Fraction& operator-=(const Fraction& o);
  Fraction& operator*=(const Fraction& o);
  Fraction& operator/=(const Fraction& o);
  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }
  Fraction operator-() const { return Fraction(-num_, den_, Reduced{}); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

  std::string to_string(const std::string& var = "nu") const;

 private:
  struct Reduced {};
  Fraction(Laurent num, Laurent den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Laurent num_;
  Laurent den_;
};

inline bool is_zero(const Fraction& x) { return x.is_zero(); }

inline std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

}  // namespace rhom
