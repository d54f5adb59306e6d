#include "rhom/exactla/fraction.hpp"

#include <stdexcept>

namespace rhom {

Fraction::Fraction(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("Fraction with zero denominator");
  normalize();
}

void Fraction::normalize() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  Laurent g = gcd(num_, den_);
  num_ /= g;
  den_ /= g;
  // Units of Q[nu, nu^-1] are c*nu^k; push them all into the numerator.
  int shift = den_.min_exponent();
  Rational lead = den_.leading_coefficient();
  den_ = den_.shifted(-shift) * (Rational(1) / lead);
  num_ = num_.shifted(-shift) * (Rational(1) / lead);
}

Rational Fraction::evaluate(const Rational& nu_value) const {
  Rational d = den_.evaluate(nu_value);
  if (d.is_zero()) throw std::domain_error("denominator " + den_.to_string() + " vanishes at nu = " + rhom::to_string(nu_value));
  return num_.evaluate(nu_value) / d;
}

Fraction& Fraction::operator+=(const Fraction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction& Fraction::operator*=(const Fraction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& o) {
  if (o.is_zero()) throw std::domain_error("Fraction division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string Fraction::to_string(const std::string& var) const {
  if (is_laurent()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace rhom
