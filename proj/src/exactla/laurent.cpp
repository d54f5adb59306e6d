#include "rhom/exactla/laurent.hpp"

#include <stdexcept>
#include <vector>

namespace rhom {

namespace {

using Poly = std::vector<Rational>;  // index = degree, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly to_poly(const Laurent& a, int shift) {
  Poly p;
  for (const auto& [e, c] : a.terms()) {
    auto idx = static_cast<std::size_t>(e - shift);
    if (p.size() <= idx) p.resize(idx + 1);
    p[idx] = c;
  }
  return p;
}

Laurent from_poly(const Poly& p, int shift) {
  Laurent r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero()) r += Laurent::monomial(p[i], static_cast<int>(i) + shift);
  }
  return r;
}

// Long division over Q; returns (quotient, remainder).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

Laurent::Laurent(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

Laurent Laurent::monomial(const Rational& c, int exponent) {
  Laurent r;
  if (!c.is_zero()) r.terms_.emplace(exponent, c);
  return r;
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

int Laurent::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

Rational Laurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Laurent::leading_coefficient() const {
  if (terms_.empty()) return Rational(0);
  return terms_.rbegin()->second;
}

Rational Laurent::evaluate(const Rational& nu_value) const {
  if (terms_.empty()) return Rational(0);
  if (nu_value.is_zero()) throw std::domain_error("Laurent polynomial evaluated at nu = 0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    Rational base = e < 0 ? Rational(1) / nu_value : nu_value;
    for (int k = 0; k < (e < 0 ? -e : e); ++k) p *= base;
    sum += c * p;
  }
  return sum;
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Laurent& o) {
  if (terms_.empty() || o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  std::map<int, Rational> out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out[e1 + e2] += c1 * c2;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  terms_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

Laurent& Laurent::operator/=(const Laurent& o) {
  auto q = divide_exact(*this, o);
  if (!q) throw std::domain_error("Laurent division is not exact: (" + to_string() + ") / (" + o.to_string() + ")");
  *this = std::move(*q);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

std::string Laurent::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool show_coeff = e == 0 || mag != 1;
    if (show_coeff) out += rhom::to_string(mag);
    if (e != 0) {
      if (show_coeff) out += "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("Laurent division by zero");
  if (a.is_zero()) return Laurent();
  int sa = a.min_exponent();
  int sb = b.min_exponent();
  auto [q, r] = divmod(to_poly(a, sa), to_poly(b, sb));
  if (!r.empty()) return std::nullopt;
  return from_poly(q, sa - sb);
}

Laurent gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent();
  Poly x = a.is_zero() ? Poly{} : to_poly(a, a.min_exponent());
  Poly y = b.is_zero() ? Poly{} : to_poly(b, b.min_exponent());
  while (!y.empty()) {
    auto [q, r] = divmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  Rational lead = x.back();
  for (auto& c : x) c /= lead;
  return from_poly(x, 0);
}

}  // namespace rhom
