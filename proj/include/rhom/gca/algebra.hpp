#pragma once

// Free graded-commutative algebras: exterior on odd generators tensor
// polynomial on even generators, with Koszul-signed multiplication.

#include "rhom/errors.hpp"
#include "rhom/exactla/matrix.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rhom::gca {

struct GeneratorDecl {
  std::string name;
  int degree = 1;
  /// Stage grading of a bigraded model; absent elsewhere.
  std::optional<int> lower_degree;
};

/// A monomial is the sorted list of its generator indices, repeated by
/// exponent (odd generators appear at most once). Ordering is lexicographic
/// on that list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> factors);
  static Monomial generator(int g) { return Monomial(std::vector<int>{g}); }

  const std::vector<int>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  std::size_t length() const { return factors_.size(); }
  int exponent(int g) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<int> factors_;
};

class FreeCGA;
using AlgebraPtr = std::shared_ptr<const FreeCGA>;

class FreeCGA {
 public:
  /// Builds the algebra and enumerates monomial bases in degrees 0..cutoff.
  static AlgebraPtr make(std::vector<GeneratorDecl> generators, int cutoff);

  const std::vector<GeneratorDecl>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const GeneratorDecl& generator(int g) const { return gens_.at(static_cast<std::size_t>(g)); }
  int degree_of(int g) const { return generator(g).degree; }
  bool is_odd(int g) const { return degree_of(g) % 2 != 0; }
  std::optional<int> find_generator(const std::string& name) const;
  int cutoff() const { return cutoff_; }

  int degree(const Monomial& m) const;
  int lower_degree(const Monomial& m) const;

  /// Exterior algebras whose top degree fits under the cutoff have known
  /// (empty) bases beyond it.
  bool is_bounded() const { return bounded_; }

  /// Complete, duplicate-free, lexicographically ordered basis. Throws
  /// CutoffExceeded for n > cutoff unless the algebra is bounded.
  const std::vector<Monomial>& monomial_basis(int n) const;
  Index dim(int n) const { return static_cast<Index>(monomial_basis(n).size()); }
  std::optional<Index> index_of(const Monomial& m) const;

  /// Product of two monomials: (sign, result); sign 0 when the product
  /// vanishes (repeated odd generator).
  std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) const;

  std::string to_string(const Monomial& m) const;

 private:
  FreeCGA(std::vector<GeneratorDecl> generators, int cutoff);

  std::vector<GeneratorDecl> gens_;
  int cutoff_;
  bool bounded_ = false;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::map<Monomial, Index>> index_;
};

/// Finite linear combination of monomials with coefficients in T (Rational
/// or Laurent).
template <class T>
class Element {
 public:
  Element() = default;
  explicit Element(AlgebraPtr algebra) : alg_(std::move(algebra)) {}

  static Element unit(AlgebraPtr a) { return monomial(std::move(a), Monomial(), T(1)); }
  static Element generator(AlgebraPtr a, int g, const T& c = T(1)) {
    return monomial(std::move(a), Monomial::generator(g), c);
  }
  static Element monomial(AlgebraPtr a, const Monomial& m, const T& c = T(1)) {
    Element e(std::move(a));
    e.add_term(m, c);
    return e;
  }
  /// Element with coordinate vector v in the degree-n monomial basis.
  static Element from_coordinates(AlgebraPtr a, int n, const Vector<T>& v) {
    Element e(a);
    const auto& basis = a->monomial_basis(n);
    for (Index i = 0; i < v.size(); ++i)
      if (!rhom::is_zero(v(i))) e.add_term(basis[static_cast<std::size_t>(i)], v(i));
    return e;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Monomial, T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const T& c) {
    if (rhom::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (rhom::is_zero(it->second)) terms_.erase(it);
    }
  }

  T coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? T(0) : it->second;
  }

  /// Degree if all terms share one; nullopt for zero or mixed elements.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      int dm = alg_->degree(m);
      if (d && *d != dm) return std::nullopt;
      d = dm;
    }
    return d;
  }

  /// Coordinates in the degree-n monomial basis; terms of other degrees must
  /// be absent.
  Vector<T> coordinates(int n) const {
    Vector<T> v = Vector<T>::Zero(alg_->dim(n));
    for (const auto& [m, c] : terms_) {
      auto idx = alg_->index_of(m);
      if (!idx || alg_->degree(m) != n)
        throw Error("element has a term outside degree " + std::to_string(n) + ": " + alg_->to_string(m));
      v(*idx) = c;
    }
    return v;
  }

  Element& operator+=(const Element& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Element& operator*=(const T& c) {
    if (rhom::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const T& c) { return a *= c; }
  friend Element operator*(const T& c, Element a) { return a *= c; }
  Element operator-() const {
    Element r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
  }

  friend Element operator*(const Element& a, const Element& b) {
    a.check_same(b);
    Element out(a.alg_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto [sign, m] = a.alg_->multiply(ma, mb);
        if (sign == 0) continue;
        T c = ca * cb;
        if (sign < 0) c = -c;
        out.add_term(m, c);
      }
    return out;
  }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Same terms viewed in an algebra with the same leading generators.
  Element rebind(AlgebraPtr other) const {
    Element e(std::move(other));
    e.terms_ = terms_;
    return e;
  }

  std::string to_string() const;

 private:
  void check_same(const Element& o) const {
    if (alg_ && o.alg_ && alg_ != o.alg_) throw MixedAlgebras("operands belong to different algebras");
  }

  AlgebraPtr alg_;
  std::map<Monomial, T> terms_;
};

using ElementQ = Element<Rational>;
using ElementL = Element<Laurent>;

template <class To, class From>
Element<To> cast(const Element<From>& e) {
  Element<To> out(e.algebra());
  for (const auto& [m, c] : e.terms()) out.add_term(m, To(c));
  return out;
}

std::string coefficient_string(const Rational& c);
std::string coefficient_string(const Laurent& c);

template <class T>
std::string Element<T>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = coefficient_string(c);
    std::string ms = alg_->to_string(m);
    if (m.is_unit())
      out += cs;
    else if (cs == "1")
      out += ms;
    else if (cs == "-1")
      out += "-" + ms;
    else
      out += cs + "*" + ms;
  }
  return out;
}

}  // namespace rhom::gca
