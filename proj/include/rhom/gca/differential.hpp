#pragma once

#include "rhom/gca/algebra.hpp"

#include <string>
#include <vector>

namespace rhom::gca {

/// Degree +1 derivation determined by its values on generators and extended
/// by the graded Leibniz rule d(ab) = d(a) b + (-1)^|a| a d(b).
template <class T>
class Differential {
 public:
  Differential() = default;
  explicit Differential(AlgebraPtr algebra) : alg_(std::move(algebra)) {
    images_.assign(static_cast<std::size_t>(alg_->num_generators()), Element<T>(alg_));
  }

  const AlgebraPtr& algebra() const { return alg_; }

  void set(int g, Element<T> image) {
    auto d = image.degree();
    if (d && *d != alg_->degree_of(g) + 1)
      throw Error("d(" + alg_->generator(g).name + ") must have degree " + std::to_string(alg_->degree_of(g) + 1));
    images_.at(static_cast<std::size_t>(g)) = std::move(image).rebind(alg_);
  }
  const Element<T>& on_generator(int g) const { return images_.at(static_cast<std::size_t>(g)); }

  Element<T> apply(const Monomial& m) const {
    Element<T> out(alg_);
    const auto& f = m.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto& dg = images_[static_cast<std::size_t>(f[i])];
      if (dg.is_zero()) continue;
      Monomial left(std::vector<int>(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i)));
      Monomial right(std::vector<int>(f.begin() + static_cast<std::ptrdiff_t>(i) + 1, f.end()));
      Element<T> term = Element<T>::monomial(alg_, left) * dg * Element<T>::monomial(alg_, right);
      if (alg_->degree(left) % 2 != 0) term = -term;
      out += term;
    }
    return out;
  }

  Element<T> apply(const Element<T>& e) const {
    Element<T> out(alg_);
    for (const auto& [m, c] : e.terms()) out += apply(m) * c;
    return out;
  }

  /// Matrix of d: degree n -> degree n+1 in the monomial bases.
  Matrix<T> matrix(int n) const {
    const auto& src = alg_->monomial_basis(n);
    const Index rows = alg_->dim(n + 1);
    Matrix<T> out = Matrix<T>::Zero(rows, static_cast<Index>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
      Element<T> img = apply(src[j]);
      for (const auto& [m, c] : img.terms()) out(*alg_->index_of(m), static_cast<Index>(j)) = c;
    }
    return out;
  }

 private:
  AlgebraPtr alg_;
  std::vector<Element<T>> images_;
};

using DifferentialQ = Differential<Rational>;
using DifferentialL = Differential<Laurent>;

template <class To, class From>
Differential<To> cast(const Differential<From>& d) {
  Differential<To> out(d.algebra());
  for (int g = 0; g < d.algebra()->num_generators(); ++g) out.set(g, cast<To>(d.on_generator(g)));
  return out;
}

/// Algebra morphism given on generators, extended multiplicatively.
template <class T>
class Morphism {
 public:
  Morphism(AlgebraPtr source, AlgebraPtr target) : src_(std::move(source)), tgt_(std::move(target)) {
    images_.assign(static_cast<std::size_t>(src_->num_generators()), Element<T>(tgt_));
  }

  const AlgebraPtr& source() const { return src_; }
  const AlgebraPtr& target() const { return tgt_; }

  void set(int g, Element<T> image) {
    auto d = image.degree();
    if (d && *d != src_->degree_of(g)) throw Error("morphism must preserve the degree of " + src_->generator(g).name);
    images_.at(static_cast<std::size_t>(g)) = std::move(image).rebind(tgt_);
  }
  const Element<T>& on_generator(int g) const { return images_.at(static_cast<std::size_t>(g)); }

  Element<T> apply(const Monomial& m) const {
    Element<T> out = Element<T>::unit(tgt_);
    for (int g : m.factors()) {
      out = out * images_[static_cast<std::size_t>(g)];
      if (out.is_zero()) break;
    }
    return out;
  }

  template <class S>
  Element<T> apply(const Element<S>& e) const {
    Element<T> out(tgt_);
    for (const auto& [m, c] : e.terms()) out += apply(m) * T(c);
    return out;
  }

  /// Matrix in monomial bases, degree n -> degree n.
  Matrix<T> matrix(int n) const {
    const auto& src = src_->monomial_basis(n);
    Matrix<T> out = Matrix<T>::Zero(tgt_->dim(n), static_cast<Index>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
      Element<T> img = apply(src[j]);
      for (const auto& [m, c] : img.terms()) out(*tgt_->index_of(m), static_cast<Index>(j)) = c;
    }
    return out;
  }

  /// Generators g with phi(d g) != d(phi g).
  template <class S>
  std::vector<int> chain_map_violations(const Differential<S>& d_src, const Differential<S>& d_tgt) const {
    auto ds = cast<T>(d_src);
    auto dt = cast<T>(d_tgt);
    std::vector<int> bad;
    for (int g = 0; g < src_->num_generators(); ++g) {
      if (apply(ds.on_generator(g)) != dt.apply(on_generator(g))) bad.push_back(g);
    }
    return bad;
  }

  template <class S>
  void require_chain_map(const Differential<S>& d_src, const Differential<S>& d_tgt) const {
    auto bad = chain_map_violations(d_src, d_tgt);
    if (!bad.empty())
      throw NotAChainMap("morphism does not commute with d on generator " + src_->generator(bad.front()).name);
  }

 private:
  AlgebraPtr src_;
  AlgebraPtr tgt_;
  std::vector<Element<T>> images_;
};

using MorphismQ = Morphism<Rational>;
using MorphismL = Morphism<Laurent>;

struct SquareViolation {
  int generator = 0;
  std::string name;
  ElementQ image;  ///< d(d(generator)), nonzero
};

/// Generators on which d o d is nonzero.
std::vector<SquareViolation> check_d_squared(const DifferentialQ& d);

/// d o d = 0 on every monomial of degree <= max_degree (max_degree + 2 must
/// stay within the cutoff unless the algebra is bounded).
bool d_squared_vanishes_on_monomials(const DifferentialQ& d, int max_degree);

}  // namespace rhom::gca
