#include "rhom/gca/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rhom::gca {

Monomial::Monomial(std::vector<int> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

int Monomial::exponent(int g) const {
  return static_cast<int>(std::count(factors_.begin(), factors_.end(), g));
}

AlgebraPtr FreeCGA::make(std::vector<GeneratorDecl> generators, int cutoff) {
  return AlgebraPtr(new FreeCGA(std::move(generators), cutoff));
}

FreeCGA::FreeCGA(std::vector<GeneratorDecl> generators, int cutoff)
    : gens_(std::move(generators)), cutoff_(cutoff) {
  std::set<std::string> names;
  int odd_total = 0;
  bool all_odd = true;
  for (const auto& g : gens_) {
    if (g.degree < 1) throw Error("generator '" + g.name + "' must have degree >= 1");
    if (!names.insert(g.name).second) throw Error("duplicate generator name '" + g.name + "'");
    if (g.degree % 2 == 0) all_odd = false;
    odd_total += g.degree;
  }
  bounded_ = all_odd && odd_total <= cutoff_;

  bases_.resize(static_cast<std::size_t>(cutoff_) + 1);
  index_.resize(static_cast<std::size_t>(cutoff_) + 1);
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int g, int deg) {
    bases_[static_cast<std::size_t>(deg)].emplace_back(current);
    for (int h = g; h < num_generators(); ++h) {
      int dh = degree_of(h);
      if (deg + dh > cutoff_) continue;
      if (is_odd(h) && !current.empty() && current.back() == h) continue;
      current.push_back(h);
      // Odd generators may not repeat; even ones may.
      rec(is_odd(h) ? h + 1 : h, deg + dh);
      current.pop_back();
    }
  };
  rec(0, 0);
  for (std::size_t n = 0; n < bases_.size(); ++n) {
    std::sort(bases_[n].begin(), bases_[n].end());
    for (std::size_t i = 0; i < bases_[n].size(); ++i) index_[n].emplace(bases_[n][i], static_cast<Index>(i));
  }
}

std::optional<int> FreeCGA::find_generator(const std::string& name) const {
  for (int g = 0; g < num_generators(); ++g)
    if (gens_[static_cast<std::size_t>(g)].name == name) return g;
  return std::nullopt;
}

int FreeCGA::degree(const Monomial& m) const {
  int d = 0;
  for (int g : m.factors()) d += degree_of(g);
  return d;
}

int FreeCGA::lower_degree(const Monomial& m) const {
  int d = 0;
  for (int g : m.factors()) d += generator(g).lower_degree.value_or(0);
  return d;
}

const std::vector<Monomial>& FreeCGA::monomial_basis(int n) const {
  static const std::vector<Monomial> empty;
  if (n < 0) return empty;
  if (n > cutoff_) {
    if (bounded_) return empty;
    throw CutoffExceeded("degree " + std::to_string(n) + " exceeds cutoff " + std::to_string(cutoff_));
  }
  return bases_[static_cast<std::size_t>(n)];
}

std::optional<Index> FreeCGA::index_of(const Monomial& m) const {
  int n = degree(m);
  if (n > cutoff_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(n)];
  auto it = idx.find(m);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::pair<int, Monomial> FreeCGA::multiply(const Monomial& a, const Monomial& b) const {
  int swaps = 0;
  for (int q : b.factors()) {
    if (!is_odd(q)) continue;
    for (int p : a.factors()) {
      if (!is_odd(p)) continue;
      if (p == q) return {0, Monomial()};
      if (p > q) ++swaps;
    }
  }
  std::vector<int> merged;
  merged.reserve(a.length() + b.length());
  std::merge(a.factors().begin(), a.factors().end(), b.factors().begin(), b.factors().end(),
             std::back_inserter(merged));
  return {swaps % 2 == 0 ? 1 : -1, Monomial(std::move(merged))};
}

std::string FreeCGA::to_string(const Monomial& m) const {
  if (m.is_unit()) return "1";
  std::string out;
  const auto& f = m.factors();
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    if (!out.empty()) out += "*";
    out += generator(f[i]).name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string coefficient_string(const Rational& c) { return rhom::to_string(c); }

std::string coefficient_string(const Laurent& c) {
  if (c.is_constant()) return rhom::to_string(c.coefficient(0));
  return "(" + c.to_string() + ")";
}

}  // namespace rhom::gca
