#include "rhom/liealg/lie_algebra.hpp"

#include "rhom/exactla/elimination.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace rhom::liealg {

namespace {

std::string vector_string(const VectorQ& v, const std::vector<std::string>& basis) {
  std::string out;
  for (Index k = 0; k < v.size(); ++k) {
    if (is_zero(v(k))) continue;
    if (!out.empty()) out += " + ";
    out += to_string(v(k)) + "*" + basis[static_cast<std::size_t>(k)];
  }
  return out.empty() ? "0" : out;
}

SubspaceQ bracket_span(const LieAlgebra& g, const SubspaceQ& a, const SubspaceQ& b) {
  std::vector<VectorQ> rows;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) rows.push_back(g.bracket(a.vector(i), b.vector(j)));
  MatrixQ m(static_cast<Index>(rows.size()), g.dim());
  for (std::size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Index>(r)) = rows[r].transpose();
  return SubspaceQ::span(g.dim(), m);
}

}  // namespace

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : antisymmetry)
    out += "antisymmetry fails at (" + std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.k) + ")\n";
  for (const auto& v : jacobi)
    out += "Jacobi fails at (" + std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.k) + ")\n";
  return out;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis) : name_(std::move(name)), basis_(std::move(basis)) {
  std::set<std::string> seen(basis_.begin(), basis_.end());
  if (seen.size() != basis_.size()) throw ValidationError("basis names must be unique");
  table_.assign(basis_.size() * basis_.size(), VectorQ::Zero(dim()));
}

std::optional<int> LieAlgebra::index_of(const std::string& basis_name) const {
  auto it = std::find(basis_.begin(), basis_.end(), basis_name);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<int>(it - basis_.begin());
}

void LieAlgebra::set_bracket_raw(int i, int j, VectorQ value) {
  if (i < 0 || j < 0 || i >= dim() || j >= dim() || value.size() != dim()) throw ValidationError("bracket index out of range");
  table_[static_cast<std::size_t>(i * dim() + j)] = std::move(value);
}

void LieAlgebra::set_bracket(int i, int j, const VectorQ& value) {
  set_bracket_raw(i, j, value);
  set_bracket_raw(j, i, -value);
}

void LieAlgebra::set_bracket_terms(int i, int j, const std::vector<std::pair<int, Rational>>& terms) {
  VectorQ v = VectorQ::Zero(dim());
  for (const auto& [k, c] : terms) v(k) += c;
  set_bracket(i, j, v);
}

VectorQ LieAlgebra::bracket(const VectorQ& a, const VectorQ& b) const {
  VectorQ out = VectorQ::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(a(i))) continue;
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(b(j))) continue;
      const VectorQ& c = bracket(i, j);
      Rational f = a(i) * b(j);
      for (int k = 0; k < dim(); ++k)
        if (!is_zero(c(k))) out(k) += c(k) * f;
    }
  }
  return out;
}

MatrixQ LieAlgebra::ad(int i) const {
  MatrixQ m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.col(j) = bracket(i, j);
  return m;
}

MatrixQ LieAlgebra::ad(const VectorQ& x) const {
  MatrixQ m = MatrixQ::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (!is_zero(x(i))) m += ad(i) * x(i);
  return m;
}

ValidationReport LieAlgebra::validate() const {
  ValidationReport r;
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k)
        if (bracket(i, j)(k) != -bracket(j, i)(k)) r.antisymmetry.push_back({i, j, k});
  const int n = dim();
  auto e = [n](int i) { return VectorQ(VectorQ::Unit(n, i)); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        VectorQ s = bracket(e(i), bracket(j, k)) + bracket(e(j), bracket(k, i)) + bracket(e(k), bracket(i, j));
        if (!is_zero_matrix(s)) r.jacobi.push_back({i, j, k, s});
      }
  return r;
}

std::vector<SubspaceQ> LieAlgebra::lower_central_series() const {
  std::vector<SubspaceQ> out{SubspaceQ::full(dim())};
  while (true) {
    SubspaceQ next = bracket_span(*this, out.front(), out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<SubspaceQ> LieAlgebra::derived_series() const {
  std::vector<SubspaceQ> out{SubspaceQ::full(dim())};
  while (true) {
    SubspaceQ next = bracket_span(*this, out.back(), out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool LieAlgebra::is_nilpotent() const { return lower_central_series().back().dim() == 0; }
bool LieAlgebra::is_solvable() const { return derived_series().back().dim() == 0; }

bool LieAlgebra::is_unimodular() const {
  for (int i = 0; i < dim(); ++i) {
    Rational t = 0;
    for (int j = 0; j < dim(); ++j) t += bracket(i, j)(j);
    if (!is_zero(t)) return false;
  }
  return true;
}

LieAlgebra LieAlgebra::change_basis(const MatrixQ& p, std::vector<std::string> names) const {
  if (p.rows() != dim() || p.cols() != dim() || rank(p) != dim()) throw ValidationError("change of basis must be invertible");
  if (names.empty()) {
    for (int a = 0; a < dim(); ++a) names.push_back("f" + std::to_string(a + 1));
  }
  LieAlgebra out(name_, std::move(names));
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) {
      VectorQ v = bracket(p.col(a), p.col(b));
      auto x = solve(p, v);
      out.set_bracket_raw(a, b, *x);
    }
  return out;
}

LieAlgebra LieAlgebra::subalgebra(const std::vector<int>& indices, std::string name) const {
  std::vector<std::string> names;
  for (int i : indices) names.push_back(basis_.at(static_cast<std::size_t>(i)));
  LieAlgebra out(name.empty() ? name_ : std::move(name), std::move(names));
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) {
      const VectorQ& v = bracket(indices[a], indices[b]);
      VectorQ w = VectorQ::Zero(static_cast<Index>(indices.size()));
      VectorQ rest = v;
      for (std::size_t c = 0; c < indices.size(); ++c) {
        w(static_cast<Index>(c)) = v(indices[c]);
        rest(indices[c]) = 0;
      }
      if (!is_zero_matrix(rest))
        throw ValidationError("span is not closed: [" + basis_[static_cast<std::size_t>(indices[a])] + ", " +
                              basis_[static_cast<std::size_t>(indices[b])] + "] = " + vector_string(v, basis_));
      out.set_bracket_raw(static_cast<int>(a), static_cast<int>(b), w);
    }
  return out;
}

LieAlgebra LieAlgebra::renamed(std::string name, std::vector<std::string> basis) const {
  LieAlgebra out(std::move(name), basis.empty() ? basis_ : std::move(basis));
  if (out.dim() != dim()) throw ValidationError("renaming must keep the dimension");
  out.table_ = table_;
  return out;
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const { return dim() == other.dim() && table_ == other.table_; }

SplittingSpec SplittingSpec::complement_of(const LieAlgebra& g, int s_index) {
  SplittingSpec s;
  s.s_index = s_index;
  for (int i = 0; i < g.dim(); ++i)
    if (i != s_index) s.nilradical_indices.push_back(i);
  return s;
}

Rational WeightVector::trace() const {
  Rational t = 0;
  for (const auto& w : weights) t += w;
  return t;
}

WeightVector verify_splitting(const LieAlgebra& g, const SplittingSpec& spec) {
  const int n = g.dim();
  std::vector<int> all = spec.nilradical_indices;
  all.push_back(spec.s_index);
  std::sort(all.begin(), all.end());
  std::vector<int> expected(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) expected[static_cast<std::size_t>(i)] = i;
  if (all != expected) throw ValidationError("splitting must partition the basis into S and the nilradical");

  const auto& names = g.basis();
  for (int i = 0; i < n; ++i)
    for (int j : spec.nilradical_indices)
      if (!is_zero(g.bracket(i, j)(spec.s_index)))
        throw NotAnIdeal("[" + names[static_cast<std::size_t>(i)] + ", " + names[static_cast<std::size_t>(j)] +
                         "] leaves the nilradical span");

  LieAlgebra nil = g.subalgebra(spec.nilradical_indices);
  if (!nil.is_nilpotent()) {
    // name a basis vector whose ad is not nilpotent on the span
    std::string who = nil.basis().front();
    for (int i = 0; i < nil.dim(); ++i)
      if (!is_zero_matrix(power(nil.ad(i), nil.dim()))) {
        who = nil.basis()[static_cast<std::size_t>(i)];
        break;
      }
    throw NotNilpotent("nilradical span is not nilpotent (ad " + who + ")");
  }

  WeightVector w;
  for (int j : spec.nilradical_indices) {
    VectorQ v = g.bracket(spec.s_index, j);
    Rational c = v(j);
    v(j) = 0;
    if (!is_zero_matrix(v))
      throw NotDiagonal("ad " + names[static_cast<std::size_t>(spec.s_index)] + " is not diagonal on " +
                        names[static_cast<std::size_t>(j)]);
    w.weights.push_back(c);
  }
  w.acts_trivially = std::all_of(w.weights.begin(), w.weights.end(), [](const Rational& x) { return is_zero(x); });
  if (g.is_unimodular() && !is_zero(w.trace())) throw ValidationError("weights do not sum to zero in a unimodular algebra");
  return w;
}

SolvabilityCertificate completely_solvable_certificate(const LieAlgebra& g, const std::optional<SplittingSpec>& spec) {
  SolvabilityCertificate c;
  if (!g.validate().ok()) {
    c.reason = "structure constants fail validation";
    return c;
  }
  if (g.is_nilpotent()) {
    c.status = SolvabilityStatus::Certified;
    c.reason = "nilpotent";
    return c;
  }
  if (!spec) {
    c.reason = "not nilpotent and no splitting supplied";
    return c;
  }
  try {
    c.weights = verify_splitting(g, *spec);
    c.status = SolvabilityStatus::Certified;
    c.reason = "rational diagonal action on a nilpotent ideal";
  } catch (const Error& e) {
    c.reason = e.what();
  }
  return c;
}

CeComplex ce_complex_unchecked(const LieAlgebra& g, int cutoff) {
  std::vector<gca::GeneratorDecl> gens;
  std::set<std::string> seen;
  for (const auto& b : g.basis()) {
    std::string lower = b;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    seen.insert(lower);
    gens.push_back({lower, 1, std::nullopt});
  }
  if (seen.size() != gens.size())
    for (std::size_t i = 0; i < gens.size(); ++i) gens[i].name = g.basis()[i];
  auto a = gca::FreeCGA::make(std::move(gens), cutoff < 0 ? g.dim() : cutoff);
  gca::DifferentialQ d(a);
  for (int k = 0; k < g.dim(); ++k) {
    gca::ElementQ img(a);
    for (int i = 0; i < g.dim(); ++i)
      for (int j = i + 1; j < g.dim(); ++j) {
        const Rational& c = g.bracket(i, j)(k);
        if (!is_zero(c)) img.add_term(gca::Monomial(std::vector<int>{i, j}), c);
      }
    d.set(k, img);
  }
  return {a, d};
}

CeComplex ce_complex(const LieAlgebra& g, int cutoff) {
  auto report = g.validate();
  if (!report.ok()) throw ValidationError("invalid Lie algebra " + g.name() + ":\n" + report.summary());
  auto ce = ce_complex_unchecked(g, cutoff);
  auto bad = gca::check_d_squared(ce.d);
  if (!bad.empty()) throw DifferentialNotSquareZero("d(d(" + bad.front().name + ")) = " + bad.front().image.to_string());
  return ce;
}

LieAlgebra heisenberg3(const std::string& suffix) {
  LieAlgebra h("heisenberg3", {"X" + suffix, "Y" + suffix, "Z" + suffix});
  h.set_bracket_terms(0, 1, {{2, Rational(1)}});
  return h;
}

LieAlgebra abelian(int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("e" + std::to_string(i));
  return LieAlgebra("abelian_" + std::to_string(k), std::move(names));
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h, std::string name) {
  std::vector<std::string> names = g.basis();
  std::set<std::string> seen(names.begin(), names.end());
  for (std::string b : h.basis()) {
    while (seen.count(b)) b += "'";
    seen.insert(b);
    names.push_back(b);
  }
  LieAlgebra out(name.empty() ? g.name() + "+" + h.name() : std::move(name), std::move(names));
  const int n = out.dim(), off = g.dim();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      VectorQ v = VectorQ::Zero(n);
      v.head(g.dim()) = g.bracket(i, j);
      out.set_bracket_raw(i, j, v);
    }
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j) {
      VectorQ v = VectorQ::Zero(n);
      v.tail(h.dim()) = h.bracket(i, j);
      out.set_bracket_raw(off + i, off + j, v);
    }
  return out;
}

LieAlgebra semidirect_by_weights(const WeightVector& w, const LieAlgebra& n, const std::string& s_name, std::string name) {
  if (static_cast<int>(w.weights.size()) != n.dim()) throw NotADerivation("one weight per basis vector is required");
  for (int i = 0; i < n.dim(); ++i)
    for (int j = 0; j < n.dim(); ++j) {
      const VectorQ& c = n.bracket(i, j);
      for (int k = 0; k < n.dim(); ++k)
        if (!is_zero(c(k)) && w.weights[static_cast<std::size_t>(k)] != w.weights[static_cast<std::size_t>(i)] + w.weights[static_cast<std::size_t>(j)])
          throw NotADerivation("weights are not additive on [" + n.basis()[static_cast<std::size_t>(i)] + ", " +
                               n.basis()[static_cast<std::size_t>(j)] + "]");
    }
  std::vector<std::string> names{s_name};
  names.insert(names.end(), n.basis().begin(), n.basis().end());
  LieAlgebra out(name.empty() ? n.name() + "_semidirect" : std::move(name), std::move(names));
  const int d = out.dim();
  for (int i = 0; i < n.dim(); ++i)
    for (int j = 0; j < n.dim(); ++j) {
      VectorQ v = VectorQ::Zero(d);
      v.tail(n.dim()) = n.bracket(i, j);
      out.set_bracket_raw(i + 1, j + 1, v);
    }
  for (int i = 0; i < n.dim(); ++i)
    if (!is_zero(w.weights[static_cast<std::size_t>(i)])) out.set_bracket_terms(0, i + 1, {{i + 1, w.weights[static_cast<std::size_t>(i)]}});
  return out;
}

LieAlgebra benson_gordon() {
  LieAlgebra g("benson_gordon", {"S", "T", "X1", "Y1", "Z1", "X2", "Y2", "Z2"});
  auto e = [&g](const char* n) { return *g.index_of(n); };
  g.set_bracket_terms(e("X1"), e("Y1"), {{e("Z1"), Rational(1)}});
  g.set_bracket_terms(e("X2"), e("Y2"), {{e("Z2"), Rational(1)}});
  g.set_bracket_terms(e("S"), e("X1"), {{e("X1"), Rational(1)}});
  g.set_bracket_terms(e("S"), e("X2"), {{e("X2"), Rational(-1)}});
  g.set_bracket_terms(e("S"), e("Y1"), {{e("Y1"), Rational(-2)}});
  g.set_bracket_terms(e("S"), e("Y2"), {{e("Y2"), Rational(2)}});
  g.set_bracket_terms(e("S"), e("Z1"), {{e("Z1"), Rational(-1)}});
  g.set_bracket_terms(e("S"), e("Z2"), {{e("Z2"), Rational(1)}});
  return g;
}

LieAlgebra benson_gordon_nilradical() {
  LieAlgebra t = abelian(1).renamed("line", {"T"});
  return direct_sum(direct_sum(t, heisenberg3("1")), heisenberg3("2"), "benson_gordon_nilradical");
}

}  // namespace rhom::liealg
