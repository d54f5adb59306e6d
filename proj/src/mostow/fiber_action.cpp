#include "rhom/mostow/fiber_action.hpp"

#include "rhom/exactla/spectral.hpp"

#include <cctype>

namespace rhom::mostow {

namespace {

int integer_weight(const Rational& w) {
  if (denominator(w) != 1) throw Error("weights must be integers, got " + to_string(w));
  return static_cast<int>(numerator(w).convert_to<long>());
}

std::optional<int> weight_of(const gca::ElementQ& e, const std::vector<int>& gen_weights) {
  std::optional<int> w;
  for (const auto& [m, c] : e.terms()) {
    int s = 0;
    for (int g : m.factors()) s += gen_weights[static_cast<std::size_t>(g)];
    if (w && *w != s) return std::nullopt;
    w = s;
  }
  return w;
}

std::string combination_label(const VectorQ& c, const std::vector<std::string>& labels) {
  std::string out;
  for (Index i = 0; i < c.size(); ++i) {
    if (is_zero(c(i))) continue;
    if (!out.empty()) out += " + ";
    if (c(i) == -1)
      out += "-";
    else if (c(i) != 1)
      out += to_string(c(i)) + "*";
    out += labels[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

void cross_check_rank(const MatrixL& m, const std::string& what) {
  const Index generic = rank_fraction_free(m);
  for (int v : {2, 3}) {
    const Index r = rank(specialize(m, Rational(v)));
    if (r != generic)
      throw SpecializationMismatch(what + ": generic rank " + std::to_string(generic) + " but rank " + std::to_string(r) +
                                   " at nu = " + std::to_string(v));
  }
}

}  // namespace

FiberAction build_fiber_action(const liealg::LieAlgebra& nilradical, FiberActionSpec spec) {
  const int n = nilradical.dim();
  if (static_cast<int>(spec.weights.weights.size()) != n) throw Error("one weight per nilradical basis vector is required");
  std::vector<int> w;
  for (const auto& x : spec.weights.weights) w.push_back(integer_weight(x));
  if (spec.R.size() == 0) spec.R = VectorQ::Zero(n);
  if (spec.R.size() != n) throw Error("twist R must have one coordinate per nilradical basis vector");
  MatrixQ e = exp_nilpotent(nilradical.ad(spec.R));

  auto ce = liealg::ce_complex(nilradical);
  const auto& a = ce.algebra;
  gca::MorphismL eta(a, a);
  MatrixL on_dual = MatrixL::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    gca::ElementL img(a);
    for (int i = 0; i < n; ++i) {
      if (is_zero(e(j, i))) continue;
      Laurent c = Laurent::monomial(e(j, i), w[static_cast<std::size_t>(i)]);
      on_dual(i, j) = c;
      img.add_term(gca::Monomial::generator(i), c);
    }
    eta.set(j, img);
  }
  eta.require_chain_map(ce.d, ce.d);

  auto h = std::make_shared<const gca::CohomologyRing>(ce.d, n);
  auto induced = gca::induced_map_on_cohomology(eta, *h, *h);
  int checks = 0;
  cross_check_rank(on_dual, "eta on generators");
  ++checks;
  for (std::size_t k = 0; k < induced.size(); ++k) {
    cross_check_rank(induced[k], "eta* in degree " + std::to_string(k));
    ++checks;
    if (rank_fraction_free(induced[k]) != induced[k].rows())
      throw Error("eta* is not invertible in degree " + std::to_string(k));
  }
  return FiberAction{nilradical, std::move(spec), std::move(ce), std::move(eta), std::move(on_dual), std::move(h),
                     std::move(induced), checks};
}

TriangularCertificate certify_triangular(const FiberAction& f, const OrderedBasis& order) {
  const auto& h = *f.cohomology;
  std::vector<int> gw;
  for (const auto& x : f.spec.weights.weights) gw.push_back(integer_weight(x));
  TriangularCertificate cert;
  for (int k = 0; k <= h.max_degree(); ++k) {
    TriangularDegree deg;
    const Index b = h.betti(k);
    std::vector<gca::ElementQ> cocycles;
    if (k < static_cast<int>(order.size()) && !order[static_cast<std::size_t>(k)].empty()) {
      const auto& listed = order[static_cast<std::size_t>(k)];
      if (static_cast<Index>(listed.size()) != b)
        throw Error("listed basis of H^" + std::to_string(k) + " has " + std::to_string(listed.size()) +
                    " classes, expected " + std::to_string(b));
      deg.change = MatrixQ(b, b);
      for (Index j = 0; j < b; ++j) {
        const auto& lc = listed[static_cast<std::size_t>(j)];
        deg.labels.push_back(lc.label);
        cocycles.push_back(lc.cocycle.rebind(h.algebra()));
        deg.change.col(j) = h.class_coordinates(k, cocycles.back());
      }
    } else {
      deg.change = identity<Rational>(b);
      for (Index j = 0; j < b; ++j) {
        deg.labels.push_back(h.class_name(k, j));
        cocycles.push_back(h.representative(k, j));
      }
    }
    auto inv = inverse(deg.change);
    if (!inv) throw Error("listed classes do not form a basis of H^" + std::to_string(k));
    deg.matrix = multiply(cast_matrix<Laurent>(*inv),
                          multiply(f.induced[static_cast<std::size_t>(k)], cast_matrix<Laurent>(deg.change)));
    for (Index c = 0; c < b; ++c)
      for (Index r = c + 1; r < b; ++r)
        if (!deg.matrix(r, c).is_zero())
          throw NotTriangular("degree " + std::to_string(k) + ", row " + std::to_string(r) + ", column " +
                              std::to_string(c) + ": " + deg.matrix(r, c).to_string());
    for (Index j = 0; j < b; ++j) {
      deg.diagonal.push_back(deg.matrix(j, j));
      auto w = weight_of(cocycles[static_cast<std::size_t>(j)], gw);
      if (!w) throw Error("class " + deg.labels[static_cast<std::size_t>(j)] + " is not weight-homogeneous");
      deg.weights.push_back(*w);
      if (deg.diagonal.back() != Laurent::nu(*w))
        throw Error("diagonal entry of " + deg.labels[static_cast<std::size_t>(j)] + " is " + deg.diagonal.back().to_string() +
                    ", not nu^" + std::to_string(*w));
    }
    cert.degrees.push_back(std::move(deg));
  }
  return cert;
}

std::optional<VectorQ> NilpotentSubmodule::coordinates(int k, const VectorQ& class_coords) const {
  return spaces.at(static_cast<std::size_t>(k)).coordinates(class_coords);
}

NilpotentSubmodule max_nilpotent_submodule(const FiberAction& f, const TriangularCertificate& cert) {
  const auto& h = *f.cohomology;
  NilpotentSubmodule u;
  std::vector<MatrixQ> bases;
  std::vector<std::vector<std::string>> names;
  for (int k = 0; k <= h.max_degree(); ++k) {
    const MatrixL& m = f.induced[static_cast<std::size_t>(k)];
    const auto& deg = cert.degrees[static_cast<std::size_t>(k)];
    SubspaceF generic = generalized_eigenspace(m, Laurent(1));
    for (int v : {2, 3}) {
      Index d = generalized_eigenspace<Rational>(specialize(m, Rational(v)), Rational(1)).dim();
      if (d != generic.dim())
        throw SpecializationMismatch("unipotent part of H^" + std::to_string(k) + " has generic dimension " +
                                     std::to_string(generic.dim()) + " but " + std::to_string(d) + " at nu = " +
                                     std::to_string(v));
    }
    u.specialization_checks += 2;
    std::vector<Index> ones;
    for (Index j = 0; j < static_cast<Index>(deg.diagonal.size()); ++j)
      if (deg.diagonal[static_cast<std::size_t>(j)].is_one()) ones.push_back(j);
    if (static_cast<Index>(ones.size()) != generic.dim())
      throw Error("unipotent part of H^" + std::to_string(k) + " does not match the diagonal count");
    u.unipotent_positions.push_back(ones);

    MatrixQ basis(generic.dim(), h.betti(k));
    for (Index r = 0; r < basis.rows(); ++r)
      for (Index c = 0; c < basis.cols(); ++c) {
        const Fraction& x = generic.vectors()(r, c);
        if (!x.is_constant()) throw NotRational("unipotent part of H^" + std::to_string(k) + " is not defined over Q");
        basis(r, c) = x.evaluate(Rational(1));
      }
    SubspaceQ space = SubspaceQ::span(h.betti(k), basis);
    MatrixQ inv = *inverse(deg.change);
    names.emplace_back();
    for (Index r = 0; r < space.dim(); ++r)
      names.back().push_back(combination_label(multiply(inv, space.vector(r)), deg.labels));
    bases.push_back(space.vectors());
    u.spaces.push_back(std::move(space));
  }
  u.algebra = gca::GradedAlgebra::subalgebra(h, bases, std::move(names));
  return u;
}

gca::ElementQ parse_class_label(const gca::AlgebraPtr& a, const std::string& label) {
  gca::ElementQ out = gca::ElementQ::unit(a);
  if (label == "1") return out;
  std::size_t i = 0;
  bool any = false;
  while (i < label.size()) {
    if (label[i] != '[') throw Error("malformed class label: " + label);
    std::size_t close = label.find(']', i);
    if (close == std::string::npos) throw Error("malformed class label: " + label);
    std::string body = label.substr(i + 1, close - i - 1);
    std::size_t p = 0;
    while (p < body.size()) {
      if (!std::isalpha(static_cast<unsigned char>(body[p]))) throw Error("malformed class label: " + label);
      std::size_t q = p + 1;
      while (q < body.size() && std::isdigit(static_cast<unsigned char>(body[q]))) ++q;
      auto g = a->find_generator(body.substr(p, q - p));
      if (!g) throw Error("unknown generator in class label: " + label);
      out = out * gca::ElementQ::generator(a, *g);
      p = q;
      any = true;
    }
    i = close + 1;
  }
  if (!any) throw Error("empty class label");
  return out;
}

StarListAudit audit_star_list(const FiberAction& f, const TriangularCertificate& cert,
                              const std::vector<StarListEntry>& expected) {
  const auto& h = *f.cohomology;
  StarListAudit out;
  std::vector<std::vector<bool>> matched;
  for (std::size_t k = 0; k < cert.degrees.size(); ++k) {
    const auto& deg = cert.degrees[k];
    matched.emplace_back(deg.labels.size(), false);
    if (k == 0) continue;
    for (std::size_t j = 0; j < deg.labels.size(); ++j)
      if (deg.diagonal[j].is_one()) out.computed.push_back(deg.labels[j]);
  }
  for (const auto& e : expected) {
    out.expected.push_back(e.label);
    auto d = e.cocycle.degree();
    bool found = false;
    if (d && *d > 0 && *d < static_cast<int>(cert.degrees.size())) {
      const auto& deg = cert.degrees[static_cast<std::size_t>(*d)];
      VectorQ c = multiply(*inverse(deg.change), h.class_coordinates(*d, e.cocycle.rebind(h.algebra())));
      Index nonzero = 0, pos = 0;
      for (Index j = 0; j < c.size(); ++j)
        if (!is_zero(c(j))) {
          ++nonzero;
          pos = j;
        }
      if (nonzero == 1 && deg.diagonal[static_cast<std::size_t>(pos)].is_one()) {
        found = true;
        matched[static_cast<std::size_t>(*d)][static_cast<std::size_t>(pos)] = true;
      }
    }
    if (!found) out.missing.push_back(e.label);
  }
  for (std::size_t k = 1; k < cert.degrees.size(); ++k) {
    const auto& deg = cert.degrees[k];
    for (std::size_t j = 0; j < deg.labels.size(); ++j)
      if (deg.diagonal[j].is_one() && !matched[k][j]) out.extra.push_back(deg.labels[j]);
  }
  return out;
}

}  // namespace rhom::mostow
