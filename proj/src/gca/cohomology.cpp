#include "rhom/gca/cohomology.hpp"

namespace rhom::gca {

CohomologyRing::CohomologyRing(DifferentialQ d, int max_degree) : CohomologyRing(std::move(d), 0, max_degree) {}

CohomologyRing::CohomologyRing(DifferentialQ d, int min_degree, int max_degree)
    : d_(std::move(d)), max_degree_(max_degree) {
  const auto& a = d_.algebra();
  for (const auto& v : check_d_squared(d_)) {
    if (a->degree_of(v.generator) + 2 > max_degree_ + 1) continue;
    throw DifferentialNotSquareZero("d(d(" + v.name + ")) = " + v.image.to_string());
  }
  degrees_.resize(static_cast<std::size_t>(std::max(min_degree, 0)));
  MatrixQ prev = min_degree > 0 ? d_.matrix(min_degree - 1) : MatrixQ();  // d: k-1 -> k
  for (int k = std::max(min_degree, 0); k <= max_degree_; ++k) {
    MatrixQ cur = d_.matrix(k);
    if (k > 0 && prev.size() > 0 && cur.size() > 0 && !is_zero_matrix(rhom::multiply(cur, prev)))
      throw DifferentialNotSquareZero("d o d is nonzero on degree " + std::to_string(k - 1));
    Degree deg;
    deg.computed = true;
    const Index n = a->dim(k);
    deg.cocycles = kernel_basis(cur);
    deg.coboundaries = k == 0 ? SubspaceQ(n) : column_space(prev);
    MatrixQ reduced = deg.cocycles.vectors();
    for (Index r = 0; r < reduced.rows(); ++r) {
      VectorQ v = reduced.row(r).transpose();
      deg.coboundaries.reduce_in_place(v);
      reduced.row(r) = v.transpose();
    }
    auto rr = rref(reduced);
    deg.reps = rr.reduced.topRows(rr.rank);
    deg.rep_pivots = std::move(rr.pivots);
    degrees_.push_back(std::move(deg));
    prev = std::move(cur);
  }
}

const CohomologyRing::Degree& CohomologyRing::at(int k) const {
  if (k < 0 || k > max_degree_ || !degrees_[static_cast<std::size_t>(k)].computed)
    throw CutoffExceeded("cohomology not computed in degree " + std::to_string(k));
  return degrees_[static_cast<std::size_t>(k)];
}

Index CohomologyRing::betti(int k) const { return at(k).reps.rows(); }

std::vector<Index> CohomologyRing::betti_numbers() const {
  std::vector<Index> out;
  for (int k = 0; k <= max_degree_; ++k) out.push_back(degrees_[static_cast<std::size_t>(k)].computed ? betti(k) : 0);
  return out;
}

ElementQ CohomologyRing::representative(int k, Index i) const {
  return ElementQ::from_coordinates(algebra(), k, at(k).reps.row(i).transpose());
}

std::string CohomologyRing::class_name(int k, Index i) const {
  return "[" + representative(k, i).to_string() + "]";
}

const VectorQ& CohomologyRing::cup_product(int k1, Index i, int k2, Index j) const {
  static const VectorQ empty;
  if (k1 + k2 > max_degree_) return empty;
  auto key = std::make_tuple(k1, i, k2, j);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  VectorQ c = class_coordinates(k1 + k2, representative(k1, i) * representative(k2, j));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return products_.try_emplace(key, std::move(c)).first->second;
}

VectorQ CohomologyRing::multiply(int k1, const VectorQ& a, int k2, const VectorQ& b) const {
  if (k1 + k2 > max_degree_) return VectorQ();
  VectorQ out = VectorQ::Zero(betti(k1 + k2));
  for (Index i = 0; i < a.size(); ++i) {
    if (is_zero(a(i))) continue;
    for (Index j = 0; j < b.size(); ++j) {
      if (is_zero(b(j))) continue;
      const VectorQ& p = cup_product(k1, i, k2, j);
      Rational f = a(i) * b(j);
      for (Index r = 0; r < p.size(); ++r)
        if (!is_zero(p(r))) out(r) += p(r) * f;
    }
  }
  return out;
}

std::vector<Index> kunneth(const std::vector<Index>& a, const std::vector<Index>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Index> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace rhom::gca
