#include "rhom/exactla/spectral.hpp"

#include <algorithm>

namespace rhom {

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer a = abs_int(n);
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational eval_poly(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divide p by (x - root); p(root) must be zero.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& root) {
  std::vector<Rational> q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

MatrixQ specialize(const MatrixL& m, const Rational& nu_value) {
  MatrixQ out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).evaluate(nu_value);
  return out;
}

MatrixQ specialize(const MatrixF& m, const Rational& nu_value) {
  MatrixQ out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).evaluate(nu_value);
  return out;
}

Index rank_fraction_free(const MatrixL& input) {
  MatrixL m = input;
  Laurent prev(1);
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = -1;
    for (Index i = row; i < m.rows(); ++i) {
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    for (Index i = row + 1; i < m.rows(); ++i) {
      for (Index j = col + 1; j < m.cols(); ++j) {
        Laurent v = m(row, col) * m(i, j) - m(i, col) * m(row, j);
        m(i, j) = v / prev;
      }
      m(i, col) = Laurent();
    }
    prev = m(row, col);
    ++row;
  }
  return row;
}

std::vector<Rational> characteristic_polynomial(const MatrixQ& a) {
  // Faddeev-LeVerrier; exact over Q.
  const Index n = a.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  MatrixQ mk = MatrixQ::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    MatrixQ next = multiply(a, mk);
    for (Index i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    mk = std::move(next);
    MatrixQ am = multiply(a, mk);
    Rational tr = 0;
    for (Index i = 0; i < n; ++i) tr += am(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Rational(k);
  }
  return c;
}

std::optional<std::vector<Eigenvalue>> rational_eigenvalues(const MatrixQ& m) {
  std::vector<Rational> p = characteristic_polynomial(m);
  std::vector<Eigenvalue> out;
  auto record = [&](const Rational& r) {
    for (auto& e : out)
      if (e.value == r) {
        ++e.multiplicity;
        return;
      }
    out.push_back({r, 1});
  };
  while (p.size() > 1 && p.front().is_zero()) {
    p.erase(p.begin());
    record(Rational(0));
  }
  while (p.size() > 1) {
    // Scale to integer coefficients.
    Integer lcm = 1;
    for (const auto& c : p) {
      Integer d = denominator(c);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    Integer lead = numerator(p.back() * Rational(lcm));
    Integer constant = numerator(p.front() * Rational(lcm));
    bool found = false;
    for (const auto& num : divisors(constant)) {
      for (const auto& den : divisors(lead)) {
        for (int sign : {1, -1}) {
          Rational cand(Integer(num * sign), den);
          if (eval_poly(p, cand).is_zero()) {
            record(cand);
            p = deflate(p, cand);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
  return out;
}

MatrixQ exp_nilpotent(const MatrixQ& m) {
  const Index n = m.rows();
  if (!is_zero_matrix(power(m, static_cast<int>(n)))) throw NotNilpotent("exp_nilpotent: matrix is not nilpotent");
  MatrixQ sum = identity<Rational>(n);
  MatrixQ term = identity<Rational>(n);
  for (Index k = 1; k < std::max<Index>(n, 1); ++k) {
    term = multiply(term, m);
    if (is_zero_matrix(term)) break;
    MatrixQ scaled = term;
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) scaled(i, j) /= Rational(k);
    term = scaled;
    sum += term;
  }
  return sum;
}

}  // namespace rhom
