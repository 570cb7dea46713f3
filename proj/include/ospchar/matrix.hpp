#pragma once

// Dense matrices over an exact ring, fraction-free determinants, column
// minors, and the Cauchy-Binet / Cauchy-determinant checks.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ospchar/laurent.hpp"
#include "ospchar/partition.hpp"
#include "ospchar/report.hpp"

namespace ospchar {

template <class T>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, T fill)
      : rows_(rows), cols_(cols), data_(rows * cols, std::move(fill)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t r, std::size_t c) {
    check(r, c);
    return data_[r * cols_ + c];
  }
  const T& at(std::size_t r, std::size_t c) const {
    check(r, c);
    return data_[r * cols_ + c];
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("DenseMatrix: index out of range");
  }
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using RingMatrix = DenseMatrix<LaurentPoly>;

// Columns picked in ascending index order (IndexSet stores ascending).
template <class T>
DenseMatrix<T> submatrix_cols(const DenseMatrix<T>& m, const IndexSet& cols) {
  if (cols.size() == 0) throw std::invalid_argument("submatrix_cols: empty selection");
  for (int c : cols.elements())
    if (static_cast<std::size_t>(c) >= m.cols())
      throw std::out_of_range("submatrix_cols: column index out of range");
  DenseMatrix<T> r(m.rows(), cols.size(), m.at(0, 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      r.at(i, j) = m.at(i, static_cast<std::size_t>(cols.elements()[j]));
  return r;
}

namespace detail {

// First-row cofactor expansion. Exact in any commutative ring; cost n!.
template <class T>
T det_cofactor(const DenseMatrix<T>& m) {
  std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  T sum = m.at(0, 0);  // initialized below; placeholder for shape
  bool first = true;
  for (std::size_t j = 0; j < n; ++j) {
    DenseMatrix<T> minor(n - 1, n - 1, m.at(0, 0));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    T term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 1) term = -term;
    if (first) {
      sum = std::move(term);
      first = false;
    } else {
      sum = sum + term;
    }
  }
  return sum;
}

// Bareiss fraction-free elimination; every division is exact in the ring.
// `one` supplies the multiplicative identity, `div` the exact division.
template <class T, class Div>
T det_bareiss(DenseMatrix<T> m, const T& one, Div&& div) {
  std::size_t n = m.rows();
  T prev = one;
  bool negate = false;
  auto is_zero = [&](const T& x) { return x == x - x; };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m.at(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m.at(p, k))) ++p;
      if (p == n) return m.at(0, 0) - m.at(0, 0);  // singular: zero of the ring
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
    prev = m.at(k, k);
  }
  T d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace detail

// Determinant dispatch: cofactor expansion up to 4x4, Bareiss above.
template <class T, class Div>
T det(const DenseMatrix<T>& m, const T& one, Div&& div) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  if (m.rows() == 0) return one;
  if (m.rows() <= 4) return detail::det_cofactor(m);
  return detail::det_bareiss(m, one, std::forward<Div>(div));
}

inline LaurentPoly det(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  if (m.rows() == 0) throw std::invalid_argument("det: empty matrix needs a table");
  const VarTablePtr& t = m.at(0, 0).table();
  return det(m, LaurentPoly::one(t),
             [](const LaurentPoly& a, const LaurentPoly& b) { return exact_div(a, b); });
}

inline mpq_class det(const DenseMatrix<mpq_class>& m) {
  return det(m, mpq_class(1), [](const mpq_class& a, const mpq_class& b) {
    if (b == 0) throw RingError("det: zero pivot division");
    return mpq_class(a / b);
  });
}

// X * Y^T for M x N inputs of equal shape; the M x M Gram-style product.
template <class T>
DenseMatrix<T> gram_product(const DenseMatrix<T>& x, const DenseMatrix<T>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("gram_product: shape mismatch");
  std::size_t mm = x.rows(), nn = x.cols();
  DenseMatrix<T> g(mm, mm, x.at(0, 0) - x.at(0, 0));
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < mm; ++j) {
      T s = x.at(i, 0) * y.at(j, 0);
      for (std::size_t k = 1; k < nn; ++k) s = s + x.at(i, k) * y.at(j, k);
      g.at(i, j) = std::move(s);
    }
  return g;
}

// Both sides of Cauchy-Binet for M x N inputs (M <= N): the sum of products
// of corresponding maximal column minors, and det(X * Y^T). Column subsets
// are visited in ascending lexicographic order.
inline std::pair<LaurentPoly, LaurentPoly> cauchy_binet_sum(const RingMatrix& x,
                                                            const RingMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("cauchy_binet_sum: shape mismatch");
  if (x.rows() > x.cols())
    throw std::invalid_argument("cauchy_binet_sum: more rows than columns");
  std::size_t mm = x.rows(), nn = x.cols();
  const VarTablePtr& t = x.at(0, 0).table();

  LaurentPoly lhs = LaurentPoly::zero(t);
  std::vector<int> pick(mm);
  for (std::size_t i = 0; i < mm; ++i) pick[i] = static_cast<int>(i);
  while (true) {
    IndexSet cols(pick);
    lhs += det(submatrix_cols(x, cols)) * det(submatrix_cols(y, cols));
    // next M-subset of {0..N-1} in ascending lexicographic order
    std::size_t i = mm;
    while (i > 0 && pick[i - 1] == static_cast<int>(nn - mm + i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < mm; ++j) pick[j] = pick[j - 1] + 1;
  }

  LaurentPoly rhs = det(gram_product(x, y));
  return {lhs, rhs};
}

enum class CauchyVariant { difference, one_minus };

// Cleared-denominator Cauchy determinant identities over x1..xn, y1..yn.
//   difference: det( prod_{l != j} (x_i - y_l) ) = (-1)^{n(n-1)/2}
//               * prod_{i<j} (x_i - x_j)(y_i - y_j)
//   one_minus:  det( prod_{l != j} (1 - x_i y_l) ) =
//               prod_{i<j} (x_i - x_j)(y_i - y_j)
inline VerificationReport cauchy_det_check(int n, CauchyVariant variant) {
  VerificationReport rep;
  rep.check = "cauchy-det";
  rep.param("n", n);
  rep.param("variant", variant == CauchyVariant::difference ? std::string("difference")
                                                            : std::string("one-minus"));
  Stopwatch sw;
  if (n < 1) throw std::invalid_argument("cauchy_det_check: n >= 1");

  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  VarTablePtr tab = VarTable::create(names);
  auto X = [&](int i) { return LaurentPoly::var(tab, i); };
  auto Y = [&](int i) { return LaurentPoly::var(tab, n + i); };
  LaurentPoly one = LaurentPoly::one(tab);

  RingMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), one);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentPoly e = one;
      for (int l = 0; l < n; ++l) {
        if (l == j) continue;
        e *= (variant == CauchyVariant::difference) ? X(i) - Y(l) : one - X(i) * Y(l);
      }
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e;
    }

  LaurentPoly lhs = det(m);
  LaurentPoly rhs = one;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) rhs *= (X(i) - X(j)) * (Y(i) - Y(j));
  if ((n * (n - 1) / 2) % 2 == 1 && variant == CauchyVariant::difference) rhs = -rhs;

  if (!(lhs == rhs))
    rep.fail("determinant != product form; det has " + std::to_string(lhs.term_count()) +
             " terms, product " + std::to_string(rhs.term_count()));
  else
    rep.detail = std::to_string(lhs.term_count()) + " terms agree";
  rep.elapsed_seconds = sw.seconds();
  return rep;
}

}  // namespace ospchar
