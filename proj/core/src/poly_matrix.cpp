#include "twistlink/poly_matrix.hpp"

#include <algorithm>
#include <utility>

namespace twistlink {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::logic_error("matrix size mismatch");
  PolyMatrix out(n_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

LaurentPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();

  std::vector<LaurentPoly> w(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i * n + j] = m.at(i, j);
  auto e = [&](std::size_t i, std::size_t j) -> LaurentPoly& {
    return w[i * n + j];
  };

  // Scale each row into Z[x,y], remembering the total monomial factor.
  long long shift_x = 0, shift_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int mx = 0, my = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (e(i, j).is_zero()) continue;
      mx = std::min(mx, e(i, j).min_x_exponent());
      my = std::min(my, e(i, j).min_y_exponent());
    }
    if (mx < 0 || my < 0) {
      for (std::size_t j = 0; j < n; ++j)
        if (!e(i, j).is_zero()) e(i, j) = e(i, j).shifted(-mx, -my);
      shift_x -= mx;
      shift_y -= my;
    }
  }

  int sign = 1;
  LaurentPoly prev = LaurentPoly::one();
  std::vector<std::size_t> row_nnz(n), col_nnz(n);

  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Markowitz-style pivot: fewest fill updates, then smallest pivot.
    std::fill(row_nnz.begin(), row_nnz.end(), 0);
    std::fill(col_nnz.begin(), col_nnz.end(), 0);
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (!e(i, j).is_zero()) {
          ++row_nnz[i];
          ++col_nnz[j];
        }

    std::size_t pi = n, pj = n;
    unsigned long long best_cost = 0;
    std::size_t best_terms = 0;
    for (std::size_t i = k; i < n; ++i) {
      if (row_nnz[i] == 0) return {};  // zero row: singular
      for (std::size_t j = k; j < n; ++j) {
        if (e(i, j).is_zero()) continue;
        unsigned long long cost =
            static_cast<unsigned long long>(row_nnz[i] - 1) * (col_nnz[j] - 1);
        std::size_t terms = e(i, j).term_count();
        if (pi == n || cost < best_cost ||
            (cost == best_cost && terms < best_terms)) {
          pi = i;
          pj = j;
          best_cost = cost;
          best_terms = terms;
        }
      }
    }
    if (pi == n) return {};

    if (pi != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(e(pi, j), e(k, j));
      sign = -sign;
    }
    if (pj != k) {
      for (std::size_t i = k; i < n; ++i) std::swap(e(i, pj), e(i, k));
      sign = -sign;
    }

    const LaurentPoly& pivot = e(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const LaurentPoly& lik = e(i, k);
      const bool lik_zero = lik.is_zero();
      for (std::size_t j = k + 1; j < n; ++j) {
        const bool aij_zero = e(i, j).is_zero();
        if (aij_zero && (lik_zero || e(k, j).is_zero())) continue;
        LaurentPoly t = aij_zero ? LaurentPoly{} : e(i, j) * pivot;
        if (!lik_zero && !e(k, j).is_zero()) t -= lik * e(k, j);
        e(i, j) = t.divide_exact(prev);
      }
      e(i, k) = {};
    }
    prev = pivot;
  }

  LaurentPoly det = e(n - 1, n - 1);
  if (sign < 0) det = -det;
  if (shift_x != 0 || shift_y != 0)
    det = det.shifted(static_cast<int>(-shift_x), static_cast<int>(-shift_y));
  return det;
}

}  // namespace twistlink
