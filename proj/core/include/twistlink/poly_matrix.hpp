#pragma once

#include <cstddef>
#include <vector>

#include "twistlink/laurent.hpp"

namespace twistlink {

/// Dense square matrix of Laurent polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static PolyMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }

  LaurentPoly& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  PolyMatrix operator-(const PolyMatrix& rhs) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// Exact determinant over the Laurent ring. The 0x0 determinant is 1.
///
/// Row contents are first scaled by monomials so all exponents are
/// nonnegative (the accumulated monomial is divided back out at the end),
/// then a fraction-free elimination with exact divisions runs over Z[x,y].
/// Pivots are chosen to limit fill-in; every division is checked and an
/// inexact one throws std::logic_error.
LaurentPoly determinant(const PolyMatrix& m);

}  // namespace twistlink
