#pragma once

// Reference determinant by cofactor expansion along the first row.
// Kept independent of the elimination-based implementation it checks.

#include "twistlink/poly_matrix.hpp"

namespace testsupport {

inline twistlink::LaurentPoly cofactor_determinant(
    const twistlink::PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return twistlink::LaurentPoly::one();
  if (n == 1) return m.at(0, 0);
  twistlink::LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    twistlink::PolyMatrix sub(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m.at(r, c);
      }
    }
    twistlink::LaurentPoly term = m.at(0, j) * cofactor_determinant(sub);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace testsupport
