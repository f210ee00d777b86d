#pragma once

// Deterministic random data for property tests. Draws avoid
// implementation-defined distributions so fixed seeds reproduce anywhere.

#include <random>

#include "twistlink/laurent.hpp"
#include "twistlink/poly_matrix.hpp"

namespace testsupport {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

inline long long draw_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(draw(rng, hi - lo + 1));
}

inline twistlink::LaurentPoly random_poly(std::mt19937_64& rng, int max_terms,
                                          int exp_bound = 5,
                                          int coeff_bound = 100) {
  twistlink::LaurentPoly p;
  int terms = static_cast<int>(draw(rng, max_terms + 1));
  for (int i = 0; i < terms; ++i)
    p += twistlink::LaurentPoly::term(
        twistlink::BigInt(draw_range(rng, -coeff_bound, coeff_bound)),
        static_cast<int>(draw_range(rng, -exp_bound, exp_bound)),
        static_cast<int>(draw_range(rng, -exp_bound, exp_bound)));
  return p;
}

inline twistlink::LaurentPoly random_monomial(std::mt19937_64& rng) {
  return twistlink::LaurentPoly::term(
      twistlink::BigInt(draw_range(rng, -9, 9)),
      static_cast<int>(draw_range(rng, -3, 3)),
      static_cast<int>(draw_range(rng, -3, 3)));
}

inline twistlink::PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t n,
                                           int max_terms) {
  twistlink::PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = random_poly(rng, max_terms, 3, 9);
  return m;
}

}  // namespace testsupport
