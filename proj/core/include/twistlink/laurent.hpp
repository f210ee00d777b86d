#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "twistlink/errors.hpp"

namespace twistlink {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent pair of a Laurent monomial x^a y^b. Ordered by x, then y;
/// this is also the canonical term order used for rendering.
struct Monomial {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse Laurent polynomial in x and y with arbitrary-precision integer
/// coefficients. Stored coefficients are never zero and each exponent
/// pair occurs at most once. Values are immutable in spirit: all
/// operations return new polynomials and are safe to use concurrently.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  LaurentPoly() = default;

  static LaurentPoly from_int(long long v) { return term(BigInt(v), 0, 0); }
  static LaurentPoly term(BigInt coeff, int xexp, int yexp);
  static LaurentPoly one() { return from_int(1); }
  static LaurentPoly var_x() { return term(1, 1, 0); }
  static LaurentPoly var_y() { return term(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_single_term() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of x^a y^b (zero if the term is absent).
  BigInt coeff(int xexp, int yexp) const;

  /// Smallest x-exponent (resp. y-exponent) among the terms.
  /// Precondition: the polynomial is nonzero.
  int min_x_exponent() const;
  int min_y_exponent() const;

  /// Multiply by the monomial x^dx y^dy.
  LaurentPoly shifted(int dx, int dy) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact quotient `*this / den`. The division must leave no remainder;
  /// an inexact division is an internal error and throws std::logic_error.
  LaurentPoly divide_exact(const LaurentPoly& den) const;

  /// Canonical text form: `0`, or terms `<coeff>*x^<a>*y^<b>` joined by
  /// ` + ` in ascending (x, y) exponent order, e.g. `-1*x^0*y^1 + 1*x^2*y^-1`.
  std::string to_string() const;

  /// Inverse of to_string. Throws PolyParseError on malformed input.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(const BigInt& coeff, int xexp, int yexp);
  TermMap terms_;
};

/// Canonical representative of the orbit of p under multiplication by
/// powers of x: zero maps to zero, otherwise the result has minimal
/// x-exponent 0. Idempotent.
LaurentPoly normalize_x(const LaurentPoly& p);

/// True iff p = x^m q for some integer m.
bool equal_up_to_x_power(const LaurentPoly& p, const LaurentPoly& q);

inline LaurentPoly parse_poly(std::string_view text) {
  return LaurentPoly::parse(text);
}
inline std::string render_poly(const LaurentPoly& p) { return p.to_string(); }

}  // namespace twistlink
