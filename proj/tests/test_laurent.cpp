#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/gen.hpp"
#include "support/oracle.hpp"
#include "twistlink/laurent.hpp"
#include "twistlink/poly_matrix.hpp"

using namespace twistlink;
using testsupport::draw;
using testsupport::random_monomial;
using testsupport::random_poly;

namespace {

LaurentPoly t(long long c, int a, int b) {
  return LaurentPoly::term(BigInt(c), a, b);
}

LaurentPoly x() { return LaurentPoly::var_x(); }
LaurentPoly y() { return LaurentPoly::var_y(); }
LaurentPoly one() { return LaurentPoly::one(); }

}  // namespace

TEST_CASE("addition cancels opposite terms") {
  CHECK((x() - one()) + one() == x());
  CHECK(LaurentPoly{} + x() == x());
  CHECK(t(1, 1, -1) + t(1, 1, -1) == t(2, 1, -1));
}

TEST_CASE("multiplication convolves exponents") {
  CHECK((x() - one()) * t(1, -1, 0) == one() - t(1, -1, 0));
  CHECK(x() * LaurentPoly{} == LaurentPoly{});
  // (x-1)(y+1)(x+y) * y^-1, expanded
  LaurentPoly product =
      (x() - one()) * (y() + one()) * (x() + y()) * t(1, 0, -1);
  CHECK(product.to_string() ==
        "-1*x^0*y^0 + -1*x^0*y^1 + -1*x^1*y^-1 + 1*x^1*y^1 + 1*x^2*y^-1 + "
        "1*x^2*y^0");
}

TEST_CASE("normalize_x shifts the minimal x-exponent to zero") {
  CHECK(normalize_x(LaurentPoly{}) == LaurentPoly{});
  CHECK(normalize_x(t(1, -2, 1) + x()) == y() + t(1, 3, 0));
  LaurentPoly fig = (x() - one()) * (y() + one()) * (x() + y()) * t(1, 0, -1);
  CHECK(normalize_x(fig) == fig);  // minimal x-exponent is already 0
}

TEST_CASE("equal_up_to_x_power accepts exactly x-power shifts") {
  LaurentPoly p = t(3, -1, 2) + t(-1, 4, 0);
  CHECK(equal_up_to_x_power(p, p.shifted(3, 0)));
  CHECK(equal_up_to_x_power(LaurentPoly{}, LaurentPoly{}));
  LaurentPoly b = parse_poly(
      "-1*x^0*y^0 + 1*x^0*y^2 + 1*x^2*y^-2 + -1*x^2*y^2 + -1*x^4*y^-2 + "
      "1*x^4*y^0");
  CHECK_FALSE(equal_up_to_x_power(b, LaurentPoly{}));
}

TEST_CASE("text form round-trips") {
  CHECK(parse_poly("0") == LaurentPoly{});
  CHECK(render_poly(LaurentPoly{}) == "0");
  CHECK(parse_poly("1*x^0*y^-1 + 1*x^1*y^0") == t(1, 0, -1) + x());
  CHECK(render_poly(t(1, 0, -1) + x()) == "1*x^0*y^-1 + 1*x^1*y^0");

  // expansion of y^-2 (x^2-1)(y^2-1)(x^2-y^2)
  LaurentPoly b = (x() * x() - one()) * (y() * y() - one()) *
                  (x() * x() - y() * y()) * t(1, 0, -2);
  CHECK(render_poly(b) ==
        "-1*x^0*y^0 + 1*x^0*y^2 + 1*x^2*y^-2 + -1*x^2*y^2 + -1*x^4*y^-2 + "
        "1*x^4*y^0");
  CHECK(parse_poly(render_poly(b)) == b);
}

TEST_CASE("parse reports the offending position") {
  CHECK_THROWS_AS(parse_poly("1*x^2"), PolyParseError);
  CHECK_THROWS_AS(parse_poly(""), PolyParseError);
  CHECK_THROWS_AS(parse_poly("1*x^a*y^0"), PolyParseError);
  try {
    parse_poly("1*x^1*y^0 * 2*x^0*y^0");
    CHECK(false);
  } catch (const PolyParseError& e) {
    CHECK(e.position() == 10);
  }
}

TEST_CASE("ring axioms hold on random triples") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly p = random_poly(rng, 6);
    LaurentPoly q = random_poly(rng, 6);
    LaurentPoly r = random_poly(rng, 6);
    REQUIRE((p + q) + r == p + (q + r));
    REQUIRE(p + q == q + p);
    REQUIRE(p * q == q * p);
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE(normalize_x(normalize_x(p)) == normalize_x(p));
    REQUIRE(equal_up_to_x_power(p, p.shifted(int(draw(rng, 9)) - 4, 0)));
    if (!p.is_zero()) REQUIRE_FALSE(equal_up_to_x_power(p, p.shifted(0, 1)));
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly q = random_poly(rng, 5);
    LaurentPoly d = random_poly(rng, 5);
    if (d.is_zero()) continue;
    REQUIRE((q * d).divide_exact(d) == q);
  }
  CHECK_THROWS_AS((x() + one()).divide_exact(y() + one()), std::logic_error);
}

TEST_CASE("determinant handles the trivial shapes") {
  CHECK(determinant(PolyMatrix(0)) == one());
  CHECK(determinant(PolyMatrix::identity(2)) == one());
  PolyMatrix m(2);
  m.at(0, 0) = x();
  m.at(0, 1) = y();
  m.at(1, 0) = t(1, 0, -1);
  m.at(1, 1) = t(1, -1, 0);
  CHECK(determinant(m) == LaurentPoly{});  // x*x^-1 - y*y^-1
}

TEST_CASE("determinant matches cofactor expansion on monomial matrices") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 100; ++i) {
    PolyMatrix m(5);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) m.at(r, c) = random_monomial(rng);
    REQUIRE(determinant(m) == testsupport::cofactor_determinant(m));
  }
}

TEST_CASE("determinant is alternating and multilinear-ish") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 2 + draw(rng, 4);
    PolyMatrix m = testsupport::random_matrix(rng, n, 2);
    LaurentPoly det = determinant(m);

    std::size_t a = draw(rng, n), b = draw(rng, n);
    if (a == b) b = (b + 1) % n;
    PolyMatrix swapped = m;
    for (std::size_t c = 0; c < n; ++c)
      std::swap(swapped.at(a, c), swapped.at(b, c));
    REQUIRE(determinant(swapped) == -det);

    PolyMatrix repeated = m;
    for (std::size_t c = 0; c < n; ++c) repeated.at(a, c) = repeated.at(b, c);
    REQUIRE(determinant(repeated) == LaurentPoly{});
  }
}
