#include "twistlink/selftest.hpp"

#include <functional>
#include <random>
#include <string>

#include "twistlink/covering.hpp"
#include "twistlink/diagram.hpp"
#include "twistlink/invariant.hpp"
#include "twistlink/laurent.hpp"
#include "twistlink/moves.hpp"
#include "twistlink/poly_matrix.hpp"

namespace twistlink {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

long long draw_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(draw(rng, hi - lo + 1));
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms) {
  LaurentPoly p;
  int terms = static_cast<int>(draw(rng, max_terms + 1));
  for (int i = 0; i < terms; ++i)
    p += LaurentPoly::term(BigInt(draw_range(rng, -100, 100)),
                           static_cast<int>(draw_range(rng, -5, 5)),
                           static_cast<int>(draw_range(rng, -5, 5)));
  return p;
}

// Reference determinant by first-row expansion; deliberately shares no
// code with the elimination-based implementation it cross-checks.
LaurentPoly expansion_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();
  if (n == 1) return m.at(0, 0);
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix sub(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m.at(r, c);
      }
    }
    LaurentPoly term = m.at(0, j) * expansion_det(sub);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

struct Runner {
  std::ostream& out;
  int failures = 0;

  void property(const std::string& name, int cases,
                const std::function<std::string(std::mt19937_64&)>& check,
                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
      std::string complaint = check(rng);
      if (!complaint.empty()) {
        out << "FAIL " << name << " (case " << i << "): " << complaint << "\n";
        ++failures;
        return;
      }
    }
    out << "ok   " << name << " (" << cases << " cases)\n";
  }
};

TwistedDiagram random_small(std::mt19937_64& rng, int max_crossings,
                            int max_bars) {
  int n = static_cast<int>(draw(rng, max_crossings + 1));
  int b = static_cast<int>(draw(rng, max_bars + 1));
  return random_diagram(n, b, rng());
}

}  // namespace

int run_selftest(const SelftestOptions& options, std::ostream& out) {
  Runner runner{out};
  const int count = options.count;
  std::uint64_t seed = options.seed;

  runner.property(
      "generator produces well-formed diagrams", count,
      [](std::mt19937_64& rng) -> std::string {
        TwistedDiagram d = random_small(rng, 12, 8);
        auto violations = validate(d);
        return violations.empty() ? "" : violations.front();
      },
      seed + 1);

  runner.property(
      "mirror is an involution and preserves writhe", count,
      [](std::mt19937_64& rng) -> std::string {
        TwistedDiagram d = random_small(rng, 10, 6);
        if (mirror(mirror(d)) != d) return "mirror twice changed the diagram";
        if (writhe(mirror(d)) != writhe(d)) return "mirror changed the writhe";
        return "";
      },
      seed + 2);

  runner.property(
      "diagram text round-trips", count,
      [](std::mt19937_64& rng) -> std::string {
        TwistedDiagram d = random_small(rng, 10, 6);
        if (parse_diagram(render_diagram(d)) != d) return "round trip changed";
        return "";
      },
      seed + 3);

  runner.property(
      "polynomial ring axioms", count,
      [](std::mt19937_64& rng) -> std::string {
        LaurentPoly p = random_poly(rng, 6);
        LaurentPoly q = random_poly(rng, 6);
        LaurentPoly r = random_poly(rng, 6);
        if ((p + q) + r != p + (q + r)) return "addition not associative";
        if (p + q != q + p) return "addition not commutative";
        if (p * q != q * p) return "multiplication not commutative";
        if ((p * q) * r != p * (q * r)) return "multiplication not associative";
        if (p * (q + r) != p * q + p * r) return "distributivity failed";
        if (normalize_x(normalize_x(p)) != normalize_x(p))
          return "normalize_x not idempotent";
        int a = static_cast<int>(draw_range(rng, -4, 4));
        if (!equal_up_to_x_power(p, p.shifted(a, 0)))
          return "x-power shift not recognized";
        if (!p.is_zero() && equal_up_to_x_power(p, p.shifted(0, 1)))
          return "y shift wrongly accepted";
        return "";
      },
      seed + 4);

  runner.property(
      "determinant matches first-row expansion", count,
      [](std::mt19937_64& rng) -> std::string {
        std::size_t n = draw(rng, 6);
        PolyMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, 3);
        if (determinant(m) != expansion_det(m)) return "values differ";
        return "";
      },
      seed + 5);

  runner.property(
      "twisted invariant equals virtual invariant of the double cover", count,
      [](std::mt19937_64& rng) -> std::string {
        TwistedDiagram d = random_small(rng, 6, 6);
        if (twisted_jkss(d).raw != jkss(double_cover(d)).raw)
          return "values differ on:\n" + render_diagram(d);
        return "";
      },
      seed + 6);

  runner.property(
      "bar-free twisted invariant is the product over both sheets", count,
      [](std::mt19937_64& rng) -> std::string {
        TwistedDiagram d = random_small(rng, 6, 0);
        if (twisted_jkss(d).raw != jkss(d).raw * jkss(mirror(d)).raw)
          return "product law failed on:\n" + render_diagram(d);
        return "";
      },
      seed + 7);

  runner.property(
      "rewrites preserve the canonical invariant", count,
      [](std::mt19937_64& rng) -> std::string {
        TwistedDiagram d = random_small(rng, 5, 4);
        LaurentPoly before = twisted_jkss(d).canonical;
        auto sites = eligible_sites(d);
        if (sites.empty()) return "";
        const MoveSite& site = sites[draw(rng, sites.size())];
        TwistedDiagram after = apply_move(d, site);
        if (!validate(after).empty()) return "rewrite broke the diagram";
        if (twisted_jkss(after).canonical != before)
          return "invariant changed on:\n" + render_diagram(d);
        if (is_virtual(d) && is_virtual(after) &&
            jkss(after).canonical != jkss(d).canonical)
          return "virtual invariant changed on:\n" + render_diagram(d);
        return "";
      },
      seed + 8);

  runner.property(
      "one added bar: cover and connected sum agree", count,
      [](std::mt19937_64& rng) -> std::string {
        int n = 1 + static_cast<int>(draw(rng, 6));
        TwistedDiagram d = random_diagram(n, 0, rng());
        std::size_t edge = draw(rng, d.edges.size());
        BarWitness w = prop2_witness(d, edge);
        if (!validate(w.cover).empty() || !validate(w.sum).empty())
          return "witness diagrams are not well-formed";
        if (jkss(w.cover).canonical != jkss(w.sum).canonical)
          return "invariants differ on:\n" + render_diagram(d);
        return "";
      },
      seed + 9);

  return runner.failures;
}

}  // namespace twistlink
