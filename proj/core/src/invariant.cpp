#include "twistlink/invariant.hpp"

#include <map>

namespace twistlink {

namespace {

LaurentPoly t(long long c, int a, int b) {
  return LaurentPoly::term(BigInt(c), a, b);
}

// Rank of each crossing id in ascending order, 0-based.
std::map<int, std::size_t> crossing_ranks(const TwistedDiagram& d) {
  std::map<int, std::size_t> ranks;
  std::size_t r = 0;
  for (const auto& [id, sign] : d.crossings) {
    (void)sign;
    ranks[id] = r++;
  }
  return ranks;
}

void note_free_loops(const TwistedDiagram& d,
                     std::vector<std::string>* warnings) {
  if (!warnings || d.free_loops.empty()) return;
  warnings->push_back(
      "diagram has " + std::to_string(d.free_loops.size()) +
      " crossing-free component(s); they do not contribute to the invariant");
  for (int b : d.free_loops)
    if (b % 2 != 0) {
      warnings->push_back(
          "a crossing-free component carries an odd number of bars; "
          "it is ignored as well");
      break;
    }
}

}  // namespace

PolyMatrix positive_crossing_block() {
  PolyMatrix b(2);
  b.at(0, 0) = t(1, 0, 0) - t(1, 1, 0);  // 1 - x
  b.at(0, 1) = t(-1, 0, 1);              // -y
  b.at(1, 0) = t(-1, 1, -1);             // -x*y^-1
  return b;
}

PolyMatrix negative_crossing_block() {
  PolyMatrix b(2);
  b.at(0, 1) = t(-1, -1, 1);              // -x^-1*y
  b.at(1, 0) = t(-1, 0, -1);              // -y^-1
  b.at(1, 1) = t(1, 0, 0) - t(1, -1, 0);  // 1 - x^-1
  return b;
}

PolyMatrix build_M(const TwistedDiagram& d) {
  require_valid(d);
  const std::size_t n = d.crossings.size();
  PolyMatrix m(2 * n);
  const PolyMatrix pos = positive_crossing_block();
  const PolyMatrix neg = negative_crossing_block();
  std::size_t r = 0;
  for (const auto& [id, sign] : d.crossings) {
    (void)id;
    const PolyMatrix& blk = sign == CrossingSign::positive ? pos : neg;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) m.at(2 * r + a, 2 * r + b) = blk.at(a, b);
    ++r;
  }
  return m;
}

PolyMatrix build_P(const TwistedDiagram& d) {
  require_valid(d);
  if (!is_virtual(d))
    throw SemanticError({"diagram has bars; use the twisted invariant"});
  auto rank = crossing_ranks(d);
  PolyMatrix p(2 * d.crossings.size());
  for (const auto& e : d.edges) {
    std::size_t row = 2 * rank.at(e.to.crossing) + e.to.index;
    std::size_t col = 2 * rank.at(e.from.crossing) + e.from.index;
    p.at(row, col) = LaurentPoly::one();
  }
  return p;
}

PolyMatrix build_Mtilde(const TwistedDiagram& d) {
  require_valid(d);
  const std::size_t n = d.crossings.size();
  PolyMatrix m(4 * n);
  const PolyMatrix pos = positive_crossing_block();
  const PolyMatrix neg = negative_crossing_block();
  std::size_t r = 0;
  for (const auto& [id, sign] : d.crossings) {
    (void)id;
    const PolyMatrix& blk = sign == CrossingSign::positive ? pos : neg;
    for (std::size_t sheet = 0; sheet < 2; ++sheet)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
          m.at(4 * r + 2 * sheet + a, 4 * r + 2 * sheet + b) = blk.at(a, b);
    ++r;
  }
  return m;
}

PolyMatrix build_Ptilde(const TwistedDiagram& d) {
  require_valid(d);
  auto rank = crossing_ranks(d);
  PolyMatrix p(4 * d.crossings.size());
  for (const auto& e : d.edges) {
    std::size_t bi = 4 * rank.at(e.to.crossing);
    std::size_t bj = 4 * rank.at(e.from.crossing);
    std::size_t eps = e.to.index;
    std::size_t lam = e.from.index;
    if (e.bars % 2 == 0) {
      p.at(bi + eps, bj + lam) = LaurentPoly::one();
      p.at(bi + 3 - eps, bj + 3 - lam) = LaurentPoly::one();
    } else {
      p.at(bi + eps, bj + 3 - lam) = LaurentPoly::one();
      p.at(bi + 3 - eps, bj + lam) = LaurentPoly::one();
    }
  }
  return p;
}

InvariantValue jkss(const TwistedDiagram& d,
                    std::vector<std::string>* warnings) {
  PolyMatrix p = build_P(d);  // also checks validity and bar parity
  note_free_loops(d, warnings);
  LaurentPoly det = determinant(build_M(d) - p);
  if (writhe(d) % 2 != 0) det = -det;
  return InvariantValue::of(std::move(det));
}

InvariantValue twisted_jkss(const TwistedDiagram& d,
                            std::vector<std::string>* warnings) {
  PolyMatrix p = build_Ptilde(d);
  note_free_loops(d, warnings);
  return InvariantValue::of(determinant(build_Mtilde(d) - p));
}

}  // namespace twistlink
