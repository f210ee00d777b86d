#include "twistlink/laurent.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace twistlink {

LaurentPoly LaurentPoly::term(BigInt coeff, int xexp, int yexp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(Monomial{xexp, yexp}, std::move(coeff));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
         terms_.begin()->second == 1;
}

BigInt LaurentPoly::coeff(int xexp, int yexp) const {
  auto it = terms_.find(Monomial{xexp, yexp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_x_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_x_exponent of zero polynomial");
  // Term order is x-major, so the first term has the minimal x-exponent.
  return terms_.begin()->first.x;
}

int LaurentPoly::min_y_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_y_exponent of zero polynomial");
  int best = terms_.begin()->first.y;
  for (const auto& [m, c] : terms_) best = std::min(best, m.y);
  return best;
}

LaurentPoly LaurentPoly::shifted(int dx, int dy) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), Monomial{m.x + dx, m.y + dy}, c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

void LaurentPoly::add_term(const BigInt& coeff, int xexp, int yexp) {
  if (coeff == 0) return;
  Monomial m{xexp, yexp};
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(c, m.x, m.y);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(-c, m.x, m.y);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_)
      out.add_term(ca * cb, ma.x + mb.x, ma.y + mb.y);
  return out;
}

namespace {

// Shift a polynomial so that both minimal exponents become 0.
// Returns the applied shift.
std::pair<int, int> clear_negative(LaurentPoly& p) {
  if (p.is_zero()) return {0, 0};
  int dx = -p.min_x_exponent();
  int dy = -p.min_y_exponent();
  if (dx != 0 || dy != 0) p = p.shifted(dx, dy);
  return {dx, dy};
}

}  // namespace

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& den) const {
  if (den.is_zero()) throw std::logic_error("exact division by zero polynomial");
  if (is_zero()) return {};
  if (den.is_one()) return *this;

  // Monomial divisor: a pure exponent shift plus coefficient division.
  if (den.is_single_term()) {
    const auto& [dm, dc] = *den.terms_.begin();
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
      BigInt q, r;
      boost::multiprecision::divide_qr(c, dc, q, r);
      if (r != 0)
        throw std::logic_error("inexact division in fraction-free elimination");
      out.terms_.emplace_hint(out.terms_.end(), Monomial{m.x - dm.x, m.y - dm.y},
                              std::move(q));
    }
    return out;
  }

  // General case: shift both operands into plain polynomials, divide by
  // leading terms in the (x, y)-lexicographic order, undo the shift.
  LaurentPoly num = *this;
  LaurentPoly d = den;
  auto [nx, ny] = clear_negative(num);
  auto [dx, dy] = clear_negative(d);

  const auto& dlead = *d.terms_.rbegin();
  LaurentPoly quot;
  while (!num.is_zero()) {
    const auto& nlead = *num.terms_.rbegin();
    int ex = nlead.first.x - dlead.first.x;
    int ey = nlead.first.y - dlead.first.y;
    BigInt q, r;
    boost::multiprecision::divide_qr(nlead.second, dlead.second, q, r);
    if (ex < 0 || ey < 0 || r != 0)
      throw std::logic_error("inexact division in fraction-free elimination");
    LaurentPoly t = term(q, ex, ey);
    quot += t;
    num -= t * d;
    if (!num.is_zero() && num.terms_.rbegin()->first >= nlead.first)
      throw std::logic_error("exact division failed to make progress");
  }
  return quot.shifted(dx - nx, dy - ny);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    out += "*x^";
    out += std::to_string(m.x);
    out += "*y^";
    out += std::to_string(m.y);
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool at_end() const { return pos >= s.size(); }

  void expect(std::string_view lit) {
    if (s.substr(pos, lit.size()) != lit)
      throw PolyParseError(pos, "expected '" + std::string(lit) + "'");
    pos += lit.size();
  }

  std::string signed_digits(const char* what) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t ndigits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      ++ndigits;
    }
    if (ndigits == 0)
      throw PolyParseError(pos, std::string("expected ") + what);
    std::string text(s.substr(start, pos - start));
    if (text[0] == '+') text.erase(0, 1);
    return text;
  }

  int small_int(const char* what) {
    std::size_t at = pos;
    std::string text = signed_digits(what);
    try {
      return std::stoi(text);
    } catch (const std::out_of_range&) {
      throw PolyParseError(at, std::string(what) + " out of range");
    }
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.at_end()) throw PolyParseError(c.pos, "empty polynomial text");

  // The zero polynomial is written as a lone "0".
  if (text[c.pos] == '0') {
    std::size_t look = c.pos + 1;
    while (look < text.size() && (text[look] == ' ' || text[look] == '\t')) ++look;
    if (look >= text.size()) return {};
  }

  LaurentPoly out;
  while (true) {
    BigInt coeff(c.signed_digits("coefficient"));
    c.expect("*x^");
    int xe = c.small_int("x exponent");
    c.expect("*y^");
    int ye = c.small_int("y exponent");
    out.add_term(coeff, xe, ye);
    c.skip_ws();
    if (c.at_end()) break;
    c.expect("+");
    c.skip_ws();
  }
  return out;
}

LaurentPoly normalize_x(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  int d = p.min_x_exponent();
  return d == 0 ? p : p.shifted(-d, 0);
}

bool equal_up_to_x_power(const LaurentPoly& p, const LaurentPoly& q) {
  return normalize_x(p) == normalize_x(q);
}

}  // namespace twistlink
