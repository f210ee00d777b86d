#include "twistlink/diagram.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace twistlink {

TwistedDiagram canonicalized(TwistedDiagram d) {
  std::sort(d.edges.begin(), d.edges.end());
  std::sort(d.free_loops.begin(), d.free_loops.end());
  return d;
}

std::vector<std::string> validate(const TwistedDiagram& d) {
  std::vector<std::string> out;
  auto note = [&](std::string s) { out.push_back(std::move(s)); };

  for (const auto& [id, sign] : d.crossings) {
    (void)sign;
    if (id <= 0) note("crossing id " + std::to_string(id) + " must be positive");
  }

  std::map<OutPort, int> from_uses;
  std::map<InPort, int> to_uses;
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const DiagramEdge& e = d.edges[i];
    std::string who = "edge " + std::to_string(i);
    if (!d.crossings.count(e.from.crossing))
      note(who + " leaves undeclared crossing " + std::to_string(e.from.crossing));
    if (!d.crossings.count(e.to.crossing))
      note(who + " enters undeclared crossing " + std::to_string(e.to.crossing));
    if (e.from.index != 0 && e.from.index != 1)
      note(who + " has invalid out-port index " + std::to_string(e.from.index));
    if (e.to.index != 0 && e.to.index != 1)
      note(who + " has invalid in-port index " + std::to_string(e.to.index));
    if (e.bars < 0) note(who + " has negative bar count");
    ++from_uses[e.from];
    ++to_uses[e.to];
  }

  auto port_name = [](int crossing, int index) {
    return std::to_string(crossing) + "." + std::to_string(index);
  };
  for (const auto& [id, sign] : d.crossings) {
    (void)sign;
    for (int t : {0, 1}) {
      int uses = from_uses.count(OutPort{id, t}) ? from_uses[OutPort{id, t}] : 0;
      if (uses != 1)
        note("out-port " + port_name(id, t) + " is the tail of " +
             std::to_string(uses) + " edges (expected 1)");
      uses = to_uses.count(InPort{id, t}) ? to_uses[InPort{id, t}] : 0;
      if (uses != 1)
        note("in-port " + port_name(id, t) + " is the head of " +
             std::to_string(uses) + " edges (expected 1)");
    }
  }

  for (std::size_t i = 0; i < d.free_loops.size(); ++i)
    if (d.free_loops[i] < 0)
      note("free loop " + std::to_string(i) + " has negative bar count");

  return out;
}

void require_valid(const TwistedDiagram& d) {
  auto violations = validate(d);
  if (!violations.empty()) throw SemanticError(std::move(violations));
}

int writhe(const TwistedDiagram& d) {
  int w = 0;
  for (const auto& [id, sign] : d.crossings) {
    (void)id;
    w += sign_value(sign);
  }
  return w;
}

bool is_virtual(const TwistedDiagram& d) {
  for (const auto& e : d.edges)
    if (e.bars % 2 != 0) return false;
  for (int b : d.free_loops)
    if (b % 2 != 0) return false;
  return true;
}

bool is_virtual_strict(const TwistedDiagram& d) {
  for (const auto& e : d.edges)
    if (e.bars != 0) return false;
  for (int b : d.free_loops)
    if (b != 0) return false;
  return true;
}

TwistedDiagram mirror(const TwistedDiagram& d) {
  TwistedDiagram out;
  out.crossings = d.crossings;
  out.free_loops = d.free_loops;
  out.edges.reserve(d.edges.size());
  for (const auto& e : d.edges)
    out.edges.push_back(DiagramEdge{OutPort{e.from.crossing, 1 - e.from.index},
                                    InPort{e.to.crossing, 1 - e.to.index},
                                    e.bars});
  return canonicalized(std::move(out));
}

TwistedDiagram connected_sum(const TwistedDiagram& d1, std::size_t e1,
                             const TwistedDiagram& d2, std::size_t e2) {
  if (e1 >= d1.edges.size() || e2 >= d2.edges.size())
    throw SemanticError({"connected_sum: edge reference out of range"});
  if (d1.edges[e1].bars != 0 || d2.edges[e2].bars != 0)
    throw SemanticError({"connected_sum: selected edges must be bar-free"});

  int offset = 0;
  for (const auto& [id, sign] : d1.crossings) {
    (void)sign;
    offset = std::max(offset, id);
  }

  TwistedDiagram out;
  out.crossings = d1.crossings;
  for (const auto& [id, sign] : d2.crossings) out.crossings[id + offset] = sign;
  out.free_loops = d1.free_loops;
  out.free_loops.insert(out.free_loops.end(), d2.free_loops.begin(),
                        d2.free_loops.end());

  auto relabel_out = [&](OutPort p) { return OutPort{p.crossing + offset, p.index}; };
  auto relabel_in = [&](InPort p) { return InPort{p.crossing + offset, p.index}; };

  for (std::size_t i = 0; i < d1.edges.size(); ++i)
    if (i != e1) out.edges.push_back(d1.edges[i]);
  for (std::size_t i = 0; i < d2.edges.size(); ++i)
    if (i != e2)
      out.edges.push_back(DiagramEdge{relabel_out(d2.edges[i].from),
                                      relabel_in(d2.edges[i].to),
                                      d2.edges[i].bars});

  const DiagramEdge& a = d1.edges[e1];
  const DiagramEdge& b = d2.edges[e2];
  out.edges.push_back(DiagramEdge{a.from, relabel_in(b.to), 0});
  out.edges.push_back(DiagramEdge{relabel_out(b.from), a.to, 0});
  return canonicalized(std::move(out));
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

int parse_int_token(const std::string& tok, int line, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw DiagramParseError(line, std::string("expected ") + what + ", got '" +
                                      tok + "'");
  }
  if (used != tok.size())
    throw DiagramParseError(line, std::string("expected ") + what + ", got '" +
                                      tok + "'");
  return value;
}

// "<crossing>.<index>" with index 0 or 1
std::pair<int, int> parse_port_token(const std::string& tok, int line) {
  auto dot = tok.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 2 != tok.size())
    throw DiagramParseError(line, "expected port '<crossing>.<0|1>', got '" +
                                      tok + "'");
  int crossing = parse_int_token(tok.substr(0, dot), line, "crossing id");
  char idx = tok[dot + 1];
  if (idx != '0' && idx != '1')
    throw DiagramParseError(line, "port index must be 0 or 1 in '" + tok + "'");
  return {crossing, idx - '0'};
}

int parse_bars_token(const std::string& tok, int line) {
  if (tok.rfind("bars=", 0) != 0)
    throw DiagramParseError(line, "expected 'bars=<k>', got '" + tok + "'");
  int bars = parse_int_token(tok.substr(5), line, "bar count");
  if (bars < 0) throw DiagramParseError(line, "bar count must be nonnegative");
  return bars;
}

}  // namespace

TwistedDiagram parse_diagram(std::string_view text) {
  TwistedDiagram d;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0];

    if (kw == "crossing") {
      if (tokens.size() != 3)
        throw DiagramParseError(line_no, "crossing takes an id and a sign");
      int id = parse_int_token(tokens[1], line_no, "crossing id");
      CrossingSign sign;
      if (tokens[2] == "+")
        sign = CrossingSign::positive;
      else if (tokens[2] == "-")
        sign = CrossingSign::negative;
      else
        throw DiagramParseError(line_no, "sign must be '+' or '-'");
      if (d.crossings.count(id))
        throw DiagramParseError(line_no,
                                "crossing " + std::to_string(id) +
                                    " declared twice");
      d.crossings[id] = sign;
    } else if (kw == "edge") {
      if (tokens.size() != 3 && tokens.size() != 4)
        throw DiagramParseError(line_no,
                                "edge takes two ports and an optional bars=<k>");
      auto [fc, fi] = parse_port_token(tokens[1], line_no);
      auto [tc, ti] = parse_port_token(tokens[2], line_no);
      int bars = tokens.size() == 4 ? parse_bars_token(tokens[3], line_no) : 0;
      d.edges.push_back(DiagramEdge{OutPort{fc, fi}, InPort{tc, ti}, bars});
    } else if (kw == "loop") {
      if (tokens.size() != 2)
        throw DiagramParseError(line_no, "loop takes bars=<k>");
      d.free_loops.push_back(parse_bars_token(tokens[1], line_no));
    } else {
      throw DiagramParseError(line_no, "unknown keyword '" + kw + "'");
    }
  }

  d = canonicalized(std::move(d));
  require_valid(d);
  return d;
}

std::string render_diagram(const TwistedDiagram& d) {
  TwistedDiagram c = canonicalized(d);
  std::ostringstream out;
  for (const auto& [id, sign] : c.crossings)
    out << "crossing " << id << ' '
        << (sign == CrossingSign::positive ? '+' : '-') << '\n';
  for (const auto& e : c.edges) {
    out << "edge " << e.from.crossing << '.' << e.from.index << ' '
        << e.to.crossing << '.' << e.to.index;
    if (e.bars != 0) out << " bars=" << e.bars;
    out << '\n';
  }
  for (int b : c.free_loops) out << "loop bars=" << b << '\n';
  return out.str();
}

namespace {

// Bounded uniform draw; implementation-defined distributions are avoided
// so that fixed seeds reproduce across platforms.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

}  // namespace

TwistedDiagram random_diagram(int crossings, int bars, std::uint64_t seed) {
  if (crossings < 0 || bars < 0)
    throw SemanticError({"random_diagram: counts must be nonnegative"});
  std::mt19937_64 rng(seed);
  TwistedDiagram d;
  if (crossings == 0) {
    if (bars > 0) d.free_loops.push_back(bars);
    return d;
  }

  for (int id = 1; id <= crossings; ++id)
    d.crossings[id] = draw(rng, 2) == 0 ? CrossingSign::positive
                                        : CrossingSign::negative;

  std::vector<InPort> heads;
  heads.reserve(2 * crossings);
  for (int id = 1; id <= crossings; ++id)
    for (int t : {0, 1}) heads.push_back(InPort{id, t});
  for (std::size_t i = heads.size(); i > 1; --i)
    std::swap(heads[i - 1], heads[draw(rng, i)]);

  std::size_t next = 0;
  for (int id = 1; id <= crossings; ++id)
    for (int t : {0, 1})
      d.edges.push_back(DiagramEdge{OutPort{id, t}, heads[next++], 0});

  for (int b = 0; b < bars; ++b)
    ++d.edges[draw(rng, d.edges.size())].bars;

  return canonicalized(std::move(d));
}

int component_count(const TwistedDiagram& d) {
  std::map<OutPort, const DiagramEdge*> by_tail;
  for (const auto& e : d.edges) by_tail[e.from] = &e;

  std::set<InPort> seen;
  int components = 0;
  for (const auto& e : d.edges) {
    if (seen.count(e.to)) continue;
    ++components;
    InPort cur = e.to;
    while (!seen.count(cur)) {
      seen.insert(cur);
      // Pass through the crossing, then follow the outgoing edge.
      OutPort leave{cur.crossing, 1 - cur.index};
      auto it = by_tail.find(leave);
      if (it == by_tail.end()) break;  // invalid diagram; bail out
      cur = it->second->to;
    }
  }
  return components + static_cast<int>(d.free_loops.size());
}

}  // namespace twistlink
