#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twistlink/errors.hpp"

namespace twistlink {

enum class CrossingSign : std::uint8_t { positive, negative };

inline CrossingSign flipped(CrossingSign s) {
  return s == CrossingSign::positive ? CrossingSign::negative
                                     : CrossingSign::positive;
}
inline int sign_value(CrossingSign s) {
  return s == CrossingSign::positive ? 1 : -1;
}

/// Out-port `index` (0 or 1) of a crossing: the tail of a diagram edge.
struct OutPort {
  int crossing = 0;
  int index = 0;
  friend auto operator<=>(const OutPort&, const OutPort&) = default;
};

/// In-port `index` (0 or 1) of a crossing: the head of a diagram edge.
struct InPort {
  int crossing = 0;
  int index = 0;
  friend auto operator<=>(const InPort&, const InPort&) = default;
};

/// Directed edge of the underlying 4-valent graph, carrying the number of
/// bars sitting on the corresponding arc. Only the parity of `bars` is
/// ever consumed by invariants (a pair of adjacent bars cancels).
struct DiagramEdge {
  OutPort from;
  InPort to;
  int bars = 0;
  friend auto operator<=>(const DiagramEdge&, const DiagramEdge&) = default;
};

/// Combinatorial model of a twisted (or virtual, when bar-free) link
/// diagram: signed real crossings, port-to-port edges, and crossing-free
/// closed components. Virtual crossings are not represented at all; they
/// are invisible to everything computed here.
///
/// A well-formed diagram uses each out-port as the tail of exactly one
/// edge and each in-port as the head of exactly one edge (see validate()).
/// Values are plain data; construction helpers keep the edge list in
/// canonical order so that equality is structural.
struct TwistedDiagram {
  std::map<int, CrossingSign> crossings;
  std::vector<DiagramEdge> edges;
  std::vector<int> free_loops;

  friend bool operator==(const TwistedDiagram&, const TwistedDiagram&) = default;
};

/// Sort edges by tail port and free loops by bar count.
TwistedDiagram canonicalized(TwistedDiagram d);

/// All structural violations, empty iff the diagram is well-formed.
std::vector<std::string> validate(const TwistedDiagram& d);

/// Throws SemanticError when validate(d) is nonempty.
void require_valid(const TwistedDiagram& d);

/// Number of positive crossings minus number of negative crossings.
int writhe(const TwistedDiagram& d);

/// True iff every bar count is even (bars cancel in pairs).
bool is_virtual(const TwistedDiagram& d);
/// True iff there are no bars at all.
bool is_virtual_strict(const TwistedDiagram& d);

/// The reflected diagram with all crossings switched: signs are kept and
/// both port indices of every edge flip. An involution.
TwistedDiagram mirror(const TwistedDiagram& d);

/// Cut edge e1 of d1 and edge e2 of d2 (both referenced by index into the
/// canonical edge list, both bar-free) and cross-reconnect the ends.
/// Crossing identifiers of d2 are shifted past those of d1.
TwistedDiagram connected_sum(const TwistedDiagram& d1, std::size_t e1,
                             const TwistedDiagram& d2, std::size_t e2);

/// Line-oriented text format; see render_diagram for the exact shape.
/// Throws DiagramParseError (syntax, with line number) or SemanticError
/// (well-formedness violations).
TwistedDiagram parse_diagram(std::string_view text);

/// Renders as:
///   crossing <id> <+|->        one line per crossing, ascending id
///   edge <j>.<a> <i>.<b> [bars=<k>]   tail port, head port (k > 0 only)
///   loop bars=<k>              one line per crossing-free component
std::string render_diagram(const TwistedDiagram& d);

/// Uniformly random pairing of the 2n out-ports with the 2n in-ports,
/// random signs, and `bars` bars dropped on random edges. Deterministic in
/// `seed`. With n = 0 and bars > 0 the bars land on a single free loop.
TwistedDiagram random_diagram(int crossings, int bars, std::uint64_t seed);

/// Number of closed strands (free loops included). Follows the strand
/// through each crossing: the strand entering in-port i leaves at
/// out-port 1-i.
int component_count(const TwistedDiagram& d);

}  // namespace twistlink
