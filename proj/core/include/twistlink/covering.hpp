#pragma once

#include <cstddef>

#include "twistlink/diagram.hpp"

namespace twistlink {

/// The double covering diagram: a bar-free virtual diagram with two sheets.
/// The k-th input crossing (ascending id, 1-based) becomes cover crossings
/// 2k-1 (first sheet) and 2k (second sheet), both with the input sign.
/// Each edge lifts to two edges, staying on its sheet when its bar count
/// is even and crossing sheets when it is odd; the second-sheet copy has
/// both port indices flipped. A free loop lifts to two loops when its bar
/// count is even and to a single loop when odd. Bar-free input yields the
/// disjoint union of the diagram and its mirror.
TwistedDiagram double_cover(const TwistedDiagram& d);

/// The two diagrams that realize "one added bar" both ways: the double
/// cover of `base` with one extra bar on edge `edge`, and the connected
/// sum of `base` with its mirror along that edge. They carry equal
/// virtual invariants. `base` must be bar-free.
struct BarWitness {
  TwistedDiagram cover;
  TwistedDiagram sum;
};
BarWitness prop2_witness(const TwistedDiagram& base, std::size_t edge);

}  // namespace twistlink
