#pragma once

#include <cstdint>
#include <vector>

#include "twistlink/diagram.hpp"

namespace twistlink {

/// Rewrite families on the combinatorial encoding. Detour-style moves
/// (virtual moves and bar-pair cancellation) act trivially on this
/// encoding and need no rewrite.
enum class MoveKind {
  r1_add,     // insert a curl on an edge
  r1_remove,  // delete a curled crossing
  r2_add,     // poke one edge over another (parallel variant)
  r2_remove,  // cancel an opposite-sign pair joined by two straight edges
  r3,         // slide a strand across a crossing (one representative variant)
  t3          // push a crossing through a pair of bars
};

/// A located, applicable rewrite. Field use by kind:
///   r1_add:    edge    = target edge; sign = new crossing; variant = curl
///              index t in {0,1} (self-edge out[t] -> in[t] is created)
///   r1_remove: c1      = curled crossing
///   r2_add:    edge/edge2 = the two distinct edges; sign = first crossing
///   r2_remove: c1, c2  = the pair (straight edges run c1 -> c2)
///   r3:        c1, c2, c3 = the triangle roles
///   t3:        c1      = crossing; variant = 0 to move bars in->out,
///              1 for out->in
struct MoveSite {
  MoveKind kind{};
  int c1 = 0, c2 = 0, c3 = 0;
  std::size_t edge = 0, edge2 = 0;
  CrossingSign sign = CrossingSign::positive;
  int variant = 0;
};

/// All sites of one family. Diagram must be well-formed.
std::vector<MoveSite> enumerate_sites(const TwistedDiagram& d, MoveKind kind);

/// Rewritten diagram; throws InvalidSiteError when the site does not
/// match d. The result represents the same twisted link.
TwistedDiagram apply_move(const TwistedDiagram& d, const MoveSite& site);

/// Sites of every family, excluding removals that would orphan a closed
/// component into a crossing-free loop (the determinant formula does not
/// see crossing-free components, so such steps would change the computed
/// value even though the link is unchanged).
std::vector<MoveSite> eligible_sites(const TwistedDiagram& d);

/// Applies `steps` uniformly chosen eligible sites (family first, then
/// site). Deterministic in `seed`. Stops early if no site is eligible.
TwistedDiagram random_walk(const TwistedDiagram& d, int steps,
                           std::uint64_t seed);

}  // namespace twistlink
