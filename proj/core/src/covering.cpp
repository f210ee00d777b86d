#include "twistlink/covering.hpp"

#include <map>

namespace twistlink {

TwistedDiagram double_cover(const TwistedDiagram& d) {
  require_valid(d);

  // 1-based rank of each crossing id.
  std::map<int, int> rank;
  int r = 0;
  for (const auto& [id, sign] : d.crossings) {
    (void)sign;
    rank[id] = ++r;
  }

  TwistedDiagram out;
  for (const auto& [id, sign] : d.crossings) {
    out.crossings[2 * rank[id] - 1] = sign;
    out.crossings[2 * rank[id]] = sign;
  }

  for (const auto& e : d.edges) {
    int j1 = 2 * rank[e.from.crossing] - 1, j2 = j1 + 1;
    int i1 = 2 * rank[e.to.crossing] - 1, i2 = i1 + 1;
    int lam = e.from.index, eps = e.to.index;
    if (e.bars % 2 == 0) {
      out.edges.push_back({OutPort{j1, lam}, InPort{i1, eps}, 0});
      out.edges.push_back({OutPort{j2, 1 - lam}, InPort{i2, 1 - eps}, 0});
    } else {
      out.edges.push_back({OutPort{j1, lam}, InPort{i2, 1 - eps}, 0});
      out.edges.push_back({OutPort{j2, 1 - lam}, InPort{i1, eps}, 0});
    }
  }

  for (int b : d.free_loops) {
    out.free_loops.push_back(0);
    if (b % 2 == 0) out.free_loops.push_back(0);
  }

  return canonicalized(std::move(out));
}

BarWitness prop2_witness(const TwistedDiagram& base, std::size_t edge) {
  require_valid(base);
  if (!is_virtual_strict(base))
    throw SemanticError({"prop2_witness: base diagram must be bar-free"});
  if (edge >= base.edges.size())
    throw SemanticError({"prop2_witness: edge reference out of range"});

  TwistedDiagram barred = base;
  barred.edges[edge].bars += 1;

  TwistedDiagram m = mirror(base);
  const DiagramEdge& e = base.edges[edge];
  DiagramEdge mirrored{OutPort{e.from.crossing, 1 - e.from.index},
                       InPort{e.to.crossing, 1 - e.to.index}, e.bars};
  std::size_t medge = m.edges.size();
  for (std::size_t i = 0; i < m.edges.size(); ++i)
    if (m.edges[i] == mirrored) {
      medge = i;
      break;
    }
  if (medge == m.edges.size())
    throw std::logic_error("mirror image of the selected edge not found");

  BarWitness w;
  w.cover = double_cover(barred);
  w.sum = connected_sum(base, edge, m, medge);
  return w;
}

}  // namespace twistlink
