#include "twistlink/moves.hpp"

#include <map>
#include <random>
#include <set>

namespace twistlink {

namespace {

struct PortMaps {
  std::map<OutPort, std::size_t> tail;
  std::map<InPort, std::size_t> head;
};

PortMaps port_maps(const TwistedDiagram& d) {
  PortMaps m;
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    m.tail[d.edges[i].from] = i;
    m.head[d.edges[i].to] = i;
  }
  return m;
}

int next_crossing_id(const TwistedDiagram& d) {
  return d.crossings.empty() ? 1 : d.crossings.rbegin()->first + 1;
}

// Delete the crossings in `gone`, drop the pattern-internal edges in
// `drop`, and stitch the surviving strands back together through `cont`
// (continuation across a deleted crossing, in-port to out-port). A chain
// that closes on itself becomes a free loop; bars accumulate along chains.
TwistedDiagram excise(const TwistedDiagram& d, const std::set<int>& gone,
                      const std::map<InPort, OutPort>& cont,
                      const std::set<std::size_t>& drop) {
  TwistedDiagram out;
  for (const auto& [id, s] : d.crossings)
    if (!gone.count(id)) out.crossings[id] = s;
  out.free_loops = d.free_loops;

  std::vector<const DiagramEdge*> survivors;
  std::map<OutPort, const DiagramEdge*> by_tail;
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    if (drop.count(i)) continue;
    const DiagramEdge& e = d.edges[i];
    survivors.push_back(&e);
    if (gone.count(e.from.crossing)) by_tail[e.from] = &e;
  }

  std::set<const DiagramEdge*> consumed;
  for (const DiagramEdge* e : survivors) {
    if (gone.count(e->from.crossing)) continue;  // not a chain head
    consumed.insert(e);
    int bars = e->bars;
    InPort to = e->to;
    while (gone.count(to.crossing)) {
      const DiagramEdge* next = by_tail.at(cont.at(to));
      consumed.insert(next);
      bars += next->bars;
      to = next->to;
    }
    out.edges.push_back(DiagramEdge{e->from, to, bars});
  }
  for (const DiagramEdge* e : survivors) {
    if (consumed.count(e)) continue;
    int bars = 0;
    const DiagramEdge* cur = e;
    while (!consumed.count(cur)) {
      consumed.insert(cur);
      bars += cur->bars;
      cur = by_tail.at(cont.at(cur->to));
    }
    out.free_loops.push_back(bars);
  }
  return canonicalized(std::move(out));
}

// The bar-transport rewrite replaces the crossing by its image under the
// reflection-and-switch symmetry: the sign is kept and both port indices
// flip, exactly as in mirror(). Selected as the unique labelling variant
// under which the twisted invariant is preserved.
struct T3Rule {
  bool flip_sign;
  bool swap_in;
  bool swap_out;
};
constexpr T3Rule kT3{false, true, true};

[[noreturn]] void bad_site(const char* what) { throw InvalidSiteError(what); }

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

}  // namespace

std::vector<MoveSite> enumerate_sites(const TwistedDiagram& d, MoveKind kind) {
  require_valid(d);
  std::vector<MoveSite> sites;
  PortMaps maps = port_maps(d);

  switch (kind) {
    case MoveKind::r1_add:
      for (std::size_t e = 0; e < d.edges.size(); ++e)
        for (CrossingSign s : {CrossingSign::positive, CrossingSign::negative})
          for (int t : {0, 1}) {
            MoveSite site;
            site.kind = kind;
            site.edge = e;
            site.sign = s;
            site.variant = t;
            sites.push_back(site);
          }
      break;

    case MoveKind::r1_remove:
      for (const auto& [id, s] : d.crossings) {
        (void)s;
        for (int t : {0, 1}) {
          const DiagramEdge& e = d.edges[maps.tail.at(OutPort{id, t})];
          if (e.to == InPort{id, t} && e.bars == 0) {
            MoveSite site;
            site.kind = kind;
            site.c1 = id;
            site.variant = t;
            sites.push_back(site);
            break;  // one site per curled crossing
          }
        }
      }
      break;

    case MoveKind::r2_add:
      for (std::size_t a = 0; a < d.edges.size(); ++a)
        for (std::size_t b = 0; b < d.edges.size(); ++b) {
          if (a == b) continue;
          for (CrossingSign s :
               {CrossingSign::positive, CrossingSign::negative}) {
            MoveSite site;
            site.kind = kind;
            site.edge = a;
            site.edge2 = b;
            site.sign = s;
            sites.push_back(site);
          }
        }
      break;

    case MoveKind::r2_remove:
      for (const auto& [id, s] : d.crossings) {
        const DiagramEdge& e0 = d.edges[maps.tail.at(OutPort{id, 0})];
        const DiagramEdge& e1 = d.edges[maps.tail.at(OutPort{id, 1})];
        if (e0.bars != 0 || e1.bars != 0) continue;
        if (e0.to.index != 0 || e1.to.index != 1) continue;
        int other = e0.to.crossing;
        if (other != e1.to.crossing || other == id) continue;
        if (d.crossings.at(other) != flipped(s)) continue;
        MoveSite site;
        site.kind = kind;
        site.c1 = id;
        site.c2 = other;
        sites.push_back(site);
      }
      break;

    case MoveKind::r3:
      // Pattern: positive crossings c1, c2, c3 joined by bar-free edges
      // c2.out1 -> c1.in0, c3.out1 -> c1.in1, c3.out0 -> c2.in1.
      for (const auto& [c1, s1] : d.crossings) {
        if (s1 != CrossingSign::positive) continue;
        const DiagramEdge& ea = d.edges[maps.head.at(InPort{c1, 0})];
        if (ea.bars != 0 || ea.from.index != 1) continue;
        int c2 = ea.from.crossing;
        if (c2 == c1 || d.crossings.at(c2) != CrossingSign::positive) continue;
        const DiagramEdge& eb = d.edges[maps.head.at(InPort{c1, 1})];
        if (eb.bars != 0 || eb.from.index != 1) continue;
        int c3 = eb.from.crossing;
        if (c3 == c1 || c3 == c2) continue;
        if (d.crossings.at(c3) != CrossingSign::positive) continue;
        const DiagramEdge& ec = d.edges[maps.head.at(InPort{c2, 1})];
        if (ec.bars != 0 || ec.from != OutPort{c3, 0}) continue;
        MoveSite site;
        site.kind = kind;
        site.c1 = c1;
        site.c2 = c2;
        site.c3 = c3;
        sites.push_back(site);
      }
      break;

    case MoveKind::t3:
      for (const auto& [id, s] : d.crossings) {
        (void)s;
        const DiagramEdge& in0 = d.edges[maps.head.at(InPort{id, 0})];
        const DiagramEdge& in1 = d.edges[maps.head.at(InPort{id, 1})];
        if (in0.bars % 2 == 1 && in1.bars % 2 == 1) {
          MoveSite site;
          site.kind = kind;
          site.c1 = id;
          site.variant = 0;
          sites.push_back(site);
        }
        const DiagramEdge& out0 = d.edges[maps.tail.at(OutPort{id, 0})];
        const DiagramEdge& out1 = d.edges[maps.tail.at(OutPort{id, 1})];
        if (out0.bars % 2 == 1 && out1.bars % 2 == 1) {
          MoveSite site;
          site.kind = kind;
          site.c1 = id;
          site.variant = 1;
          sites.push_back(site);
        }
      }
      break;
  }
  return sites;
}

namespace {

TwistedDiagram apply_r1_add(const TwistedDiagram& d, const MoveSite& site) {
  if (site.edge >= d.edges.size()) bad_site("r1_add: edge out of range");
  if (site.variant != 0 && site.variant != 1)
    bad_site("r1_add: curl index must be 0 or 1");
  int c = next_crossing_id(d);
  int t = site.variant;
  TwistedDiagram out = d;
  out.crossings[c] = site.sign;
  DiagramEdge target = out.edges[site.edge];
  out.edges[site.edge] = DiagramEdge{target.from, InPort{c, 1 - t}, target.bars};
  out.edges.push_back(DiagramEdge{OutPort{c, t}, InPort{c, t}, 0});
  out.edges.push_back(DiagramEdge{OutPort{c, 1 - t}, target.to, 0});
  return canonicalized(std::move(out));
}

TwistedDiagram apply_r1_remove(const TwistedDiagram& d, const MoveSite& site) {
  if (!d.crossings.count(site.c1)) bad_site("r1_remove: no such crossing");
  PortMaps maps = port_maps(d);
  for (int t : {0, 1}) {
    std::size_t curl = maps.tail.at(OutPort{site.c1, t});
    const DiagramEdge& e = d.edges[curl];
    if (e.to == InPort{site.c1, t} && e.bars == 0) {
      return excise(d, {site.c1},
                    {{InPort{site.c1, 1 - t}, OutPort{site.c1, 1 - t}}},
                    {curl});
    }
  }
  bad_site("r1_remove: crossing is not curled");
}

TwistedDiagram apply_r2_add(const TwistedDiagram& d, const MoveSite& site) {
  if (site.edge >= d.edges.size() || site.edge2 >= d.edges.size() ||
      site.edge == site.edge2)
    bad_site("r2_add: needs two distinct edges");
  int c1 = next_crossing_id(d);
  int c2 = c1 + 1;
  TwistedDiagram out = d;
  out.crossings[c1] = site.sign;
  out.crossings[c2] = flipped(site.sign);
  DiagramEdge first = out.edges[site.edge];
  DiagramEdge second = out.edges[site.edge2];
  out.edges[site.edge] = DiagramEdge{first.from, InPort{c1, 0}, first.bars};
  out.edges[site.edge2] = DiagramEdge{second.from, InPort{c1, 1}, second.bars};
  out.edges.push_back(DiagramEdge{OutPort{c1, 0}, InPort{c2, 0}, 0});
  out.edges.push_back(DiagramEdge{OutPort{c1, 1}, InPort{c2, 1}, 0});
  out.edges.push_back(DiagramEdge{OutPort{c2, 0}, first.to, 0});
  out.edges.push_back(DiagramEdge{OutPort{c2, 1}, second.to, 0});
  return canonicalized(std::move(out));
}

TwistedDiagram apply_r2_remove(const TwistedDiagram& d, const MoveSite& site) {
  if (!d.crossings.count(site.c1) || !d.crossings.count(site.c2) ||
      site.c1 == site.c2)
    bad_site("r2_remove: bad crossing pair");
  if (d.crossings.at(site.c2) != flipped(d.crossings.at(site.c1)))
    bad_site("r2_remove: crossings must have opposite signs");
  PortMaps maps = port_maps(d);
  std::size_t m0 = maps.tail.at(OutPort{site.c1, 0});
  std::size_t m1 = maps.tail.at(OutPort{site.c1, 1});
  if (d.edges[m0].to != InPort{site.c2, 0} ||
      d.edges[m1].to != InPort{site.c2, 1} || d.edges[m0].bars != 0 ||
      d.edges[m1].bars != 0)
    bad_site("r2_remove: crossings are not joined by two straight edges");
  return excise(d, {site.c1, site.c2},
                {{InPort{site.c1, 0}, OutPort{site.c2, 0}},
                 {InPort{site.c1, 1}, OutPort{site.c2, 1}}},
                {m0, m1});
}

TwistedDiagram apply_r3(const TwistedDiagram& d, const MoveSite& site) {
  const int c1 = site.c1, c2 = site.c2, c3 = site.c3;
  if (!d.crossings.count(c1) || !d.crossings.count(c2) ||
      !d.crossings.count(c3) || c1 == c2 || c1 == c3 || c2 == c3)
    bad_site("r3: bad crossing triple");
  for (int c : {c1, c2, c3})
    if (d.crossings.at(c) != CrossingSign::positive)
      bad_site("r3: crossings must be positive");
  PortMaps maps = port_maps(d);
  std::size_t ma = maps.head.at(InPort{c1, 0});
  std::size_t mb = maps.head.at(InPort{c1, 1});
  std::size_t mc = maps.head.at(InPort{c2, 1});
  if (d.edges[ma].from != OutPort{c2, 1} || d.edges[ma].bars != 0 ||
      d.edges[mb].from != OutPort{c3, 1} || d.edges[mb].bars != 0 ||
      d.edges[mc].from != OutPort{c3, 0} || d.edges[mc].bars != 0)
    bad_site("r3: triangle pattern not present");

  const std::map<InPort, InPort> head_map = {
      {InPort{c2, 0}, InPort{c1, 0}},
      {InPort{c3, 0}, InPort{c1, 1}},
      {InPort{c3, 1}, InPort{c2, 1}},
  };
  const std::map<OutPort, OutPort> tail_map = {
      {OutPort{c1, 1}, OutPort{c2, 1}},
      {OutPort{c1, 0}, OutPort{c3, 1}},
      {OutPort{c2, 0}, OutPort{c3, 0}},
  };

  TwistedDiagram out;
  out.crossings = d.crossings;
  out.free_loops = d.free_loops;
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    if (i == ma || i == mb || i == mc) continue;
    DiagramEdge e = d.edges[i];
    if (auto it = tail_map.find(e.from); it != tail_map.end())
      e.from = it->second;
    if (auto it = head_map.find(e.to); it != head_map.end()) e.to = it->second;
    out.edges.push_back(e);
  }
  out.edges.push_back(DiagramEdge{OutPort{c1, 1}, InPort{c2, 0}, 0});
  out.edges.push_back(DiagramEdge{OutPort{c1, 0}, InPort{c3, 0}, 0});
  out.edges.push_back(DiagramEdge{OutPort{c2, 0}, InPort{c3, 1}, 0});
  return canonicalized(std::move(out));
}

TwistedDiagram apply_t3(const TwistedDiagram& d, const MoveSite& site) {
  const int c = site.c1;
  if (!d.crossings.count(c)) bad_site("t3: no such crossing");
  if (site.variant != 0 && site.variant != 1)
    bad_site("t3: variant must be 0 (in->out) or 1 (out->in)");
  PortMaps maps = port_maps(d);
  const bool from_in_side = site.variant == 0;
  for (int t : {0, 1}) {
    std::size_t i = from_in_side ? maps.head.at(InPort{c, t})
                                 : maps.tail.at(OutPort{c, t});
    if (d.edges[i].bars % 2 != 1)
      bad_site("t3: both edges on the chosen side must carry odd bars");
  }

  TwistedDiagram out = d;
  if (kT3.flip_sign) out.crossings[c] = flipped(out.crossings[c]);
  for (DiagramEdge& e : out.edges) {
    if (e.to.crossing == c) {
      if (kT3.swap_in) e.to.index = 1 - e.to.index;
      e.bars += from_in_side ? -1 : 1;
    }
    if (e.from.crossing == c) {
      if (kT3.swap_out) e.from.index = 1 - e.from.index;
      e.bars += from_in_side ? 1 : -1;
    }
  }
  return canonicalized(std::move(out));
}

}  // namespace

TwistedDiagram apply_move(const TwistedDiagram& d, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::r1_add:
      return apply_r1_add(d, site);
    case MoveKind::r1_remove:
      return apply_r1_remove(d, site);
    case MoveKind::r2_add:
      return apply_r2_add(d, site);
    case MoveKind::r2_remove:
      return apply_r2_remove(d, site);
    case MoveKind::r3:
      return apply_r3(d, site);
    case MoveKind::t3:
      return apply_t3(d, site);
  }
  bad_site("unknown move kind");
}

namespace {

std::vector<std::vector<MoveSite>> eligible_by_kind(const TwistedDiagram& d) {
  std::vector<std::vector<MoveSite>> groups;
  for (MoveKind kind :
       {MoveKind::r1_add, MoveKind::r1_remove, MoveKind::r2_add,
        MoveKind::r2_remove, MoveKind::r3, MoveKind::t3}) {
    std::vector<MoveSite> keep;
    for (const MoveSite& site : enumerate_sites(d, kind)) {
      if (kind == MoveKind::r1_remove || kind == MoveKind::r2_remove) {
        if (apply_move(d, site).free_loops.size() != d.free_loops.size())
          continue;
      }
      keep.push_back(site);
    }
    if (!keep.empty()) groups.push_back(std::move(keep));
  }
  return groups;
}

}  // namespace

std::vector<MoveSite> eligible_sites(const TwistedDiagram& d) {
  std::vector<MoveSite> all;
  for (auto& group : eligible_by_kind(d))
    all.insert(all.end(), group.begin(), group.end());
  return all;
}

TwistedDiagram random_walk(const TwistedDiagram& d, int steps,
                           std::uint64_t seed) {
  require_valid(d);
  std::mt19937_64 rng(seed);
  TwistedDiagram cur = canonicalized(d);
  for (int s = 0; s < steps; ++s) {
    auto groups = eligible_by_kind(cur);
    if (groups.empty()) break;
    const auto& group = groups[draw(rng, groups.size())];
    cur = apply_move(cur, group[draw(rng, group.size())]);
  }
  return cur;
}

}  // namespace twistlink
