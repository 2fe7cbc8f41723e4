#include <algorithm>
#include <set>

#include "altknot/diagram.hpp"
#include "altknot/error.hpp"

namespace altknot {

namespace {

struct Chain {
  std::vector<int> pieces;  // edge indices in travel order
  SlotRef tail, head;       // kept ends, or unset for closed chains
  bool closed = false;
};

}  // namespace

Diagram splice_out(const Diagram& d, const SpliceRule& rule) {
  std::vector<bool> removed(d.num_crossings(), false);
  for (int id : rule.removed) {
    auto ci = d.crossing_index(id);
    if (!ci) throw precondition_error("UnknownCrossing", "cannot remove crossing " + std::to_string(id));
    removed[*ci] = true;
  }
  auto key = [&](SlotRef r) { return std::make_pair(d.crossing(r.crossing).id, r.slot); };
  auto ref = [&](std::pair<int, int> k) { return SlotRef{*d.crossing_index(k.first), k.second}; };

  std::vector<bool> used(d.num_edges(), false);
  std::vector<Chain> chains;

  // Follows edges forward from the edge index `first`, jumping through
  // removed crossings, until reaching a kept crossing or returning to `first`.
  auto trace = [&](int first, Chain& ch) {
    int e = first;
    for (std::size_t guard = 0; guard <= d.num_edges(); ++guard) {
      if (used[e]) throw invariant_error("SpliceError", "strand revisits edge " + std::to_string(d.edge(e).id));
      used[e] = true;
      ch.pieces.push_back(e);
      SlotRef arr = d.edge(e).end[1];
      if (!removed[arr.crossing]) {
        ch.head = arr;
        return;
      }
      auto it = rule.through.find(key(arr));
      if (it == rule.through.end())
        throw invariant_error("SpliceError", "strand ends inside removed crossing " +
                                                 std::to_string(d.crossing(arr.crossing).id));
      SlotRef dep = ref(it->second);
      const Crossing& c = d.crossing(dep.crossing);
      if (c.end[dep.slot] != 0)
        throw invariant_error("SpliceError", "strand would leave crossing " + std::to_string(c.id) +
                                                 " against its orientation");
      int next = c.edge[dep.slot];
      if (next == first) {
        ch.closed = true;
        return;
      }
      e = next;
    }
    throw invariant_error("SpliceError", "strand does not terminate");
  };

  for (std::size_t ei = 0; ei < d.num_edges(); ++ei) {
    const Edge& e = d.edge(static_cast<int>(ei));
    if (removed[e.end[0].crossing]) continue;
    Chain ch;
    ch.tail = e.end[0];
    trace(static_cast<int>(ei), ch);
    chains.push_back(std::move(ch));
  }
  // Closed strands made only of removed passages.
  std::set<std::pair<int, int>> departures;
  for (const auto& [arr, dep] : rule.through) departures.insert(dep);
  for (std::size_t ei = 0; ei < d.num_edges(); ++ei) {
    const Edge& e = d.edge(static_cast<int>(ei));
    if (used[ei] || !removed[e.end[0].crossing] || !departures.count(key(e.end[0]))) continue;
    // Only a strand whose arrival side is also spliced closes up.
    Chain ch;
    trace(static_cast<int>(ei), ch);
    if (!ch.closed) throw invariant_error("SpliceError", "open strand without kept ends");
    chains.push_back(std::move(ch));
  }

  auto chain_name = [&](const Chain& ch, int& origin) {
    int min_id = d.edge(ch.pieces[0]).id;
    origin = d.edge(ch.pieces[0]).origin;
    bool common = true;
    for (int p : ch.pieces) {
      min_id = std::min(min_id, d.edge(p).id);
      if (d.edge(p).origin != origin) common = false;
      if (d.edge(p).origin != 0) origin = origin == 0 ? d.edge(p).origin : std::min(origin, d.edge(p).origin);
    }
    if (!common && rule.name_by_origin)
      throw invariant_error("MappingError", "merged strand spans several original edges");
    return (rule.name_by_origin && origin != 0) ? origin : min_id;
  };

  std::vector<CrossingSpec> cs;
  std::map<std::pair<int, int>, int> slot_edge;  // (crossing id, slot) -> new edge id
  std::vector<EdgeSpec> es;
  std::vector<LoopSpec> ls = d.loop_specs();
  for (const auto& ch : chains) {
    int origin = 0;
    int id = chain_name(ch, origin);
    bool aug = d.edge(ch.pieces[0]).augmenting;
    if (ch.closed) {
      ls.push_back(LoopSpec{id, origin, aug});
      continue;
    }
    es.push_back(EdgeSpec{id, origin, aug, d.crossing(ch.tail.crossing).id, ch.tail.slot});
    slot_edge[key(ch.tail)] = id;
    slot_edge[key(ch.head)] = id;
  }
  for (std::size_t ci = 0; ci < d.num_crossings(); ++ci) {
    if (removed[ci]) continue;
    const Crossing& c = d.crossing(static_cast<int>(ci));
    CrossingSpec s;
    s.id = c.id;
    s.over = c.over;
    for (int k = 0; k < 4; ++k) s.edge_ids[k] = slot_edge.at({c.id, k});
    cs.push_back(s);
  }
  return Diagram::assemble(std::move(cs), std::move(es), std::move(ls));
}

}  // namespace altknot
