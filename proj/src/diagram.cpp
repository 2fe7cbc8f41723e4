#include "altknot/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "altknot/error.hpp"

namespace altknot {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Diagram Diagram::assemble(std::vector<CrossingSpec> crossing_specs, std::vector<EdgeSpec> edge_specs,
                          std::vector<LoopSpec> loop_specs) {
  Diagram d;
  std::set<int> ids;
  for (const auto& c : crossing_specs) {
    if (c.id <= 0 || !d.crossing_by_id_.emplace(c.id, static_cast<int>(d.crossings_.size())).second)
      throw input_error("IncidenceError", "duplicate or non-positive crossing id " + std::to_string(c.id));
    Crossing x;
    x.id = c.id;
    x.over = c.over;
    x.edge.fill(-1);
    d.crossings_.push_back(x);
  }
  for (const auto& e : edge_specs) {
    if (e.id <= 0 || !ids.insert(e.id).second)
      throw input_error("IncidenceError", "duplicate or non-positive edge id " + std::to_string(e.id));
    d.edge_by_id_.emplace(e.id, static_cast<int>(d.edges_.size()));
    Edge edge;
    edge.id = e.id;
    edge.origin = e.origin;
    edge.augmenting = e.augmenting;
    edge.end[0] = edge.end[1] = SlotRef{};
    d.edges_.push_back(edge);
  }
  for (const auto& l : loop_specs) {
    if (l.id <= 0 || !ids.insert(l.id).second)
      throw input_error("IncidenceError", "duplicate or non-positive loop id " + std::to_string(l.id));
    d.loops_.push_back(Loop{l.id, l.origin, -1, l.augmenting});
  }

  // Occurrences of each edge id among the slots.
  std::vector<std::vector<SlotRef>> occ(d.edges_.size());
  for (std::size_t ci = 0; ci < crossing_specs.size(); ++ci) {
    for (int s = 0; s < 4; ++s) {
      int eid = crossing_specs[ci].edge_ids[s];
      auto it = d.edge_by_id_.find(eid);
      if (it == d.edge_by_id_.end())
        throw input_error("IncidenceError", "edge " + std::to_string(eid) + " used by a crossing but not declared");
      occ[it->second].push_back(SlotRef{static_cast<int>(ci), s});
      d.crossings_[ci].edge[s] = it->second;
    }
  }
  for (std::size_t ei = 0; ei < d.edges_.size(); ++ei) {
    if (occ[ei].size() != 2)
      throw input_error("IncidenceError", "edge " + std::to_string(d.edges_[ei].id) + " appears " +
                                              std::to_string(occ[ei].size()) + " times (expected 2)");
    const auto& spec = edge_specs[ei];
    auto tc = d.crossing_by_id_.find(spec.tail_crossing);
    if (tc == d.crossing_by_id_.end())
      throw input_error("IncidenceError", "edge " + std::to_string(spec.id) + " has unknown tail crossing");
    SlotRef tail{tc->second, spec.tail_slot & 3};
    int which;
    if (occ[ei][0] == tail) which = 0;
    else if (occ[ei][1] == tail) which = 1;
    else
      throw input_error("IncidenceError", "edge " + std::to_string(spec.id) + " tail slot does not hold the edge");
    d.edges_[ei].end[0] = occ[ei][which];
    d.edges_[ei].end[1] = occ[ei][1 - which];
    d.crossings_[occ[ei][which].crossing].end[occ[ei][which].slot] = 0;
    d.crossings_[occ[ei][1 - which].crossing].end[occ[ei][1 - which].slot] = 1;
  }

  // A strand enters on one side of a crossing and leaves on the other.
  for (const auto& c : d.crossings_) {
    for (int s = 0; s < 2; ++s) {
      if (c.end[s] == c.end[s + 2])
        throw input_error("OrientationError",
                          "strand through slots " + std::to_string(s) + "/" + std::to_string(s + 2) +
                              " of crossing " + std::to_string(c.id) + " is not consistently oriented");
    }
  }

  UnionFind uf(d.edges_.size());
  for (const auto& c : d.crossings_) {
    uf.unite(c.edge[0], c.edge[2]);
    uf.unite(c.edge[1], c.edge[3]);
  }
  // Order components by the smallest edge or loop id they contain.
  std::map<int, int> min_id;  // root -> min id
  for (std::size_t ei = 0; ei < d.edges_.size(); ++ei) {
    int r = uf.find(static_cast<int>(ei));
    auto [it, fresh] = min_id.emplace(r, d.edges_[ei].id);
    if (!fresh) it->second = std::min(it->second, d.edges_[ei].id);
  }
  std::vector<std::pair<int, int>> order;  // (min id, key) ; key >= 0 root, key < 0 loop
  for (auto [r, m] : min_id) order.emplace_back(m, r);
  for (std::size_t li = 0; li < d.loops_.size(); ++li) order.emplace_back(d.loops_[li].id, -1 - static_cast<int>(li));
  std::sort(order.begin(), order.end());
  std::map<int, int> comp_of_root;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k].second >= 0) comp_of_root[order[k].second] = static_cast<int>(k);
    else d.loops_[-1 - order[k].second].component = static_cast<int>(k);
  }
  d.num_components_ = static_cast<int>(order.size());
  d.component_augmenting_.assign(order.size(), false);
  std::vector<int> flag_state(order.size(), -1);
  auto mark = [&](int comp, bool aug, int id) {
    if (flag_state[comp] == -1) flag_state[comp] = aug ? 1 : 0;
    else if (flag_state[comp] != (aug ? 1 : 0))
      throw input_error("ComponentError", "component containing " + std::to_string(id) + " mixes augmenting flags");
    d.component_augmenting_[comp] = aug;
  };
  for (std::size_t ei = 0; ei < d.edges_.size(); ++ei) {
    d.edges_[ei].component = comp_of_root.at(uf.find(static_cast<int>(ei)));
    mark(d.edges_[ei].component, d.edges_[ei].augmenting, d.edges_[ei].id);
  }
  for (auto& l : d.loops_) mark(l.component, l.augmenting, l.id);
  return d;
}

std::optional<int> Diagram::crossing_index(int id) const {
  auto it = crossing_by_id_.find(id);
  if (it == crossing_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Diagram::edge_index(int id) const {
  auto it = edge_by_id_.find(id);
  if (it == edge_by_id_.end()) return std::nullopt;
  return it->second;
}

Sign Diagram::end_label(int edge_index, int which) const {
  const SlotRef& r = edges_.at(edge_index).end[which];
  return crossings_[r.crossing].label(r.slot);
}

std::vector<int> Diagram::augmenting_components() const {
  std::vector<int> out;
  for (int c = 0; c < num_components_; ++c)
    if (component_augmenting_[c]) out.push_back(c);
  return out;
}

bool Diagram::component_is_augmenting(int component) const {
  return component >= 0 && component < num_components_ && component_augmenting_[component];
}

int Diagram::max_crossing_id() const noexcept {
  int m = 0;
  for (const auto& c : crossings_) m = std::max(m, c.id);
  return m;
}

int Diagram::max_edge_id() const noexcept {
  int m = 0;
  for (const auto& e : edges_) m = std::max(m, e.id);
  for (const auto& l : loops_) m = std::max(m, l.id);
  return m;
}

std::vector<CrossingSpec> Diagram::crossing_specs() const {
  std::vector<CrossingSpec> out;
  out.reserve(crossings_.size());
  for (const auto& c : crossings_) {
    CrossingSpec s;
    s.id = c.id;
    s.over = c.over;
    for (int k = 0; k < 4; ++k) s.edge_ids[k] = edges_[c.edge[k]].id;
    out.push_back(s);
  }
  return out;
}

std::vector<EdgeSpec> Diagram::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_)
    out.push_back(EdgeSpec{e.id, e.origin, e.augmenting, crossings_[e.end[0].crossing].id, e.end[0].slot});
  return out;
}

std::vector<LoopSpec> Diagram::loop_specs() const {
  std::vector<LoopSpec> out;
  for (const auto& l : loops_) out.push_back(LoopSpec{l.id, l.origin, l.augmenting});
  return out;
}

std::vector<int> Face::boundary_edges(const Diagram& d) const {
  std::vector<int> out;
  if (loop != 0) return {loop};
  for (const auto& dt : darts) out.push_back(d.edge(dt.edge).id);
  return out;
}

FaceMap faces(const Diagram& d) {
  FaceMap fm;
  const auto& cs = d.crossings();
  const auto& es = d.edges();
  fm.corner_face.assign(cs.size(), {-1, -1, -1, -1});
  fm.dart_face.assign(es.size(), {-1, -1});

  UnionFind uf(cs.size());
  for (const auto& e : es) uf.unite(e.end[0].crossing, e.end[1].crossing);
  std::map<int, int> piece_of_root;
  fm.crossing_piece.assign(cs.size(), -1);
  for (std::size_t ci = 0; ci < cs.size(); ++ci) {
    auto [it, fresh] = piece_of_root.emplace(uf.find(static_cast<int>(ci)), static_cast<int>(piece_of_root.size()));
    fm.crossing_piece[ci] = it->second;
  }
  fm.num_pieces = static_cast<int>(piece_of_root.size());

  for (std::size_t ei = 0; ei < es.size(); ++ei) {
    for (std::uint8_t dir = 0; dir < 2; ++dir) {
      if (fm.dart_face[ei][dir] != -1) continue;
      Face f;
      f.id = static_cast<int>(fm.faces.size());
      f.piece = fm.crossing_piece[es[ei].end[0].crossing];
      Dart cur{static_cast<int>(ei), dir};
      do {
        fm.dart_face[cur.edge][cur.dir] = f.id;
        f.darts.push_back(cur);
        const SlotRef arr = es[cur.edge].end[cur.dir ^ 1];
        const Crossing& c = cs[arr.crossing];
        const int next_slot = (arr.slot + 1) & 3;
        Dart next{c.edge[next_slot], c.end[next_slot]};
        fm.corner_face[arr.crossing][arr.slot] = f.id;
        f.corners.push_back(Corner{arr.crossing, arr.slot, es[cur.edge].id, es[next.edge].id});
        cur = next;
      } while (!(cur.edge == static_cast<int>(ei) && cur.dir == dir));
      fm.faces.push_back(std::move(f));
    }
  }
  for (const auto& l : d.loops()) {
    for (int side = 0; side < 2; ++side) {
      Face f;
      f.id = static_cast<int>(fm.faces.size());
      f.loop = l.id;
      f.piece = fm.num_pieces;
      fm.faces.push_back(std::move(f));
    }
    ++fm.num_pieces;
  }
  return fm;
}

PieceCensus piece_census(const Diagram& d, const FaceMap& fm) {
  PieceCensus pc;
  pc.pieces = fm.num_pieces;
  pc.v.assign(pc.pieces, 0);
  pc.e.assign(pc.pieces, 0);
  pc.f.assign(pc.pieces, 0);
  for (std::size_t ci = 0; ci < d.num_crossings(); ++ci) ++pc.v[fm.crossing_piece[ci]];
  for (const auto& e : d.edges()) ++pc.e[fm.crossing_piece[e.end[0].crossing]];
  for (const auto& f : fm.faces) ++pc.f[f.piece];
  // A crossing-free loop is one circle: treat it as one vertex and one edge.
  for (int p = 0; p < pc.pieces; ++p) {
    if (pc.v[p] == 0) {
      pc.v[p] = 1;
      pc.e[p] = 1;
    }
  }
  return pc;
}

ValidationReport validate_diagram(const Diagram& d) {
  ValidationReport r;
  r.v = static_cast<int>(d.num_crossings());
  r.e = static_cast<int>(d.num_edges() + d.loops().size());
  r.components = d.num_components();

  for (const auto& c : d.crossings()) {
    for (int s = 0; s < 4; ++s) {
      const Edge& e = d.edge(c.edge[s]);
      const SlotRef& back = e.end[c.end[s]];
      if (d.crossing(back.crossing).id != c.id || back.slot != s)
        r.failures.push_back("incidence: slot " + std::to_string(s) + " of crossing " + std::to_string(c.id) +
                             " is not matched by edge " + std::to_string(e.id));
    }
    bool ok = c.over[0] == c.over[2] && c.over[1] == c.over[3] && c.over[0] != c.over[1];
    if (!ok) {
      std::string word;
      for (int s = 0; s < 4; ++s) word += sign_char(c.label(s));
      r.failures.push_back("labels: crossing " + std::to_string(c.id) + " reads (" + word +
                           "), expected an alternating cyclic word");
    }
  }

  FaceMap fm = faces(d);
  r.f = static_cast<int>(fm.faces.size());
  std::size_t corners = 0;
  for (const auto& f : fm.faces) corners += f.corners.size();
  if (corners != 4 * d.num_crossings()) r.failures.push_back("faces: corner count differs from 4V");
  PieceCensus pc = piece_census(d, fm);
  for (int p = 0; p < pc.pieces; ++p) {
    int chi = pc.v[p] - pc.e[p] + pc.f[p];
    if (chi != 2)
      r.failures.push_back("sphericity: piece " + std::to_string(p) + " has V-E+F = " + std::to_string(chi));
  }
  r.valid = r.failures.empty();
  return r;
}

std::map<int, std::pair<Sign, Sign>> end_labels(const Diagram& d) {
  std::map<int, std::pair<Sign, Sign>> out;
  for (std::size_t ei = 0; ei < d.num_edges(); ++ei) {
    int i = static_cast<int>(ei);
    out.emplace(d.edge(i).id, std::make_pair(d.end_label(i, 0), d.end_label(i, 1)));
  }
  return out;
}

Diagram flip_crossing(const Diagram& d, int crossing_id) {
  if (!d.crossing_index(crossing_id))
    throw precondition_error("UnknownCrossing", "no crossing with id " + std::to_string(crossing_id));
  auto cs = d.crossing_specs();
  for (auto& c : cs)
    if (c.id == crossing_id)
      for (auto& o : c.over) o = !o;
  return Diagram::assemble(std::move(cs), d.edge_specs(), d.loop_specs());
}

namespace {

// Tries to extend a map from piece of `a` rooted at (ca, slot 0) onto `b` rooted at (cb, rb).
bool rooted_match(const Diagram& a, const Diagram& b, int ca, int cb, int rb, std::vector<int>& map_a_to_b,
                  std::vector<int>& offset) {
  std::vector<int> seen_b(b.num_crossings(), -1);
  std::vector<int> stack{ca};
  map_a_to_b[ca] = cb;
  offset[ca] = rb;
  seen_b[cb] = ca;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    int y = map_a_to_b[x];
    const Crossing& cx = a.crossing(x);
    const Crossing& cy = b.crossing(y);
    for (int s = 0; s < 4; ++s) {
      int t = (s + offset[x]) & 3;
      if (cx.over[s] != cy.over[t]) return false;
      const Edge& ea = a.edge(cx.edge[s]);
      const Edge& eb = b.edge(cy.edge[t]);
      if (ea.augmenting != eb.augmenting) return false;
      const SlotRef fa = ea.end[cx.end[s] ^ 1];
      const SlotRef fb = eb.end[cy.end[t] ^ 1];
      int off = (fb.slot - fa.slot) & 3;
      if (map_a_to_b[fa.crossing] == -1) {
        if (seen_b[fb.crossing] != -1) return false;
        map_a_to_b[fa.crossing] = fb.crossing;
        offset[fa.crossing] = off;
        seen_b[fb.crossing] = fa.crossing;
        stack.push_back(fa.crossing);
      } else if (map_a_to_b[fa.crossing] != fb.crossing || offset[fa.crossing] != off) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool same_map(const Diagram& a, const Diagram& b) {
  if (a.num_crossings() != b.num_crossings() || a.num_edges() != b.num_edges() ||
      a.loops().size() != b.loops().size())
    return false;
  std::size_t aug_loops_a = 0, aug_loops_b = 0;
  for (const auto& l : a.loops()) aug_loops_a += l.augmenting;
  for (const auto& l : b.loops()) aug_loops_b += l.augmenting;
  if (aug_loops_a != aug_loops_b) return false;

  FaceMap fa = faces(a), fb = faces(b);
  std::vector<bool> used_piece(fb.num_pieces, false);
  std::vector<bool> done(a.num_crossings(), false);
  for (std::size_t ca = 0; ca < a.num_crossings(); ++ca) {
    if (done[ca]) continue;
    bool found = false;
    for (std::size_t cb = 0; cb < b.num_crossings() && !found; ++cb) {
      if (used_piece[fb.crossing_piece[cb]]) continue;
      for (int rb = 0; rb < 4 && !found; ++rb) {
        std::vector<int> m(a.num_crossings(), -1), off(a.num_crossings(), 0);
        if (rooted_match(a, b, static_cast<int>(ca), static_cast<int>(cb), rb, m, off)) {
          // The piece sizes must agree for the match to be onto.
          int na = 0, nb = 0;
          for (std::size_t k = 0; k < a.num_crossings(); ++k)
            na += fa.crossing_piece[k] == fa.crossing_piece[ca];
          for (std::size_t k = 0; k < b.num_crossings(); ++k)
            nb += fb.crossing_piece[k] == fb.crossing_piece[cb];
          if (na != nb) continue;
          found = true;
          used_piece[fb.crossing_piece[cb]] = true;
          for (std::size_t k = 0; k < a.num_crossings(); ++k)
            if (m[k] != -1) done[k] = true;
        }
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace altknot
