#include "altknot/overlay.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "altknot/error.hpp"

namespace altknot {

std::vector<int> Overlay::points_on(int origin) const {
  std::vector<int> out;
  for (std::size_t p = 0; p < points.size(); ++p)
    if (points[p].origin == origin) out.push_back(static_cast<int>(p));
  std::sort(out.begin(), out.end(), [&](int a, int b) { return points[a].pos < points[b].pos; });
  return out;
}

std::vector<int> Overlay::curves() const {
  std::set<int> s;
  for (const auto& p : points) s.insert(p.curve);
  return {s.begin(), s.end()};
}

std::pair<Overlay, int> subdivide_edge_with_crossing(const Diagram& d, Overlay ov, int edge_id, int curve,
                                                     Sign e_sign, double pos) {
  if (!d.edge_index(edge_id)) throw precondition_error("UnknownEdge", "no edge " + std::to_string(edge_id));
  if (!(pos > 0.0 && pos < 1.0)) throw precondition_error("BadPlacement", "position must lie strictly inside the edge");
  for (const auto& p : ov.points)
    if (p.origin == edge_id && std::abs(p.pos - pos) < 1e-12)
      throw precondition_error("BadPlacement", "edge " + std::to_string(edge_id) + " already has a point there");
  int id = static_cast<int>(ov.points.size());
  ov.points.push_back(OverlayPoint{edge_id, pos, e_sign, curve});
  return {std::move(ov), id};
}

std::vector<std::pair<Sign, Sign>> piece_labels(const Diagram& d, const Overlay& ov, int edge_id) {
  auto ei = d.edge_index(edge_id);
  if (!ei) throw precondition_error("UnknownEdge", "no edge " + std::to_string(edge_id));
  std::vector<int> pts = ov.points_on(edge_id);
  std::vector<std::pair<Sign, Sign>> out;
  Sign lo = d.end_label(*ei, 0);
  for (int p : pts) {
    out.emplace_back(lo, ov.points[p].d_sign);
    lo = ov.points[p].d_sign;
  }
  out.emplace_back(lo, d.end_label(*ei, 1));
  return out;
}

Sign forced_sign(const Diagram& d, const Overlay& ov, int edge_id, double pos) {
  auto ei = d.edge_index(edge_id);
  if (!ei) throw precondition_error("UnknownEdge", "no edge " + std::to_string(edge_id));
  Sign lo = d.end_label(*ei, 0);
  for (int p : ov.points_on(edge_id))
    if (ov.points[p].pos < pos) lo = ov.points[p].d_sign;
  return -lo;
}

namespace {

constexpr int side_slot(Side s) { return s == Side::Right ? 1 : 3; }

}  // namespace

Realization realize(const Diagram& d, const Overlay& ov) {
  Realization out;
  const int np = static_cast<int>(ov.points.size());
  const int base_crossing = d.max_crossing_id();
  int next_edge = d.max_edge_id() + 1;
  for (const auto& p : ov.points)
    if (!d.edge_index(p.origin)) throw invariant_error("OverlayError", "point on unknown edge " + std::to_string(p.origin));

  out.point_crossing.resize(np);
  for (int p = 0; p < np; ++p) out.point_crossing[p] = base_crossing + 1 + p;

  // Pieces of every base edge.
  std::vector<CrossingSpec> cs = d.crossing_specs();
  std::vector<EdgeSpec> es;
  std::vector<CrossingSpec> pc(np);
  std::vector<RealizedEdge> info_by_spec;
  std::map<int, int> first_piece, last_piece;  // base edge id -> piece edge id
  for (const auto& e : d.edges()) {
    std::vector<int> pts = ov.points_on(e.id);
    int prev_id = e.id;
    double lo = 0;
    EdgeSpec s{e.id, e.id, e.augmenting, d.crossing(e.end[0].crossing).id, e.end[0].slot};
    first_piece[e.id] = e.id;
    for (std::size_t j = 0; j <= pts.size(); ++j) {
      double hi = j < pts.size() ? ov.points[pts[j]].pos : 1.0;
      if (j > 0) {
        s = EdgeSpec{next_edge++, e.id, e.augmenting, out.point_crossing[pts[j - 1]], 2};
        pc[pts[j - 1]].edge_ids[2] = s.id;
      }
      if (j < pts.size()) pc[pts[j]].edge_ids[0] = s.id;
      es.push_back(s);
      info_by_spec.push_back(RealizedEdge{false, e.id, static_cast<int>(j), lo, hi, -1});
      prev_id = s.id;
      lo = hi;
    }
    last_piece[e.id] = prev_id;
  }
  for (auto& c : cs) {
    auto ci = *d.crossing_index(c.id);
    const Crossing& x = d.crossing(ci);
    for (int s = 0; s < 4; ++s) {
      int eid = d.edge(x.edge[s]).id;
      c.edge_ids[s] = x.end[s] == 0 ? first_piece[eid] : last_piece[eid];
    }
  }

  // Chords, oriented along their curves.
  std::map<Attach, int> at;
  for (std::size_t c = 0; c < ov.chords.size(); ++c) {
    for (const Attach& a : {ov.chords[c].a, ov.chords[c].b}) {
      if (a.point < 0 || a.point >= np) throw invariant_error("OverlayError", "chord attached to a missing point");
      if (!at.emplace(a, static_cast<int>(c)).second)
        throw invariant_error("OverlayError", "two chords share a side of point " + std::to_string(a.point));
    }
    if (ov.points[ov.chords[c].a.point].curve != ov.points[ov.chords[c].b.point].curve)
      throw invariant_error("OverlayError", "chord joins two different curves");
  }
  if (static_cast<int>(at.size()) != 2 * np) throw invariant_error("OverlayError", "a point side has no chord");
  out.chord_tail.assign(ov.chords.size(), Attach{});
  std::vector<bool> oriented(ov.chords.size(), false);
  for (std::size_t c0 = 0; c0 < ov.chords.size(); ++c0) {
    if (oriented[c0]) continue;
    int c = static_cast<int>(c0);
    Attach tail = ov.chords[c].a;
    while (!oriented[c]) {
      oriented[c] = true;
      out.chord_tail[c] = tail;
      Attach head = ov.chords[c].a == tail ? ov.chords[c].b : ov.chords[c].a;
      tail = Attach{head.point, other(head.side)};
      c = at.at(tail);
    }
  }
  std::vector<int> chord_id(ov.chords.size());
  for (std::size_t c = 0; c < ov.chords.size(); ++c) {
    chord_id[c] = next_edge++;
    const Attach t = out.chord_tail[c];
    const Attach h = ov.chords[c].a == t ? ov.chords[c].b : ov.chords[c].a;
    es.push_back(EdgeSpec{chord_id[c], 0, true, out.point_crossing[t.point], side_slot(t.side)});
    pc[t.point].edge_ids[side_slot(t.side)] = chord_id[c];
    pc[h.point].edge_ids[side_slot(h.side)] = chord_id[c];
    info_by_spec.push_back(RealizedEdge{true, 0, 0, 0, 0, static_cast<int>(c)});
  }
  for (int p = 0; p < np; ++p) {
    pc[p].id = out.point_crossing[p];
    bool d_over = ov.points[p].d_sign == Sign::Plus;
    pc[p].over = {d_over, !d_over, d_over, !d_over};
    cs.push_back(pc[p]);
  }

  std::vector<int> spec_ids;
  for (const auto& s : es) spec_ids.push_back(s.id);
  out.g = Diagram::assemble(std::move(cs), std::move(es), d.loop_specs());
  out.info.resize(out.g.num_edges());
  for (std::size_t k = 0; k < spec_ids.size(); ++k) out.info[*out.g.edge_index(spec_ids[k])] = info_by_spec[k];
  out.chord_edge.resize(ov.chords.size());
  for (std::size_t c = 0; c < ov.chords.size(); ++c) out.chord_edge[c] = *out.g.edge_index(chord_id[c]);

  FaceMap fm = faces(out.g);
  PieceCensus pcs = piece_census(out.g, fm);
  for (int p = 0; p < pcs.pieces; ++p)
    if (pcs.v[p] - pcs.e[p] + pcs.f[p] != 2)
      throw invariant_error("PlanarityError", "overlay chords cross: V-E+F = " +
                                                  std::to_string(pcs.v[p] - pcs.e[p] + pcs.f[p]));
  return out;
}

}  // namespace altknot
