#include "altknot/augmentation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "altknot/error.hpp"

namespace altknot {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

Side side_of(const Dart& dt) { return dt.dir == 0 ? Side::Right : Side::Left; }

void require_alternating(const Diagram& g, const char* stage) {
  if (!classify_edges(g).is_alternating)
    throw invariant_error("AlternationError", std::string("diagram is not alternating after ") + stage);
}

// Unordered pairs of edge ids bounding the bigons of D.
std::set<std::pair<int, int>> bigon_edge_pairs(const Diagram& d, const FaceMap& fm) {
  std::set<std::pair<int, int>> out;
  for (const auto& f : fm.faces) {
    if (!is_bigon(d, f)) continue;
    int a = d.edge(f.darts[0].edge).id, b = d.edge(f.darts[1].edge).id;
    out.emplace(std::min(a, b), std::max(a, b));
  }
  return out;
}

std::set<int> bigon_edges(const Diagram& d, const FaceMap& fm) {
  std::set<int> out;
  for (auto [a, b] : bigon_edge_pairs(d, fm)) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

int curve_of_chord(const Overlay& ov, int chord) { return ov.points[ov.chords[chord].a.point].curve; }

// Start and end attaches of a chord dart, in the direction of the face walk.
std::pair<Attach, Attach> dart_ends(const Overlay& ov, const Realization& r, int chord, const Dart& dt) {
  Attach t = r.chord_tail[chord];
  Attach h = ov.chords[chord].a == t ? ov.chords[chord].b : ov.chords[chord].a;
  return dt.dir == 0 ? std::make_pair(t, h) : std::make_pair(h, t);
}

}  // namespace

CutSystem build_cut_curves(const Diagram& d, int force_class) {
  FaceMap fm = faces(d);
  if (d.num_crossings() == 0 || fm.num_pieces != 1)
    throw precondition_error("PreconditionError", "cut curves need a connected diagram");
  EdgeClassification ec = classify_edges(d);
  if (!ec.is_non_alternating) throw precondition_error("PreconditionError", "diagram is already alternating");
  SigmaPartition sp = sigma_partition(d, fm);

  CutSystem cs;
  if (force_class != 0) {
    cs.thickened_plus = force_class > 0;
  } else if (sp.plus_class.size() != sp.minus_class.size()) {
    cs.thickened_plus = sp.plus_class.size() < sp.minus_class.size();
  } else {
    int lowest = d.crossing(0).id;
    for (const auto& c : d.crossings()) lowest = std::min(lowest, c.id);
    cs.thickened_plus = sp.plus_class.count(lowest) > 0;
  }
  cs.thickened = cs.thickened_plus ? sp.plus_class : sp.minus_class;
  std::vector<bool> in_s(d.num_crossings());
  for (std::size_t ci = 0; ci < d.num_crossings(); ++ci) in_s[ci] = cs.thickened.count(d.crossing(static_cast<int>(ci)).id) > 0;

  Overlay& ov = cs.overlay;
  std::vector<int> point_of(d.num_edges(), -1);
  std::vector<int> order(d.num_edges());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d.edge(a).id < d.edge(b).id; });
  for (int ei : order) {
    const Edge& e = d.edge(ei);
    if (in_s[e.end[0].crossing] == in_s[e.end[1].crossing]) continue;
    Sign lab = d.end_label(ei, 0);
    if (d.end_label(ei, 1) != lab)
      throw invariant_error("ConstructionError", "cut edge " + std::to_string(e.id) + " is alternating");
    point_of[ei] = static_cast<int>(ov.points.size());
    ov.points.push_back(OverlayPoint{e.id, 0.5, -lab, -1});
  }

  auto start_of = [&](const Dart& dt) { return d.edge(dt.edge).end[dt.dir].crossing; };
  auto end_of = [&](const Dart& dt) { return d.edge(dt.edge).end[dt.dir ^ 1].crossing; };
  for (const auto& f : fm.faces) {
    const std::size_t m = f.darts.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Dart& in = f.darts[i];
      if (in_s[start_of(in)] || !in_s[end_of(in)]) continue;
      std::size_t j = (i + 1) % m;
      while (!(in_s[start_of(f.darts[j])] && !in_s[end_of(f.darts[j])])) j = (j + 1) % m;
      const Dart& out = f.darts[j];
      ov.chords.push_back(Chord{Attach{point_of[in.edge], side_of(in)}, Attach{point_of[out.edge], side_of(out)}});
    }
  }

  std::map<Attach, int> at;
  for (std::size_t c = 0; c < ov.chords.size(); ++c) {
    for (const Attach& a : {ov.chords[c].a, ov.chords[c].b})
      if (!at.emplace(a, static_cast<int>(c)).second)
        throw invariant_error("ConstructionError", "two curve segments meet at one side of an edge");
  }
  if (at.size() != 2 * ov.points.size()) throw invariant_error("ConstructionError", "a cut edge is crossed by no curve");

  for (std::size_t p0 = 0; p0 < ov.points.size(); ++p0) {
    if (ov.points[p0].curve != -1) continue;
    CutCurve curve;
    curve.id = static_cast<int>(cs.curves.size());
    Attach cur{static_cast<int>(p0), Side::Left};
    do {
      OverlayPoint& pt = ov.points[cur.point];
      if (pt.curve != -1) throw invariant_error("ConstructionError", "curve revisits an edge");
      pt.curve = curve.id;
      curve.edges.push_back(pt.origin);
      curve.curve_signs.push_back(-pt.d_sign);
      const Chord& ch = ov.chords[at.at(Attach{cur.point, other(cur.side)})];
      cur = ch.a == Attach{cur.point, other(cur.side)} ? ch.b : ch.a;
    } while (cur.point != static_cast<int>(p0));
    const std::size_t len = curve.edges.size();
    if (len < 2 || len % 2 != 0)
      throw invariant_error("ConstructionError", "cut curve crosses an odd number of edges");
    for (std::size_t k = 0; k < len; ++k)
      if (curve.curve_signs[k] == curve.curve_signs[(k + 1) % len])
        throw invariant_error("ConstructionError", "crossed edge labels do not alternate along a cut curve");
    cs.curves.push_back(std::move(curve));
  }
  if (ov.points.size() != ec.non_alternating.size())
    throw invariant_error("ConstructionError", "cut curves miss a non-alternating edge");
  return cs;
}

Realization overlay_unlink(const Diagram& d, const CutSystem& cs) {
  Realization r = realize(d, cs.overlay);
  require_alternating(r.g, "overlaying the cut curves");
  if (faces(r.g).num_pieces != 1) throw invariant_error("ConstructionError", "overlay is disconnected");
  return r;
}

MergeArc find_merge_arc(const Diagram& d, const Overlay& ov, const Realization& r, bool ban_bigons) {
  std::vector<int> curves = ov.curves();
  if (curves.size() < 2) throw precondition_error("PreconditionError", "a merge needs two curves");
  const Diagram& g = r.g;
  FaceMap fm = faces(g);
  const int nf = static_cast<int>(fm.faces.size());
  auto d_pairs = bigon_edge_pairs(d, faces(d));
  std::set<int> crossed;
  for (const auto& p : ov.points) crossed.insert(p.origin);

  std::vector<bool> banned(nf, false);
  std::vector<std::set<int>> face_curves(nf);
  for (const auto& f : fm.faces) {
    for (const auto& dt : f.darts)
      if (r.info[dt.edge].chord) face_curves[f.id].insert(curve_of_chord(ov, r.info[dt.edge].chord_index));
    if (f.darts.size() == 2 && !r.info[f.darts[0].edge].chord && !r.info[f.darts[1].edge].chord) {
      int a = r.info[f.darts[0].edge].origin, b = r.info[f.darts[1].edge].origin;
      if (d_pairs.count({std::min(a, b), std::max(a, b)}) && !crossed.count(a) && !crossed.count(b))
        banned[f.id] = ban_bigons;
    }
  }
  auto allowed = [&](int ei) { return !r.info[ei].chord && !crossed.count(r.info[ei].origin); };
  std::vector<std::vector<std::pair<int, int>>> adj(nf);  // (face, edge index)
  for (std::size_t ei = 0; ei < g.num_edges(); ++ei) {
    if (!allowed(static_cast<int>(ei))) continue;
    int a = fm.dart_face[ei][0], b = fm.dart_face[ei][1];
    if (a == b || banned[a] || banned[b]) continue;
    adj[a].emplace_back(b, static_cast<int>(ei));
    adj[b].emplace_back(a, static_cast<int>(ei));
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());

  int best_phi = kInf, best_curve = -1;
  std::vector<int> best_dt;
  for (int ci : curves) {
    std::vector<int> dt(nf, kInf);
    std::deque<int> q;
    for (int f = 0; f < nf; ++f) {
      bool other_curve = false;
      for (int c : face_curves[f]) other_curve = other_curve || c != ci;
      if (other_curve && !banned[f]) {
        dt[f] = 0;
        q.push_back(f);
      }
    }
    while (!q.empty()) {
      int f = q.front();
      q.pop_front();
      for (auto [h, ei] : adj[f])
        if (dt[h] == kInf) {
          dt[h] = dt[f] + 1;
          q.push_back(h);
        }
    }
    int phi = kInf;
    for (int f = 0; f < nf; ++f)
      if (face_curves[f].count(ci)) phi = std::min(phi, dt[f]);
    if (phi < best_phi) {
      best_phi = phi;
      best_curve = ci;
      best_dt = std::move(dt);
    }
  }
  if (best_phi == kInf) throw invariant_error("NoPathError", "no admissible arc joins two curves");

  MergeArc arc;
  arc.source_curve = best_curve;
  arc.phi = best_phi;
  int f = -1;
  for (int h = 0; h < nf && f < 0; ++h)
    if (face_curves[h].count(best_curve) && best_dt[h] == best_phi) f = h;
  arc.faces.push_back(f);
  while (best_dt[f] > 0) {
    for (auto [h, ei] : adj[f]) {
      if (best_dt[h] == best_dt[f] - 1) {
        arc.edges.push_back(ei);
        arc.origins.push_back(r.info[ei].origin);
        arc.faces.push_back(h);
        f = h;
        break;
      }
    }
  }
  for (int c : face_curves[f])
    if (c != best_curve) {
      arc.target_curve = c;
      break;
    }

  std::vector<bool> seen(nf, false);
  std::deque<int> q{arc.faces.front()};
  seen[arc.faces.front()] = true;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    arc.region.push_back(x);
    for (const auto& dt : fm.faces[x].darts) {
      if (r.info[dt.edge].chord) continue;
      int y = fm.dart_face[dt.edge][dt.dir ^ 1];
      if (!seen[y]) {
        seen[y] = true;
        q.push_back(y);
      }
    }
  }
  std::sort(arc.region.begin(), arc.region.end());

  std::set<int> used;
  for (int face : arc.faces)
    if (banned[face]) throw invariant_error("InvariantError", "merge arc enters a bigon of D");
  for (std::size_t k = 0; k < arc.edges.size(); ++k) {
    if (!allowed(arc.edges[k])) throw invariant_error("InvariantError", "merge arc crosses a forbidden edge");
    if (!used.insert(arc.origins[k]).second) throw invariant_error("InvariantError", "merge arc crosses an edge twice");
  }
  if (!std::binary_search(arc.region.begin(), arc.region.end(), arc.faces.back()))
    throw invariant_error("InvariantError", "merge arc leaves its region");
  return arc;
}

Overlay type2_propagate(const Diagram& d, const Overlay& ov, const Realization& r, const MergeArc& arc) {
  if (arc.phi == 0) return ov;
  FaceMap fm = faces(r.g);
  const Face& f0 = fm.faces[arc.faces.front()];
  std::string last_error = "no chord of the source curve on the first face";
  for (const Dart& base : f0.darts) {
    const RealizedEdge& bi = r.info[base.edge];
    if (!bi.chord || curve_of_chord(ov, bi.chord_index) != arc.source_curve) continue;
    Overlay out = ov;
    auto [P, Q] = dart_ends(ov, r, bi.chord_index, base);
    std::vector<Chord> added;
    for (std::size_t m = 0; m < arc.edges.size(); ++m) {
      const int ei = arc.edges[m];
      const RealizedEdge& info = r.info[ei];
      const Dart dt{ei, static_cast<std::uint8_t>(fm.dart_face[ei][0] == arc.faces[m] ? 0 : 1)};
      if (fm.dart_face[ei][dt.dir] != arc.faces[m]) throw invariant_error("InvariantError", "arc edge off its face");
      const Side near = side_of(dt);
      const double a = info.lo + (info.hi - info.lo) / 3, b = info.lo + 2 * (info.hi - info.lo) / 3;
      int pa, pb;
      Sign sa = forced_sign(d, out, info.origin, a);
      std::tie(out, pa) = subdivide_edge_with_crossing(d, std::move(out), info.origin, arc.source_curve, sa, a);
      Sign sb = forced_sign(d, out, info.origin, b);
      std::tie(out, pb) = subdivide_edge_with_crossing(d, std::move(out), info.origin, arc.source_curve, sb, b);
      const int first = dt.dir == 0 ? pa : pb, second = dt.dir == 0 ? pb : pa;
      added.push_back(Chord{Q, Attach{first, near}});
      added.push_back(Chord{P, Attach{second, near}});
      P = Attach{second, other(near)};
      Q = Attach{first, other(near)};
    }
    added.push_back(Chord{P, Q});
    out.chords.erase(out.chords.begin() + bi.chord_index);
    out.chords.insert(out.chords.end(), added.begin(), added.end());
    try {
      Realization rr = realize(d, out);
      require_alternating(rr.g, "a finger move");
      return out;
    } catch (const Error& e) {
      if (e.error_class() != ErrorClass::Invariant) throw;
      last_error = e.what();
    }
  }
  throw invariant_error("AlternationError", "no finger anchor works: " + last_error);
}

JoinResult type1_join(const Diagram& d, const Overlay& ov, const Realization& r, int ci, int cj) {
  FaceMap fm = faces(r.g);
  const std::size_t curves_before = ov.curves().size();
  JoinResult res;
  for (const auto& f : fm.faces) {
    std::vector<const Dart*> da, db;
    for (const auto& dt : f.darts) {
      if (!r.info[dt.edge].chord) continue;
      int c = curve_of_chord(ov, r.info[dt.edge].chord_index);
      if (c == ci) da.push_back(&dt);
      if (c == cj) db.push_back(&dt);
    }
    for (const Dart* x : da)
      for (const Dart* y : db)
        for (int crosswise = 1; crosswise >= 0; --crosswise) {
          const int ka = r.info[x->edge].chord_index, kb = r.info[y->edge].chord_index;
          auto [ua, va] = dart_ends(ov, r, ka, *x);
          auto [ub, vb] = dart_ends(ov, r, kb, *y);
          Overlay out = ov;
          out.chords.erase(out.chords.begin() + std::max(ka, kb));
          out.chords.erase(out.chords.begin() + std::min(ka, kb));
          if (crosswise) {
            out.chords.push_back(Chord{va, ub});
            out.chords.push_back(Chord{vb, ua});
          } else {
            out.chords.push_back(Chord{ua, ub});
            out.chords.push_back(Chord{va, vb});
          }
          for (auto& p : out.points)
            if (p.curve == cj) p.curve = ci;
          try {
            Realization rr = realize(d, out);
            require_alternating(rr.g, "a band join");
            if (rr.g.augmenting_components().size() + 1 != curves_before)
              throw invariant_error("JoinError", "band did not merge two curves");
            res.overlay = std::move(out);
            res.face = f.id;
            return res;
          } catch (const Error& e) {
            if (e.error_class() != ErrorClass::Invariant) throw;
            ++res.skipped;
          }
        }
  }
  throw invariant_error("JoinError", "no band joins curves " + std::to_string(ci) + " and " + std::to_string(cj));
}

HyperbolicityCertificate certify_hyperbolic(const Diagram& g) {
  HyperbolicityCertificate hc;
  DiagramFlags fl = diagram_flags(g);
  hc.connected = fl.connected;
  hc.reduced = fl.reduced;
  hc.prime = fl.prime;
  hc.alternating = classify_edges(g).is_alternating;
  hc.not_2q_torus = !detect_standard_2q(g).has_value();
  bool ok = hc.connected && hc.reduced && hc.prime && hc.alternating && hc.not_2q_torus;
  hc.verdict = ok ? Verdict::Hyperbolic : Verdict::NotCertified;
  return hc;
}

AugmentationResult augment(const Diagram& d) {
  ValidationReport vr = validate_diagram(d);
  if (!vr.valid) throw precondition_error("PreconditionError", "failed: valid (" + vr.failures.front() + ")");
  DiagramFlags fl = diagram_flags(d);
  auto need = [](bool ok, const char* flag) {
    if (!ok) throw precondition_error("PreconditionError", std::string("failed: ") + flag);
  };
  need(fl.connected && d.loops().empty(), "connected");
  need(fl.reduced, "reduced");
  need(fl.r2_reduced, "r2_reduced");
  need(fl.prime, "prime");
  need(classify_edges(d).is_non_alternating, "non_alternating");

  AugmentationResult res;
  res.d = d;
  CutSystem cs = build_cut_curves(d);
  res.num_cut_curves = static_cast<int>(cs.curves.size());
  Overlay ov = cs.overlay;
  Realization r = overlay_unlink(d, cs);
  while (ov.curves().size() > 1) {
    MergeRecord rec;
    rec.arc = find_merge_arc(d, ov, r);
    ov = type2_propagate(d, ov, r, rec.arc);
    r = realize(d, ov);
    require_alternating(r.g, "a finger move");
    JoinResult jr = type1_join(d, ov, r, rec.arc.source_curve, rec.arc.target_curve);
    rec.join_face = jr.face;
    rec.skipped = jr.skipped;
    ov = std::move(jr.overlay);
    r = realize(d, ov);
    require_alternating(r.g, "a band join");
    res.merges.push_back(std::move(rec));
  }
  if (static_cast<int>(res.merges.size()) != res.num_cut_curves - 1)
    throw invariant_error("InvariantError", "merge count differs from the number of cut curves minus one");

  const Diagram& g = r.g;
  res.g = g;
  res.overlay = ov;
  ValidationReport gv = validate_diagram(g);
  if (!gv.valid) throw invariant_error("InvariantError", "augmented diagram is invalid: " + gv.failures.front());
  require_alternating(g, "the construction");
  auto aug = g.augmenting_components();
  if (aug.size() != 1) throw invariant_error("InvariantError", "expected exactly one augmenting component");
  res.augmenting_component = aug.front();
  for (const auto& c : g.crossings()) {
    int aug_slots = 0;
    for (int s = 0; s < 4; ++s) aug_slots += g.edge(c.edge[s]).augmenting;
    if (aug_slots == 4) throw invariant_error("InvariantError", "augmenting curve crosses itself");
  }
  std::map<int, int> per_origin;
  for (const auto& p : ov.points) ++per_origin[p.origin];
  FaceMap dfm = faces(d);
  std::set<int> twist_edges = bigon_edges(d, dfm);
  for (auto [o, n] : per_origin) {
    if (n > 2) throw invariant_error("InvariantError", "edge " + std::to_string(o) + " crossed more than twice");
    if (twist_edges.count(o)) throw invariant_error("InvariantError", "curve crosses a twist region at edge " + std::to_string(o));
  }
  res.i_A_D = static_cast<int>(ov.points.size());
  res.t_D = twist_partition(d, dfm).t;
  res.t_G = twist_partition(g).t;
  const int outside = static_cast<int>(d.num_edges() - twist_edges.size());
  if (res.i_A_D > 2 * outside || res.i_A_D > 4 * res.t_D)
    throw invariant_error("InvariantError", "curve meets D in " + std::to_string(res.i_A_D) + " points");
  res.bound_check = res.t_D <= res.t_G && res.t_G <= 5 * res.t_D;
  if (!res.bound_check)
    throw invariant_error("TwistBoundError", "t(G) = " + std::to_string(res.t_G) + " outside [t(D), 5 t(D)] with t(D) = " +
                                                  std::to_string(res.t_D));
  res.certificate = certify_hyperbolic(g);
  if (res.certificate.verdict != Verdict::Hyperbolic)
    throw invariant_error("CertificateError", "augmented diagram is not certified hyperbolic");
  res.refinement = refinement_check(g, d);
  if (!res.refinement.refines)
    throw invariant_error("RefinementError", "twist regions of G do not refine those of D");
  return res;
}

}  // namespace altknot
