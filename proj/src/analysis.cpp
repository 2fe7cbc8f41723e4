#include "altknot/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

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

bool is_connected_map(const FaceMap& fm) { return fm.num_pieces == 1; }

}  // namespace

EdgeClassification classify_edges(const Diagram& d) {
  EdgeClassification c;
  for (std::size_t ei = 0; ei < d.num_edges(); ++ei) {
    int i = static_cast<int>(ei);
    if (d.end_label(i, 0) != d.end_label(i, 1)) c.alternating.insert(d.edge(i).id);
    else c.non_alternating.insert(d.edge(i).id);
  }
  c.is_non_alternating = !c.non_alternating.empty();
  c.is_alternating = c.non_alternating.empty() && (d.num_crossings() > 0 || !d.loops().empty());
  return c;
}

SigmaPartition sigma_partition(const Diagram& d) { return sigma_partition(d, faces(d)); }

SigmaPartition sigma_partition(const Diagram& d, const FaceMap& fm) {
  if (d.num_crossings() == 0 || !is_connected_map(fm))
    throw precondition_error("NotConnected", "checkerboard classes need a connected diagram with a crossing");
  SigmaPartition sp;
  const std::size_t nf = fm.faces.size();
  std::vector<int> colour(nf, -1);

  int seed_edge = 0;
  for (std::size_t ei = 1; ei < d.num_edges(); ++ei)
    if (d.edge(static_cast<int>(ei)).id < d.edge(seed_edge).id) seed_edge = static_cast<int>(ei);
  std::vector<std::vector<int>> adj(nf);
  for (std::size_t ei = 0; ei < d.num_edges(); ++ei) {
    int a = fm.dart_face[ei][0], b = fm.dart_face[ei][1];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::deque<int> q{fm.left_of(seed_edge)};
  colour[q.front()] = 0;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int g : adj[f]) {
      if (colour[g] == -1) {
        colour[g] = 1 - colour[f];
        q.push_back(g);
      } else if (colour[g] == colour[f]) {
        throw invariant_error("ShadingError", "face adjacency graph is not bipartite");
      }
    }
  }
  sp.shaded.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) sp.shaded[f] = colour[f] == 1;

  std::vector<int> sigma(d.num_crossings());
  for (std::size_t ci = 0; ci < d.num_crossings(); ++ci) {
    const Crossing& c = d.crossing(static_cast<int>(ci));
    int k = c.over[0] ? 0 : 1;
    // A quarter turn counterclockwise moves the over strand across corners k and k+2.
    sigma[ci] = sp.shaded[fm.corner_face[ci][k]] ? 1 : -1;
    (sigma[ci] > 0 ? sp.plus_class : sp.minus_class).insert(c.id);
  }
  for (const auto& e : d.edges())
    if (sigma[e.end[0].crossing] != sigma[e.end[1].crossing]) sp.cross_class_edges.insert(e.id);

  EdgeClassification ec = classify_edges(d);
  if (ec.non_alternating != sp.cross_class_edges)
    throw invariant_error("SigmaMismatch", "cross-class edges differ from non-alternating edges");
  return sp;
}

const char* topology_name(Topology t) noexcept {
  switch (t) {
    case Topology::Disk: return "disk";
    case Topology::Annulus: return "annulus";
    case Topology::Sphere: return "sphere";
  }
  return "?";
}

int TwistPartition::region_of(int crossing_id) const {
  for (std::size_t r = 0; r < regions.size(); ++r)
    if (std::binary_search(regions[r].crossings.begin(), regions[r].crossings.end(), crossing_id))
      return static_cast<int>(r);
  return -1;
}

bool is_bigon(const Diagram&, const Face& f) {
  if (f.loop != 0 || f.darts.size() != 2) return false;
  if (f.darts[0].edge == f.darts[1].edge) return false;
  return f.corners[0].crossing != f.corners[1].crossing;
}

namespace {

// Bigon graph of a region and its classification, without the (2,n) check.
TwistRegion classify_region(const Diagram& d, const FaceMap& fm, TwistRegion r) {
  r.retract_links.clear();
  if (r.bigons.empty()) {
    r.topology = Topology::Disk;
    return r;
  }
  auto in_region = [&](int face) { return std::binary_search(r.bigons.begin(), r.bigons.end(), face); };
  int max_corners = 0;
  for (int cid : r.crossings) {
    int ci = *d.crossing_index(cid);
    std::vector<int> slots;
    for (int s = 0; s < 4; ++s)
      if (in_region(fm.corner_face[ci][s])) slots.push_back(s);
    max_corners = std::max<int>(max_corners, static_cast<int>(slots.size()));
    if (slots.size() == 2 && ((slots[1] - slots[0]) & 3) == 2) {
      int a = fm.corner_face[ci][slots[0]], b = fm.corner_face[ci][slots[1]];
      if (a != b) r.retract_links.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  for (std::size_t ei = 0; ei < d.num_edges(); ++ei) {
    int a = fm.dart_face[ei][0], b = fm.dart_face[ei][1];
    if (a != b && in_region(a) && in_region(b)) r.retract_links.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(r.retract_links.begin(), r.retract_links.end());
  if (max_corners >= 3) {
    r.topology = Topology::Sphere;
    return r;
  }
  const std::size_t k = r.bigons.size();
  bool cycle = k >= 2 && r.retract_links.size() == k;
  if (cycle) {
    std::map<int, int> degree;
    std::map<int, int> idx;
    for (std::size_t i = 0; i < k; ++i) idx[r.bigons[i]] = static_cast<int>(i);
    UnionFind uf(k);
    for (auto [a, b] : r.retract_links) {
      ++degree[a];
      ++degree[b];
      uf.unite(idx[a], idx[b]);
    }
    for (int f : r.bigons)
      if (degree[f] != 2 || uf.find(idx[f]) != uf.find(0)) cycle = false;
  }
  r.topology = cycle ? Topology::Annulus : Topology::Disk;
  return r;
}

TwistPartition partition_raw(const Diagram& d, const FaceMap& fm) {
  TwistPartition tp;
  for (const auto& f : fm.faces)
    if (is_bigon(d, f)) tp.bigon_faces.push_back(f.id);
  UnionFind uf(d.num_crossings());
  std::vector<bool> in_bigon(d.num_crossings(), false);
  for (int fid : tp.bigon_faces) {
    const Face& f = fm.faces[fid];
    uf.unite(f.corners[0].crossing, f.corners[1].crossing);
    in_bigon[f.corners[0].crossing] = in_bigon[f.corners[1].crossing] = true;
  }
  std::map<int, TwistRegion> by_root;
  for (std::size_t ci = 0; ci < d.num_crossings(); ++ci)
    by_root[uf.find(static_cast<int>(ci))].crossings.push_back(d.crossing(static_cast<int>(ci)).id);
  for (int fid : tp.bigon_faces) by_root[uf.find(fm.faces[fid].corners[0].crossing)].bigons.push_back(fid);
  for (auto& [root, reg] : by_root) {
    std::sort(reg.crossings.begin(), reg.crossings.end());
    std::sort(reg.bigons.begin(), reg.bigons.end());
    tp.regions.push_back(std::move(reg));
  }
  std::sort(tp.regions.begin(), tp.regions.end(),
            [](const TwistRegion& a, const TwistRegion& b) { return a.crossings.front() < b.crossings.front(); });
  for (auto& reg : tp.regions) reg = classify_region(d, fm, std::move(reg));
  tp.t = static_cast<int>(tp.regions.size());
  return tp;
}

std::optional<int> detect_2q(const Diagram& d, const FaceMap& fm) {
  const int q = static_cast<int>(d.num_crossings());
  if (q < 2 || !d.loops().empty() || fm.num_pieces != 1) return std::nullopt;
  if (static_cast<int>(d.num_edges()) != 2 * q || static_cast<int>(fm.faces.size()) != q + 2) return std::nullopt;
  int bigons = 0;
  for (const auto& f : fm.faces) bigons += is_bigon(d, f);
  if (q == 2) return bigons == 4 ? std::optional<int>(2) : std::nullopt;
  if (bigons != q) return std::nullopt;
  for (const auto& f : fm.faces)
    if (!is_bigon(d, f) && static_cast<int>(f.degree()) != q) return std::nullopt;
  TwistPartition tp = partition_raw(d, fm);
  if (tp.t != 1 || tp.regions[0].topology != Topology::Annulus) return std::nullopt;
  return q;
}

}  // namespace

TwistRegion twist_region_topology(const Diagram& d, const FaceMap& fm, TwistRegion r) {
  r = classify_region(d, fm, std::move(r));
  if (r.topology != Topology::Disk && fm.num_pieces == 1 && d.loops().empty() && r2_bigons(d, fm).empty() &&
      !detect_2q(d, fm))
    throw invariant_error("WideRegionError", "non-disk twist region in a connected R2-reduced diagram that is not a "
                                          "standard (2,n) torus diagram");
  return r;
}

TwistPartition twist_partition(const Diagram& d) { return twist_partition(d, faces(d)); }

TwistPartition twist_partition(const Diagram& d, const FaceMap& fm) {
  TwistPartition tp = partition_raw(d, fm);
  for (auto& reg : tp.regions)
    if (reg.topology != Topology::Disk) reg = twist_region_topology(d, fm, std::move(reg));
  return tp;
}

std::vector<int> nugatory_crossings(const Diagram& d, const FaceMap& fm) {
  std::vector<int> out;
  for (std::size_t ci = 0; ci < d.num_crossings(); ++ci) {
    const auto& cf = fm.corner_face[ci];
    bool twice = false;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) twice = twice || cf[a] == cf[b];
    if (twice) out.push_back(d.crossing(static_cast<int>(ci)).id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> r2_bigons(const Diagram& d, const FaceMap& fm) {
  std::vector<int> out;
  for (const auto& f : fm.faces) {
    if (!is_bigon(d, f)) continue;
    bool nonalt = true;
    for (const auto& dt : f.darts) nonalt = nonalt && d.end_label(dt.edge, 0) == d.end_label(dt.edge, 1);
    if (nonalt) out.push_back(f.id);
  }
  return out;
}

const char* primality_name(PrimalityKind k) noexcept {
  switch (k) {
    case PrimalityKind::Prime: return "prime";
    case PrimalityKind::CutPair: return "cut_pair";
    case PrimalityKind::CutVertex: return "cut_vertex";
    case PrimalityKind::Disconnected: return "disconnected";
  }
  return "?";
}

std::optional<PrimalityWitness> find_cut_pair(const Diagram& d) {
  const int n = static_cast<int>(d.num_crossings());
  const int m = static_cast<int>(d.num_edges());
  if (n < 2) return std::nullopt;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge index)
  for (int ei = 0; ei < m; ++ei) {
    const Edge& e = d.edge(ei);
    if (e.end[0].crossing == e.end[1].crossing) continue;
    adj[e.end[0].crossing].emplace_back(e.end[1].crossing, ei);
    adj[e.end[1].crossing].emplace_back(e.end[0].crossing, ei);
  }
  auto side_size = [&](int skip1, int skip2) {
    std::vector<bool> seen(n, false);
    std::vector<int> st{0};
    seen[0] = true;
    int count = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (auto [y, ei] : adj[x]) {
        if (ei == skip1 || ei == skip2 || seen[y]) continue;
        seen[y] = true;
        ++count;
        st.push_back(y);
      }
    }
    return count;
  };

  std::optional<std::pair<int, int>> best;  // by edge ids
  std::pair<int, int> best_idx{-1, -1};
  std::vector<int> disc(n), low(n);
  for (int removed = 0; removed < m; ++removed) {
    // Bridges of the map with `removed` deleted.
    std::fill(disc.begin(), disc.end(), -1);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int x, int via) {
      disc[x] = low[x] = timer++;
      for (auto [y, ei] : adj[x]) {
        if (ei == removed || ei == via) continue;
        if (disc[y] == -1) {
          dfs(y, ei);
          low[x] = std::min(low[x], low[y]);
          if (low[y] > disc[x]) {
            int a = d.edge(removed).id, b = d.edge(ei).id;
            std::pair<int, int> p{std::min(a, b), std::max(a, b)};
            if (!best || p < *best) {
              best = p;
              best_idx = {removed, ei};
            }
          }
        } else {
          low[x] = std::min(low[x], disc[y]);
        }
      }
    };
    dfs(0, -1);
  }
  if (!best) return std::nullopt;
  PrimalityWitness w;
  w.kind = PrimalityKind::CutPair;
  w.edges = best;
  int one = side_size(best_idx.first, best_idx.second);
  w.sides = {one, n - one};
  return w;
}

DiagramFlags diagram_flags(const Diagram& d) {
  FaceMap fm = faces(d);
  DiagramFlags fl;
  fl.connected = fm.num_pieces == 1;
  auto nug = nugatory_crossings(d, fm);
  fl.reduced = nug.empty();
  fl.r2_reduced = r2_bigons(d, fm).empty();
  std::optional<PrimalityWitness> cut = fl.connected ? find_cut_pair(d) : std::nullopt;
  fl.prime = fl.connected && !cut;
  if (!fl.connected) {
    fl.witness.kind = PrimalityKind::Disconnected;
  } else if (cut) {
    fl.witness = *cut;
  } else if (!fl.reduced) {
    fl.witness.kind = PrimalityKind::CutVertex;
  }
  if (!nug.empty()) fl.witness.cut_vertex = nug.front();
  return fl;
}

std::optional<int> detect_standard_2q(const Diagram& d) { return detect_2q(d, faces(d)); }

Diagram strip_augmenting(const Diagram& g) {
  SpliceRule rule;
  rule.name_by_origin = true;
  for (const auto& c : g.crossings()) {
    bool aug = false;
    for (int s = 0; s < 4; ++s) aug = aug || g.edge(c.edge[s]).augmenting;
    if (!aug) continue;
    rule.removed.push_back(c.id);
    for (int s = 0; s < 4; ++s)
      if (!g.edge(c.edge[s]).augmenting) rule.through[{c.id, s}] = {c.id, Diagram::opposite(s)};
  }
  Diagram d = splice_out(g, rule);
  // Augmenting loops disappear too.
  std::vector<LoopSpec> loops;
  for (const auto& l : d.loop_specs())
    if (!l.augmenting) loops.push_back(l);
  return Diagram::assemble(d.crossing_specs(), d.edge_specs(), std::move(loops));
}

RefinementReport refinement_check(const Diagram& g) { return refinement_check(g, strip_augmenting(g)); }

RefinementReport refinement_check(const Diagram& g, const Diagram& d) {
  RefinementReport rep;
  std::set<int> dset;
  for (const auto& c : d.crossings()) {
    if (!g.crossing_index(c.id))
      throw invariant_error("MappingError", "crossing " + std::to_string(c.id) + " of D is missing from G");
    dset.insert(c.id);
  }
  FaceMap dfm = faces(d);
  TwistPartition tp_d = twist_partition(d, dfm);
  for (const auto& r : tp_d.regions) rep.P.push_back(r.crossings);

  std::set<std::pair<int, int>> d_bigons;
  for (int fid : tp_d.bigon_faces) {
    const Face& f = dfm.faces[fid];
    int a = d.edge(f.darts[0].edge).id, b = d.edge(f.darts[1].edge).id;
    d_bigons.emplace(std::min(a, b), std::max(a, b));
  }

  FaceMap gfm = faces(g);
  TwistPartition tp_g = twist_partition(g, gfm);
  rep.t_G = tp_g.t;
  auto origin_of = [&](int ei) {
    const Edge& e = g.edge(ei);
    return e.origin != 0 ? e.origin : e.id;
  };
  bool sub_twist_ok = true;
  for (const auto& T : tp_g.regions) {
    std::vector<int> block;
    for (int cid : T.crossings)
      if (dset.count(cid)) block.push_back(cid);
    if (block.empty()) continue;
    for (int cid : T.crossings) {
      const Crossing& c = g.crossing(*g.crossing_index(cid));
      for (int s = 0; s < 4; ++s)
        if (g.edge(c.edge[s]).augmenting) {
          sub_twist_ok = false;
          rep.problems.push_back("twist region of G at crossing " + std::to_string(cid) +
                                 " contains the augmenting component");
          break;
        }
    }
    for (int fid : T.bigons) {
      const Face& f = gfm.faces[fid];
      int a = origin_of(f.darts[0].edge), b = origin_of(f.darts[1].edge);
      bool aug = g.edge(f.darts[0].edge).augmenting || g.edge(f.darts[1].edge).augmenting;
      if (aug || !d_bigons.count({std::min(a, b), std::max(a, b)})) {
        sub_twist_ok = false;
        rep.problems.push_back("bigon face " + std::to_string(fid) + " of G is not a bigon of D");
      }
    }
    rep.P_prime.push_back(std::move(block));
  }

  std::set<int> seen;
  rep.disjoint = true;
  for (const auto& x : rep.P_prime)
    for (int c : x)
      if (!seen.insert(c).second) rep.disjoint = false;
  rep.covers = seen == dset;
  rep.contained = sub_twist_ok;
  for (const auto& x : rep.P_prime) {
    bool inside = false;
    for (const auto& y : rep.P)
      inside = inside || std::includes(y.begin(), y.end(), x.begin(), x.end());
    if (!inside) {
      rep.contained = false;
      rep.problems.push_back("block starting at crossing " + std::to_string(x.front()) +
                             " spans several twist regions of D");
    }
  }
  if (!rep.disjoint) rep.problems.push_back("blocks of P' overlap");
  if (!rep.covers) rep.problems.push_back("P' does not cover the crossings of D");
  rep.refines = rep.disjoint && rep.contained && rep.covers;
  rep.size_P = static_cast<int>(rep.P.size());
  rep.size_P_prime = static_cast<int>(rep.P_prime.size());
  if (rep.refines && !(rep.size_P <= rep.size_P_prime && rep.size_P_prime <= rep.t_G))
    throw invariant_error("RefinementError", "refinement holds but |P| <= |P'| <= t(G) fails");
  return rep;
}

}  // namespace altknot
