#include "altknot/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "altknot/error.hpp"

namespace altknot {

namespace {

struct Pt {
  double x = 0, y = 0;
};

// Positions of crossings (first) and edge midpoints (second); false when
// the barycentric embedding degenerates.
bool tutte_layout(const Diagram& d, const FaceMap& fm, std::vector<Pt>& pos) {
  const int nv = static_cast<int>(d.num_crossings());
  const int ne = static_cast<int>(d.num_edges());
  const int n = nv + ne + static_cast<int>(fm.faces.size());
  std::vector<std::vector<int>> adj(n);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int ei = 0; ei < ne; ++ei) {
    const Edge& e = d.edge(ei);
    link(nv + ei, e.end[0].crossing);
    link(nv + ei, e.end[1].crossing);
    link(nv + ei, nv + ne + fm.dart_face[ei][0]);
    link(nv + ei, nv + ne + fm.dart_face[ei][1]);
  }
  for (int ci = 0; ci < nv; ++ci)
    for (int s = 0; s < 4; ++s) link(ci, nv + ne + fm.corner_face[ci][s]);

  int outer = 0;
  for (const auto& f : fm.faces)
    if (f.degree() > fm.faces[outer].degree()) outer = f.id;
  std::vector<int> cycle;
  for (const auto& dt : fm.faces[outer].darts) {
    cycle.push_back(d.edge(dt.edge).end[dt.dir].crossing);
    cycle.push_back(nv + dt.edge);
  }
  std::vector<bool> fixed(n, false);
  fixed[nv + ne + outer] = true;
  pos.assign(n, Pt{});
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (fixed[cycle[k]]) return false;
    fixed[cycle[k]] = true;
    double a = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(cycle.size());
    pos[cycle[k]] = Pt{std::cos(a), std::sin(a)};
  }
  for (int it = 0; it < 20000; ++it) {
    double moved = 0;
    for (int v = 0; v < n; ++v) {
      if (fixed[v]) continue;
      Pt s;
      int k = 0;
      for (int w : adj[v]) {
        if (w == nv + ne + outer) continue;
        s.x += pos[w].x;
        s.y += pos[w].y;
        ++k;
      }
      Pt p{s.x / k, s.y / k};
      moved = std::max(moved, std::abs(p.x - pos[v].x) + std::abs(p.y - pos[v].y));
      pos[v] = p;
    }
    if (moved < 1e-12) break;
  }
  pos.resize(nv + ne);
  for (int a = 0; a < nv + ne; ++a) {
    if (!std::isfinite(pos[a].x) || !std::isfinite(pos[a].y)) return false;
    for (int b = a + 1; b < nv + ne; ++b)
      if (std::hypot(pos[a].x - pos[b].x, pos[a].y - pos[b].y) < 1e-6) return false;
  }
  return true;
}

void circular_layout(const Diagram& d, std::vector<Pt>& pos) {
  const int nv = static_cast<int>(d.num_crossings());
  pos.assign(nv + d.num_edges(), Pt{});
  for (int ci = 0; ci < nv; ++ci) {
    double a = 2 * std::numbers::pi * ci / nv;
    pos[ci] = Pt{std::cos(a), std::sin(a)};
  }
  for (std::size_t ei = 0; ei < d.num_edges(); ++ei) {
    const Edge& e = d.edge(static_cast<int>(ei));
    Pt a = pos[e.end[0].crossing], b = pos[e.end[1].crossing];
    double bulge = 0.15 * (1 + static_cast<double>(ei % 3));
    pos[nv + ei] = Pt{(a.x + b.x) / 2 * (1 - bulge), (a.y + b.y) / 2 * (1 - bulge)};
  }
}

}  // namespace

std::string render_svg(const Diagram& d) {
  FaceMap fm = faces(d);
  if (fm.num_pieces != 1) throw precondition_error("RenderError", "only connected diagrams can be drawn");
  constexpr double size = 400, margin = 20, gap = 0.06;
  auto px = [&](double v) { return margin + (v + 1) / 2 * (size - 2 * margin); };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
     << "<style>.strand{stroke:#222;stroke-width:3;fill:none;stroke-linecap:round}"
        ".aug{stroke:#c0392b;stroke-width:3;fill:none;stroke-dasharray:8 4;stroke-linecap:round}"
        ".crossing{fill:none;stroke:none}</style>\n";
  if (d.num_crossings() == 0) {
    os << "<circle class=\"" << (d.loops().front().augmenting ? "aug" : "strand") << "\" cx=\"" << size / 2
       << "\" cy=\"" << size / 2 << "\" r=\"" << size / 3 << "\"/>\n</svg>\n";
    return os.str();
  }
  std::vector<Pt> pos;
  bool tutte = tutte_layout(d, fm, pos);
  if (!tutte) circular_layout(d, pos);
  os << "<!-- layout: " << (tutte ? "barycentric" : "circular") << " -->\n";
  const int nv = static_cast<int>(d.num_crossings());
  for (std::size_t ei = 0; ei < d.num_edges(); ++ei) {
    const Edge& e = d.edge(static_cast<int>(ei));
    Pt mid = pos[nv + ei];
    os << "<polyline class=\"" << (e.augmenting ? "aug" : "strand") << "\" data-edge=\"" << e.id << "\" points=\"";
    for (int which = 0; which < 2; ++which) {
      const SlotRef end = e.end[which];
      Pt c = pos[end.crossing];
      bool under = !d.crossing(end.crossing).over[end.slot];
      double len = std::hypot(mid.x - c.x, mid.y - c.y);
      double t = under && len > 0 ? std::min(0.45, gap / len) : 0.0;
      Pt p{c.x + (mid.x - c.x) * t, c.y + (mid.y - c.y) * t};
      if (which == 1) os << px(mid.x) << ',' << px(mid.y) << ' ';
      os << px(p.x) << ',' << px(p.y) << (which == 0 ? " " : "");
    }
    os << "\"/>\n";
  }
  for (int ci = 0; ci < nv; ++ci)
    os << "<circle class=\"crossing\" data-crossing=\"" << d.crossing(ci).id << "\" cx=\"" << px(pos[ci].x)
       << "\" cy=\"" << px(pos[ci].y) << "\" r=\"4\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace altknot
