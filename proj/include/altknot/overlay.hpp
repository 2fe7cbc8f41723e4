#pragma once

// Closed curves drawn on top of a base diagram. Each curve crosses edges of
// the base at points; within a face it runs along chords joining the sides
// of two points. Realizing an overlay yields an ordinary Diagram in which
// every point is a crossing and every chord an augmenting edge.

#include <map>
#include <utility>
#include <vector>

#include "altknot/diagram.hpp"

namespace altknot {

// Side of an edge relative to its orientation.
enum class Side : std::uint8_t { Right = 0, Left = 1 };
constexpr Side other(Side s) noexcept { return s == Side::Right ? Side::Left : Side::Right; }

struct OverlayPoint {
  int origin = 0;   // edge id of the base diagram
  double pos = 0.5; // in (0,1), measured from the tail
  Sign d_sign = Sign::Minus;  // label of the base strand at this crossing
  int curve = 0;
};

struct Attach {
  int point = 0;
  Side side = Side::Right;
  friend bool operator==(const Attach&, const Attach&) = default;
  friend auto operator<=>(const Attach&, const Attach&) = default;
};

struct Chord {
  Attach a, b;
};

struct Overlay {
  std::vector<OverlayPoint> points;  // index = point id
  std::vector<Chord> chords;

  // Point ids on an edge, sorted by position.
  std::vector<int> points_on(int origin) const;
  std::vector<int> curves() const;
};

// Adds a crossing point on base edge `edge_id` at `pos`, where the base
// strand carries `e_sign`. Throws UnknownEdge or BadPlacement.
std::pair<Overlay, int> subdivide_edge_with_crossing(const Diagram& d, Overlay ov, int edge_id, int curve,
                                                     Sign e_sign, double pos);

// End labels of the pieces the points cut `edge_id` into, tail to head.
std::vector<std::pair<Sign, Sign>> piece_labels(const Diagram& d, const Overlay& ov, int edge_id);

// Label the base strand must carry at a new point at `pos` so that the
// piece reaching it from the tail side alternates.
Sign forced_sign(const Diagram& d, const Overlay& ov, int edge_id, double pos);

struct RealizedEdge {
  bool chord = false;
  int origin = 0;       // base edge id for pieces
  int interval = 0;     // piece index along the origin
  double lo = 0, hi = 1;
  int chord_index = -1;
};

struct Realization {
  Diagram g;
  std::vector<RealizedEdge> info;  // by edge index of g
  std::vector<int> point_crossing; // crossing id of each point
  std::vector<int> chord_edge;     // edge index of each chord
  std::vector<Attach> chord_tail;  // the attach each chord edge leaves from
};

// Builds the combined diagram. Throws OverlayError for inconsistent chord
// data and PlanarityError when chords cross.
Realization realize(const Diagram& d, const Overlay& ov);

}  // namespace altknot
