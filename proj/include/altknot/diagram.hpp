#pragma once

// Link diagrams as sign-labelled 4-valent planar combinatorial maps.
//
// A crossing lists its four edge ends in counterclockwise order. Slots 0/2
// belong to one strand and 1/3 to the other. Every edge end carries a sign:
// + when the edge occupies an over-strand slot at that crossing, - otherwise.
// Edges are oriented (tail -> head) along their link component.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace altknot {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr Sign operator-(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char sign_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

// Position of an edge end: crossing index (not id) and slot 0..3.
struct SlotRef {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

struct Crossing {
  int id = 0;
  std::array<int, 4> edge{};           // edge index at each slot
  std::array<std::uint8_t, 4> end{};   // which end of that edge sits here: 0 tail, 1 head
  std::array<bool, 4> over{};          // slot is part of the over strand

  Sign label(int slot) const noexcept { return over[slot & 3] ? Sign::Plus : Sign::Minus; }
};

struct Edge {
  int id = 0;
  std::array<SlotRef, 2> end{};  // [0] tail, [1] head
  int origin = 0;                // id of the edge of the original diagram this piece came from; 0 = none
  int component = -1;
  bool augmenting = false;
};

// A closed component without crossings.
struct Loop {
  int id = 0;
  int origin = 0;
  int component = -1;
  bool augmenting = false;
};

struct CrossingSpec {
  int id = 0;
  std::array<int, 4> edge_ids{};
  std::array<bool, 4> over{};
};

struct EdgeSpec {
  int id = 0;
  int origin = 0;
  bool augmenting = false;
  int tail_crossing = 0;  // crossing id
  int tail_slot = 0;
};

struct LoopSpec {
  int id = 0;
  int origin = 0;
  bool augmenting = false;
};

class Diagram {
 public:
  Diagram() = default;

  // Builds a diagram and derives incidences and components. Throws
  // IncidenceError when an edge id is not used by exactly two slots and
  // OrientationError when the tails do not orient strands consistently.
  static Diagram assemble(std::vector<CrossingSpec> crossings, std::vector<EdgeSpec> edges,
                          std::vector<LoopSpec> loops = {});

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Loop>& loops() const noexcept { return loops_; }

  std::size_t num_crossings() const noexcept { return crossings_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  int num_components() const noexcept { return num_components_; }
  bool empty() const noexcept { return crossings_.empty() && loops_.empty(); }

  std::optional<int> crossing_index(int id) const;
  std::optional<int> edge_index(int id) const;

  const Crossing& crossing(int index) const { return crossings_.at(index); }
  const Edge& edge(int index) const { return edges_.at(index); }

  // Edge end label at the given end (0 tail, 1 head).
  Sign end_label(int edge_index, int which) const;

  // Slot reached by following the strand straight through the crossing.
  static constexpr int opposite(int slot) noexcept { return (slot + 2) & 3; }

  std::vector<int> augmenting_components() const;
  bool component_is_augmenting(int component) const;

  int max_crossing_id() const noexcept;
  int max_edge_id() const noexcept;

  // Specs reproducing this diagram, in storage order.
  std::vector<CrossingSpec> crossing_specs() const;
  std::vector<EdgeSpec> edge_specs() const;
  std::vector<LoopSpec> loop_specs() const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  std::vector<Loop> loops_;
  std::vector<bool> component_augmenting_;
  std::map<int, int> crossing_by_id_;
  std::map<int, int> edge_by_id_;
  int num_components_ = 0;
};

// Face of the map: traversing darts with the face on the right, turning to the
// next slot counterclockwise at each crossing.
struct Dart {
  int edge = 0;           // edge index
  std::uint8_t dir = 0;   // 0: tail -> head, 1: head -> tail
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Corner {
  int crossing = 0;  // crossing index
  int slot = 0;      // sector between slot and slot+1
  int in_edge = 0;   // edge ids
  int out_edge = 0;
};

struct Face {
  int id = 0;
  std::vector<Dart> darts;
  std::vector<Corner> corners;
  int loop = 0;   // nonzero for the two faces of a crossing-free loop
  int piece = 0;  // connected piece of the map

  std::size_t degree() const noexcept { return darts.size(); }
  std::vector<int> boundary_edges(const Diagram& d) const;
};

struct FaceMap {
  std::vector<Face> faces;
  std::vector<std::array<int, 4>> corner_face;  // [crossing index][slot] -> face id
  std::vector<std::array<int, 2>> dart_face;    // [edge index][dir] -> face id
  std::vector<int> crossing_piece;              // piece of each crossing
  int num_pieces = 0;

  // Face on the left/right of an edge read tail -> head.
  int right_of(int edge_index) const { return dart_face.at(edge_index)[0]; }
  int left_of(int edge_index) const { return dart_face.at(edge_index)[1]; }
};

FaceMap faces(const Diagram& d);

// Connected pieces of the map (crossing-free loops are pieces of their own).
struct PieceCensus {
  int pieces = 0;
  std::vector<int> v, e, f;  // per piece
};
PieceCensus piece_census(const Diagram& d, const FaceMap& fm);

// PD text.
Diagram parse_pd(const std::string& text);
// Parses without the sphericity check (incidence is still enforced).
Diagram parse_pd_unchecked(const std::string& text);
std::string serialize_pd(const Diagram& d);

// A named block of a corpus file.
struct CorpusEntry {
  std::string name;
  std::string pd;
  int line = 0;
};
std::vector<CorpusEntry> split_corpus(const std::string& text);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> failures;
  int v = 0;
  int e = 0;
  int f = 0;
  int components = 0;
};
ValidationReport validate_diagram(const Diagram& d);

std::map<int, std::pair<Sign, Sign>> end_labels(const Diagram& d);

Diagram flip_crossing(const Diagram& d, int crossing_id);

// Isomorphism of sign-labelled maps, ignoring ids.
bool same_map(const Diagram& a, const Diagram& b);

// Deletes crossings and reconnects the strands that ran through them.
// `through` maps an arrival (crossing id, slot) at a removed crossing to the
// (crossing id, slot) the strand leaves from. Edges never reached from a kept
// crossing or a closed through-chain are dropped. Merged edges take the
// smallest piece id, or the common origin when `name_by_origin` is set.
struct SpliceRule {
  std::vector<int> removed;
  std::map<std::pair<int, int>, std::pair<int, int>> through;
  bool name_by_origin = false;
};
Diagram splice_out(const Diagram& d, const SpliceRule& rule);

}  // namespace altknot
