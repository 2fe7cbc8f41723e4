#pragma once

// Diagram predicates and statistics: alternation, checkerboard classes,
// bigons and twist regions, primality and reducedness, (2,q) detection and
// the twist-partition refinement check between a diagram and an augmentation.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "altknot/diagram.hpp"

namespace altknot {

struct EdgeClassification {
  std::set<int> alternating;      // edge ids
  std::set<int> non_alternating;  // edge ids
  bool is_alternating = false;
  bool is_non_alternating = false;
};

EdgeClassification classify_edges(const Diagram& d);

// Checkerboard shading of the faces and the induced split of the crossings
// into two types. Edges joining crossings of different type are exactly the
// non-alternating edges.
struct SigmaPartition {
  std::vector<bool> shaded;  // by face id
  std::set<int> plus_class;  // crossing ids
  std::set<int> minus_class;
  std::set<int> cross_class_edges;
};

SigmaPartition sigma_partition(const Diagram& d);
SigmaPartition sigma_partition(const Diagram& d, const FaceMap& fm);

enum class Topology { Disk, Annulus, Sphere };
const char* topology_name(Topology t) noexcept;

struct TwistRegion {
  std::vector<int> crossings;                     // crossing ids, sorted
  std::vector<int> bigons;                        // face ids, sorted
  std::vector<std::pair<int, int>> retract_links; // links of the bigon graph (face ids)
  Topology topology = Topology::Disk;
};

struct TwistPartition {
  std::vector<int> bigon_faces;
  std::vector<TwistRegion> regions;
  int t = 0;

  // Index into `regions` of the region holding the crossing, or -1.
  int region_of(int crossing_id) const;
};

// Faces of degree two bounded by two distinct edges between two distinct crossings.
bool is_bigon(const Diagram& d, const Face& f);

TwistPartition twist_partition(const Diagram& d);
TwistPartition twist_partition(const Diagram& d, const FaceMap& fm);

// Builds the bigon graph of the region and classifies it. When the region is
// not a disk and the diagram is connected and R2-reduced, the diagram must be
// a standard (2,n) torus diagram; a violation raises WideRegionError.
TwistRegion twist_region_topology(const Diagram& d, const FaceMap& fm, TwistRegion r);

enum class PrimalityKind { Prime, CutPair, CutVertex, Disconnected };
const char* primality_name(PrimalityKind k) noexcept;

struct PrimalityWitness {
  PrimalityKind kind = PrimalityKind::Prime;
  std::optional<std::pair<int, int>> edges;  // edge ids of a separating pair
  std::pair<int, int> sides{0, 0};           // crossings on either side
  std::optional<int> cut_vertex;             // a nugatory crossing
};

struct DiagramFlags {
  bool connected = false;
  bool reduced = false;
  bool r2_reduced = false;
  bool prime = false;
  PrimalityWitness witness;
};

DiagramFlags diagram_flags(const Diagram& d);

// Crossing ids of nugatory crossings: some face meets them at two corners.
std::vector<int> nugatory_crossings(const Diagram& d, const FaceMap& fm);
// Face ids of bigons whose edges are both non-alternating.
std::vector<int> r2_bigons(const Diagram& d, const FaceMap& fm);
// Smallest separating edge pair, if any (crossings on both sides).
std::optional<PrimalityWitness> find_cut_pair(const Diagram& d);

std::optional<int> detect_standard_2q(const Diagram& d);

struct RefinementReport {
  std::vector<std::vector<int>> P;        // twist partition of D (crossing ids)
  std::vector<std::vector<int>> P_prime;  // D-crossings of G's twist regions that meet D
  bool disjoint = false;
  bool contained = false;
  bool covers = false;
  bool refines = false;
  int size_P = 0;
  int size_P_prime = 0;
  int t_G = 0;
  std::vector<std::string> problems;
};

// `d` is the original diagram; its crossing ids must appear in `g`.
RefinementReport refinement_check(const Diagram& g, const Diagram& d);
// Recovers D from `g` by deleting its augmenting components.
RefinementReport refinement_check(const Diagram& g);

// G with every augmenting component deleted; merged edges are named by origin.
Diagram strip_augmenting(const Diagram& g);

}  // namespace altknot
