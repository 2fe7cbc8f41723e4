#pragma once

// Alternating augmentation: a single unknotted curve added to a
// non-alternating diagram so that the result is alternating.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "altknot/analysis.hpp"
#include "altknot/diagram.hpp"
#include "altknot/overlay.hpp"

namespace altknot {

struct CutCurve {
  int id = 0;
  std::vector<int> edges;        // crossed edge ids of D in curve order
  std::vector<Sign> curve_signs; // label of the curve at each of those crossings
};

struct CutSystem {
  bool thickened_plus = false;
  std::set<int> thickened;  // crossing ids of the thickened class
  std::vector<CutCurve> curves;
  Overlay overlay;
};

// Boundary curves of a ribbon neighbourhood of one checkerboard class.
// `force_class` selects the class explicitly (+1 / -1); by default the
// smaller one, ties going to the class of the lowest crossing id.
CutSystem build_cut_curves(const Diagram& d, int force_class = 0);

// Realizes the cut curves on D. Throws AlternationError if the result is
// not alternating.
Realization overlay_unlink(const Diagram& d, const CutSystem& cs);

struct MergeArc {
  int source_curve = -1;
  int target_curve = -1;
  std::vector<int> faces;   // face ids of the realization, F_0 .. F_k
  std::vector<int> edges;   // edge indices crossed, e_1 .. e_k
  std::vector<int> origins; // D edge ids of the crossed edges
  std::vector<int> region;  // faces reachable from F_0 without crossing the curves
  int phi = 0;
};

// Shortest path in the dual of the realization joining two curves. With
// `ban_bigons` unset, bigon faces of D may be used (for comparison only).
MergeArc find_merge_arc(const Diagram& d, const Overlay& ov, const Realization& r, bool ban_bigons = true);

// Extends a finger of the source curve along the arc. The finger is based
// on a chord of the source curve on F_0; every candidate chord is tried.
Overlay type2_propagate(const Diagram& d, const Overlay& ov, const Realization& r, const MergeArc& arc);

struct JoinResult {
  Overlay overlay;
  int face = -1;        // face of the realization where the band was cut
  int skipped = 0;      // candidate splices rejected before the accepted one
};

// Joins curves ci and cj by a band across a face they share.
JoinResult type1_join(const Diagram& d, const Overlay& ov, const Realization& r, int ci, int cj);

enum class Verdict { Hyperbolic, NotCertified };

struct HyperbolicityCertificate {
  bool connected = false;
  bool reduced = false;
  bool prime = false;
  bool alternating = false;
  bool not_2q_torus = false;
  Verdict verdict = Verdict::NotCertified;
};

HyperbolicityCertificate certify_hyperbolic(const Diagram& g);

struct MergeRecord {
  MergeArc arc;
  int join_face = -1;
  int skipped = 0;
};

struct AugmentationResult {
  Diagram d;
  Diagram g;
  Overlay overlay;
  int augmenting_component = -1;
  int num_cut_curves = 0;
  int i_A_D = 0;
  int t_D = 0;
  int t_G = 0;
  std::vector<MergeRecord> merges;
  HyperbolicityCertificate certificate;
  RefinementReport refinement;
  bool bound_check = false;
};

// Checks the preconditions (connected, reduced, R2-reduced, prime,
// non-alternating) and runs the full construction, verifying every
// property of the result.
AugmentationResult augment(const Diagram& d);

}  // namespace altknot
