#pragma once

// Local simplifications: removing nugatory crossings and R2 bigons.

#include <string>
#include <vector>

#include "altknot/diagram.hpp"

namespace altknot {

enum class ReductionKind { Nugatory, R2 };
const char* reduction_name(ReductionKind k) noexcept;

struct ReductionStep {
  ReductionKind kind = ReductionKind::Nugatory;
  std::vector<int> crossings;  // ids removed
  int crossings_after = 0;
  int t_after = 0;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  int crossings_before = 0;
  int crossings_after = 0;
  int t_before = 0;
  int t_after = 0;
};

// Untwists at a cut vertex. Throws NotNugatory.
Diagram remove_nugatory_crossing(const Diagram& d, int crossing_id);

// Pulls apart the two strands of a bigon whose edges are both
// non-alternating. Throws NotR2Bigon.
Diagram remove_r2_bigon(const Diagram& d, int face_id);

struct Reduced {
  Diagram diagram;
  ReductionTrace trace;
};

// Applies both moves, lowest crossing id first, until neither applies.
Reduced preprocess(const Diagram& d);

}  // namespace altknot
