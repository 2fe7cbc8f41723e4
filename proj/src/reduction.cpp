#include "altknot/reduction.hpp"

#include <algorithm>

#include "altknot/analysis.hpp"
#include "altknot/error.hpp"

namespace altknot {

const char* reduction_name(ReductionKind k) noexcept {
  return k == ReductionKind::Nugatory ? "nugatory" : "r2";
}

namespace {

// Both moves keep every strand running straight through the deleted crossings.
Diagram splice_straight(const Diagram& d, const std::vector<int>& ids) {
  SpliceRule rule;
  rule.removed = ids;
  for (int id : ids)
    for (int s = 0; s < 4; ++s) rule.through[{id, s}] = {id, Diagram::opposite(s)};
  return splice_out(d, rule);
}

}  // namespace

Diagram remove_nugatory_crossing(const Diagram& d, int crossing_id) {
  if (!d.crossing_index(crossing_id)) throw precondition_error("UnknownCrossing", "no crossing " + std::to_string(crossing_id));
  auto nug = nugatory_crossings(d, faces(d));
  if (!std::binary_search(nug.begin(), nug.end(), crossing_id))
    throw precondition_error("NotNugatory", "crossing " + std::to_string(crossing_id) + " is not a cut vertex");
  return splice_straight(d, {crossing_id});
}

Diagram remove_r2_bigon(const Diagram& d, int face_id) {
  FaceMap fm = faces(d);
  if (face_id < 0 || face_id >= static_cast<int>(fm.faces.size()))
    throw precondition_error("NotR2Bigon", "no face " + std::to_string(face_id));
  auto r2 = r2_bigons(d, fm);
  if (std::find(r2.begin(), r2.end(), face_id) == r2.end())
    throw precondition_error("NotR2Bigon", "face " + std::to_string(face_id) + " is not a bigon with non-alternating edges");
  const Face& f = fm.faces[face_id];
  return splice_straight(d, {d.crossing(f.corners[0].crossing).id, d.crossing(f.corners[1].crossing).id});
}

Reduced preprocess(const Diagram& d) {
  Reduced out{d, {}};
  out.trace.crossings_before = static_cast<int>(d.num_crossings());
  out.trace.t_before = twist_partition(d).t;
  for (;;) {
    FaceMap fm = faces(out.diagram);
    ReductionStep step;
    auto nug = nugatory_crossings(out.diagram, fm);
    if (!nug.empty()) {
      step.kind = ReductionKind::Nugatory;
      step.crossings = {nug.front()};
      out.diagram = splice_straight(out.diagram, step.crossings);
    } else {
      int best = -1;
      std::vector<int> best_ids;
      for (int fid : r2_bigons(out.diagram, fm)) {
        const Face& f = fm.faces[fid];
        std::vector<int> ids{out.diagram.crossing(f.corners[0].crossing).id,
                             out.diagram.crossing(f.corners[1].crossing).id};
        std::sort(ids.begin(), ids.end());
        if (best == -1 || ids < best_ids) {
          best = fid;
          best_ids = ids;
        }
      }
      if (best == -1) break;
      step.kind = ReductionKind::R2;
      step.crossings = best_ids;
      out.diagram = splice_straight(out.diagram, best_ids);
    }
    step.crossings_after = static_cast<int>(out.diagram.num_crossings());
    step.t_after = twist_partition(out.diagram).t;
    out.trace.steps.push_back(std::move(step));
  }
  out.trace.crossings_after = static_cast<int>(out.diagram.num_crossings());
  out.trace.t_after = twist_partition(out.diagram).t;
  return out;
}

}  // namespace altknot
