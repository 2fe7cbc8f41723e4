#include "altknot/report.hpp"

#include <sstream>

#include "altknot/analysis.hpp"

namespace altknot {

Json validation_json(const ValidationReport& r) {
  return Json{{"valid", r.valid}, {"failures", r.failures}, {"v", r.v},
              {"e", r.e},         {"f", r.f},               {"components", r.components}};
}

Json analysis_json(const Diagram& d) {
  FaceMap fm = faces(d);
  DiagramFlags fl = diagram_flags(d);
  EdgeClassification ec = classify_edges(d);
  TwistPartition tp = twist_partition(d, fm);
  Json regions = Json::array();
  for (const auto& r : tp.regions)
    regions.push_back(Json{{"crossings", r.crossings}, {"bigons", r.bigons}, {"topology", topology_name(r.topology)}});
  Json j;
  j["crossings"] = d.num_crossings();
  j["components"] = d.num_components();
  j["alternating"] = ec.is_alternating;
  j["non_alternating_edges"] = ec.non_alternating;
  j["connected"] = fl.connected;
  j["reduced"] = fl.reduced;
  j["r2_reduced"] = fl.r2_reduced;
  j["prime"] = fl.prime;
  Json w{{"kind", primality_name(fl.witness.kind)}};
  if (fl.witness.edges) {
    w["edges"] = {fl.witness.edges->first, fl.witness.edges->second};
    w["sides"] = {fl.witness.sides.first, fl.witness.sides.second};
  }
  if (fl.witness.cut_vertex) w["cut_vertex"] = *fl.witness.cut_vertex;
  j["primality"] = w;
  j["t"] = tp.t;
  j["twist_regions"] = regions;
  auto q = detect_standard_2q(d);
  j["torus_2q"] = q ? Json(*q) : Json(nullptr);
  return j;
}

Json reduction_json(const Reduced& r) {
  Json steps = Json::array();
  for (const auto& s : r.trace.steps)
    steps.push_back(Json{{"kind", reduction_name(s.kind)},
                         {"crossings", s.crossings},
                         {"crossings_after", s.crossings_after},
                         {"t_after", s.t_after}});
  return Json{{"pd", serialize_pd(r.diagram)},
              {"crossings_before", r.trace.crossings_before},
              {"crossings_after", r.trace.crossings_after},
              {"t_before", r.trace.t_before},
              {"t_after", r.trace.t_after},
              {"steps", steps}};
}

Json augmentation_json(const AugmentationResult& res) {
  Json merges = Json::array();
  for (const auto& m : res.merges)
    merges.push_back(Json{{"source_curve", m.arc.source_curve},
                          {"target_curve", m.arc.target_curve},
                          {"phi", m.arc.phi},
                          {"faces", m.arc.faces},
                          {"crossed_edges", m.arc.origins},
                          {"join_face", m.join_face},
                          {"skipped_splices", m.skipped}});
  const auto& c = res.certificate;
  Json cert{{"connected", c.connected},
            {"reduced", c.reduced},
            {"prime", c.prime},
            {"alternating", c.alternating},
            {"not_2q_torus", c.not_2q_torus},
            {"verdict", c.verdict == Verdict::Hyperbolic ? "hyperbolic" : "not_certified"}};
  const auto& rf = res.refinement;
  Json refinement{{"refines", rf.refines},  {"disjoint", rf.disjoint}, {"contained", rf.contained},
                  {"covers", rf.covers},    {"size_P", rf.size_P},     {"size_P_prime", rf.size_P_prime},
                  {"t_G", rf.t_G}};
  return Json{{"pd_D", serialize_pd(res.d)},
              {"pd_G", serialize_pd(res.g)},
              {"augmenting_component", res.augmenting_component},
              {"cut_curves", res.num_cut_curves},
              {"t_D", res.t_D},
              {"t_G", res.t_G},
              {"i_A_D", res.i_A_D},
              {"merges", merges},
              {"certificate", cert},
              {"refinement", refinement},
              {"bound_check", res.bound_check}};
}

Json volume_json(const VolumeReport& v) {
  Json j{{"v3", v.v3},
         {"t_D", v.t_D},
         {"t_G", v.t_G},
         {"vol_lower_raw", v.link.lower_raw},
         {"vol_lower", v.link.lower},
         {"vol_upper", v.link.upper},
         {"altvol_upper", v.altvol.upper.upper}};
  if (v.altvol.lower) j["altvol_lower"] = v.altvol.lower->lower;
  j["audit"] = v.audit;
  return j;
}

Json bounds_json(int t, std::optional<int> claim) {
  VolumeBounds lb = lackenby_bounds(t);
  AltVolBounds ab = altvol_bounds(t, claim);
  Json j{{"v3", constants().v3},
         {"t", t},
         {"lower_raw", lb.lower_raw},
         {"lower", lb.lower},
         {"upper", lb.upper},
         {"altvol_upper", ab.upper.upper}};
  if (ab.lower) {
    j["claimed_min_twist"] = *claim;
    j["altvol_lower"] = ab.lower->lower;
  }
  return j;
}

Json error_json(const Error& e) {
  const char* cls = e.error_class() == ErrorClass::Input          ? "input"
                    : e.error_class() == ErrorClass::Precondition ? "precondition"
                                                                  : "invariant";
  return Json{{"error", e.kind()}, {"class", cls}, {"message", e.what()}};
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "[" + std::to_string(k) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string to_text(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

}  // namespace altknot
