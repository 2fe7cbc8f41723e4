#include "altknot/selfcheck.hpp"

#include <cmath>
#include <initializer_list>
#include <utility>

#include "altknot/analysis.hpp"
#include "altknot/augmentation.hpp"
#include "altknot/error.hpp"
#include "altknot/generator.hpp"
#include "altknot/reduction.hpp"
#include "altknot/volume.hpp"

namespace altknot {

namespace {

struct Tally {
  explicit Tally(std::string n) : name(std::move(n)) {}
  std::string name;
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  CheckResult result() const {
    CheckResult r{name, failed == 0 && checked > 0, std::to_string(checked - failed) + "/" + std::to_string(checked)};
    if (failed) r.detail += "; first failure: " + first_failure;
    return r;
  }
};

bool euler_ok(const Diagram& d) {
  FaceMap fm = faces(d);
  PieceCensus pc = piece_census(d, fm);
  for (int p = 0; p < pc.pieces; ++p)
    if (pc.v[p] - pc.e[p] + pc.f[p] != 2) return false;
  return true;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed, int cases) {
  Tally pipeline("pipeline"), sigma("sigma_cut"), annulus("annulus"), certificate("certificate"), roundtrip("roundtrip"),
      reduction("reduction");

  for (int n = 2; n <= 12; ++n) {
    Diagram t = braid_closure(2, std::vector<int>(n, 1));
    TwistPartition tp = twist_partition(t);
    Topology want = n == 2 ? Topology::Sphere : Topology::Annulus;
    annulus.record(tp.t == 1 && tp.regions[0].topology == want && detect_standard_2q(t) == n,
                   "(2," + std::to_string(n) + ") torus diagram");
    certificate.record(certify_hyperbolic(t).verdict == Verdict::NotCertified,
                       "(2," + std::to_string(n) + ") certified");
  }

  std::uint64_t s = seed;
  for (int k = 0; k < cases; ++s) {
    const int letters = 10 + static_cast<int>(s % 27);
    const int flips = static_cast<int>(s % 4);
    GeneratedDiagram gd;
    try {
      gd = generate_random_diagram(s, letters, flips);
    } catch (const Error&) {
      continue;
    }
    const Diagram& d = gd.diagram;
    if (d.num_crossings() > 30) continue;
    ++k;
    const std::string tag = "seed " + std::to_string(s);

    Diagram raw = braid_closure(gd.strands, gd.word);
    for (int id : gd.flipped) raw = flip_crossing(raw, id);
    for (const Diagram* x : std::initializer_list<const Diagram*>{&raw, &d}) {
      EdgeClassification ec = classify_edges(*x);
      SigmaPartition sp = sigma_partition(*x);
      sigma.record(sp.cross_class_edges == ec.non_alternating && ec.non_alternating.size() % 2 == 0, tag);
      roundtrip.record(validate_diagram(*x).valid && serialize_pd(parse_pd(serialize_pd(*x))) == serialize_pd(*x) &&
                           same_map(parse_pd(serialize_pd(*x)), *x),
                       tag);
    }
    bool wide = false;
    for (const auto& reg : twist_partition(d).regions)
      wide = wide || reg.topology == Topology::Annulus || reg.topology == Topology::Sphere;
    annulus.record(!wide || detect_standard_2q(d) > 0, tag);

    Reduced red = preprocess(raw);
    bool mono = true;
    int prev_c = red.trace.crossings_before, prev_t = red.trace.t_before;
    for (const auto& st : red.trace.steps) {
      mono = mono && st.crossings_after < prev_c && st.t_after <= prev_t;
      prev_c = st.crossings_after;
      prev_t = st.t_after;
    }
    DiagramFlags rf = diagram_flags(red.diagram);
    reduction.record(mono && rf.reduced && rf.r2_reduced, tag);

    try {
      AugmentationResult res = augment(d);
      bool ok = classify_edges(res.g).is_alternating && res.g.augmenting_components().size() == 1 &&
                res.t_D <= res.t_G && res.t_G <= 5 * res.t_D && res.refinement.refines && euler_ok(res.g);
      pipeline.record(ok, tag);
      certificate.record(res.certificate.verdict == Verdict::Hyperbolic && !detect_standard_2q(res.g), tag);
    } catch (const Error& e) {
      pipeline.record(false, tag + ": " + e.kind() + ": " + e.what());
    }
  }

  Tally bounds("bounds");
  const VolumeConstants& c = constants();
  bounds.record(std::abs(c.v3 - 1.014941606409653) <= 1e-12, "v3");
  bounds.record(std::abs(c.four_catalan - 3.663862376708876) <= 1e-12, "4G");
  for (int t = 1; t <= 100; ++t) {
    VolumeBounds b = lackenby_bounds(t);
    bounds.record(b.lower_raw == c.v3 * (t - 2) && b.upper == 10 * c.v3 * (t - 1), "t = " + std::to_string(t));
    bounds.record(altvol_bounds(t).upper.upper == 10 * c.v3 * (5 * t - 1), "altvol t = " + std::to_string(t));
  }
  bounds.record(c.four_catalan <= 40 * c.v3, "trefoil");

  std::vector<CheckResult> out;
  for (const Tally* t : {&pipeline, &sigma, &annulus, &bounds, &certificate, &roundtrip, &reduction})
    out.push_back(t->result());
  return out;
}

}  // namespace altknot
