// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "altknot/analysis.hpp"
#include "altknot/augmentation.hpp"
#include "altknot/diagram.hpp"
#include "altknot/error.hpp"
#include "altknot/generator.hpp"
#include "altknot/reduction.hpp"
#include "altknot/volume.hpp"
#include "oracles.hpp"

using namespace altknot;

namespace {

constexpr int kDiagrams = 500;
constexpr int kMaxCrossings = 30;
constexpr double kMaxSeconds = 1.0;
constexpr double kConstantTol = 1e-12;

struct Sample {
  std::uint64_t seed = 0;
  Diagram raw;  // closure with flips, before preprocess
  Diagram d;
  AugmentationResult res;
  double seconds = 0;
  std::string error;
};

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ == 0) first_ = what;
  }
  void note(std::string s) { note_ = std::move(s); }
  bool report(int number) const {
    bool ok = failures_ == 0 && checks_ > 0;
    std::printf("%s [%d] %s: %d/%d checks", ok ? "PASS" : "FAIL", number, title_.c_str(), checks_ - failures_, checks_);
    if (!note_.empty()) std::printf("; %s", note_.c_str());
    if (failures_) std::printf("; first failure: %s", first_.c_str());
    std::printf("\n");
    return ok;
  }

 private:
  std::string title_, note_, first_;
  int checks_ = 0, failures_ = 0;
};

std::vector<Sample> draw_samples() {
  std::vector<Sample> out;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < kDiagrams; ++seed) {
    const int letters = 8 + static_cast<int>(seed % 29);
    const int flips = static_cast<int>(seed % 4);
    GeneratedDiagram g = generate_random_diagram(seed, letters, flips);
    if (static_cast<int>(g.diagram.num_crossings()) > kMaxCrossings) continue;
    Sample s;
    s.seed = seed;
    s.d = g.diagram;
    s.raw = braid_closure(g.strands, g.word);
    for (int id : g.flipped) s.raw = flip_crossing(s.raw, id);
    auto t0 = std::chrono::steady_clock::now();
    try {
      s.res = augment(s.d);
    } catch (const Error& e) {
      s.error = e.kind() + ": " + e.what();
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(s));
  }
  return out;
}

std::string tag(const Sample& s) { return "seed " + std::to_string(s.seed) + " " + serialize_pd(s.d); }

int euler(const std::string& pd) {
  auto rec = oracle::records(pd);
  return static_cast<int>(rec.size()) - oracle::edge_count(pd) + oracle::face_count(pd);
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Unreduced closures of random words, alternating and not.
std::vector<Diagram> raw_closures(int count) {
  std::vector<Diagram> out;
  std::mt19937_64 rng(20240611);
  while (static_cast<int>(out.size()) < count) {
    int strands = 2 + static_cast<int>(rng() % 4);
    std::vector<int> word;
    int len = 1 + static_cast<int>(rng() % 24);
    bool positive = rng() % 3 == 0;
    for (int k = 0; k < len; ++k) {
      int g = 1 + static_cast<int>(rng() % (strands - 1));
      word.push_back(positive || rng() % 2 ? g : -g);
    }
    Diagram d = braid_closure(strands, word);
    if (faces(d).num_pieces == 1 && d.loops().empty()) out.push_back(d);
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Sample> samples = draw_samples();
  const std::vector<Diagram> closures = raw_closures(400);
  const auto corpus = split_corpus(read(ALTKNOT_CORPUS));
  bool all = true;

  {
    Criterion c("pipeline property suite");
    double worst = 0;
    int max_cross = 0;
    for (const auto& s : samples) {
      const std::string t = tag(s);
      c.check(s.error.empty(), t + ": " + s.error);
      if (!s.error.empty()) continue;
      const std::string g = serialize_pd(s.res.g);
      const Diagram& G = s.res.g;
      c.check(oracle::non_alternating(g).empty(), t + ": output not alternating");
      c.check(G.augmenting_components().size() == 1, t + ": augmenting components");
      const int aug = G.augmenting_components().empty() ? -1 : G.augmenting_components()[0];
      bool simple = true;
      for (const auto& x : G.crossings()) {
        bool all_aug = true;
        for (int k = 0; k < 4; ++k) all_aug = all_aug && G.edge(x.edge[k]).component == aug;
        simple = simple && !all_aug;
      }
      c.check(simple, t + ": curve crosses itself");
      std::map<int, int> per_edge;
      for (const auto& p : s.res.overlay.points) ++per_edge[p.origin];
      int most = 0;
      for (const auto& [e, n] : per_edge) most = std::max(most, n);
      c.check(most <= 2, t + ": an edge of D is crossed " + std::to_string(most) + " times");
      const auto bigon = oracle::bigon_edges(serialize_pd(s.d));
      bool outside = true;
      for (const auto& [e, n] : per_edge) outside = outside && !bigon.count(e);
      c.check(outside, t + ": curve enters a twist region");
      const int tD = oracle::twist_number(serialize_pd(s.d)), tG = oracle::twist_number(g);
      c.check(tD <= tG && tG <= 5 * tD, t + ": t(D) = " + std::to_string(tD) + ", t(G) = " + std::to_string(tG));
      c.check(s.seconds < kMaxSeconds, t + ": took " + std::to_string(s.seconds) + " s");
      worst = std::max(worst, s.seconds);
      max_cross = std::max(max_cross, static_cast<int>(s.d.num_crossings()));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu diagrams, up to %d crossings, slowest %.1f ms", samples.size(), max_cross,
                  worst * 1e3);
    c.note(buf);
    all = c.report(1) && all;
  }

  {
    Criterion c("sigma cut equals the non-alternating edges");
    auto test = [&](const Diagram& d, const std::string& t) {
      const std::string pd = serialize_pd(d);
      const auto na = oracle::non_alternating(pd);
      c.check(sigma_partition(d).cross_class_edges == na, t);
      c.check(na.size() % 2 == 0, t + ": odd count");
    };
    for (const auto& s : samples) {
      test(s.raw, "raw " + tag(s));
      test(s.d, tag(s));
    }
    for (const auto& d : closures) test(d, serialize_pd(d));
    all = c.report(2) && all;
  }

  {
    Criterion c("twist regions that are annuli or spheres");
    for (int n = 2; n <= 12; ++n) {
      Diagram d = braid_closure(2, std::vector<int>(n, 1));
      TwistPartition tp = twist_partition(d);
      Topology want = n == 2 ? Topology::Sphere : Topology::Annulus;
      c.check(tp.t == 1 && tp.regions.size() == 1 && tp.regions[0].topology == want,
              "(2," + std::to_string(n) + ") topology");
      c.check(detect_standard_2q(d) == n, "(2," + std::to_string(n) + ") detection");
    }
    int wide = 0;
    auto converse = [&](const Diagram& d) {
      DiagramFlags fl = diagram_flags(d);
      if (!fl.connected || !fl.r2_reduced || d.num_crossings() == 0) return;
      bool has = false;
      for (const auto& r : twist_partition(d).regions)
        has = has || r.topology == Topology::Annulus || r.topology == Topology::Sphere;
      if (!has) return;
      ++wide;
      c.check(detect_standard_2q(d).has_value(), serialize_pd(d));
    };
    for (const auto& s : samples) converse(s.d);
    for (const auto& d : closures) converse(preprocess(d).diagram);
    c.note(std::to_string(wide) + " generated diagrams with an annulus or sphere region");
    all = c.report(3) && all;
  }

  {
    Criterion c("volume constants");
    const VolumeConstants& k = constants();
    const double q = oracle::v3_quadrature(), g = oracle::four_catalan_series();
    c.check(std::abs(k.v3 - q) <= kConstantTol, "v3");
    c.check(std::abs(k.four_catalan - g) <= kConstantTol, "4G");
    char buf[200];
    std::snprintf(buf, sizeof buf, "v3 = %.16f (quadrature of 3 Lambda(pi/3): |diff| %.1e), 4G = %.16f (|diff| %.1e)", k.v3,
                  std::abs(k.v3 - q), k.four_catalan, std::abs(k.four_catalan - g));
    c.note(buf);
    all = c.report(4) && all;
  }

  {
    Criterion c("bound formulas");
    const double v3 = constants().v3;
    for (int t = 1; t <= 100; ++t) {
      VolumeBounds b = lackenby_bounds(t);
      c.check(b.lower_raw == v3 * (t - 2) && b.upper == 10 * v3 * (t - 1), "Lackenby t = " + std::to_string(t));
      c.check(altvol_bounds(t).upper.upper == 10 * v3 * (5 * t - 1), "AltVol t = " + std::to_string(t));
    }
    c.check(constants().four_catalan <= 40 * v3, "trefoil: 4G <= 40 v3");
    all = c.report(5) && all;
  }

  {
    Criterion c("hyperbolicity certificate");
    for (const auto& s : samples) {
      if (!s.error.empty()) continue;
      c.check(s.res.certificate.verdict == Verdict::Hyperbolic, tag(s));
      c.check(!detect_standard_2q(s.res.g), tag(s) + ": output is a standard (2,q) diagram");
    }
    for (int q = 2; q <= 12; ++q)
      c.check(certify_hyperbolic(braid_closure(2, std::vector<int>(q, 1))).verdict == Verdict::NotCertified,
              "(2," + std::to_string(q) + ") certified");
    all = c.report(6) && all;
  }

  {
    Criterion c("twist partition refinement");
    for (const auto& s : samples) {
      if (!s.error.empty()) continue;
      RefinementReport r = refinement_check(s.res.g, s.d);
      c.check(r.disjoint && r.contained && r.covers && r.refines, tag(s));
      c.check(r.size_P <= r.size_P_prime && r.size_P_prime <= r.t_G, tag(s) + ": sizes");
      c.check(r.t_G == oracle::twist_number(serialize_pd(s.res.g)), tag(s) + ": t(G)");
    }
    all = c.report(7) && all;
  }

  {
    Criterion c("round trip, validation and Euler characteristic");
    auto round_trip = [&](const Diagram& d, const std::string& t) {
      const std::string pd = serialize_pd(d);
      Diagram back = parse_pd(pd);
      c.check(serialize_pd(back) == pd && same_map(back, d), t + ": round trip");
    };
    for (const auto& e : corpus) round_trip(parse_pd(e.pd), e.name);
    for (const auto& s : samples) {
      const std::string t = tag(s);
      round_trip(s.d, t);
      c.check(validate_diagram(s.d).valid, t + ": invalid generator output");
      c.check(euler(serialize_pd(s.raw)) == 2, t + ": closure");
      c.check(euler(serialize_pd(s.d)) == 2, t + ": D");
      if (!s.error.empty()) continue;
      // PD text does not record which component is the augmenting one.
      const std::string g = serialize_pd(s.res.g);
      c.check(serialize_pd(parse_pd(g)) == g, t + ": G round trip");
      // Replay the construction stage by stage.
      CutSystem cs = build_cut_curves(s.d);
      Overlay ov = cs.overlay;
      Realization r = realize(s.d, ov);
      c.check(euler(serialize_pd(r.g)) == 2, t + ": unlink");
      while (r.g.augmenting_components().size() > 1) {
        MergeArc arc = find_merge_arc(s.d, ov, r);
        ov = type2_propagate(s.d, ov, r, arc);
        r = realize(s.d, ov);
        c.check(euler(serialize_pd(r.g)) == 2, t + ": finger");
        ov = type1_join(s.d, ov, r, arc.source_curve, arc.target_curve).overlay;
        r = realize(s.d, ov);
        c.check(euler(serialize_pd(r.g)) == 2, t + ": join");
      }
      c.check(euler(serialize_pd(s.res.g)) == 2, t + ": G");
    }
    all = c.report(8) && all;
  }

  {
    Criterion c("reduction to a fixpoint");
    auto test = [&](const Diagram& d, const std::string& t) {
      Reduced r = preprocess(d);
      const std::string pd = serialize_pd(r.diagram);
      c.check(!oracle::has_nugatory(pd) && !oracle::has_r2_bigon(pd), t + ": not a fixpoint");
      DiagramFlags fl = diagram_flags(r.diagram);
      c.check(fl.reduced && fl.r2_reduced, t + ": flags");
      int n = r.trace.crossings_before, tw = r.trace.t_before;
      bool mono = true;
      for (const auto& st : r.trace.steps) {
        mono = mono && st.crossings_after < n && st.t_after <= tw;
        n = st.crossings_after;
        tw = st.t_after;
      }
      c.check(mono && n == static_cast<int>(r.diagram.num_crossings()), t + ": not monotone");
    };
    for (const auto& e : corpus) test(parse_pd(e.pd), e.name);
    for (const auto& s : samples) test(s.raw, "raw " + tag(s));
    for (const auto& d : closures) test(d, serialize_pd(d));
    all = c.report(9) && all;
  }

  return all ? 0 : 1;
}
