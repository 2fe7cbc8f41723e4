#include "altknot/volume.hpp"

#include <cmath>
#include <numbers>

#include "altknot/augmentation.hpp"
#include "altknot/error.hpp"

namespace altknot {

namespace {

// Clausen function Cl2(x) = sum sin(kx)/k^2, summed with the Bernoulli
// expansion for |x| <= pi/2 (converges fast there):
//   Cl2(x) = x - x log|x| + sum_{k>=1} |B_2k| x^(2k+1) / (2k (2k+1)!)
double clausen2(double x) {
  static const double bern[] = {1.0 / 6,          1.0 / 30,           1.0 / 42,          1.0 / 30,
                                5.0 / 66,         691.0 / 2730,       7.0 / 6,           3617.0 / 510,
                                43867.0 / 798,    174611.0 / 330,     854513.0 / 138,    236364091.0 / 2730,
                                8553103.0 / 6,    23749461029.0 / 870, 8615841276005.0 / 14322};
  double sum = x - x * std::log(std::abs(x));
  double xp = x;      // x^(2k+1)
  double fact = 1.0;  // (2k+1)!
  for (int k = 1; k <= 15; ++k) {
    xp *= x * x;
    fact *= (2.0 * k) * (2.0 * k + 1);
    sum += bern[k - 1] * xp / (2.0 * k * fact);
  }
  return sum;
}

VolumeConstants compute() {
  VolumeConstants c;
  // v3 = 3 Lambda(pi/3) = 2 Lambda(pi/6), and Lambda(x) = Cl2(2x) / 2.
  c.v3 = clausen2(std::numbers::pi / 3);
  // G = Cl2(pi/2).
  c.four_catalan = 4.0 * clausen2(std::numbers::pi / 2);
  return c;
}

}  // namespace

const VolumeConstants& constants() {
  static const VolumeConstants c = compute();
  return c;
}

const char* bound_name(BoundKind k) noexcept {
  switch (k) {
    case BoundKind::Lackenby: return "lackenby";
    case BoundKind::AltVolUpper: return "altvol_upper";
    case BoundKind::AltVolLower: return "altvol_lower";
  }
  return "?";
}

VolumeBounds lackenby_bounds(int t) {
  if (t < 1) throw precondition_error("DomainError", "twist number must be at least 1");
  const double v3 = constants().v3;
  VolumeBounds b;
  b.kind = BoundKind::Lackenby;
  b.t = t;
  b.lower_raw = v3 * (t - 2);
  b.lower = std::max(0.0, b.lower_raw);
  b.upper = 10 * v3 * (t - 1);
  return b;
}

AltVolBounds altvol_bounds(int t_diagram, std::optional<int> t_lower_claim) {
  if (t_diagram < 1) throw precondition_error("DomainError", "twist number must be at least 1");
  const double v3 = constants().v3;
  AltVolBounds out;
  out.upper.kind = BoundKind::AltVolUpper;
  out.upper.t = t_diagram;
  out.upper.upper = 10 * v3 * (5 * t_diagram - 1);
  if (t_lower_claim) {
    if (*t_lower_claim < 1) throw precondition_error("DomainError", "claimed twist number must be at least 1");
    VolumeBounds lo;
    lo.kind = BoundKind::AltVolLower;
    lo.t = *t_lower_claim;
    lo.lower_raw = v3 * (*t_lower_claim - 2);
    lo.lower = std::max(0.0, lo.lower_raw);
    lo.upper = out.upper.upper;
    out.lower = lo;
  }
  return out;
}

VolumeReport volume_report(const AugmentationResult& res) {
  if (res.certificate.verdict != Verdict::Hyperbolic)
    throw precondition_error("NotCertified", "augmentation is not certified hyperbolic");
  VolumeReport vr;
  vr.v3 = constants().v3;
  vr.t_D = res.t_D;
  vr.t_G = res.t_G;
  vr.link = lackenby_bounds(res.t_G);
  vr.altvol = altvol_bounds(res.t_D);
  vr.audit = res.t_D <= res.t_G && res.t_G <= 5 * res.t_D && vr.link.upper <= vr.altvol.upper.upper;
  return vr;
}

}  // namespace altknot
