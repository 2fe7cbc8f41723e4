#pragma once

// Volume constants and the twist-number volume bounds.

#include <optional>

namespace altknot {

struct AugmentationResult;

struct VolumeConstants {
  double v3 = 0;            // regular ideal tetrahedron
  double four_catalan = 0;  // 4G
};

const VolumeConstants& constants();

enum class BoundKind { Lackenby, AltVolUpper, AltVolLower };
const char* bound_name(BoundKind k) noexcept;

struct VolumeBounds {
  BoundKind kind = BoundKind::Lackenby;
  int t = 0;
  double lower_raw = 0;
  double lower = 0;
  double upper = 0;
};

// Throws DomainError for t < 1.
VolumeBounds lackenby_bounds(int t);

struct AltVolBounds {
  VolumeBounds upper;
  std::optional<VolumeBounds> lower;
};

// The lower bound needs t(K) itself, so it is only returned for a claimed
// lower bound on the twist number.
AltVolBounds altvol_bounds(int t_diagram, std::optional<int> t_lower_claim = std::nullopt);

struct VolumeReport {
  double v3 = 0;
  int t_D = 0;
  int t_G = 0;
  VolumeBounds link;    // vol of the complement of K and the curve
  AltVolBounds altvol;
  bool audit = false;   // 10 v3 (t_G - 1) <= 10 v3 (5 t_D - 1)
};

// Throws NotCertified unless the augmentation is certified hyperbolic.
VolumeReport volume_report(const AugmentationResult& res);

}  // namespace altknot
