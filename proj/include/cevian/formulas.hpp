#pragma once

#include "cevian/cevians.hpp"

namespace cevian {

// Signed area ratio of the inner triangle to its host. The numerator of the
// closed form vanishes exactly when the three intersection points are
// collinear (or equal), so the flag and a zero value travel together.
struct RatioResult {
  Rational value;
  bool degenerate_numerator;
  friend bool operator==(const RatioResult&, const RatioResult&) = default;
};

/// Closed-form signed ratio area(PQR)/area(ABC) for the six-cevian
/// construction, evaluated as a polynomial in the parameters' (p, q) pairs so
/// infinite parameters need no limits. Throws RatioUndefined when a cevian
/// pair fails to meet in one point.
RatioResult generalized_ratio(const RouthConfig& cfg);

/// Ratio for the triangle A_xB_yC_z cut off by one point per side
/// (u = v = w = 0 specialization): (xyz + 1)/((1+x)(1+y)(1+z)).
RatioResult cevial_ratio(const Param& x, const Param& y, const Param& z);

/// Ratio for the one-cevian-per-vertex triangle (u = x, v = y, w = z
/// specialization): (xyz - 1)^2 / ((1+x+xy)(1+y+yz)(1+z+zx)).
RatioResult routh_ratio(const Param& x, const Param& y, const Param& z);

/// True iff P, Q, R are collinear (the closed form's numerator vanishes).
bool is_degenerate(const RouthConfig& cfg);

/// Cevians AA_x, BB_y, CC_z are concurrent iff xyz = 1 (homogenized).
bool ceva_concurrent(const Param& x, const Param& y, const Param& z);

/// Points A_x, B_y, C_z are collinear iff xyz = -1 (homogenized).
bool menelaus_collinear(const Param& x, const Param& y, const Param& z);

}  // namespace cevian
