#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cevian/formulas.hpp"

namespace cevian {

// Degeneracy diagnosis shared by both computation paths.
struct Degeneracy {
  PairId pair;
  PairClass cls;
  friend bool operator==(const Degeneracy&, const Degeneracy&) = default;
};

struct VerificationReport {
  RouthConfig config;
  std::variant<RatioResult, Degeneracy> closed_form;
  std::variant<Rational, Degeneracy> oracle_value;
  bool agree;
};

/// Area ratio computed from line intersections and a coordinate determinant,
/// never from the closed-form polynomial: builds the six cevian lines,
/// diagnoses degenerate pairs geometrically (equal lines coincide; meets at
/// infinity are parallel), then divides signed areas. Throws DegeneratePair.
Rational ratio_via_coordinates(const Triangle& t, const RouthConfig& cfg);

/// Runs both paths and records agreement: equal values, or the same
/// degeneracy diagnosis. Never throws.
VerificationReport verify_config(const Triangle& t, const RouthConfig& cfg);

/// True iff ratio_via_coordinates is identical on the canonical triangle and
/// on every image of it under the given maps.
bool affine_invariance_check(const RouthConfig& cfg, const std::vector<AffineMap>& maps);

// Deterministic test corpora. A fixed seed reproduces the same sequence on
// every platform (raw 64-bit draws reduced by modulus, no distribution
// objects). The config corpus starts with a fixed prefix that pins the
// special parameter values 0, inf, -1 and both degenerate pair kinds.
std::vector<RouthConfig> config_corpus(std::uint64_t seed, std::size_t count);
std::vector<AffineMap> affine_map_corpus(std::uint64_t seed, std::size_t count);

}  // namespace cevian
