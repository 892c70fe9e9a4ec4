#include "cevian/oracle.hpp"

#include <random>

namespace cevian {

Rational ratio_via_coordinates(const Triangle& t, const RouthConfig& cfg) {
  const std::tuple<PairId, HLine, HLine> pairs[] = {
      {PairId::XV, cevian_line(t, Vertex::A, cfg.x), cevian_line(t, Vertex::B, cfg.v)},
      {PairId::YW, cevian_line(t, Vertex::B, cfg.y), cevian_line(t, Vertex::C, cfg.w)},
      {PairId::ZU, cevian_line(t, Vertex::C, cfg.z), cevian_line(t, Vertex::A, cfg.u)},
  };
  std::vector<HPoint> corners;
  for (const auto& [id, l1, l2] : pairs) {
    if (l1 == l2) {
      throw DegeneratePair(id, PairClass::Coincident);
    }
    HPoint m = meet(l1, l2);
    if (m.at_infinity()) {
      throw DegeneratePair(id, PairClass::Parallel);
    }
    corners.push_back(std::move(m));
  }
  return signed_area(corners[0], corners[1], corners[2]) / t.area();
}

VerificationReport verify_config(const Triangle& t, const RouthConfig& cfg) {
  std::variant<RatioResult, Degeneracy> closed = Degeneracy{};
  std::variant<Rational, Degeneracy> oracle = Degeneracy{};
  try {
    closed = generalized_ratio(cfg);
  } catch (const RatioUndefined& e) {
    closed = Degeneracy{e.pair(), e.cls()};
  }
  try {
    oracle = ratio_via_coordinates(t, cfg);
  } catch (const DegeneratePair& e) {
    oracle = Degeneracy{e.pair(), e.cls()};
  }
  bool agree = false;
  if (closed.index() == 0 && oracle.index() == 0) {
    agree = std::get<0>(closed).value == std::get<0>(oracle);
  } else if (closed.index() == 1 && oracle.index() == 1) {
    agree = std::get<1>(closed) == std::get<1>(oracle);
  }
  return VerificationReport{cfg, std::move(closed), std::move(oracle), agree};
}

bool affine_invariance_check(const RouthConfig& cfg, const std::vector<AffineMap>& maps) {
  Triangle base = Triangle::canonical();
  Rational reference = ratio_via_coordinates(base, cfg);
  for (const AffineMap& f : maps) {
    if (ratio_via_coordinates(apply_affine(f, base), cfg) != reference) {
      return false;
    }
  }
  return true;
}

namespace {

// Uniform draw from [lo, hi] by modulus; deterministic across platforms.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Param draw_param(std::mt19937_64& rng) {
  // Roughly 3/16 of draws land on a special value; they exercise the side
  // endpoints and the parallel cevian.
  switch (rng() % 16) {
    case 0: return Param(0);
    case 1: return Param::infinity();
    case 2: return Param(-1);
    default: return make_param(draw(rng, -20, 20), draw(rng, 1, 20));
  }
}

}  // namespace

std::vector<RouthConfig> config_corpus(std::uint64_t seed, std::size_t count) {
  const Param zero(0), one(1), minus_one(-1), inf = Param::infinity();
  // Pinned prefix: special values in every slot, a coincident pair, a
  // parallel pair, and the concurrent-medians case.
  const RouthConfig pinned[] = {
      {zero, inf, minus_one, one, one, one},
      {one, zero, inf, minus_one, one, one},
      {minus_one, one, zero, inf, one, one},
      {inf, minus_one, one, zero, one, one},
      {one, one, minus_one, inf, zero, one},
      {one, one, one, one, minus_one, inf},
      {zero, one, one, one, inf, one},       // pair (x, v) coincident
      {inf, one, one, one, minus_one, one},  // pair (x, v) parallel
      {one, zero, inf, one, one, one},
      {one, one, one, one, one, one},
  };
  std::vector<RouthConfig> out;
  out.reserve(count);
  for (const RouthConfig& cfg : pinned) {
    if (out.size() == count) return out;
    out.push_back(cfg);
  }
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    out.push_back(RouthConfig{draw_param(rng), draw_param(rng), draw_param(rng),
                              draw_param(rng), draw_param(rng), draw_param(rng)});
  }
  return out;
}

std::vector<AffineMap> affine_map_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<AffineMap> out;
  out.reserve(count);
  if (count > 0) out.push_back(AffineMap::identity());
  if (count > 1) out.push_back(AffineMap(0, 1, 1, 0, 0, 0));  // reflection
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    long m00 = draw(rng, -5, 5), m01 = draw(rng, -5, 5);
    long m10 = draw(rng, -5, 5), m11 = draw(rng, -5, 5);
    if (m00 * m11 - m01 * m10 == 0) continue;
    out.push_back(AffineMap(m00, m01, m10, m11, draw(rng, -5, 5), draw(rng, -5, 5)));
  }
  return out;
}

}  // namespace cevian
