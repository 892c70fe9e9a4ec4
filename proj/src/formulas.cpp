#include "cevian/formulas.hpp"

namespace cevian {
namespace {

// Throws RatioUndefined for the first vanishing pair factor (order XV, YW,
// ZU), then returns the product of all three.
Integer checked_denominator(const RouthConfig& cfg) {
  const std::tuple<PairId, const Param&, const Param&> pairs[] = {
      {PairId::XV, cfg.x, cfg.v},
      {PairId::YW, cfg.y, cfg.w},
      {PairId::ZU, cfg.z, cfg.u},
  };
  Integer product = 1;
  for (const auto& [id, s1, s2] : pairs) {
    Integer f = pair_factor(s1, s2);
    if (f == 0) {
      throw RatioUndefined(id, pair_class(s1, s2));
    }
    product *= f;
  }
  return product;
}

// Homogenization of 1 - xyw - xzv - uyz + xyz + xyzuvw: each monomial takes
// the numerator of the parameters it contains and the denominator of those
// it lacks, so every term has total degree one in each (p, q) pair.
Integer numerator(const RouthConfig& cfg) {
  const Integer &px = cfg.x.num(), &qx = cfg.x.den();
  const Integer &py = cfg.y.num(), &qy = cfg.y.den();
  const Integer &pz = cfg.z.num(), &qz = cfg.z.den();
  const Integer &pu = cfg.u.num(), &qu = cfg.u.den();
  const Integer &pv = cfg.v.num(), &qv = cfg.v.den();
  const Integer &pw = cfg.w.num(), &qw = cfg.w.den();
  return qx * qy * qz * qu * qv * qw
       - px * py * pw * (qz * qu * qv)
       - px * pz * pv * (qy * qu * qw)
       - pu * py * pz * (qx * qv * qw)
       + px * py * pz * (qu * qv * qw)
       + px * py * pz * pu * pv * pw;
}

RatioResult ratio_from(const Integer& num, const Integer& den) {
  return RatioResult{make_rational(num, den), num == 0};
}

}  // namespace

RatioResult generalized_ratio(const RouthConfig& cfg) {
  Integer den = checked_denominator(cfg);
  return ratio_from(numerator(cfg), den);
}

RatioResult cevial_ratio(const Param& x, const Param& y, const Param& z) {
  const Param zero(0);
  checked_denominator(RouthConfig{x, y, z, zero, zero, zero});
  Integer num = x.num() * y.num() * z.num() + x.den() * y.den() * z.den();
  Integer den = (x.den() + x.num()) * (y.den() + y.num()) * (z.den() + z.num());
  return ratio_from(num, den);
}

RatioResult routh_ratio(const Param& x, const Param& y, const Param& z) {
  checked_denominator(RouthConfig{x, y, z, x, y, z});
  Integer diff = x.num() * y.num() * z.num() - x.den() * y.den() * z.den();
  Integer den = pair_factor(x, y) * pair_factor(y, z) * pair_factor(z, x);
  return ratio_from(diff * diff, den);
}

bool is_degenerate(const RouthConfig& cfg) {
  checked_denominator(cfg);
  return numerator(cfg) == 0;
}

bool ceva_concurrent(const Param& x, const Param& y, const Param& z) {
  checked_denominator(RouthConfig{x, y, z, x, y, z});
  return x.num() * y.num() * z.num() == x.den() * y.den() * z.den();
}

bool menelaus_collinear(const Param& x, const Param& y, const Param& z) {
  const Param zero(0);
  checked_denominator(RouthConfig{x, y, z, zero, zero, zero});
  return x.num() * y.num() * z.num() == -(x.den() * y.den() * z.den());
}

}  // namespace cevian
