#include "cevian/cevians.hpp"

#include <array>

namespace cevian {

const char* to_string(Vertex v) {
  switch (v) {
    case Vertex::A: return "A";
    case Vertex::B: return "B";
    case Vertex::C: return "C";
  }
  return "?";
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Transversal: return "transversal";
    case PairClass::Parallel: return "parallel";
    case PairClass::Coincident: return "coincident";
  }
  return "?";
}

const char* to_string(PairId id) {
  switch (id) {
    case PairId::XV: return "(x, v)";
    case PairId::YW: return "(y, w)";
    case PairId::ZU: return "(z, u)";
  }
  return "?";
}

namespace {

std::string degeneracy_message(PairId pair, PairClass cls) {
  std::string out = "cevian pair ";
  out += to_string(pair);
  out += cls == PairClass::Parallel ? " is parallel: the intersection is at infinity"
                                    : " is coincident: the intersection is not unique";
  return out;
}

}  // namespace

DegeneratePair::DegeneratePair(PairId pair, PairClass cls)
    : DegeneracyError(pair, cls, degeneracy_message(pair, cls)) {}

RatioUndefined::RatioUndefined(PairId pair, PairClass cls)
    : DegeneracyError(pair, cls, degeneracy_message(pair, cls)) {}

HPoint cevian_point(const Triangle& t, Vertex vertex, const Param& s) {
  const Vec2& first = t.vertex(static_cast<int>(next(vertex)));
  const Vec2& second = t.vertex(static_cast<int>(next(next(vertex))));
  Rational p(s.num()), q(s.den());
  return HPoint::from_ratios(q * first.x + p * second.x,
                             q * first.y + p * second.y, q + p);
}

Param param_of_point(const Triangle& t, Vertex vertex, const HPoint& d) {
  HPoint first = HPoint::from_affine(t.vertex(static_cast<int>(next(vertex))));
  HPoint second = HPoint::from_affine(t.vertex(static_cast<int>(next(next(vertex)))));
  if (!collinear(d, first, second)) {
    throw NotOnSideLine();
  }
  std::array<Integer, 3> F{first.X, first.Y, first.W};
  std::array<Integer, 3> S{second.X, second.Y, second.W};
  std::array<Integer, 3> D{d.X, d.Y, d.W};
  // Solve d ~ alpha·F + beta·S through the first nonsingular coordinate pair.
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    if (F[i] * S[j] - F[j] * S[i] == 0) continue;
    Integer alpha = D[i] * S[j] - D[j] * S[i];
    Integer beta = F[i] * D[j] - F[j] * D[i];
    // Weights carried by the affine-combination form of cevian_point.
    return make_param(beta * S[2], alpha * F[2]);
  }
  throw NotOnSideLine();  // unreachable: triangle vertices are distinct
}

HLine cevian_line(const Triangle& t, Vertex vertex, const Param& s) {
  HPoint apex = HPoint::from_affine(t.vertex(static_cast<int>(vertex)));
  return join(apex, cevian_point(t, vertex, s));
}

Integer pair_factor(const Param& s1, const Param& s2) {
  return s1.den() * s2.den() + s1.num() * s2.den() + s1.num() * s2.num();
}

PairClass pair_class(const Param& s1, const Param& s2) {
  if (pair_factor(s1, s2) != 0) {
    return PairClass::Transversal;
  }
  bool coincide = s1.num() == 0 && s2.is_infinite();
  return coincide ? PairClass::Coincident : PairClass::Parallel;
}

std::tuple<HPoint, HPoint, HPoint> generalized_routh_points(const Triangle& t,
                                                            const RouthConfig& cfg) {
  const std::array<std::tuple<PairId, const Param*, const Param*>, 3> pairs{
      std::tuple{PairId::XV, &cfg.x, &cfg.v},
      std::tuple{PairId::YW, &cfg.y, &cfg.w},
      std::tuple{PairId::ZU, &cfg.z, &cfg.u},
  };
  for (const auto& [id, s1, s2] : pairs) {
    PairClass cls = pair_class(*s1, *s2);
    if (cls != PairClass::Transversal) {
      throw DegeneratePair(id, cls);
    }
  }
  HPoint p = meet(cevian_line(t, Vertex::A, cfg.x), cevian_line(t, Vertex::B, cfg.v));
  HPoint q = meet(cevian_line(t, Vertex::B, cfg.y), cevian_line(t, Vertex::C, cfg.w));
  HPoint r = meet(cevian_line(t, Vertex::C, cfg.z), cevian_line(t, Vertex::A, cfg.u));
  return {std::move(p), std::move(q), std::move(r)};
}

}  // namespace cevian
