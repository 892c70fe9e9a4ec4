#pragma once

#include <tuple>

#include "cevian/param.hpp"
#include "cevian/projective.hpp"

namespace cevian {

enum class Vertex { A, B, C };

constexpr Vertex next(Vertex v) {
  return v == Vertex::A ? Vertex::B : (v == Vertex::B ? Vertex::C : Vertex::A);
}

const char* to_string(Vertex v);

// The six parameters of the two-cevians-per-vertex construction: x, u from A,
// y, v from B, z, w from C. Degenerate combinations are diagnosed when used.
struct RouthConfig {
  Param x, y, z, u, v, w;
  friend bool operator==(const RouthConfig&, const RouthConfig&) = default;
};

enum class PairClass { Transversal, Parallel, Coincident };

const char* to_string(PairClass c);

// The three cevian pairs whose meets are P, Q, R.
enum class PairId { XV, YW, ZU };

const char* to_string(PairId id);

// A cevian pair that fails to meet in exactly one point. Parallel pairs meet
// at infinity; coincident pairs share a whole line.
class DegeneracyError : public Error {
 public:
  DegeneracyError(PairId pair, PairClass cls, const std::string& what)
      : Error(what), pair_(pair), cls_(cls) {}

  PairId pair() const { return pair_; }
  PairClass cls() const { return cls_; }

 private:
  PairId pair_;
  PairClass cls_;
};

class DegeneratePair : public DegeneracyError {
 public:
  DegeneratePair(PairId pair, PairClass cls);
};

class RatioUndefined : public DegeneracyError {
 public:
  RatioUndefined(PairId pair, PairClass cls);
};

/// Foot of the cevian from `vertex` with parameter s, on the opposite side
/// line: (q·First + p·Second : q + p) for s = (p : q), where First/Second are
/// the other two vertices in cyclic order. s = -1 gives the side's direction.
HPoint cevian_point(const Triangle& t, Vertex vertex, const Param& s);

/// Inverse of cevian_point on the side line; the side's point at infinity
/// maps to -1. Throws NotOnSideLine.
Param param_of_point(const Triangle& t, Vertex vertex, const HPoint& d);

/// Line joining `vertex` to its cevian point; for s = -1 the line through the
/// vertex parallel to the opposite side.
HLine cevian_line(const Triangle& t, Vertex vertex, const Param& s);

/// Homogenized pair factor 1 + s1 + s1·s2 for cevians from cyclically
/// adjacent vertices, as in the pair (A with s1, B with s2).
Integer pair_factor(const Param& s1, const Param& s2);

PairClass pair_class(const Param& s1, const Param& s2);

/// P = AA_x ∧ BB_v, Q = BB_y ∧ CC_w, R = CC_z ∧ AA_u. All finite when every
/// pair is transversal; otherwise throws DegeneratePair for the first bad
/// pair in the order XV, YW, ZU.
std::tuple<HPoint, HPoint, HPoint> generalized_routh_points(const Triangle& t,
                                                            const RouthConfig& cfg);

}  // namespace cevian
