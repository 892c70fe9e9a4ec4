#pragma once

#include <array>

#include "cevian/errors.hpp"
#include "cevian/rational.hpp"

namespace cevian {

struct Vec2 {
  Rational x, y;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// Homogeneous point (X : Y : W), canonical: gcd of absolute values is 1 and
// either W > 0, or W = 0 with the first nonzero of (X, Y) positive. W = 0 is
// a point at infinity (a direction).
struct HPoint {
  Integer X, Y, W;

  HPoint(Integer x, Integer y, Integer w);  // canonicalizes; throws ZeroCoordinates

  static HPoint from_affine(const Vec2& p);
  static HPoint from_ratios(const Rational& x, const Rational& y, const Rational& w);

  bool at_infinity() const { return W == 0; }
  Vec2 affine() const;  // throws InfinitePoint when W = 0

  friend bool operator==(const HPoint&, const HPoint&) = default;
};

// Line aX + bY + cW = 0, same canonicalization rule applied to (a, b, c).
struct HLine {
  Integer a, b, c;

  HLine(Integer a0, Integer b0, Integer c0);  // canonicalizes; throws ZeroCoordinates

  static HLine from_ratios(const Rational& a, const Rational& b, const Rational& c);

  friend bool operator==(const HLine&, const HLine&) = default;
};

bool incident(const HPoint& p, const HLine& l);

HLine join(const HPoint& p, const HPoint& q);  // throws IdenticalPoints
HPoint meet(const HLine& l, const HLine& m);   // throws IdenticalLines

bool collinear(const HPoint& p, const HPoint& q, const HPoint& r);

Rational signed_area(const Vec2& p, const Vec2& q, const Vec2& r);
/// Throws InfinitePoint when any argument has W = 0.
Rational signed_area(const HPoint& p, const HPoint& q, const HPoint& r);

// Invertible map p -> M p + b. The linear part alone transports directions.
class AffineMap {
 public:
  AffineMap(Rational m00, Rational m01, Rational m10, Rational m11,
            Rational tx, Rational ty);  // throws SingularMap when det(M) = 0

  static AffineMap identity();

  Rational det() const;
  Vec2 apply(const Vec2& p) const;
  Vec2 apply_linear(const Vec2& d) const;
  HPoint apply(const HPoint& p) const;  // directions move by the linear part

 private:
  Rational m00_, m01_, m10_, m11_, tx_, ty_;
};

class Triangle {
 public:
  Triangle(Vec2 a, Vec2 b, Vec2 c);  // throws CollinearVertices

  static Triangle canonical();  // (0,0), (1,0), (0,1)

  const Vec2& vertex(int i) const { return v_[static_cast<size_t>(i)]; }
  const Vec2& a() const { return v_[0]; }
  const Vec2& b() const { return v_[1]; }
  const Vec2& c() const { return v_[2]; }

  Rational area() const;  // signed
  Vec2 centroid() const;

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::array<Vec2, 3> v_;
};

Triangle apply_affine(const AffineMap& f, const Triangle& t);

}  // namespace cevian
