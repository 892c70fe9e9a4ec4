#include "cevian/projective.hpp"

namespace cevian {
namespace {

// Shared canonical form of an integer triple: divide by the gcd, then fix the
// sign so the last coordinate is positive, falling back to the first nonzero
// of the leading pair. Throws on the zero triple.
void canonicalize(Integer& x, Integer& y, Integer& w) {
  if (x == 0 && y == 0 && w == 0) {
    throw ZeroCoordinates();
  }
  Integer g = gcd(gcd(x, y), w);
  x /= g;
  y /= g;
  w /= g;
  bool flip = (w != 0) ? (w < 0) : (x != 0 ? x < 0 : y < 0);
  if (flip) {
    x = -x;
    y = -y;
    w = -w;
  }
}

// (x, y, w) -> integer triple by clearing denominators.
void clear_denominators(const Rational& x, const Rational& y, const Rational& w,
                        Integer& ox, Integer& oy, Integer& ow) {
  ox = x.get_num() * y.get_den() * w.get_den();
  oy = y.get_num() * x.get_den() * w.get_den();
  ow = w.get_num() * x.get_den() * y.get_den();
}

Integer det3(const Integer& a, const Integer& b, const Integer& c,
             const Integer& d, const Integer& e, const Integer& f,
             const Integer& g, const Integer& h, const Integer& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

HPoint::HPoint(Integer x, Integer y, Integer w) : X(std::move(x)), Y(std::move(y)), W(std::move(w)) {
  canonicalize(X, Y, W);
}

HPoint HPoint::from_affine(const Vec2& p) {
  return HPoint(p.x.get_num() * p.y.get_den(), p.y.get_num() * p.x.get_den(),
                p.x.get_den() * p.y.get_den());
}

HPoint HPoint::from_ratios(const Rational& x, const Rational& y, const Rational& w) {
  Integer ox, oy, ow;
  clear_denominators(x, y, w, ox, oy, ow);
  return HPoint(ox, oy, ow);
}

Vec2 HPoint::affine() const {
  if (at_infinity()) {
    throw InfinitePoint();
  }
  return Vec2{make_rational(X, W), make_rational(Y, W)};
}

HLine::HLine(Integer a0, Integer b0, Integer c0) : a(std::move(a0)), b(std::move(b0)), c(std::move(c0)) {
  canonicalize(a, b, c);
}

HLine HLine::from_ratios(const Rational& a, const Rational& b, const Rational& c) {
  Integer oa, ob, oc;
  clear_denominators(a, b, c, oa, ob, oc);
  return HLine(oa, ob, oc);
}

bool incident(const HPoint& p, const HLine& l) {
  return l.a * p.X + l.b * p.Y + l.c * p.W == 0;
}

HLine join(const HPoint& p, const HPoint& q) {
  Integer a = p.Y * q.W - p.W * q.Y;
  Integer b = p.W * q.X - p.X * q.W;
  Integer c = p.X * q.Y - p.Y * q.X;
  if (a == 0 && b == 0 && c == 0) {
    throw IdenticalPoints();
  }
  return HLine(std::move(a), std::move(b), std::move(c));
}

HPoint meet(const HLine& l, const HLine& m) {
  Integer x = l.b * m.c - l.c * m.b;
  Integer y = l.c * m.a - l.a * m.c;
  Integer w = l.a * m.b - l.b * m.a;
  if (x == 0 && y == 0 && w == 0) {
    throw IdenticalLines();
  }
  return HPoint(std::move(x), std::move(y), std::move(w));
}

bool collinear(const HPoint& p, const HPoint& q, const HPoint& r) {
  return det3(p.X, p.Y, p.W, q.X, q.Y, q.W, r.X, r.Y, r.W) == 0;
}

Rational signed_area(const Vec2& p, const Vec2& q, const Vec2& r) {
  Rational twice = (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y);
  return twice / 2;
}

Rational signed_area(const HPoint& p, const HPoint& q, const HPoint& r) {
  if (p.at_infinity() || q.at_infinity() || r.at_infinity()) {
    throw InfinitePoint();
  }
  Integer num = det3(p.X, p.Y, p.W, q.X, q.Y, q.W, r.X, r.Y, r.W);
  // Canonical W > 0 keeps the determinant's sign equal to the orientation.
  return make_rational(num, 2 * p.W * q.W * r.W);
}

AffineMap::AffineMap(Rational m00, Rational m01, Rational m10, Rational m11,
                     Rational tx, Rational ty)
    : m00_(std::move(m00)), m01_(std::move(m01)), m10_(std::move(m10)),
      m11_(std::move(m11)), tx_(std::move(tx)), ty_(std::move(ty)) {
  if (det() == 0) {
    throw SingularMap();
  }
}

AffineMap AffineMap::identity() { return AffineMap(1, 0, 0, 1, 0, 0); }

Rational AffineMap::det() const { return m00_ * m11_ - m01_ * m10_; }

Vec2 AffineMap::apply(const Vec2& p) const {
  return Vec2{m00_ * p.x + m01_ * p.y + tx_, m10_ * p.x + m11_ * p.y + ty_};
}

Vec2 AffineMap::apply_linear(const Vec2& d) const {
  return Vec2{m00_ * d.x + m01_ * d.y, m10_ * d.x + m11_ * d.y};
}

HPoint AffineMap::apply(const HPoint& p) const {
  Rational x(p.X), y(p.Y), w(p.W);
  return HPoint::from_ratios(m00_ * x + m01_ * y + tx_ * w,
                             m10_ * x + m11_ * y + ty_ * w, w);
}

Triangle::Triangle(Vec2 a, Vec2 b, Vec2 c) : v_{std::move(a), std::move(b), std::move(c)} {
  if (signed_area(v_[0], v_[1], v_[2]) == 0) {
    throw CollinearVertices();
  }
}

Triangle Triangle::canonical() {
  return Triangle(Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1});
}

Rational Triangle::area() const { return signed_area(v_[0], v_[1], v_[2]); }

Vec2 Triangle::centroid() const {
  return Vec2{(v_[0].x + v_[1].x + v_[2].x) / 3, (v_[0].y + v_[1].y + v_[2].y) / 3};
}

Triangle apply_affine(const AffineMap& f, const Triangle& t) {
  return Triangle(f.apply(t.a()), f.apply(t.b()), f.apply(t.c()));
}

}  // namespace cevian
