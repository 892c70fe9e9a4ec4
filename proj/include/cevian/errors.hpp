#pragma once

#include <stdexcept>
#include <string>

namespace cevian {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Construction of a parameter from the pair (0, 0).
class BothZero : public Error {
 public:
  BothZero() : Error("parameter (0, 0) does not name a point of the extended line") {}
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("rational with zero denominator") {}
};

// Homogeneous coordinate triple (0, 0, 0).
class ZeroCoordinates : public Error {
 public:
  ZeroCoordinates() : Error("homogeneous coordinates must not all vanish") {}
};

class IdenticalPoints : public Error {
 public:
  IdenticalPoints() : Error("join of two identical projective points") {}
};

class IdenticalLines : public Error {
 public:
  IdenticalLines() : Error("meet of two identical projective lines") {}
};

class InfinitePoint : public Error {
 public:
  InfinitePoint() : Error("operation requires finite points") {}
};

class SingularMap : public Error {
 public:
  SingularMap() : Error("affine map with singular linear part") {}
};

class CollinearVertices : public Error {
 public:
  CollinearVertices() : Error("triangle vertices are collinear") {}
};

class NotOnSideLine : public Error {
 public:
  NotOnSideLine() : Error("point does not lie on the requested side line") {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& text) : Error("cannot parse \"" + text + "\"") {}
};

}  // namespace cevian
