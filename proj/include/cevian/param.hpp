#pragma once

#include <string>

#include "cevian/errors.hpp"
#include "cevian/rational.hpp"

namespace cevian {

/// Where a parameter value places the cevian foot on the extended side line.
enum class PositionClass { AtB, AtC, BetweenBC, BeyondB, BeyondC, AtInfinity };

const char* to_string(PositionClass c);

// A point of the extended parameter line R ∪ {inf}, stored projectively as
// (p : q) with q >= 0 and gcd(|p|, q) = 1; q = 0 encodes the single infinite
// value as (1 : 0). Keeping the pair instead of a tagged union lets every
// downstream formula stay a polynomial in (p, q).
class Param {
 public:
  Param() : p_(0), q_(1) {}
  Param(long value) : p_(value), q_(1) {}  // NOLINT: implicit by design
  explicit Param(const Rational& value) : p_(value.get_num()), q_(value.get_den()) {}

  static Param infinity();

  const Integer& num() const { return p_; }
  const Integer& den() const { return q_; }
  bool is_infinite() const { return q_ == 0; }

  /// Finite value p/q. Throws InfinitePoint on the infinite parameter.
  Rational value() const;

  friend bool operator==(const Param&, const Param&) = default;

  /// Text form: "3", "-4/7", "inf".
  std::string str() const;
  static Param parse(const std::string& text);

 private:
  friend Param make_param(const Integer& num, const Integer& den);
  Integer p_, q_;
};

/// Canonicalizes num/den; any den = 0 yields the infinite value.
/// Throws BothZero when num = den = 0.
Param make_param(const Integer& num, const Integer& den);

PositionClass classify_position(const Param& t);

}  // namespace cevian
