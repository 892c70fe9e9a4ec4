#include "cevian/param.hpp"

#include <cctype>

namespace cevian {

const char* to_string(PositionClass c) {
  switch (c) {
    case PositionClass::AtB: return "at-B";
    case PositionClass::AtC: return "at-C";
    case PositionClass::BetweenBC: return "between";
    case PositionClass::BeyondB: return "beyond-B";
    case PositionClass::BeyondC: return "beyond-C";
    case PositionClass::AtInfinity: return "at-infinity";
  }
  return "?";
}

Param Param::infinity() {
  Param t;
  t.p_ = 1;
  t.q_ = 0;
  return t;
}

Rational Param::value() const {
  if (is_infinite()) {
    throw InfinitePoint();
  }
  return make_rational(p_, q_);
}

std::string Param::str() const {
  if (is_infinite()) {
    return "inf";
  }
  std::string out = p_.get_str();
  if (q_ != 1) {
    out += "/" + q_.get_str();
  }
  return out;
}

Param make_param(const Integer& num, const Integer& den) {
  if (num == 0 && den == 0) {
    throw BothZero();
  }
  Param t;
  if (den == 0) {
    return Param::infinity();
  }
  Integer g = gcd(num, den);
  t.p_ = num / g;
  t.q_ = den / g;
  if (t.q_ < 0) {
    t.p_ = -t.p_;
    t.q_ = -t.q_;
  }
  return t;
}

namespace {

// [+-]?digits, at least one digit, no leading junk past the sign. The sign
// is applied by hand because mpz rejects a leading '+'.
bool parse_integer(const std::string& text, Integer& out) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) return false;
  for (size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  }
  out = Integer(text.substr(i), 10);
  if (negative) {
    out = -out;
  }
  return true;
}

}  // namespace

Param Param::parse(const std::string& text) {
  if (text == "inf" || text == "-inf" || text == "+inf") {
    return infinity();
  }
  Integer num, den = 1;
  size_t slash = text.find('/');
  bool ok = false;
  if (slash == std::string::npos) {
    ok = parse_integer(text, num);
  } else {
    ok = parse_integer(text.substr(0, slash), num) &&
         parse_integer(text.substr(slash + 1), den) && den != 0;
  }
  if (!ok) {
    throw ParseError(text);
  }
  return make_param(num, den);
}

PositionClass classify_position(const Param& t) {
  if (t.is_infinite()) return PositionClass::AtC;
  if (t.num() == 0) return PositionClass::AtB;
  if (t.num() + t.den() == 0) return PositionClass::AtInfinity;
  if (t.num() > 0) return PositionClass::BetweenBC;
  return (t.num() + t.den() > 0) ? PositionClass::BeyondB : PositionClass::BeyondC;
}

}  // namespace cevian
