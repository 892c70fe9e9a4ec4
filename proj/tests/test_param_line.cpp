#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cevian/param.hpp"

using namespace cevian;

TEST_CASE("construction canonicalizes sign and gcd") {
  Param t = make_param(1, 2);
  CHECK(t.num() == 1);
  CHECK(t.den() == 2);

  Param inf = make_param(3, 0);
  CHECK(inf.is_infinite());
  CHECK(inf.num() == 1);
  CHECK(inf.den() == 0);
  CHECK(inf == Param::infinity());

  Param reduced = make_param(-4, -6);
  CHECK(reduced.num() == 2);
  CHECK(reduced.den() == 3);

  CHECK_THROWS_AS(make_param(0, 0), BothZero);
}

TEST_CASE("canonicalization is idempotent over a grid") {
  for (long a = -9; a <= 9; ++a) {
    for (long b = -9; b <= 9; ++b) {
      if (a == 0 && b == 0) continue;
      Param once = make_param(a, b);
      Param twice = make_param(once.num(), once.den());
      CHECK(once == twice);
    }
  }
}

TEST_CASE("equality is cross-multiplication equality") {
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      if (a == 0 && b == 0) continue;
      for (long c = -6; c <= 6; ++c) {
        for (long d = -6; d <= 6; ++d) {
          if (c == 0 && d == 0) continue;
          bool cross = Integer(a) * Integer(d) == Integer(c) * Integer(b);
          CHECK((make_param(a, b) == make_param(c, d)) == cross);
        }
      }
    }
  }
}

TEST_CASE("position classes at the landmark values") {
  CHECK(classify_position(Param(0)) == PositionClass::AtB);
  CHECK(classify_position(Param::infinity()) == PositionClass::AtC);
  CHECK(classify_position(Param(-1)) == PositionClass::AtInfinity);
  CHECK(classify_position(make_param(1, 2)) == PositionClass::BetweenBC);
  CHECK(classify_position(Param(3)) == PositionClass::BetweenBC);
  CHECK(classify_position(make_param(-1, 3)) == PositionClass::BeyondB);
  CHECK(classify_position(make_param(-3, 2)) == PositionClass::BeyondC);
}

TEST_CASE("position classes partition a rational grid plus infinity") {
  auto expected = [](long p, long q) {
    // Reference predicate straight from the value p/q with q > 0.
    if (p == 0) return PositionClass::AtB;
    if (p + q == 0) return PositionClass::AtInfinity;
    if (p > 0) return PositionClass::BetweenBC;
    return p + q > 0 ? PositionClass::BeyondB : PositionClass::BeyondC;
  };
  for (long p = -24; p <= 24; ++p) {
    for (long q = 1; q <= 12; ++q) {
      CHECK(classify_position(make_param(p, q)) == expected(p, q));
    }
  }
  CHECK(classify_position(Param::infinity()) == PositionClass::AtC);
}

TEST_CASE("text form round trips") {
  CHECK(Param::parse("3") == Param(3));
  CHECK(Param::parse("-4/7") == make_param(-4, 7));
  CHECK(Param::parse("inf") == Param::infinity());
  CHECK(Param::parse("+5") == Param(5));
  CHECK(Param::parse("4/-6") == make_param(-2, 3));
  CHECK(Param::parse("007") == Param(7));

  CHECK(Param(3).str() == "3");
  CHECK(make_param(-4, 7).str() == "-4/7");
  CHECK(Param::infinity().str() == "inf");
  CHECK(make_param(-4, -6).str() == "2/3");

  for (long p = -15; p <= 15; ++p) {
    for (long q = 0; q <= 8; ++q) {
      if (p == 0 && q == 0) continue;
      Param t = make_param(p, q);
      CHECK(Param::parse(t.str()) == t);
    }
  }
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "0/0", "two", "1.5", "1/2/3", "-", "inf/2"}) {
    CHECK_THROWS_AS(Param::parse(bad), ParseError);
  }
}

TEST_CASE("finite value accessor") {
  CHECK(make_param(6, 4).value() == make_rational(3, 2));
  CHECK(Param(-7).value() == -7);
  CHECK_THROWS_AS(Param::infinity().value(), InfinitePoint);
}
