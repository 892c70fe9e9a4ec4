#include "cevian/rational.hpp"

#include "cevian/errors.hpp"

namespace cevian {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw ZeroDenominator();
  }
  Rational r(num);
  r /= Rational(den);
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_decimal(const Rational& r, int digits) {
  Integer pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;

  // Nearest multiple of 10^-digits, ties rounded up.
  Integer scaled_twice = r.get_num() * pow10 * 2;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), Integer(scaled_twice + r.get_den()).get_mpz_t(),
             Integer(2 * r.get_den()).get_mpz_t());

  bool negative = q < 0;
  Integer mag = abs(q);
  Integer whole = mag / pow10;
  Integer frac = mag % pow10;

  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace cevian
