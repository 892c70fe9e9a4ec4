#pragma once

#include <map>
#include <vector>

#include "cevian/oracle.hpp"

namespace cevian {

struct SearchHit {
  std::vector<Param> coefficients;
  Rational ratio;
  bool orbit_representative;  // lexicographically smallest cyclic rotation
  bool trivial;               // flags the n = 0 equal-coefficient case
  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct HomothetyReport {
  bool exists;
  Rational ratio_k;                     // scale factor, meaningful when exists
  std::array<Vertex, 3> vertex_pairing;  // images of P, Q, R, when exists
  bool centroid_shared;
};

/// All integers n in [n_min, n_max] whose one-cevian-per-vertex ratio with
/// x = y = z = n equals 1/d for a nonzero digit d. n = 0 qualifies with
/// ratio 1/1 (the inner triangle is a relabeling of the host) and is
/// flagged trivial.
std::vector<SearchHit> scan_equal_integer(long n_min, long n_max);

/// Ratios over all 729 digit triples (x, y, z) in {1..9}^3 whose value lies
/// in (0, 1) with single-digit reduced numerator and denominator, grouped by
/// ratio; every triple of a qualifying ratio is listed, cyclic-orbit
/// representatives marked.
std::map<Rational, std::vector<SearchHit>> scan_digit_triples();

/// Six-cevian family u = v = w = s, x = y = z = t with s != t drawn from the
/// digits 1..9 (plus the reciprocals 1/2..1/9 when requested). Keeps ratios
/// in (0, 1) with single-digit reduced numerator and denominator; hits store
/// coefficients (s, t).
std::map<Rational, std::vector<SearchHit>> scan_generalized_pairs(bool include_reciprocals);

/// For the config x = y = z = t, u = v = w = s on the canonical triangle,
/// looks for an exact homothety P - G = k (sigma(A) - G) etc. about the
/// centroid G, trying the three cyclic vertex pairings first and then the
/// three reflective ones. Throws DegeneratePair when the config is
/// degenerate.
HomothetyReport homothety_report(const Param& s, const Param& t);

}  // namespace cevian
