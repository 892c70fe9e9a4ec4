#include "cevian/search.hpp"

#include <algorithm>

namespace cevian {
namespace {

bool digit_over_digit(const Rational& r) {
  return r.get_num() >= 1 && r.get_num() <= 9 && r.get_den() <= 9;
}

bool unit_over_digit(const Rational& r) {
  return r.get_num() == 1 && r.get_den() <= 9;
}

bool in_open_unit_interval(const Rational& r) { return r > 0 && r < 1; }

}  // namespace

std::vector<SearchHit> scan_equal_integer(long n_min, long n_max) {
  std::vector<SearchHit> hits;
  for (long n = n_min; n <= n_max; ++n) {
    // 1 + n + n^2 never vanishes over the integers, so the ratio is total.
    Rational r = routh_ratio(Param(n), Param(n), Param(n)).value;
    if (!unit_over_digit(r)) continue;
    hits.push_back(SearchHit{{Param(n), Param(n), Param(n)}, r, true, n == 0});
  }
  return hits;
}

std::map<Rational, std::vector<SearchHit>> scan_digit_triples() {
  std::map<Rational, std::vector<SearchHit>> out;
  for (long x = 1; x <= 9; ++x) {
    for (long y = 1; y <= 9; ++y) {
      for (long z = 1; z <= 9; ++z) {
        Rational r = routh_ratio(Param(x), Param(y), Param(z)).value;
        if (!in_open_unit_interval(r) || !digit_over_digit(r)) continue;
        long rotations[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
        bool representative = !std::lexicographical_compare(
            std::begin(rotations[1]), std::end(rotations[1]),
            std::begin(rotations[0]), std::end(rotations[0])) &&
            !std::lexicographical_compare(
                std::begin(rotations[2]), std::end(rotations[2]),
                std::begin(rotations[0]), std::end(rotations[0]));
        out[r].push_back(SearchHit{{Param(x), Param(y), Param(z)}, r, representative, false});
      }
    }
  }
  return out;
}

std::map<Rational, std::vector<SearchHit>> scan_generalized_pairs(bool include_reciprocals) {
  std::vector<Param> domain;
  for (long d = 1; d <= 9; ++d) domain.push_back(Param(d));
  if (include_reciprocals) {
    for (long d = 2; d <= 9; ++d) domain.push_back(make_param(1, d));
  }
  std::map<Rational, std::vector<SearchHit>> out;
  for (const Param& s : domain) {
    for (const Param& t : domain) {
      if (s == t) continue;
      RouthConfig cfg{t, t, t, s, s, s};
      // 1 + t + ts > 0 for positive s, t, so the ratio is always defined.
      Rational r = generalized_ratio(cfg).value;
      if (!in_open_unit_interval(r) || !digit_over_digit(r)) continue;
      out[r].push_back(SearchHit{{s, t}, r, true, false});
    }
  }
  return out;
}

HomothetyReport homothety_report(const Param& s, const Param& t) {
  Triangle host = Triangle::canonical();
  auto [hp, hq, hr] = generalized_routh_points(host, RouthConfig{t, t, t, s, s, s});
  std::array<Vec2, 3> inner{hp.affine(), hq.affine(), hr.affine()};
  Vec2 g = host.centroid();
  Vec2 inner_centroid{(inner[0].x + inner[1].x + inner[2].x) / 3,
                      (inner[0].y + inner[1].y + inner[2].y) / 3};

  HomothetyReport report{false, Rational(0), {Vertex::A, Vertex::B, Vertex::C},
                         inner_centroid == g};

  const std::array<std::array<int, 3>, 6> pairings{{
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1},  // cyclic
      {0, 2, 1}, {2, 1, 0}, {1, 0, 2},  // reflective
  }};
  for (const auto& pairing : pairings) {
    // Solve P - G = k (sigma(P) - G) from the first usable component, then
    // require all six component equations to hold.
    std::array<Vec2, 3> lhs, rhs;
    for (int i = 0; i < 3; ++i) {
      lhs[static_cast<size_t>(i)] =
          Vec2{inner[static_cast<size_t>(i)].x - g.x, inner[static_cast<size_t>(i)].y - g.y};
      const Vec2& image = host.vertex(pairing[static_cast<size_t>(i)]);
      rhs[static_cast<size_t>(i)] = Vec2{image.x - g.x, image.y - g.y};
    }
    // A vertex never sits on the centroid, so rhs[0] has a nonzero component.
    Rational k;
    if (rhs[0].x != 0) {
      k = lhs[0].x / rhs[0].x;
    } else {
      k = lhs[0].y / rhs[0].y;
    }
    bool match = true;
    for (size_t i = 0; i < 3 && match; ++i) {
      match = lhs[i].x == k * rhs[i].x && lhs[i].y == k * rhs[i].y;
    }
    if (match) {
      report.exists = true;
      report.ratio_k = k;
      for (size_t i = 0; i < 3; ++i) {
        report.vertex_pairing[i] = static_cast<Vertex>(pairing[i]);
      }
      break;
    }
  }
  return report;
}

}  // namespace cevian
