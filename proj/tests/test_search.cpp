#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cevian/search.hpp"

using namespace cevian;

namespace {

bool contains_coefficients(const std::vector<SearchHit>& hits,
                           const std::vector<Param>& coeffs) {
  return std::any_of(hits.begin(), hits.end(), [&](const SearchHit& h) {
    return h.coefficients == coeffs;
  });
}

std::vector<Param> triple(long x, long y, long z) {
  return {Param(x), Param(y), Param(z)};
}

}  // namespace

TEST_CASE("equal-coefficient scan over the positive range") {
  std::vector<SearchHit> hits = scan_equal_integer(1, 10000);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].coefficients == triple(2, 2, 2));
  CHECK(hits[0].ratio == make_rational(1, 7));
  CHECK_FALSE(hits[0].trivial);
}

TEST_CASE("equal-coefficient scan edge ranges") {
  CHECK(scan_equal_integer(4, 4).empty());

  std::vector<SearchHit> zero = scan_equal_integer(0, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].ratio == 1);
  CHECK(zero[0].trivial);

  // Negative coefficients give ratios >= 1 and never pass the filter.
  std::vector<SearchHit> negative = scan_equal_integer(-10000, -1);
  CHECK(negative.empty());
}

TEST_CASE("digit-triple scan finds exactly four ratios") {
  auto groups = scan_digit_triples();
  REQUIRE(groups.size() == 4);
  CHECK(groups.count(make_rational(1, 7)) == 1);
  CHECK(groups.count(make_rational(1, 4)) == 1);
  CHECK(groups.count(make_rational(3, 7)) == 1);
  CHECK(groups.count(make_rational(1, 2)) == 1);

  CHECK(contains_coefficients(groups[make_rational(1, 7)], triple(2, 2, 2)));
  CHECK(contains_coefficients(groups[make_rational(3, 7)], triple(4, 4, 4)));
  CHECK(contains_coefficients(groups[make_rational(1, 2)], triple(7, 6, 3)));
  CHECK(contains_coefficients(groups[make_rational(1, 4)], triple(7, 4, 1)));

  // Frozen group sizes: the two asymmetric ratios carry full cyclic orbits.
  CHECK(groups[make_rational(1, 7)].size() == 1);
  CHECK(groups[make_rational(3, 7)].size() == 1);
  CHECK(groups[make_rational(1, 2)].size() == 3);
  CHECK(groups[make_rational(1, 4)].size() == 3);
}

TEST_CASE("digit-triple hits respect cyclic symmetry") {
  auto groups = scan_digit_triples();
  for (const auto& [ratio, hits] : groups) {
    size_t representatives = 0;
    for (const SearchHit& hit : hits) {
      representatives += hit.orbit_representative;
      long x = hit.coefficients[0].num().get_si();
      long y = hit.coefficients[1].num().get_si();
      long z = hit.coefficients[2].num().get_si();
      CHECK(contains_coefficients(hits, triple(y, z, x)));
      CHECK(contains_coefficients(hits, triple(z, x, y)));
      CHECK(routh_ratio(hit.coefficients[0], hit.coefficients[1], hit.coefficients[2]).value ==
            ratio);
      CHECK(ratio_via_coordinates(Triangle::canonical(),
                                  RouthConfig{hit.coefficients[0], hit.coefficients[1],
                                              hit.coefficients[2], hit.coefficients[0],
                                              hit.coefficients[1], hit.coefficients[2]}) ==
            ratio);
    }
    // Frozen: each qualifying ratio is attained by exactly one cyclic orbit.
    CHECK(representatives == 1);
  }
}

TEST_CASE("two-family scan over plain digits") {
  auto groups = scan_generalized_pairs(false);
  REQUIRE(groups.size() == 3);
  CHECK(contains_coefficients(groups[make_rational(1, 9)], {Param(1), Param(4)}));
  CHECK(contains_coefficients(groups[make_rational(1, 4)], {Param(4), Param(1)}));
  CHECK(contains_coefficients(groups[make_rational(4, 9)], {Param(7), Param(1)}));
  CHECK(groups[make_rational(1, 9)].size() == 1);
  CHECK(groups[make_rational(1, 4)].size() == 1);
  CHECK(groups[make_rational(4, 9)].size() == 1);
}

TEST_CASE("two-family scan including digit reciprocals") {
  auto groups = scan_generalized_pairs(true);
  REQUIRE(groups.size() == 4);
  CHECK(contains_coefficients(groups[make_rational(1, 4)], {Param(9), make_param(1, 4)}));
  CHECK(contains_coefficients(groups[make_rational(1, 4)], {Param(4), make_param(1, 9)}));
  CHECK(contains_coefficients(groups[make_rational(1, 7)], {Param(4), make_param(1, 2)}));
  CHECK(contains_coefficients(groups[make_rational(1, 7)], {Param(2), make_param(1, 4)}));
  CHECK(contains_coefficients(groups[make_rational(1, 7)], {make_param(1, 2), Param(4)}));

  // Every hit re-evaluates identically through both computation paths.
  for (const auto& [ratio, hits] : groups) {
    for (const SearchHit& hit : hits) {
      RouthConfig cfg{hit.coefficients[1], hit.coefficients[1], hit.coefficients[1],
                      hit.coefficients[0], hit.coefficients[0], hit.coefficients[0]};
      CHECK(generalized_ratio(cfg).value == ratio);
      CHECK(ratio_via_coordinates(Triangle::canonical(), cfg) == ratio);
    }
  }
}

TEST_CASE("homothety reports for the scaled-image family") {
  HomothetyReport h14 = homothety_report(Param(1), Param(4));
  CHECK(h14.exists);
  CHECK(h14.centroid_shared);
  CHECK(h14.ratio_k == make_rational(-1, 3));
  CHECK(h14.ratio_k * h14.ratio_k == make_rational(1, 9));
  CHECK(h14.vertex_pairing == std::array{Vertex::B, Vertex::C, Vertex::A});

  HomothetyReport h41 = homothety_report(Param(4), Param(1));
  CHECK(h41.exists);
  CHECK(h41.centroid_shared);
  CHECK(h41.ratio_k == make_rational(1, 2));
  CHECK(h41.vertex_pairing == std::array{Vertex::A, Vertex::B, Vertex::C});

  HomothetyReport h71 = homothety_report(Param(7), Param(1));
  CHECK(h71.exists);
  CHECK(h71.ratio_k == make_rational(2, 3));
  CHECK(h71.ratio_k * h71.ratio_k == make_rational(4, 9));
}

TEST_CASE("homothety can fail even when the ratio is a digit reciprocal") {
  // Frozen from the coordinate computation: ratio 1/4 but no vertex pairing
  // admits an exact scaling, although the centroids still coincide.
  HomothetyReport h = homothety_report(Param(9), make_param(1, 4));
  CHECK_FALSE(h.exists);
  CHECK(h.centroid_shared);
  Rational ratio = generalized_ratio(RouthConfig{make_param(1, 4), make_param(1, 4),
                                                 make_param(1, 4), Param(9), Param(9),
                                                 Param(9)}).value;
  CHECK(ratio == make_rational(1, 4));
}

TEST_CASE("existing homotheties square to the area ratio") {
  for (long s = 1; s <= 5; ++s) {
    for (long t = 1; t <= 5; ++t) {
      HomothetyReport h = homothety_report(Param(s), Param(t));
      if (!h.exists) continue;
      CHECK(h.centroid_shared);
      Rational ratio = generalized_ratio(RouthConfig{Param(t), Param(t), Param(t),
                                                     Param(s), Param(s), Param(s)}).value;
      CHECK(h.ratio_k * h.ratio_k == ratio);
    }
  }
}

TEST_CASE("degenerate two-family configs propagate the diagnosis") {
  CHECK_THROWS_AS(homothety_report(Param::infinity(), Param(0)), DegeneratePair);
}
