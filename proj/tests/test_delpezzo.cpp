#include "extremal/delpezzo.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace extremal;

namespace {

CohomologyClass cls(long a, std::vector<long> b) {
  CohomologyClass c{Rational(a), {}};
  for (long v : b) c.b.emplace_back(v);
  return c;
}

std::vector<Rational> areas_of(const SurfaceModel& s, const CohomologyClass& c) {
  std::vector<Rational> out;
  for (const auto& ca : curve_areas(s, c)) out.push_back(ca.area);
  return out;
}

}  // namespace

TEST_CASE("make_surface") {
  SurfaceModel s1 = make_surface(1), s2 = make_surface(2), s3 = make_surface(3);
  CHECK(s1.euler == 4);
  CHECK(s1.signature == 0);
  CHECK(s2.two_chi_plus_three_tau() == 7);
  CHECK(s3.minus_one_curves.size() == 6);
  CHECK(s2.minus_one_curves.size() == 3);
  CHECK(s1.minus_one_curves.size() == 1);
  for (int k = 1; k <= 3; ++k) CHECK(make_surface(k).two_chi_plus_three_tau() == 9 - k);
  CHECK_THROWS_AS(make_surface(0), std::invalid_argument);
  CHECK_THROWS_AS(make_surface(4), std::invalid_argument);
}

TEST_CASE("every listed curve is a (-1)-curve of anticanonical degree 1") {
  for (int k = 1; k <= 3; ++k) {
    SurfaceModel s = make_surface(k);
    for (const auto& c : s.minus_one_curves) {
      CHECK(intersect(c.cls, c.cls) == -1);
      CHECK(intersect(c.cls, s.c1) == 1);
    }
  }
}

TEST_CASE("intersect") {
  CohomologyClass h = cls(1, {0, 0, 0});
  CohomologyClass e1 = cls(0, {-1, 0, 0}), e2 = cls(0, {0, -1, 0});
  CHECK(intersect(h, h) == 1);
  CHECK(intersect(e1, e2) == 0);
  CHECK(intersect(e1, e1) == -1);
  for (int k = 1; k <= 3; ++k) CHECK(intersect(make_surface(k).c1, make_surface(k).c1) == 9 - k);
  CHECK_THROWS_AS(intersect(h, cls(1, {0})), std::invalid_argument);
}

TEST_CASE("hexagon_to_class") {
  SurfaceModel s3 = make_surface(3), s1 = make_surface(1);
  CHECK(hexagon_to_class(s3, {1, 1, 1, 0}) == s3.c1);
  CHECK(hexagon_to_class(s1, {1, 0, 0, 1}) == cls(2, {1}));
  CohomologyClass c = hexagon_to_class(s3, {1, 2, 3, 1});
  CHECK(c == cls(7, {1, 2, 3}));
  CHECK(c.a - c.b[1] - c.b[2] == 2);  // side opposite alpha has area alpha + delta
  CHECK(hexagon_to_class(make_surface(2), {0, 1, 1, 1}) == cls(3, {1, 1}));
  CHECK_THROWS_AS(hexagon_to_class(make_surface(2), {1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(hexagon_to_class(s1, {1, 1, 0, 1}), std::invalid_argument);
}

TEST_CASE("class_to_hexagon") {
  SurfaceModel s3 = make_surface(3);
  CHECK(class_to_hexagon(s3, cls(3, {1, 1, 1})) == HexagonParams{1, 1, 1, 0});
  CHECK(class_to_hexagon(make_surface(1), cls(2, {1})) == HexagonParams{1, 0, 0, 1});
  HexagonParams p = class_to_hexagon(s3, cls(1, {1, 1, 1}));
  CHECK(p.delta == -2);
  CHECK_FALSE(p.is_normalized());
}

TEST_CASE("cremona") {
  SurfaceModel s3 = make_surface(3);
  HexagonParams p{1, 1, 1, -2};
  HexagonParams q = cremona_normalize(p);
  CHECK(q.delta == 2);
  CHECK(q.alpha == p.alpha + p.delta);
  CHECK(q.beta == p.beta + p.delta);
  CHECK(q.gamma == p.gamma + p.delta);
  // Hexagon side areas are permuted with opposite sides exchanged.
  CohomologyClass before = hexagon_to_class(s3, p), after = hexagon_to_class(s3, q);
  auto ab = areas_of(s3, before), aa = areas_of(s3, after);
  for (int i = 0; i < 3; ++i) {
    CHECK(aa[static_cast<std::size_t>(i)] == ab[static_cast<std::size_t>(i + 3)]);
    CHECK(aa[static_cast<std::size_t>(i + 3)] == ab[static_cast<std::size_t>(i)]);
  }
  HexagonParams fixed{2, 3, 5, 0};
  CHECK(cremona_normalize(fixed) == fixed);
  CHECK(cremona(cremona(p)) == p);
  CHECK(cremona_normalize(cremona_normalize(p)) == q);
}

TEST_CASE("is_kahler") {
  SurfaceModel s3 = make_surface(3), s1 = make_surface(1);
  CHECK(is_kahler(s3, s3.c1));
  CHECK_FALSE(is_kahler(s3, cls(1, {1, 0, 0})));
  CHECK(kahler_violation(s3, cls(1, {1, 0, 0}))->find("E2") != std::string::npos);
  CHECK_FALSE(is_kahler(s1, cls(1, {2})));
  CHECK(is_kahler(s1, cls(2, {1})));
  CHECK_FALSE(is_kahler(s3, cls(-3, {-1, -1, -1})));
  CHECK_FALSE(is_kahler(make_surface(2), cls(2, {1, 1})));  // H-E1-E2 has area 0
}

TEST_CASE("curve_areas") {
  SurfaceModel s3 = make_surface(3);
  for (const auto& a : curve_areas(s3, s3.c1)) CHECK(a.area == 1);
  CHECK(areas_of(s3, cls(7, {1, 2, 3})) == std::vector<Rational>{1, 2, 3, 2, 3, 4});
  CHECK(areas_of(make_surface(1), cls(2, {1})) == std::vector<Rational>{1});
}

TEST_CASE("opposite sides differ by the same class, paired to delta") {
  SurfaceModel s3 = make_surface(3);
  const auto& c = s3.minus_one_curves;
  CohomologyClass diff = cls(1, {1, 1, 1});
  for (int i = 0; i < 3; ++i) CHECK(c[static_cast<std::size_t>(i + 3)].cls - c[static_cast<std::size_t>(i)].cls == diff);
  for (int t = 0; t < 50; ++t) {
    HexagonParams p{oracle::positive_rational(), oracle::positive_rational(), oracle::positive_rational(),
                    oracle::small_rational()};
    CHECK(intersect(hexagon_to_class(s3, p), diff) == p.delta);
  }
}

TEST_CASE("property: round trips and Cremona invariants") {
  SurfaceModel s3 = make_surface(3);
  for (int t = 0; t < 200; ++t) {
    CohomologyClass c{oracle::small_rational(), {oracle::small_rational(), oracle::small_rational(), oracle::small_rational()}};
    REQUIRE(hexagon_to_class(s3, class_to_hexagon(s3, c)) == c);
    HexagonParams p{oracle::positive_rational(), oracle::positive_rational(), oracle::positive_rational(),
                    abs(oracle::small_rational())};
    REQUIRE(class_to_hexagon(s3, hexagon_to_class(s3, p)) == p);
    CohomologyClass cc = cremona(c);
    REQUIRE(cremona(cc) == c);
    REQUIRE(intersect(cc, cc) == intersect(c, c));
    REQUIRE(intersect(cc, s3.c1) == intersect(c, s3.c1));
  }
  for (int k = 1; k <= 2; ++k) {
    SurfaceModel s = make_surface(k);
    CohomologyClass c{oracle::small_rational(), std::vector<Rational>(static_cast<std::size_t>(k))};
    for (auto& v : c.b) v = oracle::small_rational();
    CHECK(hexagon_to_class(s, class_to_hexagon(s, c)) == c);
  }
}
