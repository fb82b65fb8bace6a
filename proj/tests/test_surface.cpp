#include <doctest.h>

#include "tgm/surface.hpp"

using namespace tgm;

TEST_CASE("blowup models") {
  SurfaceModel m1 = blowup_model(1);
  CHECK(m1.fan.rays == std::vector<Vec2>{{1, 0}, {1, 1}, {0, 1}});
  CHECK(m1.fan.maximal_cones == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(*m1.ray_of("D_u") == Vec2{1, 0});
  CHECK(*m1.ray_of("E") == Vec2{1, 1});
  CHECK(*m1.ray_of("D_v") == Vec2{0, 1});

  SurfaceModel m6 = blowup_model(6);
  CHECK(m6.fan.rays == std::vector<Vec2>{{1, 0}, {6, 1}, {0, 1}});

  CHECK_THROWS_AS(blowup_model(0), std::invalid_argument);
}

TEST_CASE("fan_from_weights") {
  Fan2D quadrant = fan_from_weights({{1, 0}, {0, 1}});
  CHECK(quadrant.rays == std::vector<Vec2>{{1, 0}, {0, 1}});
  CHECK(quadrant.maximal_cones == std::vector<std::pair<int, int>>{{0, 1}});

  Fan2D blown = fan_from_weights({{1, 0}, {1, 1}, {0, 1}});
  CHECK(blown.rays == std::vector<Vec2>{{1, 0}, {1, 1}, {0, 1}});
  CHECK(blown.maximal_cones == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  // three rays covering the plane
  Fan2D full = fan_from_weights({{1, 0}, {0, 1}, {-1, -1}});
  CHECK(full.rays.size() == 3);
  CHECK(full.maximal_cones.size() == 3);

  // duplicates collapse; order of input does not matter
  Fan2D dedup = fan_from_weights({{0, 1}, {1, 0}, {0, 1}});
  CHECK(dedup.rays == std::vector<Vec2>{{1, 0}, {0, 1}});

  // antipodal-only input: both half planes
  Fan2D anti = fan_from_weights({{1, 0}, {-1, 0}});
  CHECK(anti.rays.size() == 2);
  CHECK(anti.maximal_cones.size() == 2);

  // antipodal pair plus a third ray: only the covered sectors
  Fan2D half = fan_from_weights({{1, 0}, {-1, 0}, {0, 1}});
  CHECK(half.maximal_cones.size() == 2);

  // sector wider than pi is not spanned by the extremes
  Fan2D wide = fan_from_weights({{1, 0}, {-1, 1}});
  CHECK(wide.maximal_cones.size() == 1);

  CHECK_THROWS_AS(fan_from_weights({}), std::invalid_argument);
  CHECK_THROWS_AS(fan_from_weights({{2, 4}}), std::invalid_argument);
}

TEST_CASE("fan isomorphisms") {
  Fan2D f = fan_from_weights({{1, 0}, {1, 1}, {0, 1}});
  auto self = fan_isomorphic(f, f);
  REQUIRE(self.has_value());
  CHECK(*self == IntMat::identity(2));

  // the blow-up fan has exactly the identity and the coordinate swap
  auto autos = fan_isomorphisms(f, f);
  CHECK(autos.size() == 2);
  IntMat swap2 = IntMat::from_rows({{0, 1}, {1, 0}});
  CHECK(std::find(autos.begin(), autos.end(), swap2) != autos.end());

  // same rays listed in another order give the same fan
  Fan2D g = fan_from_weights({{0, 1}, {1, 1}, {1, 0}});
  CHECK(f == g);

  // d >= 2 blow-up fans are rigid
  Fan2D f6 = blowup_model(6).fan;
  CHECK(fan_isomorphisms(f6, f6).size() == 1);

  // ray counts differ: no isomorphism
  Fan2D two = fan_from_weights({{1, 0}, {0, 1}});
  CHECK_FALSE(fan_isomorphic(f, two).has_value());

  // unimodular image of a fan is isomorphic to it
  Fan2D sheared = fan_from_weights({{1, 0}, {1, 1}, {2, 1}});  // image of blowup fan under [[1,1],[0,1]]^T...
  auto iso = fan_isomorphic(f, sheared);
  CHECK(iso.has_value());
}

TEST_CASE("div_of_monomial") {
  SurfaceModel m1 = blowup_model(1);
  QDivisor du = div_of_monomial(m1, 1, 0);
  CHECK(du.coeff("D_u") == 1);
  CHECK(du.coeff("E") == 1);
  CHECK(du.coeff("D_v") == 0);

  QDivisor dv = div_of_monomial(m1, 0, 1);
  CHECK(dv.coeff("D_v") == 1);
  CHECK(dv.coeff("E") == 1);
  CHECK(dv.coeff("D_u") == 0);

  SurfaceModel m6 = blowup_model(6);
  QDivisor du6 = div_of_monomial(m6, 1, 0);
  CHECK(du6.coeff("D_u") == 1);
  CHECK(du6.coeff("E") == 6);

  // additivity on a few Laurent exponents
  for (long long a1 = -2; a1 <= 2; ++a1)
    for (long long b1 = -2; b1 <= 2; ++b1) {
      QDivisor sum = div_of_monomial(m6, a1, b1) + div_of_monomial(m6, 3, -1);
      CHECK(sum == div_of_monomial(m6, a1 + 3, b1 - 1));
    }

  // monomial supported on a single-monomial curve divisor is refused
  SurfaceModel withcurve = blowup_model(1);
  withcurve.curve_divisors.emplace_back("C", MultiPoly::parse("u^2*v"));
  CHECK_THROWS_AS(div_of_monomial(withcurve, 4, 2), std::invalid_argument);
  CHECK_NOTHROW(div_of_monomial(withcurve, 4, 1));
}

TEST_CASE("curve multiplicity along a ray") {
  MultiPoly h = MultiPoly::parse("v+(u+v^2)^3");
  // exponents (0,1),(3,0),(2,2),(1,4),(0,6); against ray (1,1): min is 1
  CHECK(curve_multiplicity({1, 1}, h) == 1);
  CHECK(curve_multiplicity({1, 0}, h) == 0);
  CHECK(curve_multiplicity({6, 1}, h) == 1);
}

TEST_CASE("model validation") {
  SurfaceModel bad = blowup_model(1);
  bad.toric_divisors[0].first = "E";  // duplicate name
  CHECK_THROWS_AS(validate_model(bad), std::invalid_argument);

  SurfaceModel curveBad = blowup_model(1);
  curveBad.curve_divisors.emplace_back("C", MultiPoly::parse("u+1"));  // constant term
  CHECK_THROWS_AS(validate_model(curveBad), std::invalid_argument);
}
