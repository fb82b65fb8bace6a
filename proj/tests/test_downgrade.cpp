#include <doctest.h>

#include "tgm/downgrade.hpp"

#include <random>
#include <set>

using namespace tgm;

namespace {

SegmentalDivisor paper_divisor() {
  SurfaceModel m = blowup_model(1);
  m.toric_divisors = {{"D1", {1, 0}}, {"E", {1, 1}}, {"D2", {0, 1}}};
  return make_divisor(m, {{"D1", point_segment(make_rat(-1, 3))},
                          {"D2", point_segment(make_rat(1, 2))},
                          {"E", Segment{Rat(0), make_rat(1, 6)}}});
}

// match the downgrade output onto the target model and compare normal forms
bool matches_up_to_iso(const DowngradeResult& res, const SegmentalDivisor& target) {
  for (const IntMat& m : fan_isomorphisms(res.fan, target.model.fan)) {
    SegmentalDivisor moved = transport(res.divisor, m, target.model);
    if (same_segments(normal_form(moved), normal_form(target))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("make_section") {
  Section s1 = make_section(WeightMatrix{{-1, 1, 1}});
  CHECK(section_pairing(s1, WeightMatrix{{-1, 1, 1}}) == 1);
  CHECK(make_section(WeightMatrix{{-1, 1, 1}}).coeffs == s1.coeffs);  // deterministic

  Section s2 = make_section(WeightMatrix{{2, 3, -6}});
  CHECK(s2.coeffs == std::vector<Int>{-1, 1, 0});

  CHECK_THROWS_WITH_AS(make_section(WeightMatrix{{2, 4, -6}}), "weights not strictly coprime",
                       std::invalid_argument);
}

TEST_CASE("coprimality helpers") {
  CHECK(strictly_coprime(WeightMatrix{{2, 3, -6}}));
  CHECK_FALSE(pairwise_coprime(WeightMatrix{{2, 3, -6}}));
  CHECK(pairwise_coprime(WeightMatrix{{-1, 2, 3}}));
  CHECK_FALSE(strictly_coprime(WeightMatrix{{2, 4, -6}}));
}

TEST_CASE("downgrade weights (-1,1,1) gives the hyperbolic-modification divisor") {
  DowngradeResult res = downgrade(WeightMatrix{{-1, 1, 1}});
  CHECK(res.fan.rays.size() == 3);

  SegmentalDivisor minus_e = make_divisor(blowup_model(1), {{"E", Segment{Rat(-1), Rat(0)}}});
  CHECK(matches_up_to_iso(res, minus_e));
}

TEST_CASE("downgrade weights (2,3,-6) reproduces the worked divisor") {
  DowngradeResult res = downgrade(WeightMatrix{{2, 3, -6}});
  REQUIRE(res.fan.rays.size() == 3);

  SegmentalDivisor target = paper_divisor();
  auto iso = fan_isomorphic(res.fan, target.model.fan);
  REQUIRE(iso.has_value());
  CHECK(matches_up_to_iso(res, target));

  // and the segments are exactly the worked values: one point of denominator
  // 3, one of denominator 2, one interval of length 1/6
  std::multiset<Rat> lengths;
  for (const auto& [name, seg] : res.divisor.terms) lengths.insert(seg.length());
  CHECK(lengths == std::multiset<Rat>{Rat(0), Rat(0), make_rat(1, 6)});
}

TEST_CASE("downgrade rejections") {
  CHECK_THROWS_WITH_AS(downgrade(WeightMatrix{{1, 1, 1}}), "action not hyperbolic",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(downgrade(WeightMatrix{{2, 4, -6}}), "weights not strictly coprime",
                       std::invalid_argument);
  CHECK_THROWS_AS(downgrade(WeightMatrix{{1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(downgrade(WeightMatrix{{2, 3, -6}}, Section{{1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("projection is a surjection annihilating the weights") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> wdist(-9, 9);
  int done = 0;
  while (done < 100) {
    WeightMatrix f{{wdist(rng), wdist(rng), wdist(rng)}};
    if (!is_hyperbolic(f) || !strictly_coprime(f)) continue;
    DowngradeResult res = downgrade(f);
    CHECK(res.projection.apply(f.weights) == std::vector<Int>{0, 0});
    // surjective: both unit vectors hit
    CHECK_NOTHROW(solve_integral(res.projection, {1, 0}));
    CHECK_NOTHROW(solve_integral(res.projection, {0, 1}));
    for (const auto& [name, seg] : res.divisor.terms) CHECK(seg.lo <= seg.hi);
    ++done;
  }
}

TEST_CASE("changing the section twists the evaluations by a character") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> wdist(-9, 9);
  std::uniform_int_distribution<int> cdist(-3, 3);
  std::uniform_int_distribution<int> ndist(-6, 6);
  int done = 0;
  while (done < 60) {
    WeightMatrix f{{wdist(rng), wdist(rng), wdist(rng)}};
    if (!is_hyperbolic(f) || !strictly_coprime(f)) continue;
    DowngradeResult base = downgrade(f);
    // sections differ by integer combinations of the projection rows
    Vec2 c{cdist(rng), cdist(rng)};
    Section moved = base.section;
    for (size_t i = 0; i < 3; ++i)
      moved.coeffs[i] += c.x * base.projection.at(0, static_cast<int>(i)) +
                         c.y * base.projection.at(1, static_cast<int>(i));
    DowngradeResult other = downgrade(f, moved);

    // segment on each ray moves by <c, ray>; at the level of evaluations the
    // graded pieces twist by n*<c, ray>
    Int n = ndist(rng);
    QDivisor qb = evaluate(base.divisor, n);
    QDivisor qo = evaluate(other.divisor, n);
    for (const Vec2& ray : base.fan.rays) {
      const std::string* nb = base.divisor.model.name_of_ray(ray);
      const std::string* no = other.divisor.model.name_of_ray(ray);
      REQUIRE(nb != nullptr);
      REQUIRE(no != nullptr);
      CHECK(qo.coeff(*no) == qb.coeff(*nb) + Rat(n * dot(c, ray)));
    }
    ++done;
  }
}

TEST_CASE("proposition formula") {
  SegmentalDivisor d1 = proposition_formula(-1, 1, 1, Section{{0, 1, 0}});
  // {0} D2 + {1} D3 + [0,1] E, normal form [-1,0] E with witness (0,-1)
  CHECK(d1.terms.count("D2") == 0);
  CHECK(d1.terms.at("D3") == point_segment(Rat(1)));
  CHECK(d1.terms.at("E") == Segment{Rat(0), Rat(1)});
  SegmentalDivisor nf = normal_form(d1);
  CHECK(nf.terms.size() == 1);
  CHECK(nf.terms.at("E") == Segment{Rat(-1), Rat(0)});
  auto w = equivalent(d1, nf);
  REQUIRE(w.has_value());
  CHECK(*w == Vec2{0, -1});

  SegmentalDivisor d2 = proposition_formula(-6, 2, 3, Section{{0, -1, 1}});
  CHECK(d2.terms.count("D2") == 0);  // {0} pruned
  CHECK(d2.terms.at("D3") == point_segment(make_rat(-1, 2)));
  CHECK(d2.terms.at("E") == Segment{Rat(1), make_rat(7, 6)});

  CHECK_THROWS_AS(proposition_formula(-1, 1, 1, Section{{1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(proposition_formula(1, 1, 1, Section{{1, 0, 0}}),
                       "Proposition requires -a1,a2,a3 > 0", std::invalid_argument);
}

TEST_CASE("crosscheck on the worked examples") {
  CHECK(crosscheck(WeightMatrix{{-1, 1, 1}}));
  CHECK(crosscheck(WeightMatrix{{-6, 2, 3}}));
  CHECK(crosscheck(WeightMatrix{{2, 3, -6}}));  // sorted internally
  CHECK_THROWS_AS(crosscheck(WeightMatrix{{1, -1, -1}}), std::invalid_argument);
}
