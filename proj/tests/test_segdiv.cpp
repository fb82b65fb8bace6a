#include <doctest.h>

#include "tgm/segdiv.hpp"

#include <random>

using namespace tgm;

namespace {

SurfaceModel renamed_blowup(const Int& d, const std::string& du, const std::string& e,
                            const std::string& dv) {
  SurfaceModel m = blowup_model(d);
  m.toric_divisors = {{du, {1, 0}}, {e, {d, 1}}, {dv, {0, 1}}};
  return m;
}

// {-1/3} D1 + {1/2} D2 + [0,1/6] E on the blow-up at the origin
SegmentalDivisor paper_divisor() {
  SurfaceModel m = renamed_blowup(1, "D1", "E", "D2");
  return make_divisor(m, {{"D1", point_segment(make_rat(-1, 3))},
                          {"D2", point_segment(make_rat(1, 2))},
                          {"E", Segment{Rat(0), make_rat(1, 6)}}});
}

SegmentalDivisor minus_e() {
  return make_divisor(blowup_model(1), {{"E", Segment{Rat(-1), Rat(0)}}});
}

}  // namespace

TEST_CASE("construction prunes zero points and validates") {
  SegmentalDivisor d = make_divisor(blowup_model(1), {{"D_u", point_segment(Rat(0))},
                                                      {"E", Segment{Rat(-1), Rat(0)}}});
  CHECK(d.terms.size() == 1);
  CHECK(d.terms.count("E") == 1);

  CHECK_THROWS_AS(make_divisor(blowup_model(1), {{"X", point_segment(Rat(1))}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_divisor(blowup_model(1), {{"E", Segment{Rat(1), Rat(0)}}}),
                  std::invalid_argument);
}

TEST_CASE("evaluate") {
  SegmentalDivisor d = paper_divisor();
  QDivisor at6 = evaluate(d, 6);
  CHECK(at6.coeff("D1") == -2);
  CHECK(at6.coeff("D2") == 3);
  CHECK(at6.coeff("E") == 0);
  CHECK(at6.coeffs.size() == 2);  // zero E coefficient omitted

  CHECK(evaluate(d, 0).coeffs.empty());

  QDivisor atm6 = evaluate(d, -6);
  CHECK(atm6.coeff("D1") == 2);
  CHECK(atm6.coeff("D2") == -3);
  CHECK(atm6.coeff("E") == -1);
}

TEST_CASE("scale") {
  SegmentalDivisor d = paper_divisor();
  CHECK(same_segments(scale(d, 1), d));

  SegmentalDivisor six = scale(d, 6);
  CHECK(six.terms.at("D1") == point_segment(Rat(-2)));
  CHECK(six.terms.at("D2") == point_segment(Rat(3)));
  CHECK(six.terms.at("E") == Segment{Rat(0), Rat(1)});

  SegmentalDivisor e2 = scale(minus_e(), 2);
  CHECK(e2.terms.at("E") == Segment{Rat(-2), Rat(0)});

  CHECK_THROWS_AS(scale(d, 0), std::invalid_argument);
}

TEST_CASE("shift") {
  SegmentalDivisor six = scale(paper_divisor(), 6);
  CHECK(same_segments(shift(six, {0, 0}), six));

  SegmentalDivisor moved = shift(six, {2, -3});
  CHECK(moved.terms.size() == 1);
  CHECK(moved.terms.at("E") == Segment{Rat(-1), Rat(0)});

  SegmentalDivisor back = shift(minus_e(), {1, 0});
  CHECK(back.terms.at("E") == Segment{Rat(0), Rat(1)});

  SurfaceModel withcurve = blowup_model(1);
  withcurve.curve_divisors.emplace_back("C", MultiPoly::parse("v+(u+v^2)^3"));
  SegmentalDivisor oncurve = make_divisor(withcurve, {{"C", point_segment(make_rat(1, 2))}});
  CHECK_THROWS_AS(shift(oncurve, {1, 0}), std::invalid_argument);
}

TEST_CASE("equivalence witnesses") {
  SegmentalDivisor six = scale(paper_divisor(), 6);
  auto w = equivalent(six, minus_e());
  REQUIRE(w.has_value());
  CHECK(*w == Vec2{2, -3});

  auto self = equivalent(six, six);
  REQUIRE(self.has_value());
  CHECK(*self == Vec2{0, 0});

  // a true interval changes length under scaling, so no witness
  CHECK_FALSE(equivalent(minus_e(), scale(minus_e(), 2)).has_value());
}

TEST_CASE("normal form") {
  // prune-only case
  SegmentalDivisor d0 = make_divisor(blowup_model(1), {{"D_u", point_segment(Rat(0))},
                                                       {"E", Segment{Rat(-1), Rat(0)}}});
  CHECK(same_segments(normal_form(d0), minus_e()));

  // frame shift (2,-3) sends {-2} D_u + {3} D_v + [0,1] E to [-1,0] E
  SegmentalDivisor big = make_divisor(
      blowup_model(1), {{"D_u", point_segment(Rat(-2))},
                        {"D_v", point_segment(Rat(3))},
                        {"E", Segment{Rat(0), Rat(1)}}});
  CHECK(same_segments(normal_form(big), minus_e()));

  // paper divisor: frame lo endpoints land in [0,1) under the shift (1,0)
  SegmentalDivisor d = paper_divisor();
  SegmentalDivisor nf = normal_form(d);
  CHECK(same_segments(nf, shift(d, {1, 0})));
  CHECK(nf.terms.at("D1") == point_segment(make_rat(2, 3)));
  CHECK(nf.terms.at("D2") == point_segment(make_rat(1, 2)));
  CHECK(nf.terms.at("E") == Segment{Rat(1), make_rat(7, 6)});

  // idempotent, and equal normal forms exactly when equivalent
  CHECK(same_segments(normal_form(nf), nf));
  auto w = equivalent(d, nf);
  REQUIRE(w.has_value());
  CHECK(*w == Vec2{1, 0});
}

TEST_CASE("normal form equality characterizes equivalence on frame-ray supports") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> shift_entry(-5, 5);
  std::uniform_int_distribution<int> numo(-6, 6);
  std::uniform_int_distribution<int> dens(2, 5);
  std::uniform_int_distribution<int> len(0, 3);
  auto frame_lo = [&]() {
    // non-integer point, so the frame term survives every integral shift
    while (true) {
      Rat r = make_rat(numo(rng), dens(rng));
      if (den(r) != 1) return r;
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    Rat lo3 = make_rat(numo(rng), dens(rng));
    SegmentalDivisor d = make_divisor(
        blowup_model(1), {{"D_u", point_segment(frame_lo())},
                          {"D_v", point_segment(frame_lo())},
                          {"E", Segment{lo3, lo3 + Rat(len(rng))}}});
    Vec2 w{shift_entry(rng), shift_entry(rng)};
    SegmentalDivisor moved = shift(d, w);
    CHECK(same_segments(normal_form(d), normal_form(moved)));
    auto witness = equivalent(d, moved);
    REQUIRE(witness.has_value());
    CHECK(*witness == w);
  }
}

TEST_CASE("check_proper") {
  ProperReport rep = check_proper(paper_divisor(), 12);
  CHECK(rep.all_pass);
  CHECK(rep.entries.size() == 24);
  bool saw_equality = false;
  for (const auto& e : rep.entries) {
    CHECK(e.cartier);
    CHECK(e.semiample);
    CHECK(e.big);
    if (e.n == -1) {
      CHECK(e.semiample_slack == 0);  // -1/6 <= 1/3 - 1/2 with equality
      saw_equality = true;
    }
  }
  CHECK(saw_equality);

  // zero divisor passes vacuously
  SegmentalDivisor zero = make_divisor(blowup_model(1), {});
  CHECK(check_proper(zero, 5).all_pass);

  // {1} E alone fails semi-ampleness at n=1
  SegmentalDivisor bad = make_divisor(blowup_model(1), {{"E", point_segment(Rat(1))}});
  ProperReport brep = check_proper(bad, 1);
  CHECK_FALSE(brep.all_pass);
  bool found = false;
  for (const auto& e : brep.entries)
    if (e.n == 1) {
      CHECK_FALSE(e.semiample);
      CHECK(e.cartier);
      found = true;
    }
  CHECK(found);

  // unsupported model
  SegmentalDivisor gen = make_divisor(fan_model({{"A", {1, 0}}, {"B", {-1, 2}}}),
                                      {{"A", point_segment(Rat(1))}});
  CHECK_THROWS_AS(check_proper(gen, 3), std::invalid_argument);
}

TEST_CASE("describe") {
  SurfaceModel m = renamed_blowup(1, "D1", "E", "D2");
  SegmentalDivisor kr = make_divisor(m, {{"D1", point_segment(make_rat(1, 3))},
                                         {"D2", point_segment(make_rat(-3, 5))},
                                         {"E", Segment{Rat(0), make_rat(1, 15)}}});
  DescribeReport rep = describe(kr);
  CHECK(rep.unique_interval);
  REQUIRE(rep.interval_divisor.has_value());
  CHECK(*rep.interval_divisor == "E");
  CHECK(rep.interval_on_E);
  std::map<std::string, Int> orders;
  for (const auto& e : rep.entries)
    if (e.is_point) orders[e.divisor] = e.isotropy_order;
  CHECK(orders.at("D1") == 3);
  CHECK(orders.at("D2") == 5);

  DescribeReport erep = describe(minus_e());
  CHECK(erep.unique_interval);
  CHECK(erep.interval_on_E);
  for (const auto& e : erep.entries) CHECK_FALSE(e.is_point);
}

TEST_CASE("superadditivity and scaling laws on random divisors") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> numo(-8, 8);
  std::uniform_int_distribution<int> dens(1, 6);
  std::uniform_int_distribution<int> dd(1, 3);
  std::uniform_int_distribution<int> nn(-8, 8);
  std::uniform_int_distribution<int> mm(1, 5);
  for (int trial = 0; trial < 150; ++trial) {
    Int d = dd(rng);
    SurfaceModel model = blowup_model(d);
    std::map<std::string, Segment> terms;
    for (const auto& name : {"D_u", "E", "D_v"}) {
      Rat lo = make_rat(numo(rng), dens(rng));
      Rat hi = lo + make_rat(std::abs(numo(rng)), dens(rng));
      terms[name] = Segment{lo, hi};
    }
    SegmentalDivisor div = make_divisor(model, std::move(terms));

    Int n = nn(rng), m = nn(rng);
    QDivisor qn = evaluate(div, n);
    QDivisor qm = evaluate(div, m);
    QDivisor qs = evaluate(div, n + m);
    for (const auto& name : {"D_u", "E", "D_v"})
      CHECK(qs.coeff(name) >= qn.coeff(name) + qm.coeff(name));

    Int k = mm(rng);
    CHECK(evaluate(scale(div, k), n) == evaluate(div, k * n));

    // shifting changes evaluations by the linear term n*<w,r> on the support
    Vec2 w{numo(rng), numo(rng)};
    QDivisor shifted = evaluate(shift(div, w), n);
    for (const auto& [name, seg] : div.terms) {
      const Vec2& ray = *model.ray_of(name);
      CHECK(shifted.coeff(name) == qn.coeff(name) + Rat(n * dot(w, ray)));
    }
  }
}
