#include "tgm/downgrade.hpp"

#include <algorithm>
#include <cassert>

namespace tgm {

bool is_hyperbolic(const WeightMatrix& f) {
  bool pos = false, neg = false;
  for (const Int& a : f.weights) {
    if (a > 0) pos = true;
    if (a < 0) neg = true;
  }
  return pos && neg;
}

bool strictly_coprime(const WeightMatrix& f) {
  Int g = 0;
  for (const Int& a : f.weights) g = gcd(g, a);
  return g == 1;
}

bool pairwise_coprime(const WeightMatrix& f) {
  for (size_t i = 0; i < f.weights.size(); ++i)
    for (size_t j = i + 1; j < f.weights.size(); ++j)
      if (gcd(f.weights[i], f.weights[j]) != 1) return false;
  return true;
}

Int section_pairing(const Section& s, const WeightMatrix& f) {
  if (s.coeffs.size() != f.weights.size())
    throw std::invalid_argument("section length does not match weight count");
  Int acc = 0;
  for (size_t i = 0; i < s.coeffs.size(); ++i) acc += s.coeffs[i] * f.weights[i];
  return acc;
}

Section make_section(const WeightMatrix& f) {
  if (f.weights.empty()) throw std::invalid_argument("weights not strictly coprime");
  bool any = false;
  for (const Int& a : f.weights)
    if (a != 0) any = true;
  if (!any) throw std::invalid_argument("weights not strictly coprime");
  ExtGcdResult eg = ext_gcd(f.weights);
  if (eg.g != 1) throw std::invalid_argument("weights not strictly coprime");
  return Section{eg.coeffs};
}

DowngradeResult downgrade(const WeightMatrix& f, std::optional<Section> s_opt) {
  if (f.weights.size() != 3)
    throw std::invalid_argument("downgrade requires exactly three weights");
  if (!strictly_coprime(f)) throw std::invalid_argument("weights not strictly coprime");
  if (!is_hyperbolic(f)) throw std::invalid_argument("action not hyperbolic");

  Section s = s_opt ? *s_opt : make_section(f);
  if (section_pairing(s, f) != 1)
    throw std::invalid_argument("section does not split the weights (s∘F ≠ 1)");

  // cokernel projection: bottom two rows of U, where U F V is diagonal
  IntMat fcol(3, 1);
  for (int i = 0; i < 3; ++i) fcol.at(i, 0) = f.weights[static_cast<size_t>(i)];
  SmithResult snf = smith_normal_form(fcol);
  IntMat p(2, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) p.at(i, j) = snf.u.at(i + 1, j);
  assert(p.apply(std::vector<Int>{f.weights[0], f.weights[1], f.weights[2]}) ==
         (std::vector<Int>{0, 0}));

  // rays: primitive images of the coordinate vectors, deduplicated in column order
  std::vector<Vec2> rays;
  for (int j = 0; j < 3; ++j) {
    Vec2 pj{p.at(0, j), p.at(1, j)};
    if (pj == Vec2{0, 0}) throw std::invalid_argument("degenerate coordinate");
    Vec2 v = primitive(pj).first;
    if (std::find(rays.begin(), rays.end(), v) == rays.end()) rays.push_back(v);
  }

  std::vector<std::pair<std::string, Vec2>> divisors;
  for (size_t k = 0; k < rays.size(); ++k)
    divisors.emplace_back("D" + std::to_string(k + 1), rays[k]);
  SurfaceModel model = fan_model(divisors);

  // segment over a ray v: the fiber line P^{-1}(v) = x0 + t*F meets the
  // positive octant in a bounded t-interval (hyperbolicity); its image under
  // the section is base + t with base = s·x0
  std::map<std::string, Segment> terms;
  for (size_t k = 0; k < rays.size(); ++k) {
    std::vector<Int> x0 = solve_integral(p, {rays[k].x, rays[k].y});
    std::optional<Rat> tmin, tmax;
    for (int i = 0; i < 3; ++i) {
      const Int& a = f.weights[static_cast<size_t>(i)];
      if (a > 0) {
        Rat bnd = make_rat(-x0[static_cast<size_t>(i)], a);
        if (!tmin || bnd > *tmin) tmin = bnd;
      } else if (a < 0) {
        Rat bnd = make_rat(-x0[static_cast<size_t>(i)], a);
        if (!tmax || bnd < *tmax) tmax = bnd;
      } else {
        assert(x0[static_cast<size_t>(i)] >= 0);
      }
    }
    assert(tmin && tmax && *tmin <= *tmax);
    Int base = 0;
    for (size_t i = 0; i < 3; ++i) base += s.coeffs[i] * x0[i];
    terms[divisors[k].first] = Segment{Rat(base) + *tmin, Rat(base) + *tmax};
  }

  DowngradeResult out{model.fan, make_divisor(model, std::move(terms)), p, s};
  return out;
}

SegmentalDivisor proposition_formula(const Int& a1, const Int& a2, const Int& a3, const Section& s) {
  if (!(a1 < 0 && a2 > 0 && a3 > 0))
    throw std::invalid_argument("Proposition requires -a1,a2,a3 > 0");
  WeightMatrix f{{a1, a2, a3}};
  if (!strictly_coprime(f)) throw std::invalid_argument("weights not strictly coprime");
  if (section_pairing(s, f) != 1)
    throw std::invalid_argument("section does not split the weights (s∘F ≠ 1)");

  const Int& alpha = s.coeffs[0];
  const Int& beta = s.coeffs[1];
  const Int& gamma = s.coeffs[2];
  Int rho2 = gcd(a1, a2);
  Int rho3 = gcd(a1, a3);
  Int delta = gcd(a2 / rho2, a3 / rho3);

  SurfaceModel model;
  model.kind = "blowup";
  model.blowup_d = 1;
  model.fan.rays = {{1, 0}, {1, 1}, {0, 1}};
  model.fan.maximal_cones = {{0, 1}, {1, 2}};
  model.toric_divisors = {{"D2", {1, 0}}, {"E", {1, 1}}, {"D3", {0, 1}}};
  validate_model(model);

  std::map<std::string, Segment> terms;
  terms["D2"] = point_segment(Rat(alpha * rho2, -a1));
  terms["D3"] = point_segment(Rat(beta * rho3, -a1));
  Rat lo(gamma, delta);
  terms["E"] = Segment{lo, lo + Rat(1, -delta * a1)};
  return make_divisor(model, std::move(terms));
}

namespace {

// The closed-form divisor depends on the congruence class of the section:
// shifting s by a row of the projection moves the D2 coefficient by multiples
// of rho2/(-a1), which need not be integral. Given the geometric target,
// derive the section class that reproduces it: with shift freedom w, the
// formula matches iff
//   alpha = (p2 - w1) * (-a1)/rho2,  beta = (p3 - w2) * (-a1)/rho3,
//   gamma = (e_lo - w1 - w2) * delta
// are integers with alpha*a1 + beta*a2 + gamma*a3 = 1 - a linear diophantine
// equation in (w1, w2).
bool match_proposition(const SegmentalDivisor& target, const Int& a1, const Int& a2,
                       const Int& a3) {
  Int rho2 = gcd(a1, a2);
  Int rho3 = gcd(a1, a3);
  Int delta = gcd(a2 / rho2, a3 / rho3);
  Int k2 = -a1 / rho2, k3 = -a1 / rho3;

  auto by_ray = segments_by_ray(target);
  auto seg_at = [&by_ray](const Vec2& r) {
    auto it = by_ray.find(r);
    return it == by_ray.end() ? point_segment(Rat(0)) : it->second;
  };
  Segment s2 = seg_at({1, 0}), s3 = seg_at({0, 1}), se = seg_at({1, 1});
  if (!s2.is_point() || !s3.is_point()) return false;
  if (se.length() != make_rat(1, -delta * a1)) return false;

  // integrality of alpha, beta, gamma for integral w needs the denominators
  // to divide the formula moduli
  if (den(s2.lo * Rat(k2)) != 1 || den(s3.lo * Rat(k3)) != 1 ||
      den(se.lo * Rat(delta)) != 1)
    return false;

  // alpha*a1 + beta*a2 + gamma*a3 = 1 as A*w1 + B*w2 = C
  Int A = -(k2 * a1 + delta * a3);
  Int B = -(k3 * a2 + delta * a3);
  Rat c0 = Rat(k2 * a1) * s2.lo + Rat(k3 * a2) * s3.lo + Rat(delta * a3) * se.lo;
  assert(den(c0) == 1);
  Int C = num(c0) - 1;
  // solve A*w1 + B*w2 = -C
  Int w1, w2;
  if (A == 0 && B == 0) {
    if (C != 0) return false;
    w1 = 0;
    w2 = 0;
  } else {
    ExtGcdResult eg = ext_gcd({A, B});
    if (C % eg.g != 0) return false;
    Int mult = -C / eg.g;
    w1 = eg.coeffs[0] * mult;
    w2 = eg.coeffs[1] * mult;
  }

  Int alpha = num((s2.lo - Rat(w1)) * Rat(k2));
  Int beta = num((s3.lo - Rat(w2)) * Rat(k3));
  Int gamma = num((se.lo - Rat(w1) - Rat(w2)) * Rat(delta));
  Section s{{alpha, beta, gamma}};
  if (section_pairing(s, WeightMatrix{{a1, a2, a3}}) != 1) return false;
  SegmentalDivisor prop = proposition_formula(a1, a2, a3, s);
  return equivalent(prop, target).has_value();
}

}  // namespace

bool crosscheck(const WeightMatrix& f) {
  if (f.weights.size() != 3)
    throw std::invalid_argument("crosscheck requires exactly three weights");
  std::vector<Int> neg, pos;
  for (const Int& a : f.weights) {
    if (a < 0) neg.push_back(a);
    else if (a > 0) pos.push_back(a);
  }
  if (neg.size() != 1 || pos.size() != 2)
    throw std::invalid_argument("Proposition requires -a1,a2,a3 > 0");
  std::sort(pos.begin(), pos.end());
  WeightMatrix sorted{{neg[0], pos[0], pos[1]}};

  DowngradeResult down = downgrade(sorted);
  SurfaceModel prop_model = proposition_formula(sorted.weights[0], sorted.weights[1],
                                                sorted.weights[2], make_section(sorted))
                                .model;
  for (const IntMat& m : fan_isomorphisms(down.fan, prop_model.fan)) {
    SegmentalDivisor moved = transport(down.divisor, m, prop_model);
    if (match_proposition(moved, sorted.weights[0], sorted.weights[1], sorted.weights[2]))
      return true;
  }
  return false;
}

}  // namespace tgm
