#include "tgm/surface.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace tgm {

int Fan2D::ray_index(const Vec2& r) const {
  for (size_t i = 0; i < rays.size(); ++i)
    if (rays[i] == r) return static_cast<int>(i);
  return -1;
}

bool ccw_less(const Vec2& a, const Vec2& b) {
  auto half = [](const Vec2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

namespace {

bool is_primitive(const Vec2& v) {
  if (v.x == 0 && v.y == 0) return false;
  return gcd(v.x, v.y) == 1;
}

// closed-cone membership, cone(p,q) with independent p,q
bool in_cone(const Vec2& p, const Vec2& q, const Vec2& x) {
  Int d = cross(p, q);
  if (d == 0) return false;
  if (d < 0) return in_cone(q, p, x);
  return cross(p, x) >= 0 && cross(x, q) >= 0;
}

}  // namespace

Fan2D fan_from_weights(const std::vector<Vec2>& rays) {
  if (rays.empty()) throw std::invalid_argument("fan_from_weights: empty ray list");
  for (const Vec2& r : rays)
    if (!is_primitive(r)) throw std::invalid_argument("fan_from_weights: ray " + to_string(r) + " is not primitive");

  std::vector<Vec2> distinct;
  for (const Vec2& r : rays)
    if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
  std::sort(distinct.begin(), distinct.end(), ccw_less);

  Fan2D fan;
  fan.rays = distinct;
  size_t n = distinct.size();
  if (n == 1) return fan;

  if (n == 2 && distinct[0] == -distinct[1]) {
    // antipodal pair: both half planes, support the full span
    fan.maximal_cones = {{0, 1}, {1, 0}};
    return fan;
  }

  for (size_t i = 0; i < n; ++i) {
    size_t j = (i + 1) % n;
    const Vec2& a = distinct[i];
    const Vec2& b = distinct[j];
    if (cross(a, b) <= 0) continue;  // sector of angle >= pi, never a cone here
    Vec2 mid = a + b;
    bool covered = false;
    for (size_t s = 0; s < n && !covered; ++s)
      for (size_t t = s + 1; t < n && !covered; ++t)
        if (in_cone(distinct[s], distinct[t], mid)) covered = true;
    if (covered) fan.maximal_cones.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return fan;
}

namespace {

// unimodular basis completion: B = [r | e] with det 1
IntMat complete_basis(const Vec2& r) {
  // find (x, y) with r.x*y - r.y*x = 1
  ExtGcdResult eg = ext_gcd({r.x, -r.y});
  assert(eg.g == 1);
  // r.x*c0 + (-r.y)*c1 = 1  ->  column e = (c1, c0)
  IntMat b(2, 2);
  b.at(0, 0) = r.x;
  b.at(1, 0) = r.y;
  b.at(0, 1) = eg.coeffs[1];
  b.at(1, 1) = eg.coeffs[0];
  assert(b.determinant() == 1);
  return b;
}

IntMat inverse2(const IntMat& m) {
  Int d = m.determinant();
  assert(d == 1 || d == -1);
  IntMat inv(2, 2);
  inv.at(0, 0) = m.at(1, 1) * d;
  inv.at(0, 1) = -m.at(0, 1) * d;
  inv.at(1, 0) = -m.at(1, 0) * d;
  inv.at(1, 1) = m.at(0, 0) * d;
  return inv;
}

bool verifies_iso(const IntMat& m, const Fan2D& a, const Fan2D& b) {
  Int d = m.determinant();
  if (d != 1 && d != -1) return false;
  std::vector<int> image(a.rays.size());
  std::set<int> hit;
  for (size_t i = 0; i < a.rays.size(); ++i) {
    int idx = b.ray_index(m.apply(a.rays[i]));
    if (idx < 0) return false;
    image[i] = idx;
    hit.insert(idx);
  }
  if (hit.size() != b.rays.size()) return false;
  std::set<std::pair<int, int>> bcones(b.maximal_cones.begin(), b.maximal_cones.end());
  for (const auto& [i, j] : a.maximal_cones) {
    int ii = image[static_cast<size_t>(i)], jj = image[static_cast<size_t>(j)];
    // orientation reverses under det -1
    std::pair<int, int> target = d == 1 ? std::make_pair(ii, jj) : std::make_pair(jj, ii);
    if (cross(b.rays[static_cast<size_t>(target.first)], b.rays[static_cast<size_t>(target.second)]) == 0)
      target = std::make_pair(ii, jj);  // half-plane cones keep their listing
    if (!bcones.count(target)) return false;
  }
  return a.maximal_cones.size() == b.maximal_cones.size();
}

}  // namespace

std::vector<IntMat> fan_isomorphisms(const Fan2D& a, const Fan2D& b) {
  std::vector<IntMat> out;
  if (a.rays.size() != b.rays.size() || a.maximal_cones.size() != b.maximal_cones.size())
    return out;
  if (a.rays.empty()) return out;

  auto push_unique = [&out](const IntMat& m) {
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };

  // pick a second ray independent of the first, if any
  int second = -1;
  for (size_t i = 1; i < a.rays.size(); ++i)
    if (cross(a.rays[0], a.rays[i]) != 0) { second = static_cast<int>(i); break; }

  if (second < 0) {
    // all rays collinear: one ray, or an antipodal pair
    IntMat b0 = complete_basis(a.rays[0]);
    for (const Vec2& s : b.rays) {
      IntMat cand = complete_basis(s) * inverse2(b0);
      if (verifies_iso(cand, a, b)) push_unique(cand);
      // also the reflection fixing the image ray
      IntMat refl = complete_basis(s);
      refl.at(0, 1) = -refl.at(0, 1);
      refl.at(1, 1) = -refl.at(1, 1);
      cand = refl * inverse2(b0);
      if (verifies_iso(cand, a, b)) push_unique(cand);
    }
    return out;
  }

  IntMat basis(2, 2);
  basis.at(0, 0) = a.rays[0].x;
  basis.at(1, 0) = a.rays[0].y;
  basis.at(0, 1) = a.rays[static_cast<size_t>(second)].x;
  basis.at(1, 1) = a.rays[static_cast<size_t>(second)].y;
  Int bd = basis.determinant();

  for (const Vec2& sa : b.rays)
    for (const Vec2& sb : b.rays) {
      if (sa == sb) continue;
      // solve m * [r0 r1] = [sa sb] over the rationals, keep integral unimodular ones
      IntMat target(2, 2);
      target.at(0, 0) = sa.x;
      target.at(1, 0) = sa.y;
      target.at(0, 1) = sb.x;
      target.at(1, 1) = sb.y;
      // m = target * adj(basis) / det(basis)
      IntMat adj(2, 2);
      adj.at(0, 0) = basis.at(1, 1);
      adj.at(0, 1) = -basis.at(0, 1);
      adj.at(1, 0) = -basis.at(1, 0);
      adj.at(1, 1) = basis.at(0, 0);
      IntMat num = target * adj;
      bool integral = true;
      IntMat m(2, 2);
      for (int i = 0; i < 2 && integral; ++i)
        for (int j = 0; j < 2 && integral; ++j) {
          if (num.at(i, j) % bd != 0)
            integral = false;
          else
            m.at(i, j) = num.at(i, j) / bd;
        }
      if (!integral) continue;
      if (verifies_iso(m, a, b)) push_unique(m);
    }
  return out;
}

std::optional<IntMat> fan_isomorphic(const Fan2D& a, const Fan2D& b) {
  auto all = fan_isomorphisms(a, b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

const Vec2* SurfaceModel::ray_of(const std::string& name) const {
  for (const auto& [n, r] : toric_divisors)
    if (n == name) return &r;
  return nullptr;
}

const MultiPoly* SurfaceModel::curve_of(const std::string& name) const {
  for (const auto& [n, h] : curve_divisors)
    if (n == name) return &h;
  return nullptr;
}

const std::string* SurfaceModel::name_of_ray(const Vec2& ray) const {
  for (const auto& [n, r] : toric_divisors)
    if (r == ray) return &n;
  return nullptr;
}

bool SurfaceModel::has_divisor(const std::string& name) const {
  return ray_of(name) != nullptr || curve_of(name) != nullptr;
}

std::vector<std::string> SurfaceModel::divisor_names() const {
  std::vector<std::string> out;
  for (const auto& [n, r] : toric_divisors) out.push_back(n);
  for (const auto& [n, h] : curve_divisors) out.push_back(n);
  return out;
}

bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
  if (a.kind != b.kind || a.fan != b.fan || a.toric_divisors != b.toric_divisors) return false;
  if (a.kind == "blowup" && a.blowup_d != b.blowup_d) return false;
  if (a.curve_divisors.size() != b.curve_divisors.size()) return false;
  for (size_t i = 0; i < a.curve_divisors.size(); ++i) {
    if (a.curve_divisors[i].first != b.curve_divisors[i].first) return false;
    if (!(a.curve_divisors[i].second == b.curve_divisors[i].second)) return false;
  }
  return true;
}

bool same_fan(const SurfaceModel& a, const SurfaceModel& b) { return a.fan == b.fan; }

void validate_model(const SurfaceModel& m) {
  std::set<std::string> names;
  std::set<Vec2> used_rays;
  for (const auto& [n, r] : m.toric_divisors) {
    if (!names.insert(n).second) throw std::invalid_argument("duplicate divisor name " + n);
    if (m.fan.ray_index(r) < 0)
      throw std::invalid_argument("divisor " + n + " sits on a ray absent from the fan");
    if (!used_rays.insert(r).second)
      throw std::invalid_argument("two divisors share the ray " + to_string(r));
  }
  for (const auto& [n, h] : m.curve_divisors) {
    if (!names.insert(n).second) throw std::invalid_argument("duplicate divisor name " + n);
    if (h.is_zero()) throw std::invalid_argument("curve divisor " + n + " has zero polynomial");
    if (h.constant_term() != 0)
      throw std::invalid_argument("curve divisor " + n + " must pass through the origin");
  }
}

SurfaceModel blowup_model(const Int& d) {
  if (d <= 0) throw std::invalid_argument("blowup_model: d must be positive");
  SurfaceModel m;
  m.kind = "blowup";
  m.blowup_d = d;
  m.fan.rays = {{1, 0}, {d, 1}, {0, 1}};
  m.fan.maximal_cones = {{0, 1}, {1, 2}};
  m.toric_divisors = {{"D_u", {1, 0}}, {"E", {d, 1}}, {"D_v", {0, 1}}};
  validate_model(m);
  return m;
}

SurfaceModel fan_model(const std::vector<std::pair<std::string, Vec2>>& divisors) {
  std::vector<Vec2> rays;
  for (const auto& [n, r] : divisors) rays.push_back(r);
  SurfaceModel m;
  m.kind = "fan";
  m.fan = fan_from_weights(rays);
  m.toric_divisors = divisors;
  validate_model(m);
  return m;
}

Rat QDivisor::coeff(const std::string& name) const {
  auto it = coeffs.find(name);
  return it == coeffs.end() ? Rat(0) : it->second;
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
  QDivisor out = a;
  for (const auto& [n, c] : b.coeffs) {
    out.coeffs[n] += c;
    if (out.coeffs[n] == 0) out.coeffs.erase(n);
  }
  return out;
}

std::string to_string(const QDivisor& d) {
  if (d.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : d.coeffs) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*" << n;
  }
  return os.str();
}

QDivisor div_of_monomial(const SurfaceModel& model, const Int& a, const Int& b) {
  Vec2 m{a, b};
  for (const auto& [n, h] : model.curve_divisors) {
    if (h.terms().size() != 1) continue;
    const auto& exps = h.terms().begin()->first;
    Vec2 e{0, 0};
    const auto& vars = h.vars();
    for (size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == "u") e.x = exps[i];
      if (vars[i] == "v") e.y = exps[i];
    }
    if (e == Vec2{0, 0}) continue;
    // m a nonzero integer multiple of e?
    if (cross(e, m) == 0 && !(m == Vec2{0, 0})) {
      Int k = e.x != 0 ? m.x / e.x : m.y / e.y;
      if (k != 0 && Vec2{k * e.x, k * e.y} == m)
        throw std::invalid_argument("monomial not coprime to curve divisor");
    }
  }
  QDivisor out;
  for (const auto& [n, r] : model.toric_divisors) {
    Int c = dot(r, m);
    if (c != 0) out.coeffs[n] = Rat(c);
  }
  return out;
}

Int curve_multiplicity(const Vec2& ray, const MultiPoly& h) {
  if (h.is_zero()) throw std::invalid_argument("curve_multiplicity: zero polynomial");
  const auto& vars = h.vars();
  bool first = true;
  Int best = 0;
  for (const auto& [e, c] : h.terms()) {
    Vec2 m{0, 0};
    for (size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == "u") m.x = e[i];
      if (vars[i] == "v") m.y = e[i];
    }
    Int val = dot(ray, m);
    if (first || val < best) best = val;
    first = false;
  }
  return best;
}

}  // namespace tgm
