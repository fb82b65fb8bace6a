#include "tgm/sections.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace tgm {

bool Staircase::admits(const Vec2& p) const {
  for (const auto& [ray, bound] : constraints)
    if (dot(ray, p) < bound) return false;
  return true;
}

namespace {

void require_staircase_model(const SegmentalDivisor& d) {
  if (!toric_support(d)) throw std::invalid_argument("sections need monomial support");
  bool has_u = false, has_v = false;
  for (const Vec2& r : d.model.fan.rays) {
    if (r.x < 0 || r.y < 0)
      throw std::invalid_argument("sections need monomial support (rays outside the first quadrant)");
    if (r == Vec2{1, 0}) has_u = true;
    if (r == Vec2{0, 1}) has_v = true;
  }
  if (!has_u || !has_v)
    throw std::invalid_argument("sections need monomial support (coordinate rays required)");
}

}  // namespace

Staircase weight_space(const SegmentalDivisor& d, const Int& n) {
  require_staircase_model(d);
  QDivisor q = evaluate(d, n);

  Staircase st;
  Int a_min = 0, b_floor = 0;
  for (const Vec2& r : d.model.fan.rays) {
    const std::string* name = d.model.name_of_ray(r);
    Rat coeff = name ? q.coeff(*name) : Rat(0);
    Int bound = rat_ceil(-coeff);
    st.constraints.emplace_back(r, bound);
    if (r == Vec2{1, 0}) a_min = bound;
    if (r == Vec2{0, 1}) b_floor = bound;
  }

  // staircase walk: b(a) = max over sloped constraints, weakly decreasing in a;
  // corners are exactly the minimal points
  auto b_of = [&st, &b_floor](const Int& a) {
    Int b = b_floor;
    for (const auto& [r, c] : st.constraints) {
      if (r.y == 0) continue;
      Int need = ceil_div(c - r.x * a, r.y);
      if (need > b) b = need;
    }
    return b;
  };
  Int a = a_min;
  Int prev = b_of(a) + 1;
  while (true) {
    Int b = b_of(a);
    if (b < prev) {
      st.generators.push_back({a, b});
      prev = b;
    }
    if (b <= b_floor) break;
    ++a;
  }
  return st;
}

namespace {

// all sums of exactly k generators (multisets), k >= 1
std::set<Vec2> multiset_sums(const std::vector<Vec2>& gens, const Int& k) {
  std::set<Vec2> acc;
  for (const Vec2& g : gens) acc.insert(g);
  for (Int step = 1; step < k; ++step) {
    std::set<Vec2> next;
    for (const Vec2& s : acc)
      for (const Vec2& g : gens) next.insert(s + g);
    acc = std::move(next);
  }
  return acc;
}

bool dominated_by_sum(const Vec2& target, const std::set<Vec2>& sums) {
  for (const Vec2& s : sums)
    if (s.x <= target.x && s.y <= target.y) return true;
  return false;
}

}  // namespace

Int find_d(const SegmentalDivisor& div, const Int& search_bound, const Int& verify_bound) {
  if (search_bound < 1) throw std::runtime_error("no generating degree <= bound");
  require_staircase_model(div);

  for (Int d = 1; d <= search_bound; ++d) {
    std::vector<Vec2> pos = weight_space(div, d).generators;
    std::vector<Vec2> negs = weight_space(div, -d).generators;
    bool ok = true;
    for (Int k = -verify_bound; k <= verify_bound && ok; ++k) {
      if (k == 0) continue;
      const std::vector<Vec2>& gens = k > 0 ? pos : negs;
      Int steps = k > 0 ? k : Int(-k);
      std::set<Vec2> sums = multiset_sums(gens, steps);
      for (const Vec2& target : weight_space(div, d * k).generators)
        if (!dominated_by_sum(target, sums)) {
          ok = false;
          break;
        }
    }
    if (ok) return d;
  }
  throw std::runtime_error("no generating degree <= bound");
}

std::vector<Vec2> center_ideal(const SegmentalDivisor& div, const Int& degree) {
  if (degree < 1) throw std::invalid_argument("center_ideal: degree must be positive");
  std::vector<Vec2> pos = weight_space(div, degree).generators;
  std::vector<Vec2> neg = weight_space(div, -degree).generators;

  std::set<Vec2> sums;
  for (const Vec2& p : pos)
    for (const Vec2& q : neg) {
      Vec2 s = p + q;
      assert(s.x >= 0 && s.y >= 0);  // products of opposite weights are regular
      sums.insert(s);
    }
  std::vector<Vec2> minimal;
  for (const Vec2& s : sums) {
    bool dominated = false;
    for (const Vec2& t : sums)
      if (!(t == s) && t.x <= s.x && t.y <= s.y) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::string monomial_string(const Vec2& exps) {
  if (exps.x == 0 && exps.y == 0) return "1";
  std::string out;
  if (exps.x != 0) {
    out += "u";
    if (exps.x != 1) out += "^" + exps.x.str();
  }
  if (exps.y != 0) {
    if (!out.empty()) out += "*";
    out += "v";
    if (exps.y != 1) out += "^" + exps.y.str();
  }
  return out;
}

}  // namespace tgm
