#include "tgm/segdiv.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tgm {

SegmentalDivisor make_divisor(SurfaceModel model, std::map<std::string, Segment> terms) {
  validate_model(model);
  for (auto it = terms.begin(); it != terms.end();) {
    const auto& [name, seg] = *it;
    if (!model.has_divisor(name))
      throw std::invalid_argument("segment on unknown divisor " + name);
    if (seg.lo > seg.hi) throw std::invalid_argument("segment on " + name + " has lo > hi");
    if (seg.lo == 0 && seg.hi == 0)
      it = terms.erase(it);  // zero points contribute nothing
    else
      ++it;
  }
  return {std::move(model), std::move(terms)};
}

bool toric_support(const SegmentalDivisor& d) {
  for (const auto& [name, seg] : d.terms)
    if (d.model.ray_of(name) == nullptr) return false;
  return true;
}

bool same_segments(const SegmentalDivisor& a, const SegmentalDivisor& b) {
  return segments_by_ray(a) == segments_by_ray(b);
}

std::map<Vec2, Segment> segments_by_ray(const SegmentalDivisor& d) {
  std::map<Vec2, Segment> out;
  for (const auto& [name, seg] : d.terms) {
    const Vec2* r = d.model.ray_of(name);
    if (r == nullptr) throw std::invalid_argument("toric support required (divisor " + name + ")");
    out[*r] = seg;
  }
  return out;
}

std::string to_string(const SegmentalDivisor& d) {
  if (d.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& name : d.model.divisor_names()) {
    auto it = d.terms.find(name);
    if (it == d.terms.end()) continue;
    const Segment& s = it->second;
    if (!first) os << " + ";
    first = false;
    if (s.is_point())
      os << "{" << to_string(s.lo) << "}";
    else
      os << "[" << to_string(s.lo) << "," << to_string(s.hi) << "]";
    os << "(x)" << name;
  }
  return os.str();
}

QDivisor evaluate(const SegmentalDivisor& d, const Int& n) {
  QDivisor out;
  for (const auto& [name, seg] : d.terms) {
    Rat a = Rat(n) * seg.lo;
    Rat b = Rat(n) * seg.hi;
    Rat q = a < b ? a : b;
    if (q != 0) out.coeffs[name] = q;
  }
  return out;
}

SegmentalDivisor scale(const SegmentalDivisor& d, const Int& m) {
  if (m <= 0) throw std::invalid_argument("scale: multiplier must be positive");
  std::map<std::string, Segment> terms;
  for (const auto& [name, seg] : d.terms) terms[name] = {Rat(m) * seg.lo, Rat(m) * seg.hi};
  return make_divisor(d.model, std::move(terms));
}

SegmentalDivisor shift(const SegmentalDivisor& d, const Vec2& w) {
  std::map<std::string, Segment> terms;
  for (const auto& [name, seg] : d.terms) {
    const Vec2* r = d.model.ray_of(name);
    if (r == nullptr) throw std::invalid_argument("shift undefined on non-toric support");
    Rat delta{dot(w, *r)};
    terms[name] = {seg.lo + delta, seg.hi + delta};
  }
  return make_divisor(d.model, std::move(terms));
}

std::optional<Vec2> equivalent(const SegmentalDivisor& a, const SegmentalDivisor& b) {
  if (!same_fan(a.model, b.model))
    throw std::invalid_argument("equivalent: divisors live on different models");
  auto sa = segments_by_ray(a);
  auto sb = segments_by_ray(b);

  std::vector<Vec2> rays;
  for (const auto& [r, s] : sa) rays.push_back(r);
  for (const auto& [r, s] : sb)
    if (!sa.count(r)) rays.push_back(r);

  std::vector<std::vector<Int>> rows;
  std::vector<Int> rhs;
  for (const Vec2& r : rays) {
    Segment s1 = sa.count(r) ? sa[r] : point_segment(Rat(0));
    Segment s2 = sb.count(r) ? sb[r] : point_segment(Rat(0));
    if (s1.length() != s2.length()) return std::nullopt;  // shifts preserve lengths
    Rat delta = s2.lo - s1.lo;
    if (den(delta) != 1) return std::nullopt;  // shifts move by integers on primitive rays
    rows.push_back({r.x, r.y});
    rhs.push_back(num(delta));
  }
  if (rows.empty()) return Vec2{0, 0};
  try {
    std::vector<Int> w = solve_integral(IntMat::from_rows(rows), rhs);
    Vec2 witness{w[0], w[1]};
    // the solver treats absent terms as {0}; a shift can only move the
    // existing support, so confirm it really lands on b
    if (!same_segments(shift(a, witness), b)) return std::nullopt;
    return witness;
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
}

SegmentalDivisor normal_form(const SegmentalDivisor& d) {
  if (!toric_support(d)) throw std::invalid_argument("normal_form: toric support required");
  auto by_ray = segments_by_ray(d);
  Vec2 w{0, 0};
  auto fix = [&by_ray](const Vec2& frame) -> Int {
    auto it = by_ray.find(frame);
    if (it == by_ray.end()) return 0;
    return -rat_floor(it->second.lo);  // lo + w lands in [0,1)
  };
  w.x = fix({1, 0});
  w.y = fix({0, 1});
  return shift(d, w);
}

namespace {

// rays (1,0), (d,1), (0,1) with the two standard cones
Int blowup_shape_d(const SurfaceModel& m) {
  const auto& f = m.fan;
  if (f.rays.size() != 3 || f.maximal_cones != std::vector<std::pair<int, int>>{{0, 1}, {1, 2}})
    throw std::invalid_argument("check_proper: unsupported model");
  if (!(f.rays[0] == Vec2{1, 0}) || !(f.rays[2] == Vec2{0, 1}) || f.rays[1].y != 1 || f.rays[1].x < 1)
    throw std::invalid_argument("check_proper: unsupported model");
  return f.rays[1].x;
}

}  // namespace

ProperReport check_proper(const SegmentalDivisor& div, const Int& bound) {
  Int d = blowup_shape_d(div.model);
  if (!toric_support(div)) throw std::invalid_argument("check_proper: toric support required");
  if (bound < 0) throw std::invalid_argument("check_proper: negative bound");

  ProperReport report;
  report.bound = bound;
  report.all_pass = true;
  for (Int n = -bound; n <= bound; ++n) {
    if (n == 0) continue;
    QDivisor q = evaluate(div, n);
    auto coeff_on = [&](const Vec2& ray) -> Rat {
      const std::string* name = div.model.name_of_ray(ray);
      return name ? q.coeff(*name) : Rat(0);
    };
    Rat qu = coeff_on({1, 0});
    Rat qv = coeff_on({0, 1});
    Rat qe = coeff_on({d, 1});

    ProperEntry e;
    e.n = n;
    e.cartier = true;  // simplicial fan
    e.semiample_slack = Rat(d) * qu + qv - qe;
    e.semiample = e.semiample_slack >= 0;
    {
      // interior point of {m : <r,m> + q_r >= 0}: walk up the diagonal from
      // the corner of the two frame constraints until the third is strict
      Rat cx = -qu, cy = -qv;
      Rat need = -(Rat(d) * cx + cy + qe);
      Rat t(1);
      if (need >= 0) t = (need + 1) / Rat(d + 1);
      Rat mx = cx + t, my = cy + t;
      e.big = (mx + qu > 0) && (my + qv > 0) && (Rat(d) * mx + my + qe > 0);
    }
    if (!e.ok()) {
      report.all_pass = false;
      report.failing.push_back(n);
    }
    report.entries.push_back(e);
  }
  return report;
}

DescribeReport describe(const SegmentalDivisor& d) {
  DescribeReport report;
  int intervals = 0;
  for (const auto& [name, seg] : d.terms) {
    DescribeEntry e;
    e.divisor = name;
    e.seg = seg;
    e.is_point = seg.is_point();
    if (e.is_point) {
      e.isotropy_order = den(seg.lo);
    } else {
      ++intervals;
      report.interval_divisor = name;
    }
    report.entries.push_back(e);
  }
  report.unique_interval = intervals == 1;
  if (!report.unique_interval) report.interval_divisor.reset();
  report.interval_on_E =
      report.unique_interval && report.interval_divisor && *report.interval_divisor == "E";
  return report;
}

SegmentalDivisor transport(const SegmentalDivisor& d, const IntMat& m, const SurfaceModel& target) {
  std::map<std::string, Segment> terms;
  for (const auto& [name, seg] : d.terms) {
    const Vec2* r = d.model.ray_of(name);
    if (r == nullptr) throw std::invalid_argument("transport: toric support required");
    Vec2 image = m.apply(*r);
    const std::string* tname = target.name_of_ray(image);
    if (tname == nullptr)
      throw std::invalid_argument("transport: image ray " + to_string(image) + " missing from target");
    terms[*tname] = seg;
  }
  return make_divisor(target, std::move(terms));
}

}  // namespace tgm
