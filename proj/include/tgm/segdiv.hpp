#pragma once

#include "tgm/surface.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tgm {

// Closed rational interval [lo, hi]; a point when lo == hi.
struct Segment {
  Rat lo, hi;

  bool is_point() const { return lo == hi; }
  Rat length() const { return hi - lo; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

inline Segment point_segment(const Rat& a) { return {a, a}; }

// Formal sum of segments attached to prime divisors of a surface model.
// Terms with segment {0} are pruned on construction; they contribute nothing
// to any evaluation.
struct SegmentalDivisor {
  SurfaceModel model;
  std::map<std::string, Segment> terms;
};

SegmentalDivisor make_divisor(SurfaceModel model, std::map<std::string, Segment> terms);

bool toric_support(const SegmentalDivisor& d);
bool same_segments(const SegmentalDivisor& a, const SegmentalDivisor& b);
std::map<Vec2, Segment> segments_by_ray(const SegmentalDivisor& d);
std::string to_string(const SegmentalDivisor& d);

// D(n): coefficient min(n*lo, n*hi) on each component.
QDivisor evaluate(const SegmentalDivisor& d, const Int& n);

// m*D: every segment scaled by m >= 1 (lattice refinement of index m).
SegmentalDivisor scale(const SegmentalDivisor& d, const Int& m);

// Linear equivalence move: segment on the divisor with ray r translates by
// <w, r>. Toric support only.
SegmentalDivisor shift(const SegmentalDivisor& d, const Vec2& w);

// Witness w with shift(a, w) == b, or nullopt. Models must share the fan;
// terms are matched through their rays.
std::optional<Vec2> equivalent(const SegmentalDivisor& a, const SegmentalDivisor& b);

// Canonical representative of the shift class: lo endpoints on the frame rays
// (1,0) and (0,1) land in [0,1); a missing frame ray pins that component of
// the shift to zero.
SegmentalDivisor normal_form(const SegmentalDivisor& d);

struct ProperEntry {
  Int n;
  bool cartier = false;
  bool semiample = false;
  bool big = false;
  Rat semiample_slack;  // d*q_{D_u} + q_{D_v} - q_E, nonnegative iff semi-ample
  bool ok() const { return cartier && semiample && big; }
};

struct ProperReport {
  bool all_pass = false;
  Int bound;
  std::vector<ProperEntry> entries;   // n = -bound..bound, skipping 0
  std::vector<Int> failing;
};

// Properness of every evaluation D(n), |n| <= bound, on a blow-up model:
// Q-Cartier is automatic on the simplicial fan, semi-ample is convexity of
// the support function across the interior ray, big is full-dimensionality of
// the section polyhedron.
ProperReport check_proper(const SegmentalDivisor& d, const Int& bound);

struct DescribeEntry {
  std::string divisor;
  Segment seg;
  bool is_point = false;
  Int isotropy_order;  // reduced denominator of the point coefficient
};

struct DescribeReport {
  std::vector<DescribeEntry> entries;
  bool unique_interval = false;             // exactly one true interval term
  std::optional<std::string> interval_divisor;
  bool interval_on_E = false;               // and it sits on the divisor named E
};

// Point coefficients encode finite cyclic isotropy (order = reduced
// denominator); interval coefficients mark fixed points over that divisor.
DescribeReport describe(const SegmentalDivisor& d);

// Push a toric-supported divisor through a unimodular fan map onto a model of
// the image fan; terms are renamed to the target's divisor names.
SegmentalDivisor transport(const SegmentalDivisor& d, const IntMat& m, const SurfaceModel& target);

}  // namespace tgm
