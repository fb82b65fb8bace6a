#pragma once

#include "tgm/exactmath.hpp"
#include "tgm/intmat.hpp"
#include "tgm/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tgm {

// Two-dimensional fan: primitive rays sorted counterclockwise from the
// positive x-axis, maximal cones as adjacent ray index pairs of positive
// determinant. The single degenerate exception is the antipodal-pair fan,
// where both half planes are listed.
struct Fan2D {
  std::vector<Vec2> rays;
  std::vector<std::pair<int, int>> maximal_cones;

  int ray_index(const Vec2& r) const;  // -1 if absent
  friend bool operator==(const Fan2D&, const Fan2D&) = default;
};

// Exact counterclockwise ray order starting at angle zero.
bool ccw_less(const Vec2& a, const Vec2& b);

// Coarsest fan subdividing the union of all cones spanned by pairs of the
// given primitive rays (and the rays themselves) exactly at those rays.
Fan2D fan_from_weights(const std::vector<Vec2>& rays);

// All unimodular matrices carrying rays of a bijectively onto rays of b and
// cones onto cones. Deterministic order; empty when the fans differ.
std::vector<IntMat> fan_isomorphisms(const Fan2D& a, const Fan2D& b);
std::optional<IntMat> fan_isomorphic(const Fan2D& a, const Fan2D& b);

// Toric surface model: a fan with named prime divisors. Toric divisors sit on
// rays; curve divisors are strict transforms of plane curves {h(u,v)=0} with
// h(0,0)=0.
struct SurfaceModel {
  std::string kind;  // "blowup" or "fan"
  Int blowup_d = 0;  // meaningful when kind == "blowup"
  Fan2D fan;
  std::vector<std::pair<std::string, Vec2>> toric_divisors;
  std::vector<std::pair<std::string, MultiPoly>> curve_divisors;

  const Vec2* ray_of(const std::string& name) const;
  const MultiPoly* curve_of(const std::string& name) const;
  const std::string* name_of_ray(const Vec2& ray) const;
  bool has_divisor(const std::string& name) const;
  std::vector<std::string> divisor_names() const;  // toric first, then curves

  friend bool operator==(const SurfaceModel& a, const SurfaceModel& b);
};

bool same_fan(const SurfaceModel& a, const SurfaceModel& b);
void validate_model(const SurfaceModel& m);

// Blow-up of the affine plane at the monomial ideal (u, v^d): rays (1,0),
// (d,1), (0,1) named D_u, E, D_v.
SurfaceModel blowup_model(const Int& d);

// General model over fan_from_weights of the named rays.
SurfaceModel fan_model(const std::vector<std::pair<std::string, Vec2>>& divisors);

// Rational Weil divisor; zero coefficients omitted.
struct QDivisor {
  std::map<std::string, Rat> coeffs;

  Rat coeff(const std::string& name) const;
  friend bool operator==(const QDivisor&, const QDivisor&) = default;
  friend QDivisor operator+(const QDivisor& a, const QDivisor& b);
};

std::string to_string(const QDivisor& d);

// Principal divisor of the Laurent monomial u^a v^b: pairing with each ray on
// the toric part, zero on curve divisors (which must be coprime to it).
QDivisor div_of_monomial(const SurfaceModel& model, const Int& a, const Int& b);

// Multiplicity of the strict transform of {h=0} along the divisor of `ray`:
// min over monomials u^a v^b of h of <ray,(a,b)>.
Int curve_multiplicity(const Vec2& ray, const MultiPoly& h);

}  // namespace tgm
