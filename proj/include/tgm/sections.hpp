#pragma once

#include "tgm/segdiv.hpp"

#include <vector>

namespace tgm {

// Monomial module of sections of an evaluation D(n) on a blow-up style model:
// Laurent monomials u^a v^b with <r,(a,b)> >= bound_r for every ray r.
// Generators are the componentwise-minimal lattice points, a finite staircase
// because the constraint normals span the first quadrant.
struct Staircase {
  std::vector<std::pair<Vec2, Int>> constraints;  // (ray, lower bound)
  std::vector<Vec2> generators;                   // minimal points, ordered by first coordinate

  bool admits(const Vec2& p) const;
};

Staircase weight_space(const SegmentalDivisor& d, const Int& n);

// Smallest d <= search_bound such that within the window |k| <= verify_bound
// every generator of weight d*k is a sum of |k| generators from weight
// sign(k)*d plus a monomial of weight zero.
Int find_d(const SegmentalDivisor& d, const Int& search_bound, const Int& verify_bound = 8);

// Minimal monomial generators of the ideal of the degree-zero part spanned by
// all products of weight d and weight -d generators.
std::vector<Vec2> center_ideal(const SegmentalDivisor& d, const Int& degree);

std::string monomial_string(const Vec2& exps);  // e.g. (1,0) -> "u", (2,3) -> "u^2*v^3"

}  // namespace tgm
