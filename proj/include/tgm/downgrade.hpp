#pragma once

#include "tgm/segdiv.hpp"

#include <optional>
#include <vector>

namespace tgm {

// Column of torus weights t(a_1,...,a_n) of a linear one-torus action.
struct WeightMatrix {
  std::vector<Int> weights;
};

// Integer row s with s∘F = 1.
struct Section {
  std::vector<Int> coeffs;
};

bool is_hyperbolic(const WeightMatrix& f);
bool strictly_coprime(const WeightMatrix& f);  // gcd of all weights is 1
bool pairwise_coprime(const WeightMatrix& f);
Int section_pairing(const Section& s, const WeightMatrix& f);

// Deterministic extended-gcd section; throws "weights not strictly coprime".
Section make_section(const WeightMatrix& f);

struct DowngradeResult {
  Fan2D fan;
  SegmentalDivisor divisor;  // on a fan model with divisors D1, D2, ... per distinct ray
  IntMat projection;         // P, the bottom two rows of the Smith transform
  Section section;           // the section actually used
};

// Weights of a hyperbolic linear action on affine 3-space to the pair
// (fan, segmental divisor): P = cokernel projection from the Smith normal
// form of F, rays = primitive images of the coordinate vectors, segment over
// a ray v = s(image of the fiber segment P^{-1}(v) in the positive octant).
DowngradeResult downgrade(const WeightMatrix& f, std::optional<Section> s = std::nullopt);

// Closed-form divisor for the sign pattern -a1, a2, a3 > 0 on the blow-up of
// the plane at the origin: coefficients from gcds of the weights and the
// section entries. Divisors named D2 (ray (1,0)), D3 (ray (0,1)), E ((1,1)).
SegmentalDivisor proposition_formula(const Int& a1, const Int& a2, const Int& a3, const Section& s);

// Sorts the weights into the closed-form sign pattern, runs both computation
// paths and matches them up to fan isomorphism plus shift equivalence.
bool crosscheck(const WeightMatrix& f);

}  // namespace tgm
