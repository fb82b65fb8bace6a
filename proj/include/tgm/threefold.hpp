#pragma once

#include "tgm/downgrade.hpp"
#include "tgm/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tgm {

// f(x1*x2, ..., x1*xn) / x1: the equation of the hyperbolic modification of
// {f = 0}. The input variables (f's own list unless given) map in order to
// x1*x2, x1*x3, ...
MultiPoly hyperbolic_modification(const MultiPoly& f, std::vector<std::string> input_vars = {});

// Ambient polynomial presentation of a threefold.
struct Presentation {
  std::vector<std::string> variables;
  std::vector<MultiPoly> relations;
};

std::string to_string(const Presentation& p);

// Bi-cyclic cover presentation over the modification of two plane curves:
// x4^zeta = f(x1x2, x1x3)/x1,  x5^xi = g(x1x2, x1x3)/x1.
Presentation bicyclic_presentation(const MultiPoly& f, const MultiPoly& g, const Int& zeta,
                                   const Int& xi, const std::string& uvar = "u",
                                   const std::string& vvar = "v");

// Repeatedly solve out variables that occur in exactly one relation as a lone
// unit-coefficient linear monomial; deterministic scan order, fixpoint.
Presentation eliminate_linear(Presentation p);

struct IntersectionReport {
  Int count = 0;             // intersection count with multiplicity (resultant degree)
  bool transversal = false;  // all intersections simple
  bool origin = false;       // (0,0) lies on both curves
  Int d = 0;                 // inferred d = count
  bool undecided = false;    // transversality could not be certified either way
  std::vector<std::pair<Rat, Rat>> rational_points;
  std::string resultant_v;   // eliminating u
  std::string resultant_u;   // eliminating v
};

// Intersection behaviour of two plane curves without common components.
IntersectionReport intersection_analysis(const MultiPoly& f, const MultiPoly& g);

// All monomials u^a v^b of f satisfy a*w_u + b*w_v ≡ const (mod |a1|).
bool mu_homogeneous(const MultiPoly& f, const Int& w_u, const Int& w_v, const Int& a1);

struct SmoothnessReport {
  bool smooth = false;
  bool decided = true;
  std::string note;
};

// No common zero of (f, f_u, f_v), decided by resultant elimination with
// rational back-substitution; falls back to the swapped elimination.
SmoothnessReport plane_curve_smooth(const MultiPoly& f);

struct ParamCertificate {
  MultiPoly p, q;  // univariate in t
};

struct TheoremData {
  WeightMatrix weights;  // (a1, a2, a3), -a1, a2, a3 > 0
  Section section;
  MultiPoly f, g;  // curves in u, v
  ParamCertificate param_f, param_g;
  Int mu_wu = 0, mu_wv = 0;  // action weights on the quotient plane
};

struct ConditionResult {
  std::string name;
  bool pass = false;
  std::string note;
};

struct ValidationReport {
  std::vector<ConditionResult> conditions;
  std::vector<std::string> warnings;
  bool all_pass = false;
  Int d = 0;  // from the intersection analysis, when it ran
};

// Aggregated check of the construction data: sign pattern and coprimality,
// section splitting (positivity is a warning only), weighted homogeneity of
// both curves, parametrized-line certificates plus smoothness, and normal
// crossing of the two curves through the origin.
ValidationReport validate_theorem_data(const TheoremData& data);

}  // namespace tgm
