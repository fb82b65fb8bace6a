#pragma once

#include "tgm/exactmath.hpp"

#include <map>
#include <string>
#include <vector>

namespace tgm {

// Exact multivariate polynomial over Q. Terms are kept in a map from exponent
// vectors (relative to the declared variable order) to nonzero coefficients;
// comparisons are semantic, so two polynomials with different variable lists
// compare equal when they denote the same element of Q[x...].
class MultiPoly {
 public:
  MultiPoly() = default;  // zero
  explicit MultiPoly(const Rat& c);
  explicit MultiPoly(long long c) : MultiPoly(Rat(c)) {}

  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(std::vector<std::string> vars, std::vector<int> exps, const Rat& coeff);
  // Text syntax: integer/rational coefficients, + - * / ^, parentheses,
  // alphanumeric variable names; whitespace insignificant. '/' only by a
  // nonzero constant. Juxtaposition such as "2u" multiplies.
  static MultiPoly parse(const std::string& text);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  Rat constant_term() const;   // coefficient of the monomial 1
  int degree(const std::string& var) const;  // -1 for the zero polynomial
  int total_degree() const;                  // -1 for the zero polynomial
  bool uses(const std::string& var) const;
  std::vector<std::string> used_vars() const;

  // Same polynomial over the given variable list; throws if a used variable
  // would be dropped.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;

  MultiPoly derivative(const std::string& var) const;
  Rat eval(const std::map<std::string, Rat>& point) const;
  // Dense coefficients in `var`: index = power, entries over the other
  // variables. Size degree+1; {zero} for the zero polynomial.
  std::vector<MultiPoly> coeffs_in(const std::string& var) const;
  MultiPoly pow(int e) const;
  std::string str() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator*(const Rat& c, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  std::vector<std::string> vars_;
  std::map<std::vector<int>, Rat> terms_;

  void strip();
  static void align(MultiPoly& a, MultiPoly& b);
  friend MultiPoly poly_from_parts(std::vector<std::string> vars,
                                   std::map<std::vector<int>, Rat> terms);
};

// Composite f(images); every variable occurring in f needs an image.
MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& images);

// Quotient q with f = q*g, or throws "remainder nonzero".
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

// Sylvester resultant eliminating `var`, determinant by fraction-free
// (Bareiss) elimination over Q[other vars].
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

// gcd of polynomials in (at most) one common variable; monic, gcd(f,0)=monic f.
MultiPoly gcd_univariate(const MultiPoly& f, const MultiPoly& g);

// gcd of polynomials in at most two variables via a primitive pseudo-remainder
// sequence in `main_var`, contents resolved by the univariate gcd.
MultiPoly gcd_bivariate(const MultiPoly& f, const MultiPoly& g, const std::string& main_var);

// true iff gcd(f, f') is constant; f univariate and nonzero.
bool squarefree(const MultiPoly& f);

// f == c*g for some nonzero constant c (both nonzero).
bool proportional(const MultiPoly& f, const MultiPoly& g);

// All rational roots of a univariate polynomial (values only, deduplicated).
std::vector<Rat> rational_roots(const MultiPoly& f);

struct ParamCheck {
  bool composes = false;      // f(p(t), q(t)) == 0
  bool injective = false;     // gcd(p(t)-p(s), q(t)-q(s)) == t-s up to unit
  bool implicitizes = false;  // Res_t(p-u, q-v) == c*f, c nonzero constant
  bool accepted() const { return composes && injective && implicitizes; }
};

// Certificate that (p(t), q(t)) exhibits {f=0} as a parametrized affine line.
// Verifies only; never searches for a parametrization.
ParamCheck parametrization_check(const MultiPoly& f, const MultiPoly& p, const MultiPoly& q,
                                 const std::string& uvar = "u", const std::string& vvar = "v");

}  // namespace tgm
