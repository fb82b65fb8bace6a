#pragma once

#include "tgm/exactmath.hpp"

#include <utility>
#include <vector>

namespace tgm {

// Dense integer matrix, row-major. Sizes here never exceed a handful of rows,
// so everything is the straightforward exact algorithm.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<Int> row(int i) const;
  std::vector<Int> col(int j) const;

  IntMat operator*(const IntMat& other) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;
  Vec2 apply(const Vec2& v) const;  // requires 2x2

  // Bareiss fraction-free elimination; exact over the integers.
  Int determinant() const;

  friend bool operator==(const IntMat&, const IntMat&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> entries_;
};

std::string to_string(const IntMat& m);

struct ExtGcdResult {
  Int g;                    // positive gcd
  std::vector<Int> coeffs;  // sum coeffs[i]*a[i] == g
};

// Extended gcd of a list, left fold of the two-term extended Euclid.
// Deterministic: the same input always yields the same certificate.
ExtGcdResult ext_gcd(const std::vector<Int>& a);

struct SmithResult {
  IntMat u, s, v;  // u*m*v == s, u and v unimodular, s diagonal with d_i | d_{i+1}, d_i >= 0
};

SmithResult smith_normal_form(const IntMat& m);

// v = lambda * w with w primitive on the same ray, lambda > 0.
std::pair<std::vector<Int>, Int> primitive(const std::vector<Int>& v);
std::pair<Vec2, Int> primitive(const Vec2& v);

// Exact integral solution of p*x = v, or throws "not in image lattice".
std::vector<Int> solve_integral(const IntMat& p, const std::vector<Int>& v);

}  // namespace tgm
