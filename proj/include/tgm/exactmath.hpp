#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tgm {

// Exact arbitrary-precision scalars. Every quantity in the library is an Int
// or a Rat; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised by the text parsers (polynomials, rationals, divisor files); the CLI
// maps it to usage exit code 2 instead of 1.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// n/d for any nonzero d; normalizes the sign into the numerator.
inline Rat make_rat(Int n, Int d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

// floor(a/b) for b > 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(num(r), den(r)); }

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// ceil(a/b) for b > 0
inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

Int parse_int(const std::string& text);
Rat parse_rat(const std::string& text);

// Integer point / direction in the rank-two lattice of the quotient surface.
struct Vec2 {
  Int x{}, y{};

  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
};

inline Int dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline std::string to_string(const Vec2& v) {
  return "(" + v.x.str() + ", " + v.y.str() + ")";
}

}  // namespace tgm
