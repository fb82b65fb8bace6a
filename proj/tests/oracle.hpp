#pragma once

// Test-only naive polynomial arithmetic, independent of MultiPoly's internals:
// flat term lists over a fixed variable universe, combined by brute force.
// Used to freeze expected values for the symbolic operations.

#include "tgm/exactmath.hpp"
#include "tgm/poly.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using tgm::Int;
using tgm::Rat;

// term: coefficient and one exponent per universe variable
struct Poly {
  std::vector<std::string> universe;
  std::map<std::vector<int>, Rat> terms;
};

inline Poly constant(std::vector<std::string> universe, const Rat& c) {
  Poly p{std::move(universe), {}};
  if (c != 0) p.terms[std::vector<int>(p.universe.size(), 0)] = c;
  return p;
}

inline Poly var(std::vector<std::string> universe, const std::string& name) {
  Poly p{std::move(universe), {}};
  std::vector<int> e(p.universe.size(), 0);
  for (size_t i = 0; i < p.universe.size(); ++i)
    if (p.universe[i] == name) e[i] = 1;
  p.terms[e] = 1;
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b.terms) {
    out.terms[e] += c;
    if (out.terms[e] == 0) out.terms.erase(e);
  }
  return out;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out{a.universe, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms[e] += ca * cb;
      if (out.terms[e] == 0) out.terms.erase(e);
    }
  return out;
}

inline Poly pow(const Poly& a, int k) {
  Poly out = constant(a.universe, Rat(1));
  for (int i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

// compare against the library representation term by term
inline bool matches(const Poly& a, const tgm::MultiPoly& b) {
  std::map<std::map<std::string, int>, Rat> lhs, rhs;
  for (const auto& [e, c] : a.terms) {
    std::map<std::string, int> key;
    for (size_t i = 0; i < a.universe.size(); ++i)
      if (e[i] != 0) key[a.universe[i]] = e[i];
    lhs[key] = c;
  }
  for (const auto& [e, c] : b.terms()) {
    std::map<std::string, int> key;
    for (size_t i = 0; i < b.vars().size(); ++i)
      if (e[i] != 0) key[b.vars()[i]] = e[i];
    rhs[key] = c;
  }
  return lhs == rhs;
}

}  // namespace oracle
