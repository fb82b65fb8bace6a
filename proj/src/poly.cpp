#include "tgm/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <sstream>

namespace tgm {

MultiPoly poly_from_parts(std::vector<std::string> vars, std::map<std::vector<int>, Rat> terms) {
  MultiPoly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  p.strip();
  return p;
}

void MultiPoly::strip() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

MultiPoly::MultiPoly(const Rat& c) {
  if (c != 0) terms_[{}] = c;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_[{1}] = 1;
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, std::vector<int> exps, const Rat& coeff) {
  if (vars.size() != exps.size()) throw std::invalid_argument("monomial: exponent count mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("monomial: negative exponent");
  MultiPoly p;
  p.vars_ = std::move(vars);
  if (coeff != 0) p.terms_[std::move(exps)] = coeff;
  return p;
}

bool MultiPoly::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (int k : e)
      if (k > 0) return false;
  return true;
}

Rat MultiPoly::constant_value() const {
  if (!is_constant()) throw std::invalid_argument("not a constant polynomial");
  return constant_term();
}

Rat MultiPoly::constant_term() const {
  std::vector<int> zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::degree(const std::string& var) const {
  if (is_zero()) return -1;
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

int MultiPoly::total_degree() const {
  if (is_zero()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::uses(const std::string& var) const { return degree(var) > 0; }

std::vector<std::string> MultiPoly::used_vars() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
  }
  return out;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  std::vector<int> where(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) where[i] = static_cast<int>(it - vars.begin());
  }
  MultiPoly out;
  out.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(vars.size(), 0);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw std::invalid_argument("with_vars would drop used variable " + vars_[i]);
      ne[where[i]] += e[i];
    }
    out.terms_[ne] += c;
  }
  out.strip();
  return out;
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
  if (a.vars_ == b.vars_) return;
  std::vector<std::string> merged = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
  a = a.with_vars(merged);
  b = b.with_vars(merged);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly x = a, y = b;
  MultiPoly::align(x, y);
  for (const auto& [e, c] : y.terms_) x.terms_[e] += c;
  x.strip();
  return x;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly x = a, y = b;
  MultiPoly::align(x, y);
  MultiPoly out;
  out.vars_ = x.vars_;
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  out.strip();
  return out;
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) {
  MultiPoly out = p;
  if (c == 0) return MultiPoly();
  for (auto& [e, k] : out.terms_) k *= c;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly x = a, y = b;
  MultiPoly::align(x, y);
  return x.terms_ == y.terms_;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  MultiPoly out(Rat(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return MultiPoly();
  size_t idx = static_cast<size_t>(it - vars_.begin());
  MultiPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    std::vector<int> ne = e;
    ne[idx] -= 1;
    out.terms_[ne] += c * e[idx];
  }
  out.strip();
  return out;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& point) const {
  for (const auto& v : used_vars())
    if (!point.count(v)) throw std::invalid_argument("eval: missing value for " + v);
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      Rat base = point.at(vars_[i]);
      for (int k = 0; k < e[i]; ++k) t *= base;
    }
    total += t;
  }
  return total;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const std::string& var) const {
  if (is_zero()) return {MultiPoly()};
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || degree(var) == 0) {
    MultiPoly self = *this;
    return {self};
  }
  size_t idx = static_cast<size_t>(it - vars_.begin());
  std::vector<std::string> rest;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (i != idx) rest.push_back(vars_[i]);
  std::vector<MultiPoly> out(static_cast<size_t>(degree(var)) + 1);
  for (auto& p : out) p.vars_ = rest;
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne;
    ne.reserve(rest.size());
    for (size_t i = 0; i < vars_.size(); ++i)
      if (i != idx) ne.push_back(e[i]);
    out[e[idx]].terms_[ne] += c;
  }
  for (auto& p : out) p.strip();
  return out;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      os << to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << to_string(mag) << "*" << mono;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Token {
  enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
};

struct Lexer {
  std::string src;
  size_t pos = 0;

  Token next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos >= src.size()) return {Token::End, ""};
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      return {Token::Num, src.substr(start, pos - start)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
      return {Token::Ident, src.substr(start, pos - start)};
    }
    ++pos;
    switch (c) {
      case '+': return {Token::Plus, "+"};
      case '-': return {Token::Minus, "-"};
      case '*': return {Token::Star, "*"};
      case '/': return {Token::Slash, "/"};
      case '^': return {Token::Caret, "^"};
      case '(': return {Token::LParen, "("};
      case ')': return {Token::RParen, ")"};
    }
    throw ParseError(std::string("unexpected character '") + c + "' in polynomial");
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  Token take() { return toks[pos++]; }

  MultiPoly expr() {
    bool neg = false;
    if (peek().kind == Token::Minus) {
      take();
      neg = true;
    } else if (peek().kind == Token::Plus) {
      take();
    }
    MultiPoly acc = term();
    if (neg) acc = -acc;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = take().kind == Token::Minus;
      MultiPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      Token::Kind k = peek().kind;
      if (k == Token::Star || k == Token::Slash) {
        bool divide = take().kind == Token::Slash;
        MultiPoly f = factor();
        if (divide) {
          if (!f.is_constant() || f.is_zero())
            throw ParseError("division only by nonzero rational constants");
          acc = Rat(1) / f.constant_value() * acc;
        } else {
          acc *= f;
        }
      } else if (k == Token::Num || k == Token::Ident || k == Token::LParen) {
        acc *= factor();  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (peek().kind == Token::Caret) {
      take();
      if (peek().kind != Token::Num) throw ParseError("expected integer exponent after '^'");
      std::string digits = take().text;
      if (digits.size() > 3) throw ParseError("exponent too large");
      int e = std::stoi(digits);
      if (e > 512) throw ParseError("exponent too large");
      base = base.pow(e);
    }
    return base;
  }

  MultiPoly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Num: {
        return MultiPoly(Rat(Int(take().text)));
      }
      case Token::Ident:
        return MultiPoly::variable(take().text);
      case Token::LParen: {
        take();
        MultiPoly inner = expr();
        if (peek().kind != Token::RParen) throw ParseError("missing ')'");
        take();
        return inner;
      }
      case Token::Minus: {
        take();
        return -factor();
      }
      default:
        throw ParseError("unexpected token '" + t.text + "' in polynomial");
    }
  }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
  Lexer lex{text};
  Parser p;
  for (Token t = lex.next();; t = lex.next()) {
    p.toks.push_back(t);
    if (t.kind == Token::End) break;
  }
  if (p.toks.size() == 1) throw ParseError("empty polynomial");
  MultiPoly out = p.expr();
  if (p.peek().kind != Token::End)
    throw ParseError("trailing input '" + p.peek().text + "' in polynomial");
  return out;
}

// ---------------------------------------------------------------------------
// ring operations

MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& images) {
  std::map<std::string, std::vector<MultiPoly>> powers;  // powers[v][k] = images[v]^k
  for (const auto& v : f.used_vars()) {
    auto it = images.find(v);
    if (it == images.end()) throw std::invalid_argument("substitute: unmapped variable " + v);
    powers[v] = {MultiPoly(Rat(1)), it->second};
  }
  auto power = [&powers](const std::string& v, int e) -> const MultiPoly& {
    auto& vec = powers[v];
    while (static_cast<int>(vec.size()) <= e) vec.push_back(vec.back() * vec[1]);
    return vec[e];
  };
  MultiPoly out;
  const auto& vars = f.vars();
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term{c};
    for (size_t i = 0; i < vars.size(); ++i)
      if (e[i] > 0) term *= power(vars[i], e[i]);
    out += term;
  }
  return out;
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_divide by zero");
  if (f.is_zero()) return MultiPoly();
  const std::vector<std::string> merged = (f - g).vars();  // common variable frame
  MultiPoly a = f.with_vars(merged);
  MultiPoly b = g.with_vars(merged);

  const auto& bt = *b.terms().rbegin();  // lex-leading term of divisor
  MultiPoly q = poly_from_parts(merged, {});
  while (!a.is_zero()) {
    const auto& at = *a.terms().rbegin();
    std::vector<int> diff(at.first.size());
    for (size_t i = 0; i < diff.size(); ++i) {
      diff[i] = at.first[i] - bt.first[i];
      if (diff[i] < 0) throw std::runtime_error("remainder nonzero");
    }
    MultiPoly t = MultiPoly::monomial(merged, diff, at.second / bt.second);
    q += t;
    a -= t * b;
  }
  return q;
}

namespace {

// Bareiss determinant over Q[vars]; divisions are exact by the minor identity.
MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> a) {
  size_t n = a.size();
  if (n == 0) return MultiPoly(Rat(1));
  int sign = 1;
  MultiPoly prev{Rat(1)};
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t p = k;
      for (size_t i = k + 1; i < n; ++i)
        if (!a[i][k].is_zero()) { p = i; break; }
      if (p == k) return MultiPoly();
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = MultiPoly();
    }
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero()) return MultiPoly();
  int df = f.degree(var), dg = g.degree(var);
  if (df == 0 && dg == 0)
    throw std::invalid_argument("resultant: both arguments constant in " + var);
  if (df == 0) return f.pow(dg);
  if (dg == 0) return g.pow(df);

  auto fc = f.coeffs_in(var);
  auto gc = g.coeffs_in(var);
  size_t n = static_cast<size_t>(df + dg);
  std::vector<std::vector<MultiPoly>> syl(n, std::vector<MultiPoly>(n));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= df; ++j) syl[i][i + j] = fc[static_cast<size_t>(df - j)];
  for (int i = 0; i < df; ++i)
    for (int j = 0; j <= dg; ++j) syl[static_cast<size_t>(dg + i)][i + j] = gc[static_cast<size_t>(dg - j)];
  return bareiss_det(std::move(syl));
}

// ---------------------------------------------------------------------------
// gcds

namespace {

std::vector<Rat> to_dense(const MultiPoly& f, const std::string& var) {
  if (f.is_zero()) return {};
  auto cs = f.coeffs_in(var);
  std::vector<Rat> out(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) {
    if (!cs[i].is_constant()) throw std::invalid_argument("gcd_univariate: not univariate");
    out[i] = cs[i].constant_value();
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

MultiPoly from_dense(const std::vector<Rat>& c, const std::string& var) {
  MultiPoly out;
  for (size_t i = 0; i < c.size(); ++i)
    out += MultiPoly::monomial({var}, {static_cast<int>(i)}, c[i]);
  return out;
}

void dense_mod(std::vector<Rat>& a, const std::vector<Rat>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat factor = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
}

}  // namespace

MultiPoly gcd_univariate(const MultiPoly& f, const MultiPoly& g) {
  std::set<std::string> used;
  for (const auto& v : f.used_vars()) used.insert(v);
  for (const auto& v : g.used_vars()) used.insert(v);
  if (used.size() > 1) throw std::invalid_argument("gcd_univariate: more than one variable");
  if (f.is_zero() && g.is_zero()) return MultiPoly();
  if (used.empty()) return MultiPoly(Rat(1));
  const std::string var = *used.begin();

  std::vector<Rat> a = to_dense(f, var), b = to_dense(g, var);
  while (!b.empty()) {
    dense_mod(a, b);
    std::swap(a, b);
  }
  if (a.empty()) return MultiPoly();
  Rat lead = a.back();
  for (Rat& c : a) c /= lead;  // monic
  return from_dense(a, var);
}

namespace {

// f as dense coefficient vector in main_var, entries univariate in the other variable
using PolyVec = std::vector<MultiPoly>;

PolyVec vec_in(const MultiPoly& f, const std::string& main_var) {
  if (f.is_zero()) return {};
  auto cs = f.coeffs_in(main_var);
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
  return cs;
}

MultiPoly vec_out(const PolyVec& v, const std::string& main_var) {
  MultiPoly out;
  MultiPoly x = MultiPoly::variable(main_var);
  for (size_t i = 0; i < v.size(); ++i) out += v[i] * x.pow(static_cast<int>(i));
  return out;
}

MultiPoly vec_content(const PolyVec& v) {
  MultiPoly c;
  for (const auto& p : v) c = gcd_univariate(c, p);
  return c;
}

PolyVec vec_pp(const PolyVec& v, const MultiPoly& content) {
  PolyVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out[i] = v[i].is_zero() ? MultiPoly() : exact_divide(v[i], content);
  return out;
}

void vec_strip(PolyVec& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// pseudo-remainder of a by b in the main variable
PolyVec vec_prem(PolyVec a, const PolyVec& b) {
  const MultiPoly& lcb = b.back();
  int e = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
  while (!a.empty() && a.size() >= b.size()) {
    MultiPoly lca = a.back();
    size_t shift = a.size() - b.size();
    for (auto& c : a) c = lcb * c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lca * b[i];
    vec_strip(a);
    --e;
  }
  for (; e > 0; --e)
    for (auto& c : a) c = lcb * c;
  return a;
}

}  // namespace

MultiPoly gcd_bivariate(const MultiPoly& f, const MultiPoly& g, const std::string& main_var) {
  std::set<std::string> used;
  for (const auto& v : f.used_vars()) used.insert(v);
  for (const auto& v : g.used_vars()) used.insert(v);
  used.erase(main_var);
  if (used.size() > 1) throw std::invalid_argument("gcd_bivariate: more than two variables");
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;

  PolyVec a = vec_in(f, main_var), b = vec_in(g, main_var);
  MultiPoly ca = vec_content(a), cb = vec_content(b);
  MultiPoly c = gcd_univariate(ca, cb);
  a = vec_pp(a, ca);
  b = vec_pp(b, cb);
  if (a.size() < b.size()) std::swap(a, b);

  // primitive pseudo-remainder sequence
  while (true) {
    if (b.size() <= 1) return c;  // primitive and main-degree 0 means unit
    PolyVec r = vec_prem(a, b);
    if (r.empty()) return c * vec_out(b, main_var);
    a = b;
    b = vec_pp(r, vec_content(r));
  }
}

bool squarefree(const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree: zero polynomial");
  auto used = f.used_vars();
  if (used.size() > 1) throw std::invalid_argument("squarefree: not univariate");
  if (used.empty()) return true;  // nonzero constant
  MultiPoly g = gcd_univariate(f, f.derivative(used[0]));
  return g.total_degree() == 0;
}

bool proportional(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) return false;
  const std::vector<std::string> merged = (f - g).vars();
  MultiPoly a = f.with_vars(merged);
  MultiPoly b = g.with_vars(merged);
  if (a.terms().size() != b.terms().size()) return false;
  auto ita = a.terms().begin();
  auto itb = b.terms().begin();
  Rat ratio = ita->second / itb->second;
  for (; ita != a.terms().end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (ita->second != ratio * itb->second) return false;
  }
  return true;
}

namespace {

std::vector<Int> divisors_of(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  // trial division up to the root; complete for the desk-scale inputs here
  for (Int d = 1; d * d <= n && d < 2000000; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rat> rational_roots(const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  auto used = f.used_vars();
  if (used.size() > 1) throw std::invalid_argument("rational_roots: not univariate");
  std::set<Rat> roots;
  if (used.empty()) return {};
  const std::string var = used[0];

  std::vector<Rat> cs = to_dense(f, var);
  size_t low = 0;
  while (low < cs.size() && cs[low] == 0) ++low;
  if (low > 0) roots.insert(Rat(0));
  std::vector<Rat> body(cs.begin() + static_cast<long>(low), cs.end());
  if (body.size() > 1) {
    Int denlcm = 1;
    for (const Rat& c : body) denlcm = denlcm / gcd(denlcm, den(c)) * den(c);
    std::vector<Int> ic(body.size());
    for (size_t i = 0; i < body.size(); ++i) ic[i] = num(body[i]) * (denlcm / den(body[i]));
    for (const Int& p : divisors_of(ic.front()))
      for (const Int& q : divisors_of(ic.back())) {
        for (int sg = -1; sg <= 1; sg += 2) {
          Rat cand(sg * p, q);
          Rat value = 0, power = 1;
          for (const Rat& c : body) {
            value += c * power;
            power *= cand;
          }
          if (value == 0) roots.insert(cand);
        }
      }
  }
  return {roots.begin(), roots.end()};
}

ParamCheck parametrization_check(const MultiPoly& f, const MultiPoly& p, const MultiPoly& q,
                                 const std::string& uvar, const std::string& vvar) {
  if (f.is_zero()) throw std::invalid_argument("parametrization_check: zero curve polynomial");
  std::set<std::string> tset;
  for (const auto& v : p.used_vars()) tset.insert(v);
  for (const auto& v : q.used_vars()) tset.insert(v);
  if (tset.empty()) throw std::invalid_argument("degenerate parametrization");
  if (tset.size() > 1)
    throw std::invalid_argument("parametrization_check: certificate must be univariate");
  const std::string tvar = *tset.begin();
  for (const auto& v : f.used_vars())
    if (v != uvar && v != vvar)
      throw std::invalid_argument("parametrization_check: curve must live in " + uvar + "," + vvar);

  ParamCheck out;

  std::map<std::string, MultiPoly> images{{uvar, p}, {vvar, q}};
  out.composes = substitute(f, images).is_zero();

  const std::string svar = tvar == "s" ? "s0" : "s";
  std::map<std::string, MultiPoly> shift{{tvar, MultiPoly::variable(svar)}};
  MultiPoly dp = p - substitute(p, shift);
  MultiPoly dq = q - substitute(q, shift);
  MultiPoly target = MultiPoly::variable(tvar) - MultiPoly::variable(svar);
  MultiPoly g = gcd_bivariate(dp, dq, tvar);
  out.injective = proportional(g, target);

  MultiPoly rf = resultant(p - MultiPoly::variable(uvar), q - MultiPoly::variable(vvar), tvar);
  out.implicitizes = !rf.is_zero() && proportional(rf, f);
  return out;
}

}  // namespace tgm
