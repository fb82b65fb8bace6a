#include "tgm/intmat.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>

namespace tgm {

Int parse_int(const std::string& text) {
  try {
    if (text.empty()) throw std::runtime_error("empty");
    size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw std::runtime_error("sign only");
    for (; i < text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::runtime_error("digit");
    return Int(text);
  } catch (const std::exception&) {
    throw ParseError("bad integer literal '" + text + "'");
  }
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int n = parse_int(text.substr(0, slash));
  Int d = parse_int(text.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return make_rat(n, d);
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMat();
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMat::row(int i) const {
  std::vector<Int> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Int> IntMat::col(int j) const {
  std::vector<Int> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix size mismatch");
  IntMat r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += at(i, k) * other.at(k, j);
    }
  return r;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix size mismatch");
  std::vector<Int> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Vec2 IntMat::apply(const Vec2& v) const {
  if (rows_ != 2 || cols_ != 2) throw std::invalid_argument("expected a 2x2 matrix");
  return {at(0, 0) * v.x + at(0, 1) * v.y, at(1, 0) * v.x + at(1, 1) * v.y};
}

Int IntMat::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMat a = *this;
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::string to_string(const IntMat& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
  }
  os << "]";
  return os.str();
}

namespace {

// Two-term extended Euclid: returns (g, x, y) with a*x + b*y = g, g = gcd(a,b) >= 0.
struct Ext2 {
  Int g, x, y;
};

Ext2 ext_gcd2(const Int& a, const Int& b) {
  if (b == 0) {
    if (a < 0) return {-a, -1, 0};
    return {a, 1, 0};
  }
  Int q = a / b;  // truncated
  Ext2 sub = ext_gcd2(b, a - q * b);
  return {sub.g, sub.y, sub.x - q * sub.y};
}

}  // namespace

ExtGcdResult ext_gcd(const std::vector<Int>& a) {
  if (a.empty()) throw std::invalid_argument("degenerate gcd input");
  bool any = false;
  for (const Int& v : a)
    if (v != 0) any = true;
  if (!any) throw std::invalid_argument("degenerate gcd input");

  Int g = 0;
  std::vector<Int> coeffs;
  for (const Int& v : a) {
    Ext2 e = ext_gcd2(g, v);
    for (Int& c : coeffs) c *= e.x;
    coeffs.push_back(e.y);
    g = e.g;
  }
  // post: sum coeffs[i]*a[i] == g (re-verified in test builds)
  assert(([&] {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += coeffs[i] * a[i];
    return s == g && g > 0;
  })());
  return {g, coeffs};
}

namespace {

struct SnfWork {
  IntMat s, u, v;

  void row_sub(int dst, int src, const Int& q) {
    for (int j = 0; j < s.cols(); ++j) s.at(dst, j) -= q * s.at(src, j);
    for (int j = 0; j < u.cols(); ++j) u.at(dst, j) -= q * u.at(src, j);
  }
  void col_sub(int dst, int src, const Int& q) {
    for (int i = 0; i < s.rows(); ++i) s.at(i, dst) -= q * s.at(i, src);
    for (int i = 0; i < v.rows(); ++i) v.at(i, dst) -= q * v.at(i, src);
  }
  void row_swap(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void col_swap(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void row_negate(int a) {
    for (int j = 0; j < s.cols(); ++j) s.at(a, j) = -s.at(a, j);
    for (int j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("smith_normal_form of empty matrix");
  bool nonzero = false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) nonzero = true;
  if (!nonzero) throw std::invalid_argument("smith_normal_form of zero matrix");

  SnfWork w{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
  int limit = std::min(m.rows(), m.cols());

  for (int t = 0; t < limit; ++t) {
    // locate a pivot in the trailing submatrix (deterministic row-major scan
    // for the entry of minimal absolute value)
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows(); ++i)
      for (int j = t; j < m.cols(); ++j) {
        const Int& e = w.s.at(i, j);
        if (e == 0) continue;
        if (pi < 0 || abs(e) < abs(w.s.at(pi, pj))) { pi = i; pj = j; }
      }
    if (pi < 0) break;  // submatrix is zero
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    while (true) {
      // Euclid on row t / column t until everything off the pivot dies
      bool dirty = true;
      while (dirty) {
        dirty = false;
        // bring the smallest nonzero of column t / row t onto the pivot
        for (int i = t + 1; i < m.rows(); ++i)
          if (w.s.at(i, t) != 0 && abs(w.s.at(i, t)) < abs(w.s.at(t, t))) w.row_swap(t, i);
        for (int j = t + 1; j < m.cols(); ++j)
          if (w.s.at(t, j) != 0 && abs(w.s.at(t, j)) < abs(w.s.at(t, t))) w.col_swap(t, j);
        for (int i = t + 1; i < m.rows(); ++i) {
          if (w.s.at(i, t) == 0) continue;
          Int q = w.s.at(i, t) / w.s.at(t, t);
          if (q != 0) w.row_sub(i, t, q);
          if (w.s.at(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < m.cols(); ++j) {
          if (w.s.at(t, j) == 0) continue;
          Int q = w.s.at(t, j) / w.s.at(t, t);
          if (q != 0) w.col_sub(j, t, q);
          if (w.s.at(t, j) != 0) dirty = true;
        }
      }
      // divisibility fix-up: fold a bad row into row t and continue reducing
      int bi = -1;
      for (int i = t + 1; i < m.rows() && bi < 0; ++i)
        for (int j = t + 1; j < m.cols(); ++j)
          if (w.s.at(i, j) % w.s.at(t, t) != 0) { bi = i; break; }
      if (bi < 0) break;
      w.row_sub(t, bi, Int(-1));  // row t += row bi
    }
    if (w.s.at(t, t) < 0) w.row_negate(t);
  }

  assert(w.u * m * w.v == w.s);
  return {w.u, w.s, w.v};
}

std::pair<std::vector<Int>, Int> primitive(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& e : v) g = gcd(g, e);
  if (g == 0) throw std::invalid_argument("zero vector has no ray");
  std::vector<Int> w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return {w, g};
}

std::pair<Vec2, Int> primitive(const Vec2& v) {
  auto [w, g] = primitive(std::vector<Int>{v.x, v.y});
  return {Vec2{w[0], w[1]}, g};
}

std::vector<Int> solve_integral(const IntMat& p, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != p.rows()) throw std::invalid_argument("rhs size mismatch");
  bool pz = true;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j)
      if (p.at(i, j) != 0) pz = false;
  if (pz) {
    for (const Int& e : v)
      if (e != 0) throw std::runtime_error("not in image lattice");
    return std::vector<Int>(p.cols());
  }

  SmithResult snf = smith_normal_form(p);
  std::vector<Int> b = snf.u.apply(v);
  std::vector<Int> y(p.cols());
  int diag = std::min(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i) {
    const Int d = i < diag ? snf.s.at(i, i) : Int(0);
    if (d == 0) {
      if (b[i] != 0) throw std::runtime_error("not in image lattice");
    } else {
      if (b[i] % d != 0) throw std::runtime_error("not in image lattice");
      y[i] = b[i] / d;
    }
  }
  std::vector<Int> x = snf.v.apply(y);
  assert(p.apply(x) == v);
  return x;
}

}  // namespace tgm
