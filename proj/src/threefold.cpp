#include "tgm/threefold.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace tgm {

MultiPoly hyperbolic_modification(const MultiPoly& f, std::vector<std::string> input_vars) {
  if (input_vars.empty()) input_vars = f.vars();
  for (const auto& v : f.used_vars())
    if (std::find(input_vars.begin(), input_vars.end(), v) == input_vars.end())
      throw std::invalid_argument("hyperbolic_modification: variable " + v + " not listed");
  if (f.constant_term() != 0)
    throw std::invalid_argument("modification undefined: f(0)≠0");
  if (f.is_zero()) return MultiPoly();

  MultiPoly x1 = MultiPoly::variable("x1");
  std::map<std::string, MultiPoly> images;
  for (size_t i = 0; i < input_vars.size(); ++i)
    images[input_vars[i]] = x1 * MultiPoly::variable("x" + std::to_string(i + 2));
  return exact_divide(substitute(f, images), x1);
}

std::string to_string(const Presentation& p) {
  std::ostringstream os;
  os << "variables:";
  for (const auto& v : p.variables) os << " " << v;
  os << "\n";
  if (p.relations.empty()) {
    os << "relations: none (affine space)\n";
  } else {
    os << "relations:\n";
    for (const auto& r : p.relations) os << "  " << r.str() << " = 0\n";
  }
  return os.str();
}

Presentation bicyclic_presentation(const MultiPoly& f, const MultiPoly& g, const Int& zeta,
                                   const Int& xi, const std::string& uvar,
                                   const std::string& vvar) {
  if (zeta < 1 || xi < 1) throw std::invalid_argument("cover orders must be positive");
  for (const MultiPoly* h : {&f, &g})
    for (const auto& v : h->used_vars())
      if (v != uvar && v != vvar)
        throw std::invalid_argument("curves must live in " + uvar + "," + vvar);

  MultiPoly hf = hyperbolic_modification(f, {uvar, vvar});
  MultiPoly hg = hyperbolic_modification(g, {uvar, vvar});
  MultiPoly x4 = MultiPoly::variable("x4");
  MultiPoly x5 = MultiPoly::variable("x5");

  Presentation p;
  p.variables = {"x1", "x2", "x3", "x4", "x5"};
  p.relations = {x4.pow(static_cast<int>(zeta)) - hf, x5.pow(static_cast<int>(xi)) - hg};
  return p;
}

namespace {

// the variable occurs in the relation only as the single monomial c*x, c a
// nonzero rational
bool lone_linear_occurrence(const MultiPoly& rel, const std::string& var, Rat* coeff_out,
                            MultiPoly* rest_out) {
  auto idx_it = std::find(rel.vars().begin(), rel.vars().end(), var);
  if (idx_it == rel.vars().end()) return false;
  size_t idx = static_cast<size_t>(idx_it - rel.vars().begin());
  int hits = 0;
  Rat coeff;
  MultiPoly rest;
  for (const auto& [e, c] : rel.terms()) {
    if (e[idx] == 0) {
      rest += MultiPoly::monomial(rel.vars(), e, c);
      continue;
    }
    ++hits;
    if (e[idx] != 1) return false;
    for (size_t i = 0; i < e.size(); ++i)
      if (i != idx && e[i] != 0) return false;  // variable tangled with others
    coeff = c;
  }
  if (hits != 1) return false;
  if (coeff_out) *coeff_out = coeff;
  if (rest_out) *rest_out = rest;
  return true;
}

}  // namespace

Presentation eliminate_linear(Presentation p) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const std::string& var : p.variables) {
      std::vector<size_t> lone;
      for (size_t ri = 0; ri < p.relations.size(); ++ri)
        if (lone_linear_occurrence(p.relations[ri], var, nullptr, nullptr)) lone.push_back(ri);
      if (lone.size() != 1) continue;

      size_t ri = lone[0];
      Rat coeff;
      MultiPoly rest;
      lone_linear_occurrence(p.relations[ri], var, &coeff, &rest);
      MultiPoly image = Rat(-1) / coeff * rest;  // solve c*var + rest = 0
      std::map<std::string, MultiPoly> images{{var, image}};

      std::vector<MultiPoly> next;
      for (size_t i = 0; i < p.relations.size(); ++i) {
        if (i == ri) continue;
        MultiPoly r = p.relations[i];
        if (r.uses(var)) r = substitute(r, images);
        if (!r.is_zero()) next.push_back(r);
      }
      p.relations = std::move(next);
      p.variables.erase(std::find(p.variables.begin(), p.variables.end(), var));
      progress = true;
      break;  // rescan from the first variable
    }
  }
  return p;
}

namespace {

enum class Tri { yes, no, unknown };

// multiplicity of root r0 in the univariate poly f (dividing out (x - r0))
int root_multiplicity(MultiPoly f, const std::string& var, const Rat& r0) {
  MultiPoly lin = MultiPoly::variable(var) - MultiPoly(r0);
  int m = 0;
  while (!f.is_zero() && f.eval({{var, r0}}) == 0) {
    f = exact_divide(f, lin);
    ++m;
  }
  return m;
}

// One-sided transversality certificate through the resultant eliminating the
// other coordinate. `var` is the coordinate the resultant lives in.
Tri side_check(const MultiPoly& res, const std::string& var, bool var_is_v, const MultiPoly& f,
               const MultiPoly& g, const MultiPoly& jac) {
  if (res.is_constant()) return Tri::yes;  // no intersections at all
  MultiPoly remaining = res;
  for (const Rat& r0 : rational_roots(res)) {
    int mult = root_multiplicity(res, var, r0);
    MultiPoly lin = MultiPoly::variable(var) - MultiPoly(r0);
    for (int i = 0; i < mult; ++i) remaining = exact_divide(remaining, lin);
    if (mult < 2) continue;  // simple root: single transversal point above it

    // all intersection points over this value must be rational and pass the
    // Jacobian test
    const std::string uvar = var_is_v ? "u" : "v";
    MultiPoly fu = substitute(f, {{var_is_v ? "v" : "u", MultiPoly(r0)},
                                  {uvar, MultiPoly::variable(uvar)}});
    MultiPoly gu = substitute(g, {{var_is_v ? "v" : "u", MultiPoly(r0)},
                                  {uvar, MultiPoly::variable(uvar)}});
    MultiPoly h = gcd_univariate(fu, gu);
    if (h.is_zero()) return Tri::unknown;
    MultiPoly hrem = h;
    std::vector<Rat> pts = rational_roots(h);
    for (const Rat& p0 : pts) {
      int hm = root_multiplicity(h, uvar, p0);
      MultiPoly plin = MultiPoly::variable(uvar) - MultiPoly(p0);
      for (int i = 0; i < hm; ++i) hrem = exact_divide(hrem, plin);
      Rat jval = var_is_v ? jac.eval({{"u", p0}, {"v", r0}}) : jac.eval({{"u", r0}, {"v", p0}});
      if (jval == 0) return Tri::no;
    }
    if (hrem.total_degree() > 0) return Tri::unknown;  // irrational point above
  }
  if (remaining.total_degree() > 0 && !squarefree(remaining)) return Tri::unknown;
  return Tri::yes;
}

}  // namespace

IntersectionReport intersection_analysis(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("intersection_analysis: zero curve");
  for (const MultiPoly* h : {&f, &g})
    for (const auto& v : h->used_vars())
      if (v != "u" && v != "v")
        throw std::invalid_argument("intersection_analysis: curves must live in u,v");

  MultiPoly res_v = resultant(f, g, "u");  // univariate in v
  MultiPoly res_u = resultant(f, g, "v");  // univariate in u
  if (res_v.is_zero() || res_u.is_zero()) throw std::runtime_error("common component");

  IntersectionReport rep;
  rep.resultant_v = res_v.str();
  rep.resultant_u = res_u.str();
  rep.count = res_v.total_degree();
  rep.d = rep.count;
  rep.origin = f.eval({{"u", Rat(0)}, {"v", Rat(0)}}) == 0 &&
               g.eval({{"u", Rat(0)}, {"v", Rat(0)}}) == 0;

  for (const Rat& v0 : rational_roots(res_v))
    for (const Rat& u0 : rational_roots(res_u)) {
      std::map<std::string, Rat> pt{{"u", u0}, {"v", v0}};
      if (f.eval(pt) == 0 && g.eval(pt) == 0) rep.rational_points.emplace_back(u0, v0);
    }

  MultiPoly jac = f.derivative("u") * g.derivative("v") - f.derivative("v") * g.derivative("u");
  Tri first = side_check(res_v, "v", true, f, g, jac);
  if (first == Tri::yes) {
    rep.transversal = true;
  } else if (first == Tri::no) {
    rep.transversal = false;
  } else {
    Tri second = side_check(res_u, "u", false, f, g, jac);
    rep.transversal = second == Tri::yes;
    rep.undecided = second == Tri::unknown;
  }
  return rep;
}

bool mu_homogeneous(const MultiPoly& f, const Int& w_u, const Int& w_v, const Int& a1) {
  if (a1 == 0) throw std::invalid_argument("mu_homogeneous: a1 must be nonzero");
  Int m = a1 < 0 ? Int(-a1) : a1;
  if (f.is_zero()) return true;
  const auto& vars = f.vars();
  std::optional<Int> cls;
  for (const auto& [e, c] : f.terms()) {
    Int w = 0;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == "u") w += e[i] * w_u;
      if (vars[i] == "v") w += e[i] * w_v;
    }
    Int r = ((w % m) + m) % m;
    if (!cls)
      cls = r;
    else if (*cls != r)
      return false;
  }
  return true;
}

SmoothnessReport plane_curve_smooth(const MultiPoly& f) {
  if (f.is_zero()) return {false, true, "zero polynomial"};
  if (f.is_constant()) return {true, true, "empty curve"};

  MultiPoly fu = f.derivative("u");
  MultiPoly fv = f.derivative("v");

  // purely univariate curves are decidable by gcds alone
  auto used = f.used_vars();
  if (used.size() == 1) {
    MultiPoly d = used[0] == "u" ? fu : fv;
    MultiPoly g = gcd_univariate(f, d);
    bool smooth = g.total_degree() == 0;
    return {smooth, true, smooth ? "" : "repeated root"};
  }

  // eliminate `elim`; candidate singular values live in `keep`
  auto attempt = [&](const std::string& elim, const std::string& keep) -> SmoothnessReport {
    SmoothnessReport rep;
    rep.decided = false;
    MultiPoly r1 = resultant(f, fu, elim);
    MultiPoly r2 = resultant(f, fv, elim);
    if (r1.is_zero() || r2.is_zero()) {
      rep.note = "degenerate elimination";
      return rep;
    }
    MultiPoly gg = gcd_univariate(r1, r2);
    if (gg.total_degree() == 0) {
      rep.smooth = true;
      rep.decided = true;
      return rep;
    }
    MultiPoly leftover = gg;
    for (const Rat& w0 : rational_roots(gg)) {
      int mult = root_multiplicity(gg, keep, w0);
      MultiPoly lin = MultiPoly::variable(keep) - MultiPoly(w0);
      for (int i = 0; i < mult; ++i) leftover = exact_divide(leftover, lin);
      std::map<std::string, MultiPoly> at{{keep, MultiPoly(w0)},
                                          {elim, MultiPoly::variable(elim)}};
      MultiPoly f0 = substitute(f, at);
      MultiPoly fu0 = substitute(fu, at);
      MultiPoly fv0 = substitute(fv, at);
      MultiPoly common = gcd_univariate(gcd_univariate(f0, fu0), fv0);
      if (!common.is_zero() && common.total_degree() > 0) {
        rep.smooth = false;
        rep.decided = true;
        rep.note = "singular point over " + keep + " = " + to_string(w0);
        return rep;
      }
      if (common.is_zero()) {
        rep.note = "fiber degenerates over " + keep + " = " + to_string(w0);
        return rep;
      }
    }
    if (leftover.total_degree() > 0) {
      rep.note = "irrational singular candidates unresolved";
      return rep;
    }
    rep.smooth = true;
    rep.decided = true;
    return rep;
  };

  SmoothnessReport rep = attempt("u", "v");
  if (rep.decided) return rep;
  SmoothnessReport swapped = attempt("v", "u");
  if (swapped.decided) return swapped;
  swapped.smooth = false;  // conservative
  return swapped;
}

ValidationReport validate_theorem_data(const TheoremData& data) {
  ValidationReport rep;
  auto add = [&rep](const std::string& name, bool pass, const std::string& note = "") {
    rep.conditions.push_back({name, pass, note});
  };

  // (a) sign pattern and coprimality
  bool a_ok = data.weights.weights.size() == 3;
  if (a_ok) {
    const auto& w = data.weights.weights;
    a_ok = w[0] < 0 && w[1] > 0 && w[2] > 0 && strictly_coprime(data.weights);
  }
  add("a: weights", a_ok, a_ok ? "" : "need -a1, a2, a3 > 0 and gcd 1");

  // (b) section splits the weights; positivity is only a warning
  bool b_ok = false;
  if (data.section.coeffs.size() == data.weights.weights.size()) {
    b_ok = section_pairing(data.section, data.weights) == 1;
    bool positive = true;
    for (const Int& c : data.section.coeffs)
      if (c <= 0) positive = false;
    if (b_ok && !positive) rep.warnings.push_back("section not strictly positive");
  }
  add("b: section", b_ok, b_ok ? "" : "s∘F ≠ 1");

  // (c)(i) weighted homogeneity
  bool ci_ok = false;
  std::string ci_note;
  if (!a_ok) {
    ci_note = "skipped: weights invalid";
  } else {
    ci_ok = mu_homogeneous(data.f, data.mu_wu, data.mu_wv, data.weights.weights[0]) &&
            mu_homogeneous(data.g, data.mu_wu, data.mu_wv, data.weights.weights[0]);
  }
  add("c(i): homogeneous", ci_ok, ci_note);

  // (c)(ii) parametrized lines, smooth
  bool cii_ok = false;
  std::string cii_note;
  try {
    ParamCheck pf = parametrization_check(data.f, data.param_f.p, data.param_f.q);
    ParamCheck pg = parametrization_check(data.g, data.param_g.p, data.param_g.q);
    SmoothnessReport sf = plane_curve_smooth(data.f);
    SmoothnessReport sg = plane_curve_smooth(data.g);
    cii_ok = pf.accepted() && pg.accepted() && sf.smooth && sg.smooth;
    if (!pf.accepted() || !pg.accepted()) cii_note = "parametrization certificate rejected";
    if (!sf.smooth || !sg.smooth) {
      cii_note += cii_note.empty() ? "" : "; ";
      cii_note += "curve not smooth";
      if (!sf.decided || !sg.decided) cii_note += " (undecided)";
    }
  } catch (const std::exception& e) {
    cii_note = e.what();
  }
  add("c(ii): lines", cii_ok, cii_note);

  // (c)(iii) normal crossings through the origin
  bool ciii_ok = false;
  std::string ciii_note;
  try {
    IntersectionReport ir = intersection_analysis(data.f, data.g);
    ciii_ok = ir.transversal && ir.origin;
    rep.d = ir.d;
    if (!ir.transversal) ciii_note = "intersections not transversal";
    if (!ir.origin) {
      ciii_note += ciii_note.empty() ? "" : "; ";
      ciii_note += "curves miss the origin";
    }
  } catch (const std::exception& e) {
    ciii_note = e.what();
  }
  add("c(iii): crossings", ciii_ok, ciii_note);

  rep.all_pass = true;
  for (const auto& c : rep.conditions)
    if (!c.pass) rep.all_pass = false;
  return rep;
}

}  // namespace tgm
