#include "tgm/cli.hpp"

#include "tgm/downgrade.hpp"
#include "tgm/io.hpp"
#include "tgm/sections.hpp"
#include "tgm/segdiv.hpp"
#include "tgm/threefold.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace tgm::cli {

using json = nlohmann::ordered_json;

namespace {

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) throw ParseError("empty entry in integer list '" + text + "'");
      out.push_back(parse_int(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Int verify_bound_default() {
  if (const char* env = std::getenv("TGM_VERIFY_BOUND")) return parse_int(env);
  return 8;
}

json vec2_json(const Vec2& v) {
  return json::array({v.x.convert_to<long long>(), v.y.convert_to<long long>()});
}

json fan_json(const Fan2D& fan) {
  json j;
  j["rays"] = json::array();
  for (const Vec2& r : fan.rays) j["rays"].push_back(vec2_json(r));
  j["cones"] = json::array();
  for (const auto& [a, b] : fan.maximal_cones) j["cones"].push_back(json::array({a, b}));
  return j;
}

json qdivisor_json(const QDivisor& q) {
  json j = json::object();
  for (const auto& [n, c] : q.coeffs) j[n] = to_string(c);
  return j;
}

json divisor_json_obj(const SegmentalDivisor& d) {
  return json::parse(write_divisor_json(d));
}

struct Options {
  bool json_out = false;
  std::string divisor_path;
  std::string weights;
  std::string section;
  long long n = 0;
  long long m = 1;
  long long bound = 12;
  long long search_bound = 24;
  std::optional<long long> verify_bound;
  long long gen_degree = 1;
  std::string poly, vars, f, g, data_path;
  long long zeta = 0, xi = 0;
  bool eliminate = false;
  std::string equiv_a, equiv_b;
  std::string batch_path;
};

SegmentalDivisor load_divisor(const std::string& path) {
  return read_divisor_auto(read_file(path));
}

void emit_divisor(const SegmentalDivisor& d, bool as_json, std::ostream& out) {
  if (as_json)
    out << write_divisor_json(d);
  else
    out << write_divisor_text(d);
}

int run_single(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_batch(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  int worst = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> argv;
    std::string tok;
    while (ls >> tok) argv.push_back(tok);
    if (argv.empty() || argv[0][0] == '#') continue;
    out << "# " << line << "\n";
    int code = run_single(argv, out, err);
    worst = std::max(worst, code);
  }
  return worst;
}

int run_single(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact segmental-divisor toolkit for hyperbolic one-torus threefolds"};
  app.name("tgm");
  Options opt;
  app.add_flag("--json", opt.json_out, "emit a stable JSON document");
  app.add_option("--batch", opt.batch_path, "file of command lines to run in sequence");

  auto* c_down = app.add_subcommand("downgrade", "weights of a linear action to (fan, divisor)");
  c_down->add_option("--weights", opt.weights, "a1,a2,a3")->required();
  c_down->add_option("--section", opt.section, "alpha,beta,gamma (default: extended gcd)");

  auto* c_prop = app.add_subcommand("prop-formula", "closed-form divisor for -a1,a2,a3 > 0");
  c_prop->add_option("--weights", opt.weights, "a1,a2,a3")->required();
  c_prop->add_option("--section", opt.section, "alpha,beta,gamma (default: extended gcd)");

  auto* c_eval = app.add_subcommand("eval", "evaluate the divisor at a weight");
  c_eval->add_option("--divisor", opt.divisor_path, "divisor file")->required();
  c_eval->add_option("-n", opt.n, "weight")->required();

  auto* c_scale = app.add_subcommand("scale", "integer multiple of the divisor");
  c_scale->add_option("--divisor", opt.divisor_path, "divisor file")->required();
  c_scale->add_option("-m", opt.m, "multiplier")->required();

  auto* c_equiv = app.add_subcommand("equiv", "witness shift between two divisors");
  c_equiv->add_option("a", opt.equiv_a, "first divisor file")->required();
  c_equiv->add_option("b", opt.equiv_b, "second divisor file")->required();

  auto* c_nf = app.add_subcommand("normal-form", "canonical representative of the shift class");
  c_nf->add_option("--divisor", opt.divisor_path, "divisor file")->required();

  auto* c_proper = app.add_subcommand("check-proper", "properness of all evaluations");
  c_proper->add_option("--divisor", opt.divisor_path, "divisor file")->required();
  c_proper->add_option("--bound", opt.bound, "check |n| <= bound (default 12)");

  auto* c_desc = app.add_subcommand("describe", "isotropy and fixed-point report");
  c_desc->add_option("--divisor", opt.divisor_path, "divisor file")->required();

  auto* c_sec = app.add_subcommand("sections", "staircase of the weight space");
  c_sec->add_option("--divisor", opt.divisor_path, "divisor file")->required();
  c_sec->add_option("-n", opt.n, "weight")->required();

  auto* c_findd = app.add_subcommand("find-d", "smallest generating degree");
  c_findd->add_option("--divisor", opt.divisor_path, "divisor file")->required();
  c_findd->add_option("--bound", opt.search_bound, "search bound (default 24)");
  c_findd->add_option("--verify-bound", opt.verify_bound, "generation window (default 8)");

  auto* c_center = app.add_subcommand("center-ideal", "blow-up center ideal generators");
  c_center->add_option("--divisor", opt.divisor_path, "divisor file")->required();
  c_center->add_option("--d", opt.gen_degree, "generating degree")->required();

  auto* c_hyp = app.add_subcommand("hypmod", "hyperbolic modification of a hypersurface");
  c_hyp->add_option("--poly", opt.poly, "polynomial")->required();
  c_hyp->add_option("--vars", opt.vars, "comma-separated input variables")->required();

  auto* c_build = app.add_subcommand("build", "bi-cyclic cover presentation");
  c_build->add_option("--f", opt.f, "first curve polynomial in u,v")->required();
  c_build->add_option("--g", opt.g, "second curve polynomial in u,v")->required();
  c_build->add_option("--zeta", opt.zeta, "first cover order");
  c_build->add_option("--xi", opt.xi, "second cover order");
  c_build->add_option("--divisor", opt.divisor_path,
                      "derive cover orders from the divisor's point denominators");
  c_build->add_flag("--eliminate", opt.eliminate, "eliminate lone linear variables");

  auto* c_int = app.add_subcommand("intersect", "intersection analysis of two curves");
  c_int->add_option("--f", opt.f, "first curve polynomial in u,v")->required();
  c_int->add_option("--g", opt.g, "second curve polynomial in u,v")->required();

  auto* c_val = app.add_subcommand("validate", "validate construction data");
  c_val->add_option("--data", opt.data_path, "theorem data JSON file")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  app.require_subcommand(0, 1);

  try {
    std::vector<const char*> argv;
    argv.push_back("tgm");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!opt.batch_path.empty()) return run_batch(opt.batch_path, out, err);
    if (app.get_subcommands().empty()) {
      err << "error: expected a subcommand (see --help)\n";
      return 2;
    }

    if (app.got_subcommand(c_down) || app.got_subcommand(c_prop)) {
      std::vector<Int> w = parse_int_list(opt.weights);
      WeightMatrix f{w};
      std::optional<Section> s;
      if (!opt.section.empty()) s = Section{parse_int_list(opt.section)};
      if (app.got_subcommand(c_down)) {
        DowngradeResult res = downgrade(f, s);
        if (opt.json_out) {
          json j;
          j["weights"] = json::array();
          for (const Int& a : w) j["weights"].push_back(a.convert_to<long long>());
          j["section"] = json::array();
          for (const Int& a : res.section.coeffs) j["section"].push_back(a.convert_to<long long>());
          j.update(fan_json(res.fan));
          j["divisor"] = divisor_json_obj(res.divisor);
          out << j.dump(2) << "\n";
        } else {
          out << "# downgrade of weights " << opt.weights << "\n# section";
          for (const Int& a : res.section.coeffs) out << " " << a;
          out << "\n" << write_divisor_text(res.divisor);
        }
      } else {
        if (w.size() != 3) throw std::invalid_argument("prop-formula needs three weights");
        Section sec = s ? *s : make_section(f);
        SegmentalDivisor div = proposition_formula(w[0], w[1], w[2], sec);
        emit_divisor(div, opt.json_out, out);
      }
      return 0;
    }

    if (app.got_subcommand(c_eval)) {
      QDivisor q = evaluate(load_divisor(opt.divisor_path), Int(opt.n));
      if (opt.json_out) {
        json j;
        j["n"] = opt.n;
        j["coefficients"] = qdivisor_json(q);
        out << j.dump(2) << "\n";
      } else {
        out << to_string(q) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_scale)) {
      emit_divisor(scale(load_divisor(opt.divisor_path), Int(opt.m)), opt.json_out, out);
      return 0;
    }

    if (app.got_subcommand(c_equiv)) {
      auto a = load_divisor(opt.equiv_a);
      auto b = load_divisor(opt.equiv_b);
      std::optional<Vec2> w = equivalent(a, b);
      if (opt.json_out) {
        json j;
        j["equivalent"] = w.has_value();
        j["witness"] = w ? vec2_json(*w) : json(nullptr);
        out << j.dump(2) << "\n";
      } else if (w) {
        out << "witness " << w->x << " " << w->y << "\n";
      } else {
        out << "not equivalent\n";
      }
      return w ? 0 : 1;
    }

    if (app.got_subcommand(c_nf)) {
      emit_divisor(normal_form(load_divisor(opt.divisor_path)), opt.json_out, out);
      return 0;
    }

    if (app.got_subcommand(c_proper)) {
      ProperReport rep = check_proper(load_divisor(opt.divisor_path), Int(opt.bound));
      if (opt.json_out) {
        json j;
        j["bound"] = opt.bound;
        j["all_pass"] = rep.all_pass;
        j["entries"] = json::array();
        for (const auto& e : rep.entries) {
          json je;
          je["n"] = e.n.convert_to<long long>();
          je["cartier"] = e.cartier;
          je["semiample"] = e.semiample;
          je["big"] = e.big;
          je["semiample_slack"] = to_string(e.semiample_slack);
          j["entries"].push_back(je);
        }
        out << j.dump(2) << "\n";
      } else {
        for (const auto& e : rep.entries)
          out << "n=" << e.n << " cartier=" << (e.cartier ? "yes" : "no")
              << " semi-ample=" << (e.semiample ? "yes" : "no") << " (slack "
              << to_string(e.semiample_slack) << ")"
              << " big=" << (e.big ? "yes" : "no") << "\n";
        out << (rep.all_pass ? "proper for all " : "FAILS for some ") << "|n| <= " << opt.bound
            << "\n";
      }
      return rep.all_pass ? 0 : 1;
    }

    if (app.got_subcommand(c_desc)) {
      DescribeReport rep = describe(load_divisor(opt.divisor_path));
      if (opt.json_out) {
        json j;
        j["entries"] = json::array();
        for (const auto& e : rep.entries) {
          json je;
          je["divisor"] = e.divisor;
          je["lo"] = to_string(e.seg.lo);
          je["hi"] = to_string(e.seg.hi);
          if (e.is_point)
            je["isotropy_order"] = e.isotropy_order.convert_to<long long>();
          else
            je["fixed_points"] = true;
          j["entries"].push_back(je);
        }
        j["unique_interval"] = rep.unique_interval;
        j["interval_divisor"] = rep.interval_divisor ? json(*rep.interval_divisor) : json(nullptr);
        j["interval_on_E"] = rep.interval_on_E;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& e : rep.entries) {
          if (e.is_point)
            out << e.divisor << ": point {" << to_string(e.seg.lo) << "}, isotropy order "
                << e.isotropy_order << "\n";
          else
            out << e.divisor << ": interval [" << to_string(e.seg.lo) << ","
                << to_string(e.seg.hi) << "], fixed points over " << e.divisor << "\n";
        }
        if (rep.unique_interval)
          out << "unique interval divisor: " << *rep.interval_divisor
              << (rep.interval_on_E ? " (the exceptional divisor)" : "") << "\n";
        else
          out << "interval divisors: " << (rep.interval_divisor ? "several" : "none") << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_sec)) {
      Staircase st = weight_space(load_divisor(opt.divisor_path), Int(opt.n));
      if (opt.json_out) {
        json j;
        j["n"] = opt.n;
        j["constraints"] = json::array();
        for (const auto& [ray, bound] : st.constraints) {
          json je;
          je["ray"] = vec2_json(ray);
          je["bound"] = bound.convert_to<long long>();
          j["constraints"].push_back(je);
        }
        j["generators"] = json::array();
        for (const Vec2& g : st.generators) j["generators"].push_back(vec2_json(g));
        out << j.dump(2) << "\n";
      } else {
        out << "constraints:\n";
        for (const auto& [ray, bound] : st.constraints)
          out << "  <" << to_string(ray) << ", (a,b)> >= " << bound << "\n";
        out << "generators:";
        for (const Vec2& g : st.generators) out << " " << monomial_string(g);
        out << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_findd)) {
      Int vb = opt.verify_bound ? Int(*opt.verify_bound) : verify_bound_default();
      Int d = find_d(load_divisor(opt.divisor_path), Int(opt.search_bound), vb);
      if (opt.json_out) {
        json j;
        j["d"] = d.convert_to<long long>();
        out << j.dump(2) << "\n";
      } else {
        out << "d = " << d << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_center)) {
      auto gens = center_ideal(load_divisor(opt.divisor_path), Int(opt.gen_degree));
      if (opt.json_out) {
        json j;
        j["generators"] = json::array();
        for (const Vec2& g : gens) j["generators"].push_back(monomial_string(g));
        out << j.dump(2) << "\n";
      } else {
        out << "ideal generators:";
        for (const Vec2& g : gens) out << " " << monomial_string(g);
        out << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_hyp)) {
      std::vector<std::string> vars;
      for (const auto& part : CLI::detail::split(opt.vars, ','))
        if (!part.empty()) vars.push_back(part);
      MultiPoly result = hyperbolic_modification(MultiPoly::parse(opt.poly), vars);
      if (opt.json_out) {
        json j;
        j["result"] = result.str();
        out << j.dump(2) << "\n";
      } else {
        out << result.str() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_build)) {
      Int zeta(opt.zeta), xi(opt.xi);
      if ((zeta < 1 || xi < 1) && !opt.divisor_path.empty()) {
        // cover orders from the point-coefficient denominators
        SegmentalDivisor div = load_divisor(opt.divisor_path);
        std::vector<Int> orders;
        for (const auto& [name, seg] : div.terms)
          if (seg.is_point()) orders.push_back(den(seg.lo));
        if (orders.size() != 2)
          throw std::invalid_argument("divisor must carry exactly two point coefficients");
        zeta = orders[0];
        xi = orders[1];
      }
      if (zeta < 1 || xi < 1)
        throw std::invalid_argument("give --zeta/--xi or --divisor to derive them");
      Presentation p =
          bicyclic_presentation(MultiPoly::parse(opt.f), MultiPoly::parse(opt.g), zeta, xi);
      if (opt.eliminate) p = eliminate_linear(p);
      if (opt.json_out) {
        json j;
        j["zeta"] = zeta.convert_to<long long>();
        j["xi"] = xi.convert_to<long long>();
        j["variables"] = p.variables;
        j["relations"] = json::array();
        for (const auto& r : p.relations) j["relations"].push_back(r.str());
        out << j.dump(2) << "\n";
      } else {
        out << to_string(p);
      }
      return 0;
    }

    if (app.got_subcommand(c_int)) {
      IntersectionReport rep = intersection_analysis(MultiPoly::parse(opt.f), MultiPoly::parse(opt.g));
      if (opt.json_out) {
        json j;
        j["count"] = rep.count.convert_to<long long>();
        j["transversal"] = rep.transversal;
        j["origin"] = rep.origin;
        j["d"] = rep.d.convert_to<long long>();
        j["undecided"] = rep.undecided;
        j["rational_points"] = json::array();
        for (const auto& [u0, v0] : rep.rational_points)
          j["rational_points"].push_back(json::array({to_string(u0), to_string(v0)}));
        j["resultant_v"] = rep.resultant_v;
        j["resultant_u"] = rep.resultant_u;
        out << j.dump(2) << "\n";
      } else {
        out << "count (with multiplicity): " << rep.count << "\n";
        out << "transversal: " << (rep.transversal ? "yes" : "no")
            << (rep.undecided ? " (undecided)" : "") << "\n";
        out << "origin included: " << (rep.origin ? "yes" : "no") << "\n";
        out << "d = " << rep.d << "\n";
        out << "rational points:";
        for (const auto& [u0, v0] : rep.rational_points)
          out << " (" << to_string(u0) << "," << to_string(v0) << ")";
        out << "\n";
      }
      return rep.transversal && rep.origin ? 0 : 1;
    }

    if (app.got_subcommand(c_val)) {
      ValidationReport rep = validate_theorem_data(read_theorem_data_json(read_file(opt.data_path)));
      if (opt.json_out) {
        json j;
        j["conditions"] = json::array();
        for (const auto& c : rep.conditions) {
          json jc;
          jc["name"] = c.name;
          jc["pass"] = c.pass;
          jc["note"] = c.note;
          j["conditions"].push_back(jc);
        }
        j["warnings"] = rep.warnings;
        j["all_pass"] = rep.all_pass;
        j["d"] = rep.d.convert_to<long long>();
        out << j.dump(2) << "\n";
      } else {
        for (const auto& c : rep.conditions)
          out << (c.pass ? "PASS " : "FAIL ") << c.name
              << (c.note.empty() ? "" : " — " + c.note) << "\n";
        for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
        out << (rep.all_pass ? "all conditions hold" : "some conditions fail") << "\n";
      }
      return rep.all_pass ? 0 : 1;
    }

    err << "error: unhandled subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_single(args, out, err);
}

}  // namespace tgm::cli
