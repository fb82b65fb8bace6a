#include "tgm/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tgm {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

SegmentalDivisor read_divisor_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool has_model = false;
  bool is_blowup = false;
  Int blowup_d = 0;
  std::vector<std::pair<std::string, Vec2>> toric;
  std::vector<std::pair<std::string, MultiPoly>> curves;
  std::vector<std::pair<std::string, Segment>> segs;

  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> tok = split_ws(line);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("divisor file line " + std::to_string(lineno) + ": " + msg);
    };
    if (tok[0] == "model") {
      if (has_model) fail("duplicate model line");
      has_model = true;
      if (tok.size() == 2 && tok[1] == "fan") {
        is_blowup = false;
      } else if (tok.size() == 2 && tok[1].rfind("blowup", 0) == 0) {
        fail("expected 'model blowup d=N'");
      } else if (tok.size() == 3 && tok[1] == "blowup" && tok[2].rfind("d=", 0) == 0) {
        is_blowup = true;
        blowup_d = parse_int(tok[2].substr(2));
      } else {
        fail("expected 'model blowup d=N' or 'model fan'");
      }
    } else if (tok[0] == "divisor") {
      if (tok.size() >= 4 && tok[2] == "ray") {
        if (tok.size() != 5) fail("expected 'divisor NAME ray X Y'");
        toric.emplace_back(tok[1], Vec2{parse_int(tok[3]), parse_int(tok[4])});
      } else if (tok.size() >= 4 && tok[2] == "curve") {
        std::string expr;
        for (size_t i = 3; i < tok.size(); ++i) expr += tok[i];
        curves.emplace_back(tok[1], MultiPoly::parse(expr));
      } else {
        fail("expected 'divisor NAME ray X Y' or 'divisor NAME curve POLY'");
      }
    } else if (tok[0] == "seg") {
      if (tok.size() != 4) fail("expected 'seg NAME LO HI'");
      segs.emplace_back(tok[1], Segment{parse_rat(tok[2]), parse_rat(tok[3])});
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  if (!has_model) throw ParseError("divisor file: missing model line");

  SurfaceModel model;
  if (is_blowup) {
    model = blowup_model(blowup_d);
    // declared names override the defaults on their rays
    for (const auto& [name, ray] : toric) {
      bool found = false;
      for (auto& [n, r] : model.toric_divisors)
        if (r == ray) {
          n = name;
          found = true;
        }
      if (!found)
        throw ParseError("divisor " + name + " sits on ray " + to_string(ray) +
                         " absent from the blowup fan");
    }
  } else {
    if (toric.empty()) throw ParseError("fan model needs at least one ray divisor");
    model.kind = "fan";
    model.fan = fan_from_weights([&] {
      std::vector<Vec2> rays;
      for (const auto& [n, r] : toric) rays.push_back(r);
      return rays;
    }());
    model.toric_divisors = toric;
  }
  model.curve_divisors = curves;
  validate_model(model);

  std::map<std::string, Segment> terms;
  for (const auto& [name, seg] : segs) {
    if (terms.count(name)) throw ParseError("two segments on divisor " + name);
    terms[name] = seg;
  }
  try {
    return make_divisor(std::move(model), std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string write_divisor_text(const SegmentalDivisor& d) {
  std::ostringstream os;
  if (d.model.kind == "blowup")
    os << "model blowup d=" << d.model.blowup_d << "\n";
  else
    os << "model fan\n";
  for (const auto& [n, r] : d.model.toric_divisors)
    os << "divisor " << n << " ray " << r.x << " " << r.y << "\n";
  for (const auto& [n, h] : d.model.curve_divisors)
    os << "divisor " << n << " curve " << h.str() << "\n";
  for (const auto& name : d.model.divisor_names()) {
    auto it = d.terms.find(name);
    if (it == d.terms.end()) continue;
    os << "seg " << name << " " << to_string(it->second.lo) << " " << to_string(it->second.hi)
       << "\n";
  }
  return os.str();
}

namespace {

json model_to_json(const SurfaceModel& m) {
  json j;
  j["type"] = m.kind;
  if (m.kind == "blowup") j["d"] = m.blowup_d.convert_to<long long>();
  json divisors = json::array();
  for (const auto& [n, r] : m.toric_divisors) {
    json e;
    e["name"] = n;
    e["ray"] = {r.x.convert_to<long long>(), r.y.convert_to<long long>()};
    divisors.push_back(e);
  }
  for (const auto& [n, h] : m.curve_divisors) {
    json e;
    e["name"] = n;
    e["curve"] = h.str();
    divisors.push_back(e);
  }
  j["divisors"] = divisors;
  return j;
}

SurfaceModel model_from_json(const json& j) {
  std::vector<std::pair<std::string, Vec2>> toric;
  std::vector<std::pair<std::string, MultiPoly>> curves;
  for (const auto& e : j.at("divisors")) {
    std::string name = e.at("name").get<std::string>();
    if (e.contains("ray")) {
      toric.emplace_back(name,
                         Vec2{Int(e.at("ray").at(0).get<long long>()),
                              Int(e.at("ray").at(1).get<long long>())});
    } else {
      curves.emplace_back(name, MultiPoly::parse(e.at("curve").get<std::string>()));
    }
  }
  SurfaceModel m;
  std::string type = j.at("type").get<std::string>();
  if (type == "blowup") {
    m = blowup_model(Int(j.at("d").get<long long>()));
    for (const auto& [name, ray] : toric) {
      bool found = false;
      for (auto& [n, r] : m.toric_divisors)
        if (r == ray) {
          n = name;
          found = true;
        }
      if (!found) throw ParseError("divisor " + name + " not on the blowup fan");
    }
  } else if (type == "fan") {
    std::vector<Vec2> rays;
    for (const auto& [n, r] : toric) rays.push_back(r);
    m.kind = "fan";
    m.fan = fan_from_weights(rays);
    m.toric_divisors = toric;
  } else {
    throw ParseError("unknown model type '" + type + "'");
  }
  m.curve_divisors = curves;
  validate_model(m);
  return m;
}

json divisor_to_json_obj(const SegmentalDivisor& d) {
  json j;
  j["model"] = model_to_json(d.model);
  json segs = json::array();
  for (const auto& name : d.model.divisor_names()) {
    auto it = d.terms.find(name);
    if (it == d.terms.end()) continue;
    json e;
    e["divisor"] = name;
    e["lo"] = to_string(it->second.lo);
    e["hi"] = to_string(it->second.hi);
    segs.push_back(e);
  }
  j["segments"] = segs;
  return j;
}

}  // namespace

std::string write_divisor_json(const SegmentalDivisor& d) {
  return divisor_to_json_obj(d).dump(2) + "\n";
}

SegmentalDivisor read_divisor_json(const std::string& text) {
  try {
    json j = json::parse(text);
    SurfaceModel model = model_from_json(j.at("model"));
    std::map<std::string, Segment> terms;
    for (const auto& e : j.at("segments")) {
      std::string name = e.at("divisor").get<std::string>();
      terms[name] = Segment{parse_rat(e.at("lo").get<std::string>()),
                            parse_rat(e.at("hi").get<std::string>())};
    }
    return make_divisor(std::move(model), std::move(terms));
  } catch (const json::exception& e) {
    throw ParseError(std::string("divisor json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SegmentalDivisor read_divisor_auto(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return read_divisor_json(text);
    break;
  }
  return read_divisor_text(text);
}

TheoremData read_theorem_data_json(const std::string& text) {
  try {
    json j = json::parse(text);
    TheoremData d;
    for (const auto& w : j.at("weights")) d.weights.weights.push_back(Int(w.get<long long>()));
    for (const auto& c : j.at("section")) d.section.coeffs.push_back(Int(c.get<long long>()));
    d.mu_wu = Int(j.at("mu_weights").at(0).get<long long>());
    d.mu_wv = Int(j.at("mu_weights").at(1).get<long long>());
    d.f = MultiPoly::parse(j.at("f").get<std::string>());
    d.g = MultiPoly::parse(j.at("g").get<std::string>());
    d.param_f.p = MultiPoly::parse(j.at("param_f").at("p").get<std::string>());
    d.param_f.q = MultiPoly::parse(j.at("param_f").at("q").get<std::string>());
    d.param_g.p = MultiPoly::parse(j.at("param_g").at("p").get<std::string>());
    d.param_g.q = MultiPoly::parse(j.at("param_g").at("q").get<std::string>());
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("theorem data json: ") + e.what());
  }
}

std::string write_theorem_data_json(const TheoremData& d) {
  json j;
  j["weights"] = json::array();
  for (const Int& w : d.weights.weights) j["weights"].push_back(w.convert_to<long long>());
  j["section"] = json::array();
  for (const Int& c : d.section.coeffs) j["section"].push_back(c.convert_to<long long>());
  j["mu_weights"] = {d.mu_wu.convert_to<long long>(), d.mu_wv.convert_to<long long>()};
  j["f"] = d.f.str();
  j["g"] = d.g.str();
  j["param_f"] = {{"p", d.param_f.p.str()}, {"q", d.param_f.q.str()}};
  j["param_g"] = {{"p", d.param_g.p.str()}, {"q", d.param_g.q.str()}};
  return j.dump(2) + "\n";
}

}  // namespace tgm
