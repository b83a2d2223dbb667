#include "phasetrop/json_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace phasetrop::io {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing JSON key \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> vars_from_json(const json& j, std::size_t fallback) {
  std::vector<std::string> vars;
  if (j.contains("vars")) {
    for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
    return vars;
  }
  for (std::size_t i = 0; i < fallback; ++i) vars.push_back("x" + std::to_string(i + 1));
  return vars;
}

std::size_t term_width(const json& terms) {
  if (!terms.is_array() || terms.empty()) throw Error("polynomial without terms");
  return require(terms.front(), "exp").size();
}

json conditions_to_json(const std::vector<LinearCondition>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back({{"normal", c.normal}, {"rhs", to_json(c.rhs)}});
  return out;
}

std::vector<LinearCondition> conditions_from_json(const json& j, std::size_t ambient) {
  std::vector<LinearCondition> out;
  for (const auto& c : j) {
    IntVec normal = require(c, "normal").get<IntVec>();
    if (normal.size() != ambient) throw Error("condition normal has the wrong length");
    out.push_back({std::move(normal), rat_from_json(require(c, "rhs"))});
  }
  return out;
}

json argmin_to_json(const ArgminSets& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

}  // namespace

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw Error("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(const Rat& r) { return r.to_string(); }

Phase parse_phase(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw Error("empty phase");
  if (ends_with(text, "rad")) return Phase::radians(std::stod(trim(text.substr(0, text.size() - 3))));
  if (ends_with(text, "pi")) {
    std::string coeff = trim(text.substr(0, text.size() - 2));
    if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
    Rat c(1);
    if (coeff == "-") {
      c = Rat(-1);
    } else if (!coeff.empty() && coeff != "+") {
      c = Rat::parse(coeff);
    }
    return Phase::turns(c / Rat(2));
  }
  return Phase::turns(Rat::parse(text));
}

PhaseVec parse_phase_list(const std::string& text) {
  PhaseVec out;
  for (const auto& part : split(text, ',')) out.push_back(parse_phase(part));
  return out;
}

RatVec parse_rat_list(const std::string& text) {
  RatVec out;
  for (const auto& part : split(text, ',')) out.push_back(Rat::parse(part));
  return out;
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<IntVec> rows;
  for (const auto& row : split(text, ';')) {
    IntVec r;
    for (const auto& e : split(row, ',')) r.push_back(std::stoll(e));
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

Phase phase_from_json(const json& j) {
  if (j.is_string()) return parse_phase(j.get<std::string>());
  if (j.contains("turns")) return Phase::turns(rat_from_json(j.at("turns")));
  if (j.contains("pi")) return Phase::turns(rat_from_json(j.at("pi")) / Rat(2));
  if (j.contains("rad")) return Phase::radians(j.at("rad").get<double>());
  if (j.contains("radians")) return Phase::radians(j.at("radians").get<double>());
  throw Error("phase needs \"turns\", \"pi\", \"rad\" or \"radians\": " + j.dump());
}

json to_json(const Phase& p) {
  if (p.is_exact()) return {{"turns", p.exact_turns().to_string()}};
  return {{"rad", p.to_radians()}};
}

PhaseVec phases_from_json(const json& j) {
  PhaseVec out;
  for (const auto& p : j) out.push_back(phase_from_json(p));
  return out;
}

json to_json(const PhaseVec& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(to_json(p));
  return out;
}

PolarC polar_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return PolarC::real(rat_from_json(j));
  if (j.is_number()) return PolarC::from_complex({j.get<double>(), 0.0});
  if (j.contains("re") || j.contains("im")) {
    return PolarC::from_complex({j.value("re", 0.0), j.value("im", 0.0)});
  }
  const json& mod = require(j, "mod");
  const bool inline_phase = j.contains("turns") || j.contains("pi") || j.contains("rad") || j.contains("radians");
  const Phase phase = j.contains("phase") ? phase_from_json(j.at("phase")) : inline_phase ? phase_from_json(j) : Phase::zero();
  if (mod.is_number_float()) return PolarC::polar(mod.get<double>(), phase);
  return PolarC::polar(rat_from_json(mod), phase);
}

json to_json(const PolarC& c) {
  if (c.is_zero()) return {{"mod", "0"}};
  json out = to_json(c.phase());
  if (c.exact_modulus()) {
    out["mod"] = c.exact_modulus()->to_string();
  } else {
    out["mod"] = c.modulus();
  }
  return out;
}

Series series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms")) return Series::constant(polar_from_json(j));
  std::vector<SeriesTerm> terms;
  // A term carries its coefficient either under "coeff" or inline as "mod"/"phase".
  for (const auto& t : j.at("terms")) {
    terms.push_back({rat_from_json(require(t, "gamma")), polar_from_json(t.contains("coeff") ? t.at("coeff") : t)});
  }
  std::optional<Rat> trunc;
  if (j.contains("trunc") && !j.at("trunc").is_null()) trunc = rat_from_json(j.at("trunc"));
  return Series::from_terms(std::move(terms), trunc);
}

json to_json(const Series& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) terms.push_back({{"gamma", t.gamma.to_string()}, {"coeff", to_json(t.coeff)}});
  json out = {{"terms", terms}};
  if (s.truncation()) out["trunc"] = s.truncation()->to_string();
  return out;
}

KPoly kpoly_from_json(const json& j) {
  const json& terms = require(j, "terms");
  KPoly f(vars_from_json(j, term_width(terms)));
  for (const auto& t : terms) f.add_term(require(t, "exp").get<IntVec>(), series_from_json(require(t, "coeff")));
  return f;
}

json to_json(const KPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"exp", m}, {"coeff", to_json(c)}});
  return {{"vars", f.vars()}, {"terms", terms}};
}

CPoly cpoly_from_json(const json& j) {
  const json& terms = require(j, "terms");
  CPoly g(vars_from_json(j, term_width(terms)));
  for (const auto& t : terms) g.add_term(require(t, "exp").get<IntVec>(), polar_from_json(require(t, "coeff")));
  return g;
}

json to_json(const CPoly& g) {
  json terms = json::array();
  for (const auto& [m, c] : g.terms()) terms.push_back({{"exp", m}, {"coeff", to_json(c)}});
  return {{"vars", g.vars()}, {"terms", terms}, {"text", g.to_string()}};
}

Section section_from_json(const json& j) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "canonical")) return Section::canonical();
  return Section::twisted(rat_from_json(require(j, "generator")), polar_from_json(require(j, "alpha")));
}

json to_json(const Section& s) {
  if (s.is_canonical()) return "canonical";
  return {{"generator", s.generator().to_string()}, {"alpha", to_json(s.alpha_generator())}};
}

IntMatrix matrix_from_json(const json& j) {
  if (j.is_string()) return parse_matrix(j.get<std::string>());
  std::vector<IntVec> rows;
  for (const auto& r : j) rows.push_back(r.get<IntVec>());
  return IntMatrix::from_rows(rows);
}

json to_json(const IntMatrix& m) { return m.row_list(); }
json to_json(const IntVec& v) { return json(v); }

json to_json(const RatVec& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

SimpleCoA coa_from_json(const json& j) {
  SimpleCoA d;
  d.rank = require(j, "rank").get<std::size_t>();
  for (const auto& f : require(j, "factors")) {
    CoaFactor factor;
    factor.A = matrix_from_json(require(f, "A"));
    if (factor.A.rows() > 0 && factor.A.cols() != d.rank) throw Error("factor matrix width differs from the rank");
    factor.shift = f.contains("shift") ? phases_from_json(f.at("shift")) : PhaseVec(factor.A.rows());
    if (f.contains("coefficients")) {
      for (const auto& c : f.at("coefficients")) factor.coefficients.push_back(polar_from_json(c));
    }
    d.factors.push_back(std::move(factor));
  }
  d.validate();
  return d;
}

json to_json(const SimpleCoA& d) {
  json factors = json::array();
  for (const auto& f : d.factors) {
    json entry = {{"A", to_json(f.A)}, {"shift", to_json(f.shift)}};
    if (!f.coefficients.empty()) {
      json cs = json::array();
      for (const auto& c : f.coefficients) cs.push_back(to_json(c));
      entry["coefficients"] = cs;
    }
    factors.push_back(entry);
  }
  return {{"rank", d.rank}, {"factors", factors}};
}

Polyhedron polyhedron_from_json(const json& j, std::size_t ambient) {
  const auto eqs = j.contains("equalities") ? conditions_from_json(j.at("equalities"), ambient)
                                           : std::vector<LinearCondition>{};
  const auto ineqs = j.contains("inequalities") ? conditions_from_json(j.at("inequalities"), ambient)
                                               : std::vector<LinearCondition>{};
  return Polyhedron(ambient, eqs, ineqs);
}

json to_json(const Polyhedron& p) {
  return {{"equalities", conditions_to_json(p.equalities())},
          {"inequalities", conditions_to_json(p.inequalities())},
          {"dimension", p.dimension()},
          {"relint", to_json(p.relint_point())}};
}

json to_json(const TropComplex& c) {
  json faces = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Face& f = c.face(i);
    json entry = to_json(f.poly);
    entry["id"] = i;
    entry["argmin"] = argmin_to_json(f.argmin);
    if (auto ray = f.poly.ray_direction()) entry["ray"] = *ray;
    faces.push_back(entry);
  }
  json incidence = json::array();
  for (const auto& [sub, super] : c.incidence()) incidence.push_back({sub, super});
  return {{"ambient", c.ambient()}, {"faces", faces}, {"incidence", incidence}, {"minimal", c.minimal_faces()}};
}

FixtureSpec fixture_from_json(const json& j) {
  FixtureSpec input;
  input.rank = require(j, "rank").get<std::size_t>();
  for (const auto& p : require(j, "polys")) input.polys.push_back(kpoly_from_json(p));
  for (const auto& f : require(j, "faces")) {
    FixtureFace face{polyhedron_from_json(f, input.rank), std::nullopt};
    if (f.contains("reductions")) {
      std::vector<CPoly> reds;
      for (const auto& r : f.at("reductions")) reds.push_back(cpoly_from_json(r));
      face.declared = std::move(reds);
    }
    input.faces.push_back(std::move(face));
  }
  if (j.contains("seed")) input.seed = j.at("seed").get<std::uint64_t>();
  return input;
}

TropModel load_fixture_model(const json& j, const Section& s) { return build_fixture_model(fixture_from_json(j), s); }

TropModel model_from_json(const json& j, const Section& s) {
  if (j.contains("faces")) return load_fixture_model(j, s);
  if (j.contains("phi")) {
    std::vector<KPoly> factors;
    for (const auto& f : require(j, "factors")) factors.push_back(kpoly_from_json(f));
    return build_pullback_model(matrix_from_json(j.at("phi")), factors, s);
  }
  return build_trop_model(kpoly_from_json(j), s);
}

json to_json(const TropModel& m) {
  json c = to_json(m.complex);
  for (std::size_t i = 0; i < m.faces.size(); ++i) {
    json reds = json::array();
    for (const auto& r : m.faces[i].reductions) reds.push_back(to_json(r));
    c["faces"][i]["reductions"] = reds;
    c["faces"][i]["descriptor"] = to_json(m.faces[i].coa);
    c["faces"][i]["coa_dimension"] = coa_dimension(m.faces[i].coa);
  }
  json polys = json::array();
  for (const auto& p : m.polys) polys.push_back(to_json(p));
  json out = {{"rank", m.rank},
              {"source", to_string(m.source)},
              {"section", to_json(m.section)},
              {"polys", polys},
              {"dimension", m.dimension()},
              {"complex", c}};
  if (m.phi) out["phi"] = to_json(*m.phi);
  return out;
}

json to_json(const DimensionReport& r) {
  auto pieces = [](const std::vector<PieceDimension>& ps) {
    json out = json::array();
    for (const auto& p : ps) {
      out.push_back({{"face", p.face}, {"face_dim", p.face_dim}, {"coa_dim", p.coa_dim}, {"total", p.total()}});
    }
    return out;
  };
  return {{"variety_dim", r.variety_dim},
          {"pieces", pieces(r.pieces)},
          {"max_total", r.max_total},
          {"twice_variety_dim", r.max_total == 2 * r.variety_dim},
          {"nca_pieces", pieces(r.nca_pieces)},
          {"max_nca", r.max_nca},
          {"nca_is_dim_plus_one", r.max_nca == r.variety_dim + 1},
          {"has_nonbinomial_face", r.has_nonbinomial_face}};
}

json to_json(const SectionChangeReport& r) {
  json translations = json::array();
  for (const auto& [face, a] : r.translations) translations.push_back({{"face", face}, {"a", to_json(a)}});
  auto flags = [](const std::vector<std::pair<std::size_t, bool>>& v) {
    json out = json::array();
    for (const auto& [face, ok] : v) out.push_back({{"face", face}, {"ok", ok}});
    return out;
  };
  return {{"translations", translations},
          {"well_defined", flags(r.well_defined)},
          {"coset_checks", flags(r.coset_checks)},
          {"matches_direct", r.matches_direct},
          {"ok", r.ok()}};
}

json to_json(const LpWitness& w) {
  json out = {{"feasible", w.feasible}, {"exact", w.exact}, {"radii", w.radii}};
  if (!w.model_radii.empty()) out["model_radii"] = to_json(w.model_radii);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace phasetrop::io
