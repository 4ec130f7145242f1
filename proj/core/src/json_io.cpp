#include "bispec/json_io.hpp"

#include <string>

#include "bispec/error.hpp"

namespace bispec {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::kUsage, std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

const json& array_of(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::kUsage, std::string(what) + " must be a JSON array");
  return j;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorKind::kUsage, std::string(what) + " must be an integer");
  return j.get<int>();
}

char as_var(const json& j) {
  if (!j.is_string() || j.get<std::string>().size() != 1)
    fail(ErrorKind::kUsage, "operator variable must be a one-letter string");
  char v = j.get<std::string>()[0];
  if (v != 'x' && v != 'z') fail(ErrorKind::kUsage, "operator variable must be 'x' or 'z'");
  return v;
}

std::vector<Rational> rationals(const json& j, const char* what) {
  std::vector<Rational> out;
  for (const auto& e : array_of(j, what)) out.push_back(e.get<Rational>());
  return out;
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<long>());
  } else {
    fail(ErrorKind::kUsage, "scalar must be a rational string or an integer");
  }
}

void to_json(json& j, const Poly& p) {
  j = json::array();
  for (const auto& c : p.coeffs()) j.push_back(c);
}

void from_json(const json& j, Poly& p) { p = Poly(rationals(j, "polynomial")); }

void to_json(json& j, const RationalFunction& f) { j = json{{"num", f.num()}, {"den", f.den()}}; }

void from_json(const json& j, RationalFunction& f) {
  Poly den = field(j, "den").get<Poly>();
  if (den.is_zero()) fail(ErrorKind::kUsage, "rational function with zero denominator");
  f = RationalFunction(field(j, "num").get<Poly>(), den);
}

void to_json(json& j, const DiffOp& a) {
  j = json{{"form", to_string(a.form())}, {"var", std::string(1, a.var())}, {"coeffs", a.coeffs()}};
}

void from_json(const json& j, DiffOp& a) {
  std::string form = field(j, "form").get<std::string>();
  Form f;
  if (form == "del") {
    f = Form::kDel;
  } else if (form == "euler") {
    f = Form::kEuler;
  } else {
    fail(ErrorKind::kUsage, "operator form must be 'del' or 'euler'");
  }
  char var = j.contains("var") ? as_var(j.at("var")) : 'x';
  std::vector<RationalFunction> c;
  for (const auto& e : array_of(field(j, "coeffs"), "coeffs")) c.push_back(e.get<RationalFunction>());
  a = DiffOp(f, std::move(c), var);
}

void to_json(json& j, const BesselIndex& b) { j = json{{"N", b.N}, {"beta", b.beta}}; }

void from_json(const json& j, BesselIndex& b) {
  auto beta = rationals(field(j, "beta"), "beta");
  if (j.contains("N") && as_int(j.at("N"), "N") != static_cast<int>(beta.size()))
    fail(ErrorKind::kUsage, "N does not match the length of beta");
  b = BesselIndex::make(std::move(beta));
}

void to_json(json& j, const QuasiPolynomial& q) {
  j = json::array();
  for (const auto& [key, c] : q.terms()) j.push_back(json{key.first, key.second, c});
}

void from_json(const json& j, QuasiPolynomial& q) {
  q = QuasiPolynomial();
  for (const auto& t : array_of(j, "quasi-polynomial")) {
    if (!t.is_array() || t.size() != 3)
      fail(ErrorKind::kUsage, "quasi-polynomial terms are [gamma, j, c]");
    int lp = as_int(t[1], "log power");
    if (lp < 0) fail(ErrorKind::kUsage, "log power must be nonnegative");
    q.add_term(t[2].get<Rational>(), t[0].get<Rational>(), lp);
  }
}

void to_json(json& j, const Window& w) {
  j = json{{"min_x", w.min_x}, {"max_x", w.max_x}, {"min_z", w.min_z}, {"max_z", w.max_z}};
}

void from_json(const json& j, Window& w) {
  w.min_x = as_int(field(j, "min_x"), "min_x");
  w.max_x = as_int(field(j, "max_x"), "max_x");
  w.min_z = as_int(field(j, "min_z"), "min_z");
  w.max_z = as_int(field(j, "max_z"), "max_z");
}

void to_json(json& j, const WaveSeries& s) {
  json c = json::array();
  for (const auto& [key, v] : s.coeffs()) c.push_back(json{key.first, key.second, v});
  j = json{{"window", s.window()}, {"coeffs", c}};
}

void from_json(const json& j, WaveSeries& s) {
  Window w = field(j, "window").get<Window>();
  std::map<WaveSeries::Key, Rational> c;
  for (const auto& t : array_of(field(j, "coeffs"), "coeffs")) {
    if (!t.is_array() || t.size() != 3) fail(ErrorKind::kUsage, "series terms are [i, j, c]");
    c[{as_int(t[0], "i"), as_int(t[1], "j")}] = t[2].get<Rational>();
  }
  s = WaveSeries(w, std::move(c));
}

void to_json(json& j, const AtZeroGroup& g) {
  j = json::object();
  if (g.terms) {
    j["terms"] = *g.terms;
  } else {
    j["base_index"] = g.base_index;
    j["b"] = g.b;
  }
  if (g.j0) j["j0"] = *g.j0;
}

void from_json(const json& j, AtZeroGroup& g) {
  g = AtZeroGroup{};
  if (!j.is_object()) fail(ErrorKind::kUsage, "at_zero entries must be objects");
  if (j.contains("terms")) {
    g.terms = j.at("terms").get<QuasiPolynomial>();
  } else {
    g.base_index = as_int(field(j, "base_index"), "base_index");
    for (const auto& row : array_of(field(j, "b"), "b")) g.b.push_back(rationals(row, "b row"));
  }
  if (j.contains("j0")) g.j0 = as_int(j.at("j0"), "j0");
}

void to_json(json& j, const AtPointGroup& g) { j = json{{"lambda", g.lambda}, {"a", g.a}}; }

void from_json(const json& j, AtPointGroup& g) {
  g.lambda = field(j, "lambda").get<Rational>();
  g.a = rationals(field(j, "a"), "a");
}

void to_json(json& j, const KernelSpec& s) {
  j = json{{"beta", s.beta}, {"at_zero", s.at_zero}, {"at_points", s.at_points}};
}

void from_json(const json& j, KernelSpec& s) {
  s.beta = field(j, "beta").get<BesselIndex>();
  s.at_zero.clear();
  s.at_points.clear();
  if (j.contains("at_zero"))
    for (const auto& e : array_of(j.at("at_zero"), "at_zero")) s.at_zero.push_back(e.get<AtZeroGroup>());
  if (j.contains("at_points"))
    for (const auto& e : array_of(j.at("at_points"), "at_points"))
      s.at_points.push_back(e.get<AtPointGroup>());
}

void to_json(json& j, const Witnesses& w) {
  j = json{{"qp_equals_h", w.qp_equals_h},       {"qp_cross_checked", w.qp_cross_checked},
           {"fg_equals_h", w.fg_equals_h},       {"p_normal_form", w.p_normal_form},
           {"g_product_form", w.g_product_form}, {"g_matches_spec", w.g_matches_spec},
           {"normalized", w.normalized},         {"normalization_window", w.normalization_window}};
}

void from_json(const json& j, Witnesses& w) {
  auto flag = [&](const char* k) { return j.contains(k) && j.at(k).is_boolean() && j.at(k).get<bool>(); };
  w.qp_equals_h = flag("qp_equals_h");
  w.qp_cross_checked = flag("qp_cross_checked");
  w.fg_equals_h = flag("fg_equals_h");
  w.p_normal_form = flag("p_normal_form");
  w.g_product_form = flag("g_product_form");
  w.g_matches_spec = flag("g_matches_spec");
  w.normalized = flag("normalized");
  w.normalization_window = j.contains("normalization_window") ? as_int(j.at("normalization_window"), "normalization_window") : 0;
}

void to_json(json& j, const DarbouxCertificate& c) {
  j = json{{"beta", c.beta}, {"P", c.P}, {"Q", c.Q}, {"f", c.f},
           {"g", c.g},       {"h", c.h}, {"depth", c.depth}, {"witnesses", c.witnesses}};
}

void from_json(const json& j, DarbouxCertificate& c) {
  c.beta = field(j, "beta").get<BesselIndex>();
  c.P = field(j, "P").get<DiffOp>();
  c.Q = field(j, "Q").get<DiffOp>();
  c.f = field(j, "f").get<Poly>();
  c.g = field(j, "g").get<Poly>();
  c.h = j.contains("h") ? j.at("h").get<Poly>() : Poly();
  c.depth = j.contains("depth") ? as_int(j.at("depth"), "depth") : 0;
  c.witnesses = j.contains("witnesses") ? j.at("witnesses").get<Witnesses>() : Witnesses{};
}

void to_json(json& j, const BuildStats& s) {
  j = json{{"degree_bound", s.degree_bound}, {"depth", s.depth},
           {"equations", s.equations},       {"unknowns", s.unknowns}};
}

void to_json(json& j, const Involution& v) {
  j = json{{"op", v.op},         {"poly", v.poly},
           {"raw_op", v.raw_op}, {"raw_poly", v.raw_poly}, {"stripped", v.stripped}};
}

void to_json(json& j, const BispectralPair& p) {
  j = json{{"certificate", p.cert}, {"Pb", p.Pb},       {"Qb", p.Qb}, {"L", p.L},
           {"Lambda", p.Lambda},    {"h", p.h},         {"Theta", p.Theta}};
}

void to_json(json& j, const VerifyReport& r) {
  j = json{{"depth", r.depth},
           {"window_L", r.window_L},
           {"window_Lambda", r.window_Lambda},
           {"coefficients_checked", r.coefficients_checked}};
}

void to_json(json& j, const ClosedForm& c) {
  j = json{{"gamma", c.gamma}, {"subsets", c.subsets}, {"i_min", c.i_min}, {"S", c.S},
           {"P", c.P},         {"Q", c.Q},             {"Pb", c.Pb},       {"Qb", c.Qb},
           {"f", c.f},         {"g", c.g},             {"fb", c.fb},       {"gb", c.gb}};
}

void to_json(json& j, const SpectralAlgebraReport& r) {
  j = json{{"degree_bound", r.degree_bound}, {"degrees", r.degrees},   {"witnesses", r.witnesses},
           {"generators", r.generators},     {"rank", r.rank},         {"non_lattice", r.non_lattice},
           {"generic", r.generic}};
}

void to_json(json& j, const BetaPrime& b) {
  j = json{{"beta_prime", b.beta_prime}, {"counts", b.counts},
           {"association", b.association}, {"ambiguous", b.ambiguous}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kUsage, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace bispec
